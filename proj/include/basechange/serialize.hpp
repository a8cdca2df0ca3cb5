#pragma once

// JSON encodings of the library types. Exact rationals are strings "p/q"
// (or "p" for integers); Gaussian rationals are {"re": ..., "im": ...}.

#include <json.hpp>

#include <string>
#include <vector>

#include "basechange/extension_tower.hpp"
#include "basechange/finiteness.hpp"
#include "basechange/gaussian.hpp"
#include "basechange/gl2_cuspidal.hpp"
#include "basechange/iwahori_variety.hpp"
#include "basechange/ktheory.hpp"
#include "basechange/tempered_gl1.hpp"

namespace basechange::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

template <class T>
T get_field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_field(const json& j, const char* key, T fallback) {
  return j.is_object() && j.contains(key) ? get_field<T>(j, key) : fallback;
}

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  require(j.is_object(), ErrorKind::InvalidInput, "expected a JSON object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    require(ok, ErrorKind::InvalidInput, "unknown field '" + k + "'");
  }
}

// --- numbers -----------------------------------------------------------

inline json to_json(const Rational& r) { return to_string(r); }
inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  require(j.is_string(), ErrorKind::InvalidInput, "rational must be a string \"p/q\" or an integer");
  return parse_rational(j.get<std::string>());
}

inline json to_json(const GaussianRational& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }
inline GaussianRational gaussian_from_json(const json& j) {
  reject_unknown(j, {"re", "im"});
  return {rational_from_json(j.at("re")), j.contains("im") ? rational_from_json(j.at("im")) : Rational(0)};
}

inline std::int64_t to_int64_checked(const BigInt& v) { return to_int64(v); }

// --- extension_tower ---------------------------------------------------

inline json to_json(const ExtensionProfile& x) {
  return {{"q", x.ext.base.q},
          {"p", x.ext.base.p},
          {"char_zero", x.ext.base.char_zero},
          {"e", x.ext.e},
          {"f", x.ext.f},
          {"galois", x.ext.galois},
          {"cyclic", x.ext.cyclic},
          {"filtration_orders", x.filtration.orders()}};
}

/// filtration_orders may be omitted when it is forced (unramified or tame).
inline ExtensionProfile extension_from_json(const json& j) {
  reject_unknown(j, {"q", "p", "char_zero", "e", "f", "galois", "cyclic", "filtration_orders"});
  auto base = LocalFieldData::make(get_field<std::int64_t>(j, "q"), get_field<std::int64_t>(j, "p"),
                                   get_field<bool>(j, "char_zero", true));
  auto ext = ExtensionData::make(base, get_field<std::int64_t>(j, "e", 1), get_field<std::int64_t>(j, "f", 1),
                                 get_field<bool>(j, "galois", true), get_field<bool>(j, "cyclic", true));
  ExtensionProfile prof = j.contains("filtration_orders")
                              ? ExtensionProfile{ext, RamificationFiltration(
                                                          get_field<std::vector<std::int64_t>>(j, "filtration_orders"))}
                              : ExtensionProfile::with_default_filtration(ext);
  prof.validate();
  return prof;
}

// --- iwahori_variety ---------------------------------------------------

inline json to_json(const ExtendedQuotient& q) {
  json comps = json::array();
  for (const auto& c : q.components) {
    json factors = json::array();
    for (const auto& fac : c.factors) factors.push_back({{"sym_power", fac.multiplicity}});
    comps.push_back({{"partition", c.partition.parts()}, {"factors", factors}});
  }
  return {{"n", q.n}, {"components", comps}};
}

inline ExtendedQuotient extended_quotient_from_json(const json& j) {
  reject_unknown(j, {"n", "components", "schema_version"});
  ExtendedQuotient q{get_field<int>(j, "n"), {}};
  for (const auto& c : j.at("components")) {
    auto comp = fixed_component(q.n, Partition(get_field<std::vector<int>>(c, "partition")));
    std::vector<int> powers;
    for (const auto& fac : c.at("factors")) powers.push_back(get_field<int>(fac, "sym_power"));
    require(powers == comp.sym_powers(), ErrorKind::InvalidInput, "factors disagree with the partition");
    q.components.push_back(std::move(comp));
  }
  return q;
}

inline json to_json(const TorusPoint& x) {
  json out = json::array();
  for (const auto& fac : x.factors()) {
    json f = json::array();
    for (const auto& z : fac) f.push_back(to_json(z));
    out.push_back(f);
  }
  return out;
}

inline json to_json(const FinitenessCertificate& c) {
  json reds = json::array();
  for (const auto& red : c.reductions) {
    json terms = json::array();
    for (const auto& t : red.terms)
      terms.push_back({{"subring_exponent", t.subring_exponent},
                       {"generator", t.generator},
                       {"coefficient", to_string(t.coefficient)}});
    reds.push_back({{"target", red.target}, {"terms", terms}});
  }
  return {{"r", c.r}, {"f", c.f}, {"window", c.window}, {"generators", c.generators}, {"reductions", reds}};
}

inline FinitenessCertificate certificate_from_json(const json& j) {
  FinitenessCertificate c;
  c.r = get_field<int>(j, "r");
  c.f = get_field<std::int64_t>(j, "f");
  c.window = get_field<std::int64_t>(j, "window");
  c.generators = get_field<std::vector<Exponent>>(j, "generators");
  for (const auto& red : j.at("reductions")) {
    FinitenessCertificate::Reduction r{get_field<Exponent>(red, "target"), {}};
    for (const auto& t : red.at("terms"))
      r.terms.push_back({get_field<Exponent>(t, "subring_exponent"), get_field<std::size_t>(t, "generator"),
                         rational_from_json(t.at("coefficient"))});
    c.reductions.push_back(std::move(r));
  }
  return c;
}

// --- tempered_gl1 ------------------------------------------------------

inline json to_json(const CharacterLabel& l) { return {{"conductor", l.conductor}, {"index", l.index}}; }
inline CharacterLabel label_from_json(const json& j) {
  return {get_field<std::int64_t>(j, "conductor"), get_field<std::int64_t>(j, "index")};
}

inline json to_json(const TemperedDualGL1& d) {
  json circles = json::array();
  for (const auto& l : d.circles()) circles.push_back(to_json(l));
  return {{"q", d.q()}, {"M", d.bound()}, {"circles", circles}};
}

inline TemperedDualGL1 dual_from_json(const json& j) {
  std::vector<CharacterLabel> labels;
  for (const auto& c : j.at("circles")) labels.push_back(label_from_json(c));
  return {get_field<std::int64_t>(j, "q"), get_field<std::int64_t>(j, "M"), std::move(labels)};
}

inline json to_json(const Gl1BaseChange& bc) {
  json pairs = json::array();
  for (const auto& p : bc.pairs) pairs.push_back({{"from", to_json(p.from)}, {"to", to_json(p.to)}, {"degree", p.degree}});
  json cmap = json::array();
  for (const auto& [cf, ce] : bc.conductor_map) cmap.push_back({{"from", cf}, {"to", ce}});
  return {{"pairs", pairs}, {"conductor_map", cmap}, {"source", to_json(bc.source)}, {"target", to_json(bc.target)}};
}

inline std::vector<CirclePair> pairs_from_json(const json& j) {
  std::vector<CirclePair> out;
  for (const auto& p : j.at("pairs"))
    out.push_back({label_from_json(p.at("from")), label_from_json(p.at("to")), get_field<std::int64_t>(p, "degree")});
  return out;
}

// --- gl2_cuspidal ------------------------------------------------------

inline json to_json(const AdmissiblePair& a) {
  return {{"quad", to_json(a.quad)},
          {"xi", {{"conductor", a.xi.label.conductor}, {"index", a.xi.label.index}, {"unitary", a.xi.unitary}}},
          {"flags", {{"not_norm_factor", a.not_norm_factor}, {"level_one_norm_factor", a.level_one_norm_factor}}}};
}

inline AdmissiblePair pair_from_json(const json& j) {
  reject_unknown(j, {"quad", "xi", "flags"});
  AdmissiblePair a;
  a.quad = extension_from_json(j.at("quad"));
  const auto& xi = j.at("xi");
  a.xi = {label_from_json(xi), get_field<bool>(xi, "unitary", true)};
  const json flags = j.contains("flags") ? j.at("flags") : json::object();
  a.not_norm_factor = get_field<bool>(flags, "not_norm_factor", true);
  a.level_one_norm_factor = get_field<bool>(flags, "level_one_norm_factor", false);
  return a;
}

// --- ktheory -----------------------------------------------------------

inline json to_json(const KMorphism& m) {
  json entries = json::array();
  for (const auto& row : m.entries()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_int64_checked(v));
    entries.push_back(r);
  }
  json sparse = json::array();
  for (const auto& t : m.sparse()) sparse.push_back({t.row, t.col, to_int64_checked(t.value)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}, {"sparse", sparse}};
}

inline KMorphism kmorphism_from_json(const json& j) {
  auto rows = get_field<std::vector<std::string>>(j, "rows");
  auto cols = get_field<std::vector<std::string>>(j, "cols");
  std::vector<KMorphism::Triplet> trip;
  if (j.contains("entries")) {
    const auto& e = j.at("entries");
    require(e.size() == rows.size(), ErrorKind::InvalidInput, "entries row count mismatch");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require(e[r].size() == cols.size(), ErrorKind::InvalidInput, "entries column count mismatch");
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (auto v = e[r][c].get<std::int64_t>(); v != 0) trip.push_back({r, c, BigInt(v)});
    }
  } else {
    for (const auto& t : j.at("sparse"))
      trip.push_back({t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(), BigInt(t.at(2).get<std::int64_t>())});
  }
  return KMorphism::from_sparse(std::move(rows), std::move(cols), trip);
}

inline json to_json(const CircleSpace& s) {
  json out = json::array();
  for (const auto& c : s.components()) {
    if (c.reduced_from_sym_power)
      out.push_back({{"label", c.label}, {"sym_power", *c.reduced_from_sym_power}});
    else
      out.push_back(c.label);
  }
  return out;
}

inline CircleSpace circle_space_from_json(const json& j) {
  require(j.is_array(), ErrorKind::InvalidInput, "circle space must be an array");
  std::vector<CircleComponent> comps;
  for (const auto& c : j) {
    if (c.is_string())
      comps.push_back({c.get<std::string>(), std::nullopt});
    else
      comps.push_back({get_field<std::string>(c, "label"),
                       c.contains("sym_power") ? std::optional<int>(get_field<int>(c, "sym_power")) : std::nullopt});
  }
  return CircleSpace(std::move(comps));
}

inline json to_json(const ProperCircleMap& m) {
  json matches = json::array();
  for (const auto& x : m.matches())
    matches.push_back({{"source", m.source().components()[x.source].label},
                       {"target", m.target().components()[x.target].label},
                       {"degree", x.degree}});
  return {{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"matches", matches}};
}

inline ProperCircleMap circle_map_from_json(const json& j) {
  reject_unknown(j, {"source", "target", "matches", "schema_version"});
  auto src = circle_space_from_json(j.at("source"));
  auto tgt = circle_space_from_json(j.at("target"));
  std::vector<CircleMatch> ms;
  for (const auto& x : j.at("matches")) {
    auto s = src.index_of(get_field<std::string>(x, "source"));
    auto t = tgt.index_of(get_field<std::string>(x, "target"));
    require(s.has_value() && t.has_value(), ErrorKind::InvalidInput, "match refers to an unknown circle");
    ms.push_back({*s, *t, get_field<std::int64_t>(x, "degree")});
  }
  return {std::move(src), std::move(tgt), std::move(ms)};
}

}  // namespace basechange::io
