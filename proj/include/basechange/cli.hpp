#pragma once

// Batch command-line front end. Exit codes: 0 success, 2 invalid input,
// 3 out-of-scope mathematics, 4 certificate window failure.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "basechange/circle_maps.hpp"
#include "basechange/serialize.hpp"

namespace basechange::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitOutOfScope = 3;
inline constexpr int kExitWindow = 4;

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedExtension:
    case ErrorKind::NotUnramified:
    case ErrorKind::EvenDegree:
    case ErrorKind::OutOfScope:
      return kExitOutOfScope;
    case ErrorKind::WindowTooSmall:
      return kExitWindow;
    default:
      return kExitInvalid;
  }
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
inline io::json load_json_arg(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream in(arg);
    require(in.good(), ErrorKind::InvalidInput, "cannot read JSON file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return io::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

inline std::vector<std::int64_t> parse_orders(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
             body.end());
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto v = parse_rational(item);
    require(is_integer(v), ErrorKind::InvalidInput, "filtration orders must be integers");
    out.push_back(to_int64(numerator(v)));
  }
  return out;
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

template <class T>
std::string join_ints(const std::vector<T>& xs, const std::string& sep = ",") {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

inline std::string sym_name(const OrbitComponent& c) {
  std::vector<std::string> f;
  for (const auto& fac : c.factors) f.push_back("Sym^" + std::to_string(fac.multiplicity));
  return join(f, " x ");
}

inline void render_kmatrix(std::ostream& os, const std::string& name, const KMorphism& m) {
  os << name << ": " << m.rows().size() << " x " << m.cols().size() << " (rows: source, cols: target)\n";
  for (const auto& t : m.sparse())
    os << "  [" << m.rows()[t.row] << ", " << m.cols()[t.col] << "] = " << t.value << "\n";
}

/// K matrices of a labeled circle map; the text form lists nonzero entries.
inline io::json k_json(const ProperCircleMap& map) {
  auto [k0, k1] = induced_map(map);
  return {{"K0", io::to_json(k0)}, {"K1", io::to_json(k1)}};
}

inline void render_k_text(std::ostream& os, const ProperCircleMap& map) {
  auto [k0, k1] = induced_map(map);
  render_kmatrix(os, "K0", k0);
  render_kmatrix(os, "K1", k1);
}

struct Request {
  std::string format = "text";
  std::string output;
};

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Base change for GL(n) parameters: extended quotients, ramification, K-theory", "basechange"};
  app.require_subcommand(1);
  app.fallthrough();
  Request req;
  app.add_option("--format", req.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", req.output, "Write output to FILE instead of stdout");

  int n = 0;
  auto* extquot = app.add_subcommand("extquot", "Components of (C^x)^n // S_n");
  extquot->add_option("--n", n, "Rank n (1..30)")->required();

  std::string orders_text;
  std::vector<std::string> xs;
  auto* psi_cmd = app.add_subcommand("psi", "Tabulate psi and phi for a ramification filtration");
  psi_cmd->add_option("--orders", orders_text, "Orders |G_0|,|G_1|,... (comma separated; empty = unramified)");
  psi_cmd->add_option("--x", xs, "Points x >= 0 as p/q (repeatable)")->required();

  std::string ext_arg;
  std::int64_t level = 0;
  bool certify = false;
  auto* norm_cmd = app.add_subcommand("norm-level", "nu with N(U_E^level) = U_F^nu");
  norm_cmd->add_option("--ext", ext_arg, "Extension JSON (inline or file)")->required();
  norm_cmd->add_option("--level", level, "Level on the E side")->required();
  norm_cmd->add_flag("--certify-trivial", certify, "Certify G_level = {1} for a wild totally ramified extension");

  std::int64_t bound = 0;
  auto* gl1_cmd = app.add_subcommand("bc-gl1", "GL(1) base change on the truncated tempered dual");
  gl1_cmd->add_option("--ext", ext_arg, "Extension JSON (inline or file)")->required();
  gl1_cmd->add_option("--M", bound, "Conductor truncation bound")->required()->check(CLI::Range(0, 64));

  std::string pair_arg, l_arg;
  auto* gl2_cmd = app.add_subcommand("bc-gl2", "GL(2) cuspidal base change along unramified L/F");
  gl2_cmd->add_option("--pair", pair_arg, "Admissible pair JSON (inline or file)")->required();
  gl2_cmd->add_option("--L", l_arg, "Extension L/F JSON (inline or file)")->required();

  std::string map_arg;
  auto* kmap_cmd = app.add_subcommand("kmap", "K^0 and K^1 matrices of a proper circle map");
  kmap_cmd->add_option("--map", map_arg, "Circle map JSON (inline or file)")->required();

  int r = 0;
  std::int64_t fdeg = 0, window = 0;
  auto* fin_cmd = app.add_subcommand("finiteness", "Certify finiteness of t -> t^f on invariant Laurent rings");
  fin_cmd->add_option("--r", r, "Number of variables (1..3)")->required();
  fin_cmd->add_option("--f", fdeg, "Degree (1..4)")->required();
  fin_cmd->add_option("--window", window, "Exponent window D")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  const bool as_json = req.format == "json";
  io::json doc = {{"schema_version", io::kSchemaVersion}};
  std::ostringstream text;

  try {
    if (*extquot) {
      auto q = extended_quotient(n);
      doc["command"] = "extquot";
      doc.update(io::to_json(q));
      text << "(C^x)^" << q.n << " // S_" << q.n << ": " << q.components.size() << " components\n";
      for (const auto& c : q.components)
        text << "  partition (" << join_ints(c.partition.parts()) << ") -> " << sym_name(c) << "  [dim "
             << c.dimension() << "]\n";
    } else if (*psi_cmd) {
      RamificationFiltration filt(parse_orders(orders_text));
      auto psi_fn = psi_function(filt);
      auto phi_fn = phi_function(filt);
      doc["command"] = "psi";
      doc["filtration_orders"] = filt.orders();
      io::json rows = io::json::array();
      text << "orders [" << join_ints(filt.orders()) << "]\n";
      text << "x\tpsi(x)\tphi(x)\n";
      for (const auto& s : xs) {
        auto x = parse_rational(s);
        require(x >= 0, ErrorKind::InvalidInput, "x must be nonnegative");
        rows.push_back({{"x", to_string(x)}, {"psi", to_string(psi_fn(x))}, {"phi", to_string(phi_fn(x))}});
        text << to_string(x) << "\t" << to_string(psi_fn(x)) << "\t" << to_string(phi_fn(x)) << "\n";
      }
      doc["rows"] = rows;
    } else if (*norm_cmd) {
      auto prof = io::extension_from_json(load_json_arg(ext_arg));
      auto nu = norm_level_image(prof.ext, prof.filtration, level, certify);
      doc["command"] = "norm-level";
      doc["extension"] = io::to_json(prof);
      doc["class"] = std::string(to_string(classify(prof.ext)));
      doc["level_E"] = level;
      doc["level_F"] = nu;
      text << "class " << to_string(classify(prof.ext)) << "\n";
      text << "N(U_E^" << level << ") = U_F^" << nu << "\n";
    } else if (*gl1_cmd) {
      auto prof = io::extension_from_json(load_json_arg(ext_arg));
      TemperedDualGL1 dual(prof.ext.base.q, bound);
      auto bc = bc_gl1(prof.ext, prof.filtration, dual);
      auto map = gl1_circle_map(bc);
      doc["command"] = "bc-gl1";
      doc["extension"] = io::to_json(prof);
      doc["class"] = std::string(to_string(classify(prof.ext)));
      doc["map"] = io::to_json(bc);
      doc["k_theory"] = k_json(map);
      text << "class " << to_string(classify(prof.ext)) << ", circle degree f = " << prof.ext.f << "\n";
      text << "conductor map:";
      for (const auto& [cf, ce] : bc.conductor_map) text << " " << cf << "->" << ce;
      text << "\n" << bc.pairs.size() << " source circles, " << bc.target.circles().size() << " target circles\n";
      for (const auto& p : bc.pairs) text << "  " << p.from.name() << " -> " << p.to.name() << "  z -> z^" << p.degree << "\n";
      render_k_text(text, map);
    } else if (*gl2_cmd) {
      auto pair = io::pair_from_json(load_json_arg(pair_arg));
      auto l = io::extension_from_json(load_json_arg(l_arg));
      auto bc = bc_gl2(pair, l.ext);
      auto map = gl2_circle_map(pair, bc);
      doc["command"] = "bc-gl2";
      doc["source"] = io::to_json(pair);
      doc["target"] = io::to_json(bc.target);
      doc["degree"] = bc.degree;
      doc["conductor"] = bc.conductor;
      doc["torsion_number"] = bc.torsion_number;
      doc["el_over_l"] = {{"e", bc.compositum.el_over_l.e}, {"f", bc.compositum.el_over_l.f}};
      doc["el_over_e"] = {{"e", bc.compositum.el_over_e.e}, {"f", bc.compositum.el_over_e.f}};
      doc["k_theory"] = k_json(map);
      text << pair.name() << " -> " << bc.target.name() << "\n";
      text << "circle degree " << bc.degree << ", conductor " << bc.conductor << ", torsion number "
           << bc.torsion_number << "\n";
      text << "EL/L: e=" << bc.compositum.el_over_l.e << " f=" << bc.compositum.el_over_l.f
           << "; EL/E: e=" << bc.compositum.el_over_e.e << " f=" << bc.compositum.el_over_e.f << "\n";
      render_k_text(text, map);
    } else if (*kmap_cmd) {
      auto map = io::circle_map_from_json(load_json_arg(map_arg));
      auto [k0g, k1g] = k_groups(map.source());
      auto [k0t, k1t] = k_groups(map.target());
      doc["command"] = "kmap";
      doc["map"] = io::to_json(map);
      doc["ranks"] = {{"source", {{"K0", k0g.rank()}, {"K1", k1g.rank()}}},
                      {"target", {{"K0", k0t.rank()}, {"K1", k1t.rank()}}}};
      doc["k_theory"] = k_json(map);
      text << "source ranks (K0, K1) = (" << k0g.rank() << ", " << k1g.rank() << "), target ranks = (" << k0t.rank()
           << ", " << k1t.rank() << ")\n";
      render_k_text(text, map);
    } else if (*fin_cmd) {
      auto cert = finiteness_certificate(r, fdeg, window);
      doc["command"] = "finiteness";
      doc["certificate"] = io::to_json(cert);
      text << "certificate for r=" << r << " f=" << fdeg << " window=" << window << ": " << cert.generators.size()
           << " generators, " << cert.reductions.size() << " reductions\n";
      for (const auto& g : cert.generators) text << "  m(" << join_ints(g) << ")\n";
    }
  } catch (const WindowTooSmall& e) {
    err << "error: " << e.what() << "\n";
    if (e.suggested_window() > 0) err << "suggested window: " << e.suggested_window() << "\n";
    return kExitWindow;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }

  std::string rendered = as_json ? doc.dump(2) + "\n" : text.str();
  if (req.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(req.output);
    if (!file) {
      err << "error: cannot write '" << req.output << "'\n";
      return kExitInvalid;
    }
    file << rendered;
  }
  return kExitOk;
}

}  // namespace basechange::cli
