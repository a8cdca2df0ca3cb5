// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "basechange/circle_maps.hpp"
#include "basechange/cli.hpp"
#include "basechange/finiteness.hpp"
#include "test_support.hpp"

using namespace basechange;
namespace bt = basechange::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs >= limit_s) {
    o.ok = false;
    o.detail = "too slow";
  }
  if (!o.ok) ++failures;
  std::printf("%s  [%2d] %-38s %8.4fs (limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
}

void extquot_gl4(Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::run({"--format", "json", "extquot", "--n", "4"}, out, err);
  o.check(code == 0, "exit code " + std::to_string(code));
  auto doc = io::json::parse(out.str());
  std::vector<std::vector<int>> got;
  for (const auto& c : doc.at("components")) {
    std::vector<int> powers;
    for (const auto& f : c.at("factors")) powers.push_back(f.at("sym_power").get<int>());
    got.push_back(powers);
  }
  const std::vector<std::vector<int>> expected{{1}, {1, 1}, {2}, {1, 2}, {4}};
  o.check(got == expected, "component list differs");
}

void partition_counts(Outcome& o) {
  const auto p = bt::partition_counts(30);
  for (int n = 1; n <= 30; ++n)
    o.check(BigInt(extended_quotient(n).components.size()) == p[static_cast<std::size_t>(n)],
            "n = " + std::to_string(n));
}

void closed_forms(Outcome& o) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) {
    const auto x = bt::random_rational(rng);
    o.check(psi(RamificationFiltration::unramified(), x) == x, "unramified at " + to_string(x));
    for (std::int64_t e : {2, 3, 5, 7})
      o.check(psi(RamificationFiltration::tame(e), x) == e * x, "tame e=" + std::to_string(e));
    for (std::int64_t p : {3, 5})
      for (std::int64_t t : {1, 2, 3}) {
        const Rational expected = x <= t ? x : Rational(t) + p * (x - t);
        o.check(psi(RamificationFiltration::cyclic_prime(p, t), x) == expected,
                "cyclic p=" + std::to_string(p) + " t=" + std::to_string(t) + " x=" + to_string(x));
      }
  }
}

void inversion_integrality(Outcome& o) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const auto chain = bt::random_chain(rng);
    RamificationFiltration filt(chain);
    for (int k = 0; k < 10; ++k) {
      const auto x = bt::random_rational(rng);
      o.check(phi(filt, psi(filt, x)) == x, "phi(psi(x)) != x");
      o.check(psi(filt, x) == bt::psi_by_scan(chain, x), "psi disagrees with scan oracle");
    }
    for (std::int64_t nu = 0; nu <= 50; ++nu) o.check(is_integer(psi(filt, Rational(nu))), "psi(nu) not integral");
  }
}

void gl1_ktheory(Outcome& o) {
  const auto base = LocalFieldData::make(3, 3);
  for (std::int64_t f : {2, 3, 5}) {
    const auto ext = ExtensionData::unramified(base, f);
    const auto bc = bc_gl1(ext, RamificationFiltration::unramified(), TemperedDualGL1(3, 4));
    const auto map = gl1_circle_map(bc);
    const auto [k0, k1] = induced_map(map);
    std::set<std::pair<std::size_t, std::size_t>> matched;
    for (const auto& m : map.matches()) matched.insert({m.source, m.target});
    o.check(matched.size() == bc.source.circles().size(), "not every source circle is matched");
    o.check(k1.cols().size() > k1.rows().size(), "no unmatched target summands");
    for (std::size_t r = 0; r < k1.rows().size(); ++r)
      for (std::size_t c = 0; c < k1.cols().size(); ++c) {
        const bool hit = matched.count({r, c}) > 0;
        o.check(k1.at(r, c) == (hit ? f : 0), "K1 entry at " + k1.rows()[r] + ", " + k1.cols()[c]);
        o.check(k0.at(r, c) == (hit ? 1 : 0), "K0 entry at " + k0.rows()[r] + ", " + k0.cols()[c]);
      }
  }
}

void conductor_transport_examples(Outcome& o) {
  const auto tame = RamificationFiltration::tame(2);
  o.check(conductor_transport(tame, 1) == 2, "tame 1");
  o.check(conductor_transport(tame, 2) == 4, "tame 2");
  o.check(conductor_transport(tame, 0) == 0, "tame 0");
  for (std::int64_t c = 0; c <= 10; ++c)
    o.check(conductor_transport(RamificationFiltration::unramified(), c) == c, "unramified");
}

void gl2_theorem(Outcome& o) {
  const auto base = LocalFieldData::make(3, 3);
  for (std::int64_t lf : {3, 5})
    for (std::int64_t c : {1, 2, 3}) {
      AdmissiblePair pair;
      pair.quad = ExtensionProfile::with_default_filtration(ExtensionData::totally_ramified(base, 2));
      pair.xi = {{c, 0}, true};
      const auto bc = bc_gl2(pair, ExtensionData::unramified(base, lf));
      o.check(bc.conductor == c, "conductor not preserved");
      o.check(bc.degree == lf, "circle degree");
      o.check(bc.target.quad.ext.e == 2 && bc.compositum.el_over_l.e == 2, "e(EL/L) != 2");
      const auto [k0, k1] = induced_map(gl2_circle_map(pair, bc));
      o.check(k1.rows().size() == 1 && k1.cols().size() == 1, "matrix shape");
      o.check(k1.at(0, 0) == lf && k0.at(0, 0) == 1, "K entries");
    }
}

void symmetric_reduction(Outcome& o) {
  for (int n = 1; n <= 6; ++n)
    for (std::int64_t f = 1; f <= 5; ++f) {
      const auto r = reduce_symmetric_component(n, f);
      o.check(r.degree == f, "degree");
      o.check(circle_degree_oracle(f, 8 * f) == r.degree, "winding oracle");
    }
}

void finiteness(Outcome& o) {
  for (auto [r, f] : std::vector<std::pair<int, std::int64_t>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
    const std::int64_t window = 2 * f + 2;
    const auto cert = finiteness_certificate(r, f, window);
    const auto monomials = detail::decreasing_vectors(r, -window, window);
    o.check(cert.reductions.size() == monomials.size(), "incomplete reduction table");
    for (const auto& red : cert.reductions) {
      bt::FullPoly sum;
      for (const auto& t : red.terms) {
        for (auto v : t.subring_exponent) o.check(((v % f) + f) % f == 0, "coefficient not in the subring");
        sum = bt::full_add(sum, bt::full_multiply(bt::full_orbit_sum(t.subring_exponent),
                                                  bt::full_orbit_sum(cert.generators.at(t.generator))),
                           t.coefficient);
      }
      o.check(sum == bt::full_orbit_sum(red.target), "reduction identity fails");
    }
  }
}

void weil_coherence(Outcome& o) {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<std::int64_t> fd(1, 6), md(-5, 5);
  for (int k = 0; k < 200; ++k) {
    const auto z = bt::random_gaussian(rng);
    const auto f = fd(rng), m = md(rng);
    const auto bc = bc_unramified_quasichar(UnramifiedQuasicharacter(z), f);
    o.check(bc({m, FieldSide::E}) == bt::naive_pow(z, f * m), "z^(f m) mismatch");
  }
}

}  // namespace

int main() {
  criterion(1, "GL(4) extended quotient", 0.1, extquot_gl4);
  criterion(2, "partition counts n <= 30", 1.0, partition_counts);
  criterion(3, "Hasse-Herbrand closed forms", 1.0, closed_forms);
  criterion(4, "phi/psi inversion and integrality", 5.0, inversion_integrality);
  criterion(5, "GL(1) K-theory matrices", 1.0, gl1_ktheory);
  criterion(6, "conductor transport", 0.1, conductor_transport_examples);
  criterion(7, "GL(2) cuspidal base change", 0.1, gl2_theorem);
  criterion(8, "symmetric reduction degree", 1.0, symmetric_reduction);
  criterion(9, "finiteness certificates", 60.0, finiteness);
  criterion(10, "Weil-degree coherence", 1.0, weil_coherence);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
