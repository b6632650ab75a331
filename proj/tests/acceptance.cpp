// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "verlinde/koszul.hpp"
#include "verlinde/oracle.hpp"
#include "verlinde/so3.hpp"
#include "verlinde/verify.hpp"
#include "verlinde/verlinde_core.hpp"

using namespace verlinde;

namespace {

struct Case {
  std::string group;
  std::int64_t h;
  std::int64_t max_genus;
};

// Cases of the exactness criterion; reused by several others.
std::vector<Case> main_cases() {
  std::vector<Case> out;
  for (std::int64_t h = 0; h <= 8; ++h) out.push_back({"A1", h, 4});
  for (std::int64_t h = 0; h <= 3; ++h) out.push_back({"A2", h, 3});
  for (std::int64_t h = 0; h <= 2; ++h) out.push_back({"B2", h, 2});
  return out;
}

struct Prepared {
  Case c;
  LevelData ld;
  CharacterTable table;
  FusionRing ring;
};

const std::vector<Prepared>& prepared() {
  static const std::vector<Prepared> all = [] {
    std::vector<Prepared> v;
    for (const auto& c : main_cases()) {
      auto ld = make_level_data(build(c.group), c.h);
      auto table = character_table(ld);
      auto ring = fusion_ring(ld, table);
      v.push_back({c, std::move(ld), std::move(table), std::move(ring)});
    }
    return v;
  }();
  return all;
}

std::string tag(const Case& c) { return c.group + " h=" + std::to_string(c.h); }

// Each criterion returns an empty string on success, else the first failure.
using Criterion = std::function<std::string()>;

std::string c1_su2_example() {
  for (std::int64_t h = 1; h <= 8; ++h) {
    const auto ld = make_level_data(build("A1"), h);
    const std::int64_t tau = h + 2;
    const auto pts = regular_points(ld);
    if (static_cast<std::int64_t>(pts.size()) != tau - 1)
      return "h=" + std::to_string(h) + ": " + std::to_string(pts.size()) + " orbits, expected " + std::to_string(tau - 1);
    // every regular point carries the same local twisting tau * basic form
    std::size_t k0 = 0, k1 = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto d = koszul::twisted_cohomology_dims({{2 * tau}}, 4);
      if (!d.stable) return "h=" + std::to_string(h) + ": unstable stalk";
      k0 += d.even;
      k1 += d.odd;
    }
    if (k0 != 0 || static_cast<std::int64_t>(k1) != tau - 1)
      return "h=" + std::to_string(h) + ": K0=" + std::to_string(k0) + " K1=" + std::to_string(k1);
    if (koszul::su2_invariant_stalk(tau) != 0) return "h=" + std::to_string(h) + ": nonzero invariant stalk";
  }
  return {};
}

std::string c2_exact_integers() {
  for (const auto& p : prepared())
    for (std::int64_t g = 1; g <= p.c.max_genus; ++g) {
      // recompute the sum by hand and check it is a rational with denominator 1
      Cyclotomic sum(Rational(0), p.ld.conductor);
      for (const auto& d : p.table.delta_sq) sum += d.inverse().pow(g - 1);
      if (!sum.is_rational()) return tag(p.c) + " g=" + std::to_string(g) + ": irrational sum";
      Integer scale;
      mpz_pow_ui(scale.get_mpz_t(), p.table.f_order.get_mpz_t(), static_cast<unsigned long>(g - 1));
      const Rational value = sum.as_rational() * Rational(scale);
      if (value.get_den() != 1) return tag(p.c) + " g=" + std::to_string(g) + ": value " + to_fraction_string(value);
      if (value.get_num() != verlinde_dimension(p.ld, g)) return tag(p.c) + ": library value differs";
    }
  return {};
}

std::string c3_cross_oracle() {
  for (const auto& p : prepared())
    for (std::int64_t g = 1; g <= p.c.max_genus; ++g) {
      const auto a = verlinde_dimension(p.ld, g);
      const auto b = oracle::genus_dim_from_fusion(p.ring, g);
      if (a != b) return tag(p.c) + " g=" + std::to_string(g) + ": " + a.get_str() + " vs " + b.get_str();
    }
  const auto a1 = make_level_data(build("A1"), 1);
  for (std::int64_t g = 1; g <= 5; ++g)
    if (verlinde_dimension(a1, g) != Integer(1) << g) return "A1 h=1 g=" + std::to_string(g) + " is not 2^g";
  if (verlinde_dimension(make_level_data(build("A1"), 2), 2) != 10) return "A1 h=2 g=2 is not 10";
  return {};
}

std::string c4_genus_one() {
  for (const auto& p : prepared()) {
    const auto n = level_weights(p.ld.rs, p.c.h).size();
    if (verlinde_dimension(p.ld, 1) != Integer(static_cast<unsigned long>(n))) return tag(p.c);
  }
  return {};
}

std::string c5_orthonormal() {
  for (const auto& p : prepared()) {
    std::string why;
    if (!verify::characters_orthonormal(p.ld, p.table, &why)) return tag(p.c) + ": " + why;
  }
  return {};
}

std::string c6_diagonalisation() {
  for (const auto& p : prepared()) {
    if (!((p.c.group == "A1" && p.c.h <= 5) || (p.c.group == "A2" && p.c.h <= 2))) continue;
    std::string why;
    if (!verify::fusion_diagonalised(p.ring, p.table, &why)) return tag(p.c) + ": " + why;
  }
  return {};
}

std::string c7_fusion_axioms() {
  for (const auto& p : prepared()) {
    std::string why;
    if (!verify::fusion_axioms(p.ring, &why)) return tag(p.c) + ": " + why;
    if (p.c.group == "A1" && p.ring.constants != oracle::cg_fusion_a1(p.c.h)) return tag(p.c) + ": differs from Clebsch-Gordan";
  }
  return {};
}

std::string c8_f_order() {
  std::vector<std::pair<std::string, std::int64_t>> cases;
  for (std::int64_t h = 0; h <= 6; ++h) cases.push_back({"A1", h});
  for (std::int64_t h = 0; h <= 3; ++h) cases.push_back({"A2", h});
  for (std::int64_t h = 0; h <= 2; ++h) cases.push_back({"B2", h});
  for (const auto& [g, h] : cases) {
    const auto ld = make_level_data(build(g), h);
    const auto scan = oracle::scan_F(ld);
    const std::string t = g + " h=" + std::to_string(h);
    if (Integer(static_cast<unsigned long>(scan.points.size())) != f_order(ld)) return t + ": |F| mismatch";
    std::set<Weight> labels;
    for (const auto& pt : regular_points(ld)) labels.insert(pt.label);
    if (scan.orbit_labels != labels) return t + ": orbit representatives differ";
  }
  return {};
}

// Element with coefficient 1 on each listed [p], plus [k]+ or [k]- when split is 1 or -1.
std::vector<std::int64_t> graded_vec(const so3::GradedVerlindeRing& r, const std::vector<std::int64_t>& labels, int split) {
  std::vector<std::int64_t> v(r.size(), 0);
  for (auto q : labels) v[r.index_of(q)] += 1;
  if (split == 1) v[r.plus()] += 1;
  if (split == -1) v[r.minus()] += 1;
  return v;
}

std::string c9_so3() {
  for (std::int64_t k = 1; k <= 12; ++k)
    for (const auto& t : so3::all_twistings(k)) {
      const auto e = so3::k_table(t);
      std::size_t d0 = 0, d1 = 0;
      for (const auto& l : so3::so3_localisation(t)) (l.degree == 0 ? d0 : d1)++;
      if (d0 != e.k0_rank || d1 != e.k1_rank)
        return t.to_string() + ": table ranks " + std::to_string(e.k0_rank) + "," + std::to_string(e.k1_rank) +
               " vs support " + std::to_string(d0) + "," + std::to_string(d1);
    }
  for (std::int64_t k : {3, 5, 7, 9}) {
    const auto r = so3::graded_ring(k);
    const int s = ((k - 1) / 2) % 2 == 0 ? 1 : -1;  // i^(k-1)
    std::vector<std::int64_t> sq, mixed;
    for (std::int64_t p = 1; 4 * p < k; ++p) sq.push_back(k - 4 * p);
    for (std::int64_t p = 0; 4 * p + 2 < k; ++p) mixed.push_back(k - 4 * p - 2);
    const auto pp = r.product(graded_vec(r, {}, 1), graded_vec(r, {}, 1));
    const auto pm = r.product(graded_vec(r, {}, 1), graded_vec(r, {}, -1));
    const auto mm = r.product(graded_vec(r, {}, -1), graded_vec(r, {}, -1));
    const std::string t = "k=" + std::to_string(k);
    if (pp != graded_vec(r, sq, s)) return t + ": [k]+^2";
    if (pm != graded_vec(r, mixed, 0)) return t + ": [k]+[k]-";
    if (mm != graded_vec(r, sq, -s)) return t + ": [k]-^2";
    std::vector<std::int64_t> all_odd;
    for (std::int64_t p = 1; p <= k - 2; p += 2) all_odd.push_back(p);
    std::vector<std::int64_t> lhs(r.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = pp[i] + pm[i];
    if (lhs != graded_vec(r, all_odd, s)) return t + ": [k][k]+ identity";
    if (!verify::so3_split_sum_identity(r)) return t + ": [k][k]+ checker";
  }
  for (std::int64_t k = 3; k <= 13; k += 2)
    if (!verify::so3_associative(so3::graded_ring(k))) return "k=" + std::to_string(k) + ": not associative";
  return {};
}

std::string c10_koszul() {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> entry(-6, 6);
  int nondegenerate = 0;
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 8; ++t) {
      koszul::IntMatrix b(n, std::vector<std::int64_t>(n));
      for (auto& row : b)
        for (auto& x : row) x = entry(rng);
      if (!koszul::differential_squares_to_zero(koszul::KoszulComplex(b, n + 3)))
        return "d^2 != 0 at n=" + std::to_string(n);
      RatMatrix m;
      for (const auto& row : b) {
        RatVec v;
        for (auto x : row) v.push_back(Rational(static_cast<long>(x)));
        m.push_back(v);
      }
      if (determinant(m) == 0) continue;
      ++nondegenerate;
      const auto d = koszul::twisted_cohomology_dims(b, n + 2);
      if (d.total() != 1 || (n % 2 == 0 ? d.even : d.odd) != 1 || !d.stable)
        return "n=" + std::to_string(n) + ": even=" + std::to_string(d.even) + " odd=" + std::to_string(d.odd);
    }
  if (nondegenerate < 12) return "too few nondegenerate samples";
  for (std::int64_t k = 1; k <= 5; ++k) {
    if (!koszul::differential_squares_to_zero(koszul::KoszulComplex({{2 * k}}, 8, true))) return "invariant d^2 != 0";
    if (koszul::su2_invariant_stalk(k) != 0) return "invariant stalk nonzero at k=" + std::to_string(k);
  }
  return {};
}

std::string c11_multiplicity() {
  for (const auto& p : prepared())
    for (std::int64_t g = 1; g <= p.c.max_genus; ++g) {
      const std::string t = tag(p.c) + " g=" + std::to_string(g);
      const Weight vacuum{std::vector<std::int64_t>(p.ld.rs.rank, 0)};
      if (multiplicity(p.ld, vacuum, g) != verlinde_dimension(p.ld, g)) return t + ": vacuum multiplicity";
      const auto handle = handle_element(p.ld, g);
      for (std::size_t a = 0; a < p.table.weights.size(); ++a) {
        const auto pairing = inner_product(p.ld, p.table.as_function(a), handle);
        const auto m = multiplicity(p.ld, p.table.weights[a], g);
        if (!pairing.is_rational() || pairing.as_rational() != Rational(m))
          return t + ": pairing at " + p.table.weights[a].to_string();
      }
    }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"1 SU(2) support: h+1 odd orbits, invariant stalk 0 (h=1..8)", c1_su2_example},
      {"2 Verlinde dimensions are exact integers", c2_exact_integers},
      {"3 Verlinde formula equals fusion-matrix genus formula", c3_cross_oracle},
      {"4 genus one counts level-h weights", c4_genus_one},
      {"5 characters are orthonormal", c5_orthonormal},
      {"6 characters diagonalise fusion matrices", c6_diagonalisation},
      {"7 fusion integrality, positivity, associativity, Clebsch-Gordan", c7_fusion_axioms},
      {"8 |F| determinant equals lattice scan; orbit representatives agree", c8_f_order},
      {"9 SO(3) table ranks, split products, graded associativity", c9_so3},
      {"10 Koszul d^2=0, nondegenerate stalks, invariant stalk", c10_koszul},
      {"11 multiplicity and handle pairing", c11_multiplicity},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (problem.empty() ? "PASS" : "FAIL") << "  criterion " << name << "  [" << secs << "s]";
    if (!problem.empty()) line << "  -- " << problem;
    std::cout << line.str() << "\n";
    if (!problem.empty()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
