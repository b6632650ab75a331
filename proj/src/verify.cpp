#include "verlinde/verify.hpp"

#include <set>
#include <sstream>

#include "verlinde/oracle.hpp"

namespace verlinde::verify {

namespace {

void note(std::string* why, const std::string& s) {
  if (why) *why = s;
}

std::string idx(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ')';
  return os.str();
}

}  // namespace

bool fusion_axioms(const FusionRing& ring, std::string* why) {
  const std::size_t n = ring.size();
  const auto& N = ring.constants;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (N[a][b][c] < 0) return note(why, "negative constant at " + idx(a, b, c)), false;
        if (N[a][b][c] != N[b][a][c]) return note(why, "not commutative at " + idx(a, b, c)), false;
        if (N[ring.unit][b][c] != (b == c ? 1 : 0)) return note(why, "unit law fails at " + idx(ring.unit, b, c)), false;
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Integer lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += N[a][b][e] * N[e][c][d];
            rhs += N[b][c][e] * N[a][e][d];
          }
          if (lhs != rhs) return note(why, "associativity fails for " + idx(a, b, c) + " -> " + std::to_string(d)), false;
        }
  return true;
}

bool characters_orthonormal(const LevelData& ld, const CharacterTable& table, std::string* why) {
  for (std::size_t a = 0; a < table.weights.size(); ++a) {
    const PointFunction fa = table.as_function(a);
    for (std::size_t b = 0; b < table.weights.size(); ++b) {
      const Cyclotomic ip = inner_product(ld, fa, table.as_function(b));
      if (ip != Cyclotomic(Rational(a == b ? 1 : 0)))
        return note(why, "<chi_" + table.weights[a].to_string() + ", chi_" + table.weights[b].to_string() + "> = " + ip.to_string()), false;
    }
  }
  return true;
}

bool fusion_diagonalised(const FusionRing& ring, const CharacterTable& table, std::string* why) {
  const std::size_t n = ring.size();
  for (std::size_t f = 0; f < table.points.size(); ++f) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        // (N_a v)_c with v_b = chi_b(f)
        Cyclotomic lhs;
        for (std::size_t b = 0; b < n; ++b)
          if (ring.constants[a][c][b] != 0) lhs += table.chi[b][f] * Rational(ring.constants[a][c][b]);
        if (lhs != table.chi[a][f] * table.chi[c][f])
          return note(why, "eigen-equation fails at a=" + std::to_string(a) + ", point " + table.points[f].label.to_string()), false;
      }
    }
  }
  return true;
}

bool so3_associative(const so3::GradedVerlindeRing& ring) {
  const std::size_t n = ring.size();
  const auto& m = ring.mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += m[a][b][e] * m[e][c][d];
            rhs += m[b][c][e] * m[a][e][d];
          }
          if (lhs != rhs) return false;
        }
  return true;
}

bool so3_commutative(const so3::GradedVerlindeRing& ring) {
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b)
      if (ring.mult[a][b] != ring.mult[b][a]) return false;
  return true;
}

bool so3_nonnegative(const so3::GradedVerlindeRing& ring) {
  for (const auto& plane : ring.mult)
    for (const auto& row : plane)
      for (auto x : row)
        if (x < 0) return false;
  return true;
}

bool so3_split_sum_identity(const so3::GradedVerlindeRing& ring) {
  const std::size_t n = ring.size();
  std::vector<std::int64_t> lhs(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    lhs[c] = ring.mult[ring.plus()][ring.plus()][c] + ring.mult[ring.plus()][ring.minus()][c];
  std::vector<std::int64_t> rhs(n, 0);
  for (std::int64_t p = 1; p <= ring.k - 2; p += 2) rhs[ring.index_of(p)] = 1;
  const bool plus = ((ring.k - 1) / 2) % 2 == 0;
  ++rhs[plus ? ring.plus() : ring.minus()];
  return lhs == rhs;
}

bool so3_homomorphism(const so3::GradedVerlindeRing& ring) {
  const so3::QuotientRingRk base(1, 1, ring.k);
  for (auto p : base.basis())
    for (auto q : base.basis()) {
      const auto lhs = ring.image(base.multiply(p, q));
      const auto rhs = ring.product(ring.image({{p, 1}}), ring.image({{q, 1}}));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Check> run_oracles(const LevelData& ld, std::int64_t max_genus) {
  std::vector<Check> out;
  const auto weights = level_weights(ld.rs, ld.h);
  const CharacterTable table = character_table(ld);
  const FusionRing ring = fusion_ring(ld, table);
  std::string why;

  {
    Check c{"genus 1 equals weight count", false, ""};
    const Integer d = verlinde_dimension(ld, 1);
    c.pass = d == Integer(static_cast<unsigned long>(weights.size()));
    c.detail = d.get_str() + " vs " + std::to_string(weights.size());
    out.push_back(c);
  }
  for (std::int64_t g = 1; g <= max_genus; ++g) {
    Check c{"genus " + std::to_string(g) + " formula vs fusion matrices", false, ""};
    const Integer a = verlinde_dimension(ld, g), b = oracle::genus_dim_from_fusion(ring, g);
    c.pass = a == b;
    c.detail = a.get_str() + " vs " + b.get_str();
    out.push_back(c);
  }
  {
    const auto r = oracle::float_crosscheck(ld, max_genus);
    std::ostringstream os;
    os << "relative error " << r.relative_error;
    out.push_back({"float cross-check at genus " + std::to_string(max_genus), r.pass, os.str()});
  }
  out.push_back({"fusion axioms", fusion_axioms(ring, &why), why});
  why.clear();
  out.push_back({"character orthonormality", characters_orthonormal(ld, table, &why), why});
  why.clear();
  out.push_back({"fusion diagonalised by characters", fusion_diagonalised(ring, table, &why), why});
  {
    Check c{"multiplicity and handle pairing", true, ""};
    for (std::int64_t g = 1; g <= max_genus && c.pass; ++g) {
      const PointFunction handle = handle_element(ld, g);
      if (multiplicity(ld, weights.front(), g) != verlinde_dimension(ld, g)) {
        c.pass = false;
        c.detail = "vacuum multiplicity differs at genus " + std::to_string(g);
      }
      for (std::size_t a = 0; a < weights.size() && c.pass; ++a) {
        const Integer m = multiplicity(ld, weights[a], g);
        if (inner_product(ld, table.as_function(a), handle) != Cyclotomic(Rational(m))) {
          c.pass = false;
          c.detail = "pairing differs for " + weights[a].to_string() + " at genus " + std::to_string(g);
        }
        if (oracle::genus_multiplicity_from_fusion(ring, a, g) != m) {
          c.pass = false;
          c.detail = "fusion-matrix multiplicity differs for " + weights[a].to_string();
        }
      }
    }
    out.push_back(c);
  }
  if (ld.rs.rank <= 3) {
    const auto scan = oracle::scan_F(ld);
    const Integer f = f_order(ld);
    out.push_back({"lattice scan |F|", Integer(static_cast<unsigned long>(scan.points.size())) == f,
                   std::to_string(scan.points.size()) + " vs " + f.get_str()});
    std::set<Weight> labels;
    for (const auto& p : regular_points(ld)) labels.insert(p.label);
    out.push_back({"lattice scan orbits = regular points", scan.orbit_labels == labels,
                   std::to_string(scan.orbit_count) + " orbits"});
  }
  if (ld.rs.family == Family::A && ld.rs.rank == 1) {
    const auto t = oracle::cg_fusion_a1(ld.h);
    out.push_back({"Clebsch-Gordan tensor", t == ring.constants, ""});
  }
  return out;
}

}  // namespace verlinde::verify
