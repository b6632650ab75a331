#include "verlinde/verlinde_core.hpp"

#include <algorithm>

#include "verlinde/errors.hpp"

namespace verlinde {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

Integer to_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1)
    throw ConsistencyError(std::string(what) + " is not integral: " + r.get_str());
  return r.get_num();
}

Weight plus_rho(const Weight& v) {
  Weight w(v);
  for (auto& c : w.coords) c += 1;
  return w;
}

// Integer vector c with M <mu, xi> = sum_j mu_j c_j (mod M).
std::vector<std::int64_t> phase_vector(const LevelData& ld, const RegularPoint& p) {
  const auto& rs = ld.rs;
  if (static_cast<int>(p.xi.size()) != rs.rank) throw InvalidInput("point has the wrong rank");
  std::vector<std::int64_t> c(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rational s = 0;
    for (int i = 0; i < rs.rank; ++i) s += rs.weight_gram[j][i] * p.xi[i];
    s *= Rational(static_cast<long>(ld.conductor));
    if (s.get_den() != 1)
      throw InvalidInput("point is not an M-torsion element for conductor " + std::to_string(ld.conductor));
    c[j] = mod(s.get_num().get_si(), ld.conductor);
  }
  return c;
}

std::int64_t phase(const std::vector<std::int64_t>& c, const Weight& mu, std::int64_t m) {
  std::int64_t e = 0;
  for (std::size_t j = 0; j < c.size(); ++j) e = mod(e + mod(mu.coords[j], m) * c[j], m);
  return e;
}

Cyclotomic alternating_sum(const LevelData& ld, const std::vector<SignedWeight>& orbit,
                           const std::vector<std::int64_t>& c) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(ld.conductor), 0);
  for (const auto& sw : orbit) counts[phase(c, sw.weight, ld.conductor)] += sw.sign;
  return Cyclotomic::from_exponent_counts(ld.conductor, counts);
}

Cyclotomic delta_sq(const LevelData& ld, const std::vector<std::int64_t>& c) {
  Cyclotomic acc(Rational(1), ld.conductor);
  for (const auto& alpha : ld.rs.positive_roots_dynkin) {
    const std::int64_t e = phase(c, alpha, ld.conductor);
    if (e == 0) throw InvalidInput("Delta vanishes: point is not regular");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(ld.conductor), 0);
    counts[0] += 2;
    counts[e] -= 1;
    counts[mod(-e, ld.conductor)] -= 1;
    acc *= Cyclotomic::from_exponent_counts(ld.conductor, counts);
  }
  return acc;
}

void require_genus(std::int64_t genus, std::int64_t min) {
  if (genus < min) throw InvalidInput("genus must be >= " + std::to_string(min));
}

void require_label(const LevelData& ld, const Weight& v) {
  if (static_cast<int>(v.coords.size()) != ld.rs.rank)
    throw InvalidInput("weight " + v.to_string() + " does not match rank " + std::to_string(ld.rs.rank));
  if (!v.dominant()) throw InvalidInput("weight " + v.to_string() + " is not dominant");
}

}  // namespace

LevelData make_level_data(RootSystem rs, std::int64_t h) {
  if (h < 0) throw InvalidInput("level must be nonnegative");
  LevelData ld;
  ld.h = h;
  ld.shift = h + rs.dual_coxeter;
  ld.conductor = 2 * rs.weight_denominator * ld.shift;
  ld.rs = std::move(rs);
  return ld;
}

std::vector<RegularPoint> regular_points(const LevelData& ld) {
  const auto& rs = ld.rs;
  std::vector<RegularPoint> out;
  const Rational inv_shift(1, static_cast<long>(ld.shift));
  for (auto& w : level_weights(rs, ld.h)) {
    RegularPoint p;
    p.xi.reserve(rs.rank);
    for (auto c : w.coords) p.xi.push_back(Rational(static_cast<long>(c + 1)) * inv_shift);
    for (const auto& alpha : rs.positive_roots_dynkin) {
      RatVec a(alpha.coords.begin(), alpha.coords.end());
      const Rational t = rs.pairing(a, p.xi);
      if (t <= 0 || t >= 1) throw ConsistencyError("regular point outside the open alcove: " + w.to_string());
    }
    p.label = std::move(w);
    out.push_back(std::move(p));
  }
  return out;
}

Integer f_order(const LevelData& ld) {
  RatMatrix m = ld.rs.gram_basic;
  for (auto& row : m)
    for (auto& x : row) x *= Rational(static_cast<long>(ld.shift));
  return to_integer(determinant(m), "|F|");
}

std::int64_t exponent_at(const LevelData& ld, const Weight& mu, const RegularPoint& p) {
  return phase(phase_vector(ld, p), mu, ld.conductor);
}

Cyclotomic weyl_denominator_sq(const LevelData& ld, const RegularPoint& p) {
  return delta_sq(ld, phase_vector(ld, p));
}

Cyclotomic alternating_sum(const LevelData& ld, const Weight& mu, const RegularPoint& p) {
  return alternating_sum(ld, signed_orbit(ld.rs, mu), phase_vector(ld, p));
}

Cyclotomic character_at(const LevelData& ld, const Weight& v, const RegularPoint& p) {
  require_label(ld, v);
  const auto c = phase_vector(ld, p);
  const Cyclotomic den = alternating_sum(ld, signed_orbit(ld.rs, ld.rs.rho_dynkin()), c);
  if (den.is_zero()) throw InvalidInput("point not regular: Weyl denominator vanishes");
  return alternating_sum(ld, signed_orbit(ld.rs, plus_rho(v)), c) / den;
}

PointFunction kac_numerator_support(const LevelData& ld, const Weight& v) {
  require_label(ld, v);
  const auto orbit = signed_orbit(ld.rs, plus_rho(v));
  PointFunction out;
  for (const auto& p : regular_points(ld)) out.emplace(p.label, alternating_sum(ld, orbit, phase_vector(ld, p)));
  return out;
}

Integer verlinde_dimension(const LevelData& ld, std::int64_t genus) {
  require_genus(genus, 1);
  Cyclotomic sum(Rational(0), ld.conductor);
  for (const auto& p : regular_points(ld)) {
    if (genus == 1) {
      sum += Cyclotomic(Rational(1), ld.conductor);
      continue;
    }
    sum += weyl_denominator_sq(ld, p).inverse().pow(genus - 1);
  }
  Integer fo = f_order(ld);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), fo.get_mpz_t(), static_cast<unsigned long>(genus - 1));
  return to_integer(sum.as_rational() * Rational(scale), "Verlinde dimension");
}

Integer multiplicity(const LevelData& ld, const Weight& v, std::int64_t genus) {
  require_genus(genus, 1);
  require_label(ld, v);
  if (ld.rs.level(v) > ld.h) throw InvalidInput("weight " + v.to_string() + " exceeds the level");
  const auto num_orbit = signed_orbit(ld.rs, plus_rho(v));
  const auto rho_orbit = signed_orbit(ld.rs, ld.rs.rho_dynkin());
  Cyclotomic sum(Rational(0), ld.conductor);
  for (const auto& p : regular_points(ld)) {
    const auto c = phase_vector(ld, p);
    Cyclotomic chi = alternating_sum(ld, num_orbit, c) / alternating_sum(ld, rho_orbit, c);
    if (genus > 1) chi *= delta_sq(ld, c).inverse().pow(genus - 1);
    sum += chi;
  }
  Integer fo = f_order(ld);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), fo.get_mpz_t(), static_cast<unsigned long>(genus - 1));
  return to_integer(sum.as_rational() * Rational(scale), "multiplicity");
}

Cyclotomic inner_product(const LevelData& ld, const PointFunction& phi, const PointFunction& psi) {
  Cyclotomic sum(Rational(0), ld.conductor);
  for (const auto& p : regular_points(ld)) {
    auto a = phi.find(p.label);
    auto b = psi.find(p.label);
    if (a == phi.end() || b == psi.end())
      throw InvalidInput("function is not defined at point " + p.label.to_string());
    sum += weyl_denominator_sq(ld, p) * a->second.embed(lcm64(a->second.conductor(), ld.conductor)).conjugate() *
           b->second;
  }
  return sum * Rational(Integer(1), f_order(ld));
}

PointFunction handle_element(const LevelData& ld, std::int64_t genus) {
  require_genus(genus, 0);
  Integer fo = f_order(ld);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), fo.get_mpz_t(), static_cast<unsigned long>(genus));
  PointFunction out;
  for (const auto& p : regular_points(ld)) {
    Cyclotomic v = genus == 0 ? Cyclotomic(Rational(1), ld.conductor) : weyl_denominator_sq(ld, p).inverse().pow(genus);
    out.emplace(p.label, v * Rational(scale));
  }
  return out;
}

PointFunction CharacterTable::as_function(std::size_t a) const {
  PointFunction out;
  for (std::size_t f = 0; f < points.size(); ++f) out.emplace(points[f].label, chi[a][f]);
  return out;
}

CharacterTable character_table(const LevelData& ld) {
  CharacterTable t;
  t.weights = level_weights(ld.rs, ld.h);
  t.points = regular_points(ld);
  t.f_order = f_order(ld);
  const auto rho_orbit = signed_orbit(ld.rs, ld.rs.rho_dynkin());
  std::vector<std::vector<SignedWeight>> orbits;
  orbits.reserve(t.weights.size());
  for (const auto& w : t.weights) orbits.push_back(signed_orbit(ld.rs, plus_rho(w)));

  t.chi.assign(t.weights.size(), std::vector<Cyclotomic>(t.points.size()));
  for (std::size_t f = 0; f < t.points.size(); ++f) {
    const auto c = phase_vector(ld, t.points[f]);
    t.delta_sq.push_back(delta_sq(ld, c));
    const Cyclotomic inv_den = alternating_sum(ld, rho_orbit, c).inverse();
    for (std::size_t a = 0; a < t.weights.size(); ++a) t.chi[a][f] = alternating_sum(ld, orbits[a], c) * inv_den;
  }
  return t;
}

std::vector<std::vector<Integer>> FusionRing::fusion_matrix(std::size_t a) const { return constants.at(a); }

std::size_t FusionRing::index_of(const Weight& w) const {
  auto it = std::find(basis.begin(), basis.end(), w);
  if (it == basis.end()) throw InvalidInput("weight " + w.to_string() + " is not in the fusion basis");
  return static_cast<std::size_t>(it - basis.begin());
}

FusionRing fusion_ring(const LevelData& ld) { return fusion_ring(ld, character_table(ld)); }

FusionRing fusion_ring(const LevelData& ld, const CharacterTable& t) {
  FusionRing ring;
  ring.family = ld.rs.family;
  ring.rank = ld.rs.rank;
  ring.level = ld.h;
  ring.basis = t.weights;
  const std::size_t n = t.weights.size();
  const std::size_t npts = t.points.size();
  ring.unit = ring.index_of(Weight{std::vector<std::int64_t>(ld.rs.rank, 0)});

  // dual[c][f] = Delta(f)^2 conj(chi_c(f)) / |F|
  const Rational inv_f(Integer(1), t.f_order);
  std::vector<std::vector<Cyclotomic>> dual(n, std::vector<Cyclotomic>(npts));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t f = 0; f < npts; ++f) dual[c][f] = t.delta_sq[f] * t.chi[c][f].conjugate() * inv_f;

  ring.constants.assign(n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n, 0)));
  std::vector<Cyclotomic> prod(npts);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t f = 0; f < npts; ++f) prod[f] = t.chi[a][f] * t.chi[b][f];
      for (std::size_t c = 0; c < n; ++c) {
        Cyclotomic s(Rational(0), ld.conductor);
        for (std::size_t f = 0; f < npts; ++f) s += prod[f] * dual[c][f];
        if (!s.is_rational()) throw ConsistencyError("structure constant is not rational");
        const Integer v = to_integer(s.as_rational(), "structure constant");
        ring.constants[a][b][c] = v;
        ring.constants[b][a][c] = v;
      }
    }
  }
  return ring;
}

}  // namespace verlinde
