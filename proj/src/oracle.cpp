#include "verlinde/oracle.hpp"

#include <cmath>
#include <deque>
#include <numbers>

#include "verlinde/errors.hpp"

namespace verlinde::oracle {

namespace {

Rational frac(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

RatMatrix coroots_ambient(const RootSystem& rs) {
  RatMatrix out;
  for (const auto& a : rs.simple_roots) out.push_back((Rational(2) / rs.basic(a, a)) * a);
  return out;
}

const RatVec& highest_root_ambient(const RootSystem& rs) {
  std::size_t top = 0;
  for (std::size_t k = 1; k < rs.positive_roots.size(); ++k)
    if (rs.basic(rs.positive_roots[k], rs.rho) > rs.basic(rs.positive_roots[top], rs.rho)) top = k;
  return rs.positive_roots[top];
}

}  // namespace

LatticeScanResult scan_F(const LevelData& ld) {
  const auto& rs = ld.rs;
  if (rs.rank > 3) throw ComputationRefused("scan_F is limited to rank <= 3 (got " + rs.name() + ")");
  const std::size_t n = static_cast<std::size_t>(rs.rank);
  const Rational k(static_cast<long>(ld.shift));

  RatMatrix scaled = rs.gram_basic;
  for (auto& row : scaled)
    for (auto& x : row) x *= k;
  const RatMatrix inv = inverse(scaled);
  std::vector<RatVec> generators(n, RatVec(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) generators[j][i] = frac(inv[i][j]);

  std::set<RatVec> seen{RatVec(n, 0)};
  std::deque<RatVec> queue{RatVec(n, 0)};
  while (!queue.empty()) {
    RatVec cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      RatVec next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = frac(cur[i] + g[i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  const RatMatrix coroots = coroots_ambient(rs);
  const RatVec& theta = highest_root_ambient(rs);
  LatticeScanResult out;
  out.points.assign(seen.begin(), seen.end());
  for (const auto& x : out.points) {
    RatVec xi(rs.rho.size(), 0);
    for (std::size_t j = 0; j < n; ++j) xi = xi + x[j] * coroots[j];
    bool regular = true;
    for (const auto& alpha : rs.positive_roots)
      if (is_integer(rs.basic(alpha, xi))) regular = false;
    if (!regular) continue;
    ++out.regular_count;

    // Affine fold of k*xi into the fundamental alcove at level k.
    RatVec nu = k * xi;
    for (;;) {
      bool moved = false;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational t = rs.basic(coroots[i], nu);
        if (t < 0) {
          nu = nu - t * rs.simple_roots[i];
          moved = true;
        }
      }
      const Rational top = rs.basic(theta, nu);
      if (top > k) {
        nu = nu - (top - k) * theta;
        moved = true;
      }
      if (!moved) break;
    }
    Weight label;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational t = rs.basic(coroots[i], nu);
      if (!is_integer(t) || t <= 0) throw ConsistencyError("regular point folded onto an alcove wall");
      label.coords.push_back(t.get_num().get_si() - 1);
    }
    out.orbit_labels.insert(label);
  }
  const Integer w = rs.weyl_order();
  if (Integer(static_cast<unsigned long>(out.regular_count)) % w != 0)
    throw ConsistencyError("regular points of F do not split into free W-orbits");
  out.orbit_count = out.regular_count / w.get_ui();
  return out;
}

Tensor cg_fusion_a1(std::int64_t h) {
  if (h < 0) throw InvalidInput("level must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(h + 1);
  Tensor t(n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n, 0)));
  for (std::int64_t a = 0; a <= h; ++a)
    for (std::int64_t b = 0; b <= h; ++b)
      for (std::int64_t c = 0; c <= h; ++c)
        if (std::abs(a - b) <= c && c <= std::min(a + b, 2 * h - a - b) && (a + b + c) % 2 == 0) t[a][b][c] = 1;
  return t;
}

FusionRing ring_from_tensor(Family family, int rank, std::int64_t level, std::vector<Weight> basis, Tensor t) {
  FusionRing r;
  r.family = family;
  r.rank = rank;
  r.level = level;
  r.basis = std::move(basis);
  r.constants = std::move(t);
  r.unit = r.index_of(Weight{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)});
  return r;
}

std::vector<std::vector<Integer>> handle_operator(const FusionRing& ring) {
  const std::size_t n = ring.size();
  std::vector<std::vector<Integer>> h(n, std::vector<Integer>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& na = ring.constants[a];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) h[i][j] += na[i][k] * na[j][k];
  }
  return h;
}

namespace {

std::vector<Integer> handle_power_column(const FusionRing& ring, std::int64_t genus) {
  if (genus < 1) throw InvalidInput("genus must be >= 1");
  const auto h = handle_operator(ring);
  const std::size_t n = ring.size();
  std::vector<Integer> v(n, 0);
  v[ring.unit] = 1;
  for (std::int64_t g = 0; g < genus; ++g) {
    std::vector<Integer> next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) next[i] += h[i][j] * v[j];
    v = std::move(next);
  }
  return v;
}

}  // namespace

Integer genus_dim_from_fusion(const FusionRing& ring, std::int64_t genus) {
  return handle_power_column(ring, genus)[ring.unit];
}

Integer genus_multiplicity_from_fusion(const FusionRing& ring, std::size_t v, std::int64_t genus) {
  return handle_power_column(ring, genus).at(v);
}

FloatReport float_crosscheck(const LevelData& ld, std::int64_t genus, double tolerance) {
  if (genus < 1) throw InvalidInput("genus must be >= 1");
  const auto& rs = ld.rs;
  const std::size_t n = static_cast<std::size_t>(rs.rank);
  const long double k = static_cast<long double>(ld.shift);

  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = k * rs.gram_basic[i][j].get_d();
  long double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
    std::swap(m[p], m[c]);
    if (p != c) det = -det;
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = m[r][c] / m[c][c];
      for (std::size_t q = c; q < n; ++q) m[r][q] -= f * m[c][q];
    }
  }

  long double sum = 0;
  for (const auto& w : level_weights(rs, ld.h)) {
    RatVec shifted;
    for (auto c : w.coords) shifted.push_back(Rational(static_cast<long>(c + 1)));
    const RatVec amb = rs.to_ambient(shifted);
    long double d2 = 1;
    for (const auto& alpha : rs.positive_roots) {
      const long double s = std::sin(std::numbers::pi_v<long double> * rs.basic(alpha, amb).get_d() / k);
      d2 *= 4 * s * s;
    }
    sum += std::pow(d2, static_cast<long double>(1 - genus));
  }
  sum *= std::pow(det, static_cast<long double>(genus - 1));

  FloatReport r;
  r.float_value = static_cast<double>(sum);
  r.exact_value = verlinde_dimension(ld, genus);
  const long double exact = r.exact_value.get_d();
  r.relative_error = static_cast<double>(std::fabs(sum - exact) / std::fabs(exact));
  r.pass = r.relative_error < tolerance;
  return r;
}

}  // namespace verlinde::oracle
