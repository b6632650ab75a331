#include "verlinde/koszul.hpp"

#include <bit>

#include "verlinde/errors.hpp"

namespace verlinde::koszul {

namespace {

void exponent_vectors(int n, int s, std::vector<int>& cur, int i, std::vector<std::vector<int>>& out) {
  if (i == n - 1) {
    cur[i] = s;
    out.push_back(cur);
    return;
  }
  for (int e = s; e >= 0; --e) {
    cur[i] = e;
    exponent_vectors(n, s - e, cur, i + 1, out);
  }
}

std::size_t find_index(const std::vector<KoszulComplex::Monomial>& basis, unsigned mask, const std::vector<int>& e) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].ext_mask == mask && basis[i].exponents == e) return i;
  throw ConsistencyError("differential left the Weyl-invariant subcomplex");
}

const std::vector<KoszulComplex::Monomial> kEmpty;

}  // namespace

KoszulComplex::KoszulComplex(IntMatrix beta, int truncation, bool weyl_invariant)
    : n_(static_cast<int>(beta.size())), truncation_(truncation), invariant_(weyl_invariant), beta_(std::move(beta)) {
  if (n_ < 1 || n_ > 8) throw InvalidInput("Koszul rank must be between 1 and 8");
  for (const auto& row : beta_)
    if (static_cast<int>(row.size()) != n_) throw InvalidInput("beta must be square");
  if (truncation_ < 1) throw InvalidInput("truncation must be positive");
  if (invariant_ && n_ != 1) throw InvalidInput("Weyl-invariant restriction is implemented for rank 1 only");
  for (int s = 0; s <= truncation_; ++s) {
    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<std::size_t>(n_), 0);
    exponent_vectors(n_, s, cur, 0, exps);
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
      const int p = std::popcount(mask);
      if (invariant_ && (p + s) % 2 != 0) continue;
      for (const auto& e : exps) basis_[{p, s}].push_back({mask, e});
    }
  }
}

const std::vector<KoszulComplex::Monomial>& KoszulComplex::basis(int p, int s) const {
  auto it = basis_.find({p, s});
  return it == basis_.end() ? kEmpty : it->second;
}

RatMatrix KoszulComplex::differential(int p, int s) const {
  const auto& src = basis(p, s);
  const auto& dst = basis(p + 1, s + 1);
  RatMatrix m(dst.size(), RatVec(src.size(), 0));
  if (dst.empty()) return m;
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto& mono = src[col];
    for (int i = 0; i < n_; ++i) {
      if (mono.ext_mask & (1u << i)) continue;
      const int below = std::popcount(mono.ext_mask & ((1u << i) - 1));
      const int sign = below % 2 == 0 ? 1 : -1;
      for (int j = 0; j < n_; ++j) {
        if (beta_[i][j] == 0) continue;
        std::vector<int> e = mono.exponents;
        ++e[j];
        const std::size_t row = find_index(dst, mono.ext_mask | (1u << i), e);
        m[row][col] += Rational(static_cast<long>(sign * beta_[i][j]));
      }
    }
  }
  return m;
}

RatMatrix KoszulComplex::differential_component(int r, int p, int s) const {
  // Targets of total degree (p + 2s) + r inside the retained range.
  const RatMatrix full = differential(p, s);
  const bool hits = (p + 1) + 2 * (s + 1) == p + 2 * s + r;
  RatMatrix out = full;
  if (!hits)
    for (auto& row : out)
      for (auto& x : row) x = 0;
  return out;
}

std::size_t KoszulComplex::cohomology(int p, int s) const {
  const std::size_t dim = basis(p, s).size();
  if (dim == 0) return 0;
  const std::size_t out_rank = verlinde::rank(differential(p, s));
  const std::size_t in_rank = (p >= 1 && s >= 1) ? verlinde::rank(differential(p - 1, s - 1)) : 0;
  return dim - out_rank - in_rank;
}

namespace {

CohomologyDims dims_at(const IntMatrix& beta, int truncation) {
  const KoszulComplex c(beta, truncation);
  CohomologyDims d;
  for (int s = 0; s < truncation; ++s)
    for (int p = 0; p <= c.rank(); ++p) (p % 2 == 0 ? d.even : d.odd) += c.cohomology(p, s);
  return d;
}

void require_margin(const IntMatrix& beta, int truncation) {
  if (truncation < static_cast<int>(beta.size()) + 2)
    throw InvalidInput("truncation must be at least rank + 2");
}

}  // namespace

CohomologyDims twisted_cohomology_dims(const IntMatrix& beta, int truncation) {
  require_margin(beta, truncation);
  CohomologyDims d = dims_at(beta, truncation);
  const CohomologyDims next = dims_at(beta, truncation + 1);
  d.stable = next.even == d.even && next.odd == d.odd;
  return d;
}

bool differential_squares_to_zero(const KoszulComplex& c) {
  for (int s = 0; s + 2 <= c.truncation(); ++s) {
    for (int p = 0; p + 2 <= c.rank(); ++p) {
      const RatMatrix first = c.differential(p, s);
      const RatMatrix second = c.differential(p + 1, s + 1);
      for (const auto& row : second) {
        for (std::size_t col = 0; col < (first.empty() ? 0 : first.front().size()); ++col) {
          Rational acc = 0;
          for (std::size_t k = 0; k < row.size(); ++k) acc += row[k] * first[k][col];
          if (acc != 0) return false;
        }
      }
    }
  }
  return true;
}

std::size_t su2_invariant_stalk(std::int64_t k, int truncation) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  const KoszulComplex c({{2 * k}}, truncation, true);
  std::size_t total = 0;
  for (int s = 0; s < truncation; ++s)
    for (int p = 0; p <= 1; ++p) total += c.cohomology(p, s);
  return total;
}

std::size_t su2_torus_stalk(std::int64_t k, int truncation) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  const KoszulComplex c({{2 * k}}, truncation, false);
  std::size_t total = 0;
  for (int s = 0; s < truncation; ++s)
    for (int p = 0; p <= 1; ++p) total += c.cohomology(p, s);
  return total;
}

namespace {

// Cohomology of the whole mod-2 graded complex, computed from one matrix per
// parity rather than bidegree by bidegree.
CohomologyDims global_cohomology(const KoszulComplex& c) {
  const int top = c.truncation();
  struct Slot {
    int p, s;
    std::size_t offset;
  };
  auto layout = [&](int parity, int max_s) {
    std::vector<Slot> slots;
    std::size_t off = 0;
    for (int s = 0; s <= max_s; ++s)
      for (int p = parity; p <= c.rank(); p += 2) {
        slots.push_back({p, s, off});
        off += c.basis(p, s).size();
      }
    return std::pair{slots, off};
  };
  auto assemble = [&](int src_parity, int src_max_s, int dst_max_s) {
    auto [src, src_dim] = layout(src_parity, src_max_s);
    auto [dst, dst_dim] = layout(1 - src_parity, dst_max_s);
    RatMatrix m(dst_dim, RatVec(src_dim, 0));
    for (const auto& a : src) {
      const RatMatrix block = c.differential(a.p, a.s);
      for (const auto& b : dst) {
        if (b.p != a.p + 1 || b.s != a.s + 1) continue;
        for (std::size_t r = 0; r < block.size(); ++r)
          for (std::size_t q = 0; q < block[r].size(); ++q) m[b.offset + r][a.offset + q] = block[r][q];
      }
    }
    return std::pair{m, src_dim};
  };
  CohomologyDims d;
  for (int parity : {0, 1}) {
    auto [out_map, dim] = assemble(parity, top - 1, top);
    auto [in_map, in_dim] = assemble(1 - parity, top - 2, top - 1);
    (void)in_dim;
    const std::size_t h = dim - rank(out_map) - rank(in_map);
    (parity == 0 ? d.even : d.odd) = h;
  }
  return d;
}

}  // namespace

SpectralReport spectral_sequence_trace(const IntMatrix& beta, int truncation) {
  require_margin(beta, truncation);
  const KoszulComplex c(beta, truncation);
  SpectralReport r;
  r.delta2_zero = true;
  const int max_p = 2 * (truncation - 1);
  for (int deg = 0; deg <= max_p; ++deg) {
    std::size_t e2 = 0, e4 = 0;
    for (int p = 0; p <= c.rank(); ++p) {
      if ((deg - p) < 0 || (deg - p) % 2 != 0) continue;
      const int s = (deg - p) / 2;
      e2 += c.basis(p, s).size();
      e4 += c.cohomology(p, s);
      for (const auto& row : c.differential_component(2, p, s))
        for (const auto& x : row)
          if (x != 0) r.delta2_zero = false;
    }
    r.e2[deg] = e2;
    r.odd_rows[deg] = 0;
    r.e4[deg] = e4;
    (deg % 2 == 0 ? r.e4_total.even : r.e4_total.odd) += e4;
  }
  r.e3 = r.delta2_zero ? r.e2 : std::map<int, std::size_t>{};
  r.e_infinity = global_cohomology(c);
  r.degenerates_at_e4 = r.e_infinity.even == r.e4_total.even && r.e_infinity.odd == r.e4_total.odd;
  return r;
}

}  // namespace verlinde::koszul
