#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde::koszul {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Lambda(t*) (x) Sym(t*) truncated at Sym degree D, with differential
/// multiplication by tau = sum_ij beta[i][j] theta_i u_j. theta_i have
/// degree 1, u_j degree 2.
///
/// With `weyl_invariant` set (rank 1 only) the complex is restricted to the
/// subring fixed by theta -> -theta, u -> -u.
class KoszulComplex {
 public:
  KoszulComplex(IntMatrix beta, int truncation, bool weyl_invariant = false);

  int rank() const { return n_; }
  int truncation() const { return truncation_; }

  struct Monomial {
    unsigned ext_mask;  // bit i set: theta_i present
    std::vector<int> exponents;
  };

  /// Basis of the (exterior degree p, Sym degree s) piece.
  const std::vector<Monomial>& basis(int p, int s) const;
  /// Matrix of d: C^{p,s} -> C^{p+1,s+1}; rows index the target basis.
  RatMatrix differential(int p, int s) const;
  /// Component of the differential raising total degree by exactly r.
  /// Only r = 3 is nonzero.
  RatMatrix differential_component(int r, int p, int s) const;

  /// dim H^{p,s}; meaningful for s <= D - 1.
  std::size_t cohomology(int p, int s) const;

 private:
  int n_;
  int truncation_;
  bool invariant_;
  IntMatrix beta_;
  std::map<std::pair<int, int>, std::vector<Monomial>> basis_;
};

struct CohomologyDims {
  std::size_t even = 0;
  std::size_t odd = 0;
  bool stable = false;
  std::size_t total() const { return even + odd; }
};

/// Total twisted cohomology, graded mod 2, over Sym degrees where the
/// truncation does not interfere. `stable` compares D with D + 1.
CohomologyDims twisted_cohomology_dims(const IntMatrix& beta, int truncation);

/// Whether d o d vanishes on every retained bidegree.
bool differential_squares_to_zero(const KoszulComplex& c);

/// Cohomology of the twisting 2k u theta on the Weyl-invariant subring
/// C[[u^2, u theta]]/(u theta)^2.
std::size_t su2_invariant_stalk(std::int64_t k, int truncation = 8);
/// The same computation without Weyl invariance.
std::size_t su2_torus_stalk(std::int64_t k, int truncation = 8);

/// Page dimensions indexed by the degree p of H^*_T(T) (p = ext + 2 sym),
/// for p <= 2(D-1). Row q = 1 is identically zero after collapsing beta.
struct SpectralReport {
  std::map<int, std::size_t> e2;
  std::map<int, std::size_t> e3;
  std::map<int, std::size_t> e4;
  std::map<int, std::size_t> odd_rows;  // E_2^{p, odd q}
  bool delta2_zero = false;
  CohomologyDims e4_total;
  CohomologyDims e_infinity;
  bool degenerates_at_e4 = false;
};

SpectralReport spectral_sequence_trace(const IntMatrix& beta, int truncation);

}  // namespace verlinde::koszul
