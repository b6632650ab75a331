#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/rational.hpp"
#include "verlinde/root_system.hpp"

namespace verlinde {

/// A simply connected simple group at line-bundle level h. The twisting is
/// the shifted level h + c, and every character value lives in Q(zeta_M)
/// with M = conductor.
struct LevelData {
  RootSystem rs;
  std::int64_t h = 0;
  std::int64_t shift = 0;      // h + dual Coxeter number
  std::int64_t conductor = 0;  // 2 * L * shift, L = rs.weight_denominator
};

LevelData make_level_data(RootSystem rs, std::int64_t h);

/// A point f = exp(2 pi i xi) of F^reg/W. xi is stored in Dynkin labels of
/// the weight it corresponds to under the basic form: xi = (label + rho) / shift.
struct RegularPoint {
  Weight label;
  RatVec xi;
};

/// Structure constants N[a][b][c] of the Verlinde ring in the basis of
/// level-h dominant weights.
struct FusionRing {
  Family family{};
  int rank = 0;
  std::int64_t level = 0;
  std::vector<Weight> basis;
  std::vector<std::vector<std::vector<Integer>>> constants;
  std::size_t unit = 0;

  std::size_t size() const { return basis.size(); }
  /// (N_a)[b][c] = N[a][b][c]
  std::vector<std::vector<Integer>> fusion_matrix(std::size_t a) const;
  std::size_t index_of(const Weight& w) const;

  bool operator==(const FusionRing&) const = default;
};

/// Functions on F^reg/W, keyed by point label.
using PointFunction = std::map<Weight, Cyclotomic>;

std::vector<RegularPoint> regular_points(const LevelData& ld);

/// |F| = |ker(T -> T^vee)|, the determinant of shift * gram_basic.
Integer f_order(const LevelData& ld);

/// M * <mu, xi> reduced mod M.
std::int64_t exponent_at(const LevelData& ld, const Weight& mu, const RegularPoint& p);

/// prod_{alpha>0} (2 - z^{M<alpha,xi>} - z^{-M<alpha,xi>}) = Delta(f)^2.
Cyclotomic weyl_denominator_sq(const LevelData& ld, const RegularPoint& p);

/// sum_w sgn(w) z^{M<w(mu), xi>} for a dominant regular mu.
Cyclotomic alternating_sum(const LevelData& ld, const Weight& mu, const RegularPoint& p);

/// chi_v(f) by the Weyl character quotient.
Cyclotomic character_at(const LevelData& ld, const Weight& v, const RegularPoint& p);

/// The q = 1 Kac numerator of v as delta-coefficients on F^reg/W.
PointFunction kac_numerator_support(const LevelData& ld, const Weight& v);

Integer verlinde_dimension(const LevelData& ld, std::int64_t genus);
Integer multiplicity(const LevelData& ld, const Weight& v, std::int64_t genus);

/// |F|^{-1} sum_f Delta(f)^2 conj(phi(f)) psi(f)
Cyclotomic inner_product(const LevelData& ld, const PointFunction& phi, const PointFunction& psi);

/// f -> |F|^g Delta(f)^{-2g}
PointFunction handle_element(const LevelData& ld, std::int64_t genus);

/// Characters of every basis weight at every regular point, plus Delta^2.
/// Rows follow level_weights order, columns regular_points order.
struct CharacterTable {
  std::vector<Weight> weights;
  std::vector<RegularPoint> points;
  std::vector<std::vector<Cyclotomic>> chi;  // chi[a][f]
  std::vector<Cyclotomic> delta_sq;          // per point
  Integer f_order;

  PointFunction as_function(std::size_t a) const;
};

CharacterTable character_table(const LevelData& ld);

FusionRing fusion_ring(const LevelData& ld);
FusionRing fusion_ring(const LevelData& ld, const CharacterTable& table);

}  // namespace verlinde
