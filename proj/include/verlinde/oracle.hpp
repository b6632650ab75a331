#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "verlinde/rational.hpp"
#include "verlinde/verlinde_core.hpp"

namespace verlinde::oracle {

/// Result of enumerating F = ker(T -> T^vee) directly.
struct LatticeScanResult {
  /// Coordinates in the simple-coroot basis, each in [0, 1).
  std::vector<RatVec> points;
  std::size_t regular_count = 0;
  std::size_t orbit_count = 0;
  /// Regular points folded into the open fundamental alcove, read as
  /// level-h dominant weights.
  std::set<Weight> orbit_labels;
};

/// Walks the finite group generated by the columns of (shift * gram_basic)^{-1}
/// modulo the coroot lattice. Refuses rank > 3.
LatticeScanResult scan_F(const LevelData& ld);

using Tensor = std::vector<std::vector<std::vector<Integer>>>;

/// Level-h su(2) fusion from the truncated Clebsch-Gordan rule, indexed by
/// Dynkin label 0..h.
Tensor cg_fusion_a1(std::int64_t h);

FusionRing ring_from_tensor(Family family, int rank, std::int64_t level, std::vector<Weight> basis, Tensor t);

/// Handle operator H = sum_a N_a N_a^T.
std::vector<std::vector<Integer>> handle_operator(const FusionRing& ring);

/// (H^g)[unit][unit].
Integer genus_dim_from_fusion(const FusionRing& ring, std::int64_t genus);
/// (H^g)[v][unit].
Integer genus_multiplicity_from_fusion(const FusionRing& ring, std::size_t v, std::int64_t genus);

struct FloatReport {
  double float_value = 0;
  Integer exact_value;
  double relative_error = 0;
  bool pass = false;
};

/// Evaluates the Verlinde sum in long double straight from sines and
/// compares with the exact value.
FloatReport float_crosscheck(const LevelData& ld, std::int64_t genus, double tolerance = 1e-6);

}  // namespace verlinde::oracle
