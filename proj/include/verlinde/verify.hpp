#pragma once

#include <string>
#include <vector>

#include "verlinde/so3.hpp"
#include "verlinde/verlinde_core.hpp"

namespace verlinde::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Commutativity, unit law, nonnegativity and associativity as tensor identities.
bool fusion_axioms(const FusionRing& ring, std::string* why = nullptr);
/// Gram matrix of the characters under the inner product is the identity.
bool characters_orthonormal(const LevelData& ld, const CharacterTable& table, std::string* why = nullptr);
/// (chi_b(f))_b is an eigenvector of every N_a with eigenvalue chi_a(f).
bool fusion_diagonalised(const FusionRing& ring, const CharacterTable& table, std::string* why = nullptr);

bool so3_associative(const so3::GradedVerlindeRing& ring);
bool so3_commutative(const so3::GradedVerlindeRing& ring);
bool so3_nonnegative(const so3::GradedVerlindeRing& ring);
/// [k]+^2 + [k]+[k]- equals [1] + ... + [k-2] + [k]_{i^(k-1)}.
bool so3_split_sum_identity(const so3::GradedVerlindeRing& ring);
/// The map from ^{++}R(k) with [k] -> [k]+ + [k]- respects products.
bool so3_homomorphism(const so3::GradedVerlindeRing& ring);

/// Every applicable oracle for a simply connected group at level h.
std::vector<Check> run_oracles(const LevelData& ld, std::int64_t max_genus);

}  // namespace verlinde::verify
