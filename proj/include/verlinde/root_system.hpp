#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(char letter);

/// Integral weight in Dynkin labels (fundamental-weight coordinates).
struct Weight {
  std::vector<std::int64_t> coords;

  bool dominant() const;
  std::string to_string() const;  // "[1,0,2]"

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Combinatorial data of a simple Lie algebra of classical type.
///
/// Vectors in `simple_roots`, `positive_roots`, `fundamental_weights` and
/// `rho` are in the orthogonal ambient basis (e_1, ..., e_m), with m = rank+1
/// for type A and m = rank otherwise. `ambient_form` is the basic inner
/// product in that basis, normalised so long roots have squared length 2.
/// `gram_basic` is the basic form on the simple coroots, i.e. on the integer
/// lattice of the simply connected maximal torus.
struct RootSystem {
  Family family{};
  int rank = 0;
  RatMatrix simple_roots;
  RatMatrix positive_roots;
  RatMatrix fundamental_weights;
  RatVec rho;
  int dual_coxeter = 0;
  RatMatrix gram_basic;

  RatMatrix ambient_form;
  /// cartan[i][j] = <alpha_i^vee, alpha_j>.
  IntMatrix cartan;
  /// Positive roots in Dynkin labels, same order as `positive_roots`.
  std::vector<Weight> positive_roots_dynkin;
  Weight highest_root;
  /// Labels of the highest coroot in the simple-coroot basis.
  std::vector<std::int64_t> comarks;
  /// weight_gram[i][j] = (omega_i, omega_j) under the basic form.
  RatMatrix weight_gram;
  /// Least L > 0 with L * weight_gram integral.
  std::int64_t weight_denominator = 1;

  std::string name() const;  // "A2"
  Integer weyl_order() const;

  Rational basic(const RatVec& x, const RatVec& y) const;
  /// Basic pairing of two weights given by Dynkin labels.
  Rational pairing(const RatVec& x, const RatVec& y) const;
  Rational pairing(const Weight& x, const Weight& y) const;
  /// Pairing with the highest coroot.
  std::int64_t level(const Weight& w) const;
  /// Dynkin labels of rho (all ones).
  Weight rho_dynkin() const;
  RatVec to_ambient(const RatVec& dynkin) const;
};

/// Throws InvalidInput for families/ranks outside A(n>=1), B/C(n>=2), D(n>=3).
RootSystem build(Family family, int rank);
RootSystem build(const std::string& name);

struct FoldResult {
  RatVec dominant;
  int sign = 0;  // -1, 0 (on a wall) or +1
  std::vector<int> reflections;  // simple reflections applied, in order
};

/// Simple reflection s_i on a Dynkin-label vector.
RatVec reflect(const RootSystem& rs, const RatVec& v, int i);
Weight reflect(const RootSystem& rs, const Weight& v, int i);

/// Moves v to the dominant chamber with simple reflections.
FoldResult weyl_fold(const RootSystem& rs, const RatVec& v);
/// Undo a fold: applies the recorded reflections in reverse order.
RatVec unfold(const RootSystem& rs, const RatVec& dominant, const std::vector<int>& reflections);

/// W-orbit of w, lexicographically sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

struct SignedWeight {
  Weight weight;
  int sign;
};
/// Orbit of a regular dominant weight with sgn(w) for each w(mu). Built by
/// breadth-first traversal, so W itself is never materialised.
std::vector<SignedWeight> signed_orbit(const RootSystem& rs, const Weight& regular_dominant);

/// Dominant weights with level <= h, lexicographic in Dynkin labels.
std::vector<Weight> level_weights(const RootSystem& rs, std::int64_t h);

}  // namespace verlinde
