#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde {

/// Q(zeta_N) presented as Q[z]/(Phi_N). Shared, immutable.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::int64_t conductor);

  std::int64_t conductor() const { return conductor_; }
  std::size_t degree() const { return phi_.size() - 1; }
  /// Coefficients of Phi_N, constant term first; monic.
  const std::vector<std::int64_t>& minimal_polynomial() const { return phi_; }
  /// z^j reduced mod Phi_N, for 0 <= j < max(N, 2*degree - 1).
  const std::vector<std::int64_t>& power(std::size_t j) const { return powers_[j]; }
  std::size_t power_count() const { return powers_.size(); }

 private:
  std::int64_t conductor_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Process-wide cache; safe to call from several threads.
std::shared_ptr<const CyclotomicField> cyclotomic_field(std::int64_t conductor);

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1).
///
/// Binary operations between different conductors lift both operands to the
/// least common multiple first.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q(zeta_1) = Q
  Cyclotomic(const Rational& r, std::int64_t conductor = 1);
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, RatVec coeffs);

  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t j);
  /// sum_j counts[j] z^j over Z/N, counts indexed by exponent mod N.
  static Cyclotomic from_exponent_counts(std::int64_t n, const std::vector<std::int64_t>& counts);

  std::int64_t conductor() const { return field_->conductor(); }
  const RatVec& coeffs() const { return coeffs_; }
  const CyclotomicField& field() const { return *field_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidInput("not rational in Q(zeta_N)") otherwise.
  Rational as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  /// Throws InvalidInput on division by zero.
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
  Cyclotomic pow(std::int64_t e) const;

  /// z -> z^a; requires gcd(a, N) = 1.
  Cyclotomic galois(std::int64_t a) const;
  Cyclotomic conjugate() const { return galois(-1); }
  /// Field norm down to Q.
  Rational norm() const;

  /// Same number viewed in Q(zeta_M); M must be a multiple of N.
  Cyclotomic embed(std::int64_t m) const;

  std::complex<double> to_complex() const;

  /// "c0 + c1*z + ...  (mod Phi_N)"
  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::shared_ptr<const CyclotomicField> field_;
  RatVec coeffs_;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace verlinde
