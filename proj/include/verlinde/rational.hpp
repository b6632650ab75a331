#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace verlinde {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

/// Always "p/q", also for integers ("3/1"); the exchange format.
std::string to_fraction_string(const Rational& x);
/// Accepts "p/q" or "p".
Rational parse_rational(const std::string& s);

Rational dot(const RatVec& a, const RatVec& b);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& a);

/// Exact determinant by fraction-free elimination over Q.
Rational determinant(RatMatrix m);
RatMatrix inverse(RatMatrix m);
/// Rank of a rational matrix (rows may be empty).
std::size_t rank(RatMatrix m);

std::string to_string(const Rational& x);

}  // namespace verlinde
