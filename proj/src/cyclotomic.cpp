#include "verlinde/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "verlinde/errors.hpp"

namespace verlinde {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of monic integer polynomials.
Poly divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw ConsistencyError("cyclotomic polynomial division left a remainder");
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw InvalidInput("conductor must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

CyclotomicField::CyclotomicField(std::int64_t conductor)
    : conductor_(conductor), phi_(cyclotomic_polynomial(conductor)) {
  const std::size_t deg = degree();
  const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(conductor_), 2 * deg - 1);
  Poly cur(deg, 0);
  cur[0] = 1;
  powers_.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    powers_.push_back(cur);
    // cur *= z, then eliminate z^deg with the monic relation.
    const std::int64_t top = cur[deg - 1];
    for (std::size_t k = deg - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t k = 0; k < deg; ++k) cur[k] -= top * phi_[k];
  }
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(std::int64_t conductor) {
  if (conductor < 1) throw InvalidInput("conductor must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(conductor); it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const CyclotomicField>(conductor);
  std::lock_guard lock(mu);
  return cache.emplace(conductor, field).first->second;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0), 1) {}

Cyclotomic::Cyclotomic(const Rational& r, std::int64_t conductor)
    : field_(cyclotomic_field(conductor)), coeffs_(field_->degree(), 0) {
  coeffs_[0] = r;
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, RatVec coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) throw InvalidInput("coefficient vector has the wrong length");
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t j) {
  auto f = cyclotomic_field(n);
  const auto& p = f->power(static_cast<std::size_t>(mod(j, n)));
  RatVec c(p.begin(), p.end());
  return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::from_exponent_counts(std::int64_t n, const std::vector<std::int64_t>& counts) {
  auto f = cyclotomic_field(n);
  std::vector<std::int64_t> acc(f->degree(), 0);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    const auto& p = f->power(j);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += counts[j] * p[k];
  }
  RatVec c;
  c.reserve(acc.size());
  for (auto x : acc) c.emplace_back(static_cast<long>(x));
  return Cyclotomic(f, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational())
    throw InvalidInput("not rational in Q(zeta_" + std::to_string(conductor()) + ")");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

// Brings a and b into a common field, returning the lifted copies.
std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& a, const Cyclotomic& b) {
  const std::int64_t m = lcm64(a.conductor(), b.conductor());
  return {a.embed(m), b.embed(m)};
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor() != conductor()) {
    auto [a, b] = common(*this, o);
    return *this = a + b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.conductor() != conductor()) {
    auto [a, b] = common(*this, o);
    return *this = a - b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  Rational q = r;
  q.canonicalize();
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor() != conductor()) {
    auto [a, b] = common(*this, o);
    return *this = a * b;
  }
  const std::size_t deg = coeffs_.size();
  RatVec prod(2 * deg - 1, 0);
  Rational t;
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), coeffs_[i].get_mpq_t(), o.coeffs_[j].get_mpq_t());
      prod[i + j] += t;
    }
  }
  for (std::size_t j = deg; j < prod.size(); ++j) {
    if (prod[j] == 0) continue;
    const auto& p = field_->power(j);
    for (std::size_t k = 0; k < deg; ++k)
      if (p[k] != 0) prod[k] += prod[j] * Rational(static_cast<long>(p[k]));
  }
  prod.resize(deg);
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  const std::int64_t n = conductor();
  if (gcd64(a, n) != 1) throw InvalidInput("galois(a) needs gcd(a, N) = 1");
  RatVec out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& p = field_->power(static_cast<std::size_t>(mod(a * static_cast<std::int64_t>(i), n)));
    for (std::size_t k = 0; k < out.size(); ++k)
      if (p[k] != 0) out[k] += coeffs_[i] * Rational(static_cast<long>(p[k]));
  }
  return Cyclotomic(field_, std::move(out));
}

namespace {

// Product of all non-identity Galois conjugates of x.
Cyclotomic conjugate_product(const Cyclotomic& x) {
  const std::int64_t n = x.conductor();
  Cyclotomic acc(Rational(1), n);
  for (std::int64_t a = 2; a <= n; ++a)
    if (gcd64(a, n) == 1 && a % n != 1) acc *= x.galois(a);
  return acc;
}

}  // namespace

Rational Cyclotomic::norm() const {
  if (coeffs_.size() == 1) return coeffs_[0];
  return (*this * conjugate_product(*this)).as_rational();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0], conductor());
  Cyclotomic rest = conjugate_product(*this);
  const Rational n = (*this * rest).as_rational();
  return rest * (Rational(1) / n);
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(Rational(1), conductor());
  Cyclotomic base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::embed(std::int64_t m) const {
  const std::int64_t n = conductor();
  if (m <= 0 || m % n != 0)
    throw InvalidInput("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" + std::to_string(m) + ")");
  if (m == n) return *this;
  auto target = cyclotomic_field(m);
  const std::int64_t step = m / n;
  RatVec out(target->degree(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& p = target->power(static_cast<std::size_t>(step * static_cast<std::int64_t>(i)));
    for (std::size_t k = 0; k < out.size(); ++k)
      if (p[k] != 0) out[k] += coeffs_[i] * Rational(static_cast<long>(p[k]));
  }
  return Cyclotomic(target, std::move(out));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<long double> acc = 0;
  const long double n = static_cast<long double>(conductor());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) / n;
    acc += static_cast<long double>(coeffs_[i].get_d()) * std::polar(1.0L, angle);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  os << "  (mod Phi_" << conductor() << ")";
  return os.str();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    auto [x, y] = common(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

}  // namespace verlinde
