#include "verlinde/so3.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

#include "verlinde/errors.hpp"

namespace verlinde::so3 {

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

int parity_sign(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }  // (-1)^k

void check_k(std::int64_t k) {
  if (k <= 0) throw InvalidInput("k must be positive, got " + std::to_string(k));
}

void check_sign(int s) {
  if (s != 1 && s != -1) throw InvalidInput("signs must be +1 or -1");
}

}  // namespace

std::string TwistingType::to_string() const {
  std::ostringstream os;
  os << '(' << sign_char(eps1) << ',' << sign_char(eps2) << ',' << k << ')';
  return os.str();
}

TwistingType parse_twisting(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  const auto c1 = s.find(',');
  const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(',', c1 + 1);
  auto bad = [&] { return InvalidInput("twisting must look like +,-,3; got '" + text + "'"); };
  if (c2 == std::string::npos) throw bad();
  auto sign = [&](const std::string& t) {
    if (t == "+") return 1;
    if (t == "-") return -1;
    throw bad();
  };
  TwistingType t;
  t.eps1 = sign(s.substr(0, c1));
  t.eps2 = sign(s.substr(c1 + 1, c2 - c1 - 1));
  try {
    std::size_t used = 0;
    const std::string ks = s.substr(c2 + 1);
    t.k = std::stoll(ks, &used);
    if (used != ks.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  check_k(t.k);
  return t;
}

std::vector<TwistingType> all_twistings(std::int64_t k) {
  check_k(k);
  return {{1, 1, k}, {-1, 1, k}, {1, -1, k}, {-1, -1, k}};
}

void add_to(Element& acc, const Element& x, std::int64_t scale) {
  for (const auto& [label, c] : x) {
    auto& slot = acc[label];
    slot += scale * c;
    if (slot == 0) acc.erase(label);
  }
}

QuotientRingRk::QuotientRingRk(int eps1, int eps2, std::int64_t k) : eps1_(eps1), eps2_(eps2), k_(k) {
  check_sign(eps1);
  check_sign(eps2);
  check_k(k);
  const std::int64_t first = eps2 > 0 ? 1 : 2;
  for (std::int64_t p = first; p <= k; p += 2)
    if (!(p == k && eps1 < 0)) basis_.push_back(p);
  mult_.assign(basis_.size(), std::vector<Element>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) mult_[i][j] = multiply(basis_[i], basis_[j]);
}

Element QuotientRingRk::reduce(std::int64_t m) const {
  const std::int64_t two_k = 2 * k_;
  std::int64_t r = mod(m, 2 * two_k);
  std::int64_t sign = 1;
  if (r == 0 || r == two_k) return {};
  if (r > two_k) {  // [2k + j] = -[2k - j]
    r = 2 * two_k - r;
    sign = -1;
  }
  if (r > k_) {  // [p] ~ eps1 [2k - p]
    r = two_k - r;
    sign *= eps1_;
  }
  if (r == k_ && eps1_ < 0) return {};
  return {{r, sign}};
}

Element QuotientRingRk::reduce(const Element& x) const {
  Element out;
  for (const auto& [label, c] : x) add_to(out, reduce(label), c);
  return out;
}

Element QuotientRingRk::multiply(std::int64_t p, std::int64_t q) const {
  if (p == 0 || q == 0) return {};
  if (p < 0) {
    Element r;
    add_to(r, multiply(-p, q), -1);
    return r;
  }
  if (q < 0) {
    Element r;
    add_to(r, multiply(p, -q), -1);
    return r;
  }
  Element out;
  for (std::int64_t n = std::abs(q - p) + 1; n <= q + p - 1; n += 2) add_to(out, reduce(n));
  return out;
}

std::string QuotientRingRk::name() const {
  return std::string("^{") + sign_char(eps1_) + sign_char(eps2_) + "}R(" + std::to_string(k_) + ")";
}

QuotientRingRk rk_ring(int eps1, int eps2, std::int64_t k) { return QuotientRingRk(eps1, eps2, k); }

namespace {

struct TableRow {
  int eps1, eps2;
  bool k_even;
  bool k0_free;
  int ring_eps1, ring_eps2;
  bool k1_extra;
  bool starred;
};

// K^0 and K^1 of SO(3) for every twisting type.
constexpr std::array<TableRow, 8> kTable{{
    {+1, +1, true, true, -1, -1, false, false},
    {-1, +1, true, false, +1, -1, true, false},
    {+1, -1, true, false, -1, +1, false, true},
    {-1, -1, true, false, +1, +1, false, false},
    {+1, +1, false, false, -1, -1, false, false},
    {-1, +1, false, false, +1, -1, false, false},
    {+1, -1, false, true, -1, +1, false, false},
    {-1, -1, false, false, +1, +1, true, true},
}};

}  // namespace

KTableEntry k_table(const TwistingType& t) {
  check_sign(t.eps1);
  check_sign(t.eps2);
  check_k(t.k);
  const bool even = t.k % 2 == 0;
  for (const auto& row : kTable) {
    if (row.eps1 != t.eps1 || row.eps2 != t.eps2 || row.k_even != even) continue;
    const QuotientRingRk ring(row.ring_eps1, row.ring_eps2, t.k);
    KTableEntry e;
    e.twisting = t;
    e.starred = row.starred;
    e.k0 = row.k0_free ? "Z" : "0";
    e.k0_rank = row.k0_free ? 1 : 0;
    e.k1 = ring.name() + (row.k1_extra ? " + Z" : "");
    e.k1_rank = ring.rank() + (row.k1_extra ? 1 : 0);
    return e;
  }
  throw ConsistencyError("twisting missing from the K-group table");
}

std::string to_string(SupportOrigin o) {
  switch (o) {
    case SupportOrigin::Interior: return "interior";
    case SupportOrigin::TorusAtMinusOne: return "torus at -1";
    case SupportOrigin::OddComponentAtMinusOne: return "odd component at -1";
  }
  return "?";
}

std::vector<SupportLine> so3_localisation(const TwistingType& t) {
  check_sign(t.eps1);
  check_sign(t.eps2);
  check_k(t.k);
  std::vector<SupportLine> out;
  // Holonomy eps1 mu^k: stalks at k-th roots of eps1 with Im(mu) > 0.
  if (t.eps1 > 0) {
    for (std::int64_t j = 1; 2 * j < t.k; ++j) out.push_back({j, t.k, 1, SupportOrigin::Interior});
  } else {
    for (std::int64_t j = 1; j < t.k; j += 2) out.push_back({j, 2 * t.k, 1, SupportOrigin::Interior});
  }
  const int sk = parity_sign(t.k);
  // mu = -1: the torus component contributes when the line bundle is trivial
  // there and O(2) acts trivially on H^1, i.e. (-1)^k eps1 = 1 and
  // (-1)^k eps1 eps2 = -1.
  if (sk * t.eps1 == 1 && sk * t.eps1 * t.eps2 == -1)
    out.push_back({1, 2, 1, SupportOrigin::TorusAtMinusOne});
  // The other component of O(2): its stabiliser acts by (-1)^k eps2; the
  // degree is the parity eps1.
  if (sk * t.eps2 == 1) out.push_back({1, 2, t.eps1 > 0 ? 0 : 1, SupportOrigin::OddComponentAtMinusOne});
  return out;
}

std::vector<std::int64_t> GradedVerlindeRing::image(const Element& x) const {
  std::vector<std::int64_t> v(size(), 0);
  for (const auto& [label, c] : x) {
    if (label % 2 == 0 || label < 1 || label > k) throw InvalidInput("label outside ^{++}R(k) normal form");
    if (label == k) {
      v[plus()] += c;
      v[minus()] += c;
    } else {
      v[index_of(label)] += c;
    }
  }
  return v;
}

std::vector<std::int64_t> GradedVerlindeRing::product(const std::vector<std::int64_t>& x,
                                                      const std::vector<std::int64_t>& y) const {
  std::vector<std::int64_t> out(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < size(); ++b) {
      if (y[b] == 0) continue;
      for (std::size_t c = 0; c < size(); ++c) out[c] += x[a] * y[b] * mult[a][b][c];
    }
  }
  return out;
}

GradedVerlindeRing graded_ring(std::int64_t k) {
  if (k < 3 || k % 2 == 0) throw InvalidInput("graded ring needs odd k >= 3, got " + std::to_string(k));
  GradedVerlindeRing ring;
  ring.k = k;
  for (std::int64_t p = 1; p <= k - 2; p += 2) ring.labels.push_back("[" + std::to_string(p) + "]");
  ring.labels.push_back("[" + std::to_string(k) + "]+");
  ring.labels.push_back("[" + std::to_string(k) + "]-");
  const std::size_t n = ring.size();
  const std::size_t kp = ring.plus(), km = ring.minus();
  ring.mult.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));

  // [n] for odd n in [1, 2k-1], with [n] = [2k-n] and [k] = [k]+ + [k]-.
  auto add_class = [&](std::vector<std::int64_t>& v, std::int64_t m) {
    if (m > k) m = 2 * k - m;
    if (m == k) {
      ++v[kp];
      ++v[km];
    } else {
      ++v[ring.index_of(m)];
    }
  };
  auto k_sign = [&](int s) { return s > 0 ? kp : km; };
  // i^(p-1) for odd p
  auto i_power = [](std::int64_t p) { return ((p - 1) / 2) % 2 == 0 ? 1 : -1; };

  for (std::int64_t p = 1; p <= k - 2; p += 2) {
    for (std::int64_t q = 1; q <= k - 2; q += 2) {
      auto& v = ring.mult[ring.index_of(p)][ring.index_of(q)];
      for (std::int64_t m = std::abs(q - p) + 1; m <= q + p - 1; m += 2) add_class(v, m);
    }
    for (int s : {1, -1}) {
      std::vector<std::int64_t> v(n, 0);
      for (std::int64_t m = k - p + 1; m <= k - 2; m += 2) ++v[ring.index_of(m)];
      ++v[k_sign(s * i_power(p))];
      ring.mult[ring.index_of(p)][k_sign(s)] = v;
      ring.mult[k_sign(s)][ring.index_of(p)] = v;
    }
  }

  const int s = i_power(k);
  std::vector<std::int64_t> pp(n, 0), pm(n, 0), mm(n, 0);
  for (std::int64_t p = 1; 4 * p < k; ++p) {
    ++pp[ring.index_of(k - 4 * p)];
    ++mm[ring.index_of(k - 4 * p)];
  }
  ++pp[k_sign(s)];
  ++mm[k_sign(-s)];
  for (std::int64_t p = 0; 4 * p + 2 < k; ++p) ++pm[ring.index_of(k - 4 * p - 2)];
  ring.mult[kp][kp] = pp;
  ring.mult[kp][km] = pm;
  ring.mult[km][kp] = pm;
  ring.mult[km][km] = mm;
  return ring;
}

}  // namespace verlinde::so3
