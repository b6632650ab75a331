#include "verlinde/root_system.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "verlinde/errors.hpp"

namespace verlinde {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(char letter) {
  switch (letter) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: break;
  }
  throw InvalidInput(std::string("unsupported Lie type '") + letter +
                     "' (expected one of A, B, C, D)");
}

bool Weight::dominant() const {
  for (auto c : coords)
    if (c < 0) return false;
  return true;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ']';
  return os.str();
}

namespace {

RatVec unit(std::size_t dim, std::size_t i, const Rational& s = 1) {
  RatVec v(dim, 0);
  v[i] = s;
  return v;
}

// e_i + sign * e_j
RatVec pair_root(std::size_t dim, std::size_t i, std::size_t j, int sign) {
  RatVec v(dim, 0);
  v[i] += 1;
  v[j] += sign;
  return v;
}

std::int64_t to_int(const Rational& r) {
  if (r.get_den() != 1) throw ConsistencyError("expected an integer, got " + r.get_str());
  return r.get_num().get_si();
}

}  // namespace

std::string RootSystem::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

Integer RootSystem::weyl_order() const {
  Integer fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  switch (family) {
    case Family::A: return fact * (rank + 1);
    case Family::B:
    case Family::C: return fact * (Integer(1) << rank);
    case Family::D: return fact * (Integer(1) << (rank - 1));
  }
  return 0;
}

Rational RootSystem::basic(const RatVec& x, const RatVec& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ambient_form[i][i] * y[i];
  return s;
}

Rational RootSystem::pairing(const RatVec& x, const RatVec& y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j) s += x[i] * weight_gram[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::pairing(const Weight& x, const Weight& y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      s += weight_gram[i][j] * Rational(static_cast<long>(x.coords[i] * y.coords[j]));
  }
  return s;
}

std::int64_t RootSystem::level(const Weight& w) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank; ++i) s += comarks[i] * w.coords[i];
  return s;
}

Weight RootSystem::rho_dynkin() const { return Weight{std::vector<std::int64_t>(rank, 1)}; }

RatVec RootSystem::to_ambient(const RatVec& dynkin) const {
  RatVec v(fundamental_weights.front().size(), 0);
  for (int i = 0; i < rank; ++i)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += dynkin[i] * fundamental_weights[i][k];
  return v;
}

RootSystem build(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) ||
                  ((family == Family::B || family == Family::C) && rank >= 2) ||
                  (family == Family::D && rank >= 3);
  if (!ok) {
    throw InvalidInput("unsupported root system " + std::string(1, family_letter(family)) +
                       std::to_string(rank) +
                       " (need A_n n>=1, B_n/C_n n>=2, D_n n>=3)");
  }
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  const std::size_t n = static_cast<std::size_t>(rank);
  const std::size_t dim = family == Family::A ? n + 1 : n;

  rs.ambient_form.assign(dim, RatVec(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) rs.ambient_form[i][i] = family == Family::C ? Rational(1, 2) : 1;

  for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(pair_root(dim, i, i + 1, -1));
  switch (family) {
    case Family::A: rs.simple_roots.push_back(pair_root(dim, n - 1, n, -1)); break;
    case Family::B: rs.simple_roots.push_back(unit(dim, n - 1)); break;
    case Family::C: rs.simple_roots.push_back(unit(dim, n - 1, 2)); break;
    case Family::D: rs.simple_roots.push_back(pair_root(dim, n - 2, n - 1, +1)); break;
  }

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      rs.positive_roots.push_back(pair_root(dim, i, j, -1));
      if (family != Family::A) rs.positive_roots.push_back(pair_root(dim, i, j, +1));
    }
    if (family == Family::B) rs.positive_roots.push_back(unit(dim, i));
    if (family == Family::C) rs.positive_roots.push_back(unit(dim, i, 2));
  }

  for (std::size_t i = 0; i < n; ++i) {
    RatVec w(dim, 0);
    for (std::size_t k = 0; k <= i; ++k) w[k] = 1;
    if (family == Family::A) {
      Rational shift(static_cast<long>(i + 1), static_cast<long>(n + 1));
      for (auto& x : w) x -= shift;
    } else if (family == Family::B && i == n - 1) {
      for (auto& x : w) x = Rational(1, 2);
    } else if (family == Family::D && i >= n - 2) {
      for (auto& x : w) x = Rational(1, 2);
      if (i == n - 2) w[n - 1] = Rational(-1, 2);
    }
    rs.fundamental_weights.push_back(std::move(w));
  }

  rs.rho.assign(dim, 0);
  for (const auto& w : rs.fundamental_weights) rs.rho = rs.rho + w;

  rs.cartan.assign(n, std::vector<std::int64_t>(n, 0));
  RatMatrix coroots;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = rs.simple_roots[i];
    coroots.push_back((Rational(2) / rs.basic(a, a)) * a);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan[i][j] = to_int(rs.basic(coroots[i], rs.simple_roots[j]));

  rs.gram_basic.assign(n, RatVec(n, 0));
  rs.weight_gram.assign(n, RatVec(n, 0));
  std::int64_t denom = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rs.gram_basic[i][j] = rs.basic(coroots[i], coroots[j]);
      rs.weight_gram[i][j] = rs.basic(rs.fundamental_weights[i], rs.fundamental_weights[j]);
      denom = std::lcm(denom, rs.weight_gram[i][j].get_den().get_si());
    }
  }
  rs.weight_denominator = denom;

  auto labels = [&](const RatVec& v) {
    Weight w;
    for (std::size_t i = 0; i < n; ++i) w.coords.push_back(to_int(rs.basic(coroots[i], v)));
    return w;
  };
  std::size_t top = 0;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    rs.positive_roots_dynkin.push_back(labels(rs.positive_roots[k]));
    if (rs.basic(rs.positive_roots[k], rs.rho) > rs.basic(rs.positive_roots[top], rs.rho)) top = k;
  }
  rs.highest_root = rs.positive_roots_dynkin[top];
  const RatVec& theta = rs.positive_roots[top];
  const RatVec theta_vee = (Rational(2) / rs.basic(theta, theta)) * theta;
  std::int64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rs.comarks.push_back(to_int(rs.basic(theta_vee, rs.fundamental_weights[i])));
    c += rs.comarks.back();
  }
  rs.dual_coxeter = static_cast<int>(c);
  return rs;
}

RootSystem build(const std::string& name) {
  if (name.size() < 2) throw InvalidInput("group must look like A2, B3, C2, D4; got '" + name + "'");
  const Family f = parse_family(name[0]);
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw InvalidInput("group must look like A2, B3, C2, D4; got '" + name + "'");
  }
  return build(f, r);
}

RatVec reflect(const RootSystem& rs, const RatVec& v, int i) {
  RatVec r(v);
  const Rational vi = v[i];
  for (int k = 0; k < rs.rank; ++k) r[k] -= vi * Rational(static_cast<long>(rs.cartan[k][i]));
  return r;
}

Weight reflect(const RootSystem& rs, const Weight& v, int i) {
  Weight r(v);
  const auto vi = v.coords[i];
  for (int k = 0; k < rs.rank; ++k) r.coords[k] -= vi * rs.cartan[k][i];
  return r;
}

FoldResult weyl_fold(const RootSystem& rs, const RatVec& v) {
  if (static_cast<int>(v.size()) != rs.rank) throw InvalidInput("vector length does not match rank");
  FoldResult out;
  out.dominant = v;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (out.dominant[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    out.dominant = reflect(rs, out.dominant, neg);
    out.reflections.push_back(neg);
  }
  out.sign = out.reflections.size() % 2 == 0 ? 1 : -1;
  for (const auto& x : out.dominant)
    if (x == 0) out.sign = 0;
  return out;
}

RatVec unfold(const RootSystem& rs, const RatVec& dominant, const std::vector<int>& reflections) {
  RatVec v = dominant;
  for (auto it = reflections.rbegin(); it != reflections.rend(); ++it) v = reflect(rs, v, *it);
  return v;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      if (cur.coords[i] == 0) continue;
      Weight next = reflect(rs, cur, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<SignedWeight> signed_orbit(const RootSystem& rs, const Weight& regular_dominant) {
  for (auto c : regular_dominant.coords)
    if (c <= 0) throw InvalidInput("signed_orbit needs a regular dominant weight, got " + regular_dominant.to_string());
  std::map<Weight, int> seen{{regular_dominant, 1}};
  std::deque<Weight> queue{regular_dominant};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    const int s = seen[cur];
    for (int i = 0; i < rs.rank; ++i) {
      Weight next = reflect(rs, cur, i);
      if (seen.emplace(next, -s).second) queue.push_back(std::move(next));
    }
  }
  std::vector<SignedWeight> out;
  out.reserve(seen.size());
  for (auto& [w, s] : seen) out.push_back({w, s});
  return out;
}

namespace {

void enumerate_level(const RootSystem& rs, std::int64_t budget, std::size_t i, Weight& cur,
                     std::vector<Weight>& out) {
  if (i == static_cast<std::size_t>(rs.rank)) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t x = 0; x * rs.comarks[i] <= budget; ++x) {
    cur.coords[i] = x;
    enumerate_level(rs, budget - x * rs.comarks[i], i + 1, cur, out);
  }
  cur.coords[i] = 0;
}

}  // namespace

std::vector<Weight> level_weights(const RootSystem& rs, std::int64_t h) {
  if (h < 0) throw InvalidInput("level must be nonnegative");
  std::vector<Weight> out;
  Weight cur{std::vector<std::int64_t>(rs.rank, 0)};
  enumerate_level(rs, h, 0, cur, out);
  return out;
}

}  // namespace verlinde
