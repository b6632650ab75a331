#include <gtest/gtest.h>

#include <set>

#include "verlinde/errors.hpp"
#include "verlinde/root_system.hpp"

using namespace verlinde;

namespace {

const std::vector<std::string> kAll = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "D5"};

RatVec to_rat(const Weight& w) {
  RatVec v;
  for (auto c : w.coords) v.push_back(Rational(static_cast<long>(c)));
  return v;
}

std::size_t expected_positive(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(n * (n + 1) / 2);
    case Family::B:
    case Family::C: return static_cast<std::size_t>(n * n);
    case Family::D: return static_cast<std::size_t>(n * (n - 1));
  }
  return 0;
}

// |W_J| as the orbit size of rho under the reflections in J.
std::size_t parabolic_order(const RootSystem& rs, const std::vector<int>& J) {
  std::set<Weight> seen{rs.rho_dynkin()};
  std::vector<Weight> todo{rs.rho_dynkin()};
  while (!todo.empty()) {
    const Weight w = todo.back();
    todo.pop_back();
    for (int i : J) {
      Weight r = reflect(rs, w, i);
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen.size();
}

}  // namespace

TEST(RootSystem, BuildExamples) {
  const auto a1 = build(Family::A, 1);
  EXPECT_EQ(a1.positive_roots.size(), 1u);
  EXPECT_EQ(a1.dual_coxeter, 2);
  EXPECT_EQ(a1.weyl_order(), 2);

  const auto a2 = build(Family::A, 2);
  EXPECT_EQ(a2.positive_roots.size(), 3u);
  EXPECT_EQ(a2.dual_coxeter, 3);
  EXPECT_EQ(a2.weyl_order(), 6);

  EXPECT_EQ(build(Family::D, 3).positive_roots.size(), build(Family::A, 3).positive_roots.size());
  EXPECT_EQ(build(Family::D, 3).positive_roots.size(), 6u);
}

TEST(RootSystem, DualCoxeterTable) {
  EXPECT_EQ(build("A4").dual_coxeter, 5);
  EXPECT_EQ(build("B3").dual_coxeter, 5);
  EXPECT_EQ(build("C3").dual_coxeter, 4);
  EXPECT_EQ(build("D4").dual_coxeter, 6);
  EXPECT_EQ(build("D5").dual_coxeter, 8);
}

TEST(RootSystem, RejectsUnsupported) {
  EXPECT_THROW(build(Family::A, 0), InvalidInput);
  EXPECT_THROW(build(Family::B, 1), InvalidInput);
  EXPECT_THROW(build(Family::C, 1), InvalidInput);
  EXPECT_THROW(build(Family::D, 2), InvalidInput);
  EXPECT_THROW(build("E6"), InvalidInput);
  EXPECT_THROW(build("A"), InvalidInput);
  EXPECT_THROW(build("Ax"), InvalidInput);
}

TEST(RootSystem, Invariants) {
  for (const auto& name : kAll) {
    SCOPED_TRACE(name);
    const auto rs = build(name);
    EXPECT_EQ(rs.positive_roots.size(), expected_positive(rs.family, rs.rank));

    RatVec sum(rs.rho.size(), 0);
    for (const auto& a : rs.positive_roots) sum = sum + a;
    EXPECT_EQ(sum, Rational(2) * rs.rho);
    RatVec wsum(rs.rho.size(), 0);
    for (const auto& w : rs.fundamental_weights) wsum = wsum + w;
    EXPECT_EQ(wsum, rs.rho);

    // Symmetric positive definite: leading minors positive.
    const std::size_t n = static_cast<std::size_t>(rs.rank);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(rs.gram_basic[i][j], rs.gram_basic[j][i]);
    for (std::size_t m = 1; m <= n; ++m) {
      RatMatrix minor(m, RatVec(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) minor[i][j] = rs.gram_basic[i][j];
      EXPECT_GT(determinant(minor), 0);
    }

    // Long roots have squared length 2.
    Rational longest = 0;
    for (const auto& a : rs.positive_roots) longest = std::max(longest, rs.basic(a, a));
    EXPECT_EQ(longest, 2);

    // <alpha_i^vee, omega_j> = delta_ij and <alpha_i^vee, alpha_j> = Cartan.
    for (std::size_t i = 0; i < n; ++i) {
      const RatVec cor = (Rational(2) / rs.basic(rs.simple_roots[i], rs.simple_roots[i])) * rs.simple_roots[i];
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(rs.basic(cor, rs.fundamental_weights[j]), i == j ? 1 : 0);
        EXPECT_EQ(rs.basic(cor, rs.simple_roots[j]), rs.cartan[i][j]);
      }
    }
    // Integral lattice: the Gram matrix on coroots has integer entries and
    // even diagonal (the basic form is even on the coroot lattice).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(rs.gram_basic[i][j].get_den(), 1);
      EXPECT_EQ(rs.gram_basic[i][i].get_num() % 2, 0);
    }
    EXPECT_GE(rs.level(rs.highest_root), 1);
  }
}

TEST(RootSystem, WeylFoldExamples) {
  const auto a1 = build("A1");
  auto r = weyl_fold(a1, {Rational(-3)});
  EXPECT_EQ(r.dominant, RatVec{Rational(3)});
  EXPECT_EQ(r.sign, -1);
  r = weyl_fold(a1, {Rational(0)});
  EXPECT_EQ(r.dominant, RatVec{Rational(0)});
  EXPECT_EQ(r.sign, 0);
}

TEST(RootSystem, WeylFoldAgainstOrbit) {
  for (const auto& name : {"A2", "B2", "C3", "A3", "B3"}) {
    SCOPED_TRACE(name);
    const auto rs = build(name);
    const Weight mu = [&] {
      Weight w;
      for (int i = 0; i < rs.rank; ++i) w.coords.push_back(i + 1);
      return w;
    }();
    const auto orbit = signed_orbit(rs, mu);
    EXPECT_EQ(Integer(static_cast<unsigned long>(orbit.size())), rs.weyl_order());
    for (const auto& sw : orbit) {
      const auto f = weyl_fold(rs, to_rat(sw.weight));
      EXPECT_EQ(f.dominant, to_rat(mu));
      EXPECT_EQ(f.sign, sw.sign);
      EXPECT_EQ(f.sign, f.reflections.size() % 2 == 0 ? 1 : -1);
      EXPECT_EQ(unfold(rs, f.dominant, f.reflections), to_rat(sw.weight));
      // idempotent on the dominant output
      const auto again = weyl_fold(rs, f.dominant);
      EXPECT_EQ(again.dominant, f.dominant);
      EXPECT_TRUE(again.reflections.empty());
    }
  }
}

TEST(RootSystem, WeylFoldSignMultiplicative) {
  const auto rs = build("A2");
  const RatVec v{Rational(-2, 3), Rational(-5, 7)};
  const auto f = weyl_fold(rs, v);
  for (int i = 0; i < rs.rank; ++i) {
    const auto g = weyl_fold(rs, reflect(rs, v, i));
    EXPECT_EQ(g.dominant, f.dominant);
    EXPECT_EQ(g.sign, -f.sign);
  }
}

TEST(RootSystem, OrbitExamples) {
  EXPECT_EQ(weyl_orbit(build("A1"), Weight{{2}}), (std::vector<Weight>{Weight{{-2}}, Weight{{2}}}));
  EXPECT_EQ(weyl_orbit(build("A2"), Weight{{0, 0}}).size(), 1u);
  EXPECT_EQ(weyl_orbit(build("A2"), Weight{{1, 1}}).size(), 6u);
}

TEST(RootSystem, OrbitStabiliser) {
  for (const auto& name : {"A2", "A3", "B2", "C3", "D4"}) {
    SCOPED_TRACE(name);
    const auto rs = build(name);
    for (const auto& w : level_weights(rs, 2)) {
      const auto orbit = weyl_orbit(rs, w);
      EXPECT_EQ(rs.weyl_order() % static_cast<unsigned long>(orbit.size()), 0);
      int dominant = 0;
      for (const auto& o : orbit) {
        dominant += o.dominant();
        for (int i = 0; i < rs.rank; ++i)
          EXPECT_TRUE(std::binary_search(orbit.begin(), orbit.end(), reflect(rs, o, i)));
      }
      EXPECT_EQ(dominant, 1);
      std::vector<int> fixed;
      for (int i = 0; i < rs.rank; ++i)
        if (w.coords[i] == 0) fixed.push_back(i);
      EXPECT_EQ(Integer(static_cast<unsigned long>(orbit.size() * parabolic_order(rs, fixed))), rs.weyl_order());
    }
  }
}

TEST(RootSystem, LevelWeights) {
  const auto a1 = build("A1");
  EXPECT_EQ(level_weights(a1, 2), (std::vector<Weight>{Weight{{0}}, Weight{{1}}, Weight{{2}}}));
  for (std::int64_t h = 0; h <= 10; ++h) EXPECT_EQ(level_weights(a1, h).size(), static_cast<std::size_t>(h + 1));
  for (const auto& name : kAll) EXPECT_EQ(level_weights(build(name), 0), (std::vector<Weight>{Weight{std::vector<std::int64_t>(build(name).rank, 0)}}));
  EXPECT_EQ(level_weights(build("A2"), 1), (std::vector<Weight>{Weight{{0, 0}}, Weight{{0, 1}}, Weight{{1, 0}}}));
}

TEST(RootSystem, LevelWeightsAreExactlyTheBoundedDominantWeights) {
  for (const auto& name : {"B2", "C3", "D4"}) {
    const auto rs = build(name);
    const auto ws = level_weights(rs, 3);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    std::set<Weight> listed(ws.begin(), ws.end());
    // brute force over the box [0,3]^rank
    std::size_t count = 0;
    std::vector<std::int64_t> c(static_cast<std::size_t>(rs.rank), 0);
    for (;;) {
      const Weight w{c};
      if (rs.level(w) <= 3) {
        ++count;
        EXPECT_TRUE(listed.count(w));
      }
      std::size_t i = 0;
      while (i < c.size() && ++c[i] > 3) c[i++] = 0;
      if (i == c.size()) break;
    }
    EXPECT_EQ(count, ws.size());
  }
}
