#include <gtest/gtest.h>

#include "verlinde/errors.hpp"
#include "verlinde/oracle.hpp"

using namespace verlinde;
using namespace verlinde::oracle;

namespace {

LevelData ld_of(const std::string& g, std::int64_t h) { return make_level_data(build(g), h); }

}  // namespace

TEST(ScanF, Examples) {
  auto r = scan_F(ld_of("A1", 1));
  EXPECT_EQ(r.points.size(), 6u);
  EXPECT_EQ(r.regular_count, 4u);
  EXPECT_EQ(r.orbit_count, 2u);

  r = scan_F(ld_of("A1", 0));
  EXPECT_EQ(r.points.size(), 4u);
  EXPECT_EQ(r.regular_count, 2u);
  EXPECT_EQ(r.orbit_count, 1u);

  r = scan_F(ld_of("A2", 0));
  EXPECT_EQ(r.points.size(), 27u);
  EXPECT_EQ(r.regular_count, 6u);
  EXPECT_EQ(r.orbit_count, 1u);
  EXPECT_EQ(r.orbit_labels, (std::set<Weight>{Weight{{0, 0}}}));
}

TEST(ScanF, MatchesDeterminantAndRegularPoints) {
  std::vector<std::pair<std::string, int>> cases;
  for (int h = 0; h <= 6; ++h) cases.push_back({"A1", h});
  for (int h = 0; h <= 3; ++h) cases.push_back({"A2", h});
  for (int h = 0; h <= 2; ++h) cases.push_back({"B2", h});
  cases.push_back({"C3", 1});
  cases.push_back({"A3", 1});
  for (const auto& [g, h] : cases) {
    SCOPED_TRACE(g + " h=" + std::to_string(h));
    const auto ld = ld_of(g, h);
    const auto r = scan_F(ld);
    EXPECT_EQ(Integer(static_cast<unsigned long>(r.points.size())), f_order(ld));
    std::set<Weight> labels;
    for (const auto& p : regular_points(ld)) labels.insert(p.label);
    EXPECT_EQ(r.orbit_labels, labels);
    EXPECT_EQ(r.orbit_count, labels.size());
    for (const auto& x : r.points)
      for (const auto& c : x) {
        EXPECT_GE(c, 0);
        EXPECT_LT(c, 1);
      }
  }
}

TEST(ScanF, RefusesLargeRank) { EXPECT_THROW(scan_F(ld_of("D4", 0)), ComputationRefused); }

TEST(CgFusion, Examples) {
  auto t = cg_fusion_a1(1);
  EXPECT_EQ(t[1][1], (std::vector<Integer>{1, 0}));
  t = cg_fusion_a1(2);
  EXPECT_EQ(t[1][1], (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(t[2][2], (std::vector<Integer>{1, 0, 0}));
  EXPECT_THROW(cg_fusion_a1(-1), InvalidInput);
}

TEST(CgFusion, MatchesCore) {
  for (int h = 0; h <= 8; ++h) EXPECT_EQ(cg_fusion_a1(h), fusion_ring(ld_of("A1", h)).constants) << "h=" << h;
}

TEST(GenusFromFusion, Examples) {
  const auto r1 = fusion_ring(ld_of("A1", 1));
  EXPECT_EQ(genus_dim_from_fusion(r1, 2), 4);
  const auto r2 = fusion_ring(ld_of("A1", 2));
  EXPECT_EQ(genus_dim_from_fusion(r2, 2), 10);
  EXPECT_EQ(genus_multiplicity_from_fusion(r2, 2, 2), 6);
  for (const auto& g : {"A2", "B2", "C3"}) {
    const auto r = fusion_ring(ld_of(g, 1));
    EXPECT_EQ(genus_dim_from_fusion(r, 1), Integer(static_cast<unsigned long>(r.size())));
  }
  EXPECT_THROW(genus_dim_from_fusion(r1, 0), InvalidInput);
}

TEST(GenusFromFusion, IndependentOfCore) {
  // Built purely from the Clebsch-Gordan tensor.
  for (int h = 0; h <= 6; ++h) {
    std::vector<Weight> basis;
    for (int a = 0; a <= h; ++a) basis.push_back(Weight{{a}});
    const auto ring = ring_from_tensor(Family::A, 1, h, basis, cg_fusion_a1(h));
    for (int g = 1; g <= 4; ++g) EXPECT_EQ(genus_dim_from_fusion(ring, g), verlinde_dimension(ld_of("A1", h), g));
  }
}

TEST(FloatCrosscheck, Examples) {
  EXPECT_TRUE(float_crosscheck(ld_of("A1", 3), 3).pass);
  EXPECT_TRUE(float_crosscheck(ld_of("A2", 2), 2).pass);
  const auto r = float_crosscheck(ld_of("B2", 2), 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.exact_value, 6);
}
