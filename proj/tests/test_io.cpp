#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "verlinde/errors.hpp"
#include "verlinde/io.hpp"

using namespace verlinde;
namespace fs = std::filesystem;

namespace {

LevelData ld_of(const std::string& g, std::int64_t h) { return make_level_data(build(g), h); }

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("verlinde_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST(Json, FusionRoundTrip) {
  for (const auto& [g, h] : std::vector<std::pair<std::string, int>>{{"A1", 2}, {"A2", 2}, {"B2", 1}}) {
    const auto ring = fusion_ring(ld_of(g, h));
    const auto doc = io::to_json(ring);
    EXPECT_EQ(io::fusion_from_json(io::json::parse(doc.dump())), ring);
  }
}

TEST(Json, FusionShape) {
  const auto doc = io::to_json(fusion_ring(ld_of("A1", 1)));
  EXPECT_EQ(doc["family"], "A");
  EXPECT_EQ(doc["rank"], 1);
  EXPECT_EQ(doc["level"], 1);
  EXPECT_EQ(doc["basis"], io::json::parse("[[0],[1]]"));
  EXPECT_EQ(doc["constants"], io::json::parse("[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]"));
  EXPECT_EQ(doc["unit"], 0);
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(io::fusion_from_json(io::json::parse("{}")), InvalidInput);
  EXPECT_THROW(io::fusion_from_json(io::json::parse(
                   R"({"family":"A","rank":1,"level":1,"basis":[[0],[1]],"constants":[[0,0,5,1]],"unit":0})")),
               InvalidInput);
  EXPECT_THROW(io::fusion_from_json(io::json::parse(
                   R"({"family":"Q","rank":1,"level":1,"basis":[[0]],"constants":[],"unit":0})")),
               InvalidInput);
}

TEST(Json, RootSystemAndCyclotomic) {
  const auto j = io::to_json(build("B2"));
  EXPECT_EQ(j["family"], "B");
  EXPECT_EQ(j["gram_basic"][0][0], "2/1");  // long simple coroot
  EXPECT_EQ(j["gram_basic"][1][1], "4/1");
  EXPECT_EQ(j["rho"][0], "3/2");
  const auto c = io::to_json(Cyclotomic::root_of_unity(4, 1) * Rational(1, 2));
  EXPECT_EQ(c["conductor"], 4);
  EXPECT_EQ(c["coeffs"], io::json::parse(R"(["0/1","1/2"])"));
}

TEST(Csv, FlattensTensor) {
  const auto csv = io::fusion_csv(fusion_ring(ld_of("A1", 1)));
  EXPECT_EQ(csv, "a,b,c,N\n0,0,0,1\n0,1,1,1\n1,0,1,1\n1,1,0,1\n");
}

TEST(Cache, RoundTrip) {
  const auto dir = fresh_dir("roundtrip");
  const io::FusionCache cache(dir);
  const auto ring = fusion_ring(ld_of("A1", 2));
  std::ostringstream warn;
  EXPECT_FALSE(cache.load(Family::A, 1, 2, warn));
  cache.store(ring);
  const auto back = cache.load(Family::A, 1, 2, warn);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, ring);
  EXPECT_TRUE(warn.str().empty());
  fs::remove_all(dir);
}

TEST(Cache, CorruptAndStale) {
  const auto dir = fresh_dir("corrupt");
  const io::FusionCache cache(dir);
  const auto ld = ld_of("A1", 3);
  cache.store(fusion_ring(ld));
  const auto path = cache.path_for(Family::A, 1, 3);
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  std::ostringstream warn;
  EXPECT_FALSE(cache.load(Family::A, 1, 3, warn));
  EXPECT_NE(warn.str().find("corrupt"), std::string::npos);

  // recompute path repairs the file
  warn.str("");
  EXPECT_EQ(io::cached_fusion_ring(ld, dir, warn), fusion_ring(ld));
  EXPECT_TRUE(cache.load(Family::A, 1, 3, warn));

  auto doc = io::json::parse(std::ifstream(path));
  doc["version"] = "verlinde-fusion-0";
  {
    std::ofstream f(path);
    f << doc.dump();
  }
  warn.str("");
  EXPECT_FALSE(cache.load(Family::A, 1, 3, warn));
  EXPECT_NE(warn.str().find("stale"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cache, WrongContentIsNotTrusted) {
  const auto dir = fresh_dir("tamper");
  const io::FusionCache cache(dir);
  const auto ld = ld_of("A1", 2);
  // a ring stored under the right key but with a different basis
  auto other = fusion_ring(ld_of("A1", 3));
  other.level = 2;
  cache.store(other);
  std::ostringstream warn;
  EXPECT_EQ(io::cached_fusion_ring(ld, dir, warn), fusion_ring(ld));
  EXPECT_FALSE(warn.str().empty());
  fs::remove_all(dir);
}

TEST(Cache, EnvironmentOverride) {
  ::setenv("VERLINDE_CACHE_DIR", "/tmp/from-env", 1);
  EXPECT_EQ(io::resolve_cache_dir("/tmp/configured"), fs::path("/tmp/from-env"));
  ::unsetenv("VERLINDE_CACHE_DIR");
  EXPECT_EQ(io::resolve_cache_dir("/tmp/configured"), fs::path("/tmp/configured"));
}
