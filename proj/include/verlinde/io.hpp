#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/root_system.hpp"
#include "verlinde/verlinde_core.hpp"

namespace verlinde::io {

using nlohmann::json;

/// Bumped whenever the cached tensor could change.
inline constexpr const char* kCodeVersion = "verlinde-fusion-1";

json to_json(const RootSystem& rs);
json to_json(const Cyclotomic& x);
json to_json(const FusionRing& ring);

/// Throws InvalidInput on malformed documents.
FusionRing fusion_from_json(const json& doc);

/// "a,b,c,N" rows, nonzero entries only, with a header line.
std::string fusion_csv(const FusionRing& ring);

/// One JSON file per (family, rank, level); the file records kCodeVersion.
class FusionCache {
 public:
  explicit FusionCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(Family family, int rank, std::int64_t level) const;

  void store(const FusionRing& ring) const;
  /// nullopt if absent; corrupt or stale files are reported on `warn` and
  /// also give nullopt.
  std::optional<FusionRing> load(Family family, int rank, std::int64_t level, std::ostream& warn) const;

 private:
  std::filesystem::path dir_;
};

/// VERLINDE_CACHE_DIR if set, else `configured`.
std::filesystem::path resolve_cache_dir(const std::filesystem::path& configured);

/// Loads from the cache when possible, otherwise computes and stores.
FusionRing cached_fusion_ring(const LevelData& ld, const std::filesystem::path& cache_dir, std::ostream& warn);

}  // namespace verlinde::io
