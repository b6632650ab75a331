#include "verlinde/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "verlinde/errors.hpp"

namespace verlinde::io {

namespace {

json matrix_json(const RatMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_fraction_string(x));
    out.push_back(r);
  }
  return out;
}

Weight weight_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank) throw InvalidInput("basis entry has the wrong rank");
  Weight w;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw InvalidInput("Dynkin labels must be integers");
    w.coords.push_back(c.get<std::int64_t>());
  }
  return w;
}

}  // namespace

json to_json(const RootSystem& rs) {
  json j;
  j["family"] = std::string(1, family_letter(rs.family));
  j["rank"] = rs.rank;
  j["dual_coxeter"] = rs.dual_coxeter;
  j["simple_roots"] = matrix_json(rs.simple_roots);
  j["positive_roots"] = matrix_json(rs.positive_roots);
  j["fundamental_weights"] = matrix_json(rs.fundamental_weights);
  j["rho"] = matrix_json({rs.rho})[0];
  j["gram_basic"] = matrix_json(rs.gram_basic);
  return j;
}

json to_json(const Cyclotomic& x) {
  json j;
  j["conductor"] = x.conductor();
  j["coeffs"] = matrix_json({x.coeffs()})[0];
  return j;
}

json to_json(const FusionRing& ring) {
  json j;
  j["family"] = std::string(1, family_letter(ring.family));
  j["rank"] = ring.rank;
  j["level"] = ring.level;
  json basis = json::array();
  for (const auto& w : ring.basis) basis.push_back(w.coords);
  j["basis"] = basis;
  json constants = json::array();
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b)
      for (std::size_t c = 0; c < ring.size(); ++c)
        if (ring.constants[a][b][c] != 0)
          constants.push_back({a, b, c, ring.constants[a][b][c].get_si()});
  j["constants"] = constants;
  j["unit"] = ring.unit;
  return j;
}

FusionRing fusion_from_json(const json& doc) {
  try {
    FusionRing r;
    const std::string fam = doc.at("family").get<std::string>();
    if (fam.size() != 1) throw InvalidInput("family must be one letter");
    r.family = parse_family(fam[0]);
    r.rank = doc.at("rank").get<int>();
    r.level = doc.at("level").get<std::int64_t>();
    for (const auto& w : doc.at("basis")) r.basis.push_back(weight_from_json(w, r.rank));
    const std::size_t n = r.basis.size();
    r.constants.assign(n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n, 0)));
    for (const auto& t : doc.at("constants")) {
      if (!t.is_array() || t.size() != 4) throw InvalidInput("constants must be [a,b,c,N] quadruples");
      const auto a = t[0].get<std::size_t>(), b = t[1].get<std::size_t>(), c = t[2].get<std::size_t>();
      if (a >= n || b >= n || c >= n) throw InvalidInput("structure constant index out of range");
      r.constants[a][b][c] = Integer(t[3].get<long>());
    }
    r.unit = doc.at("unit").get<std::size_t>();
    if (r.unit >= n) throw InvalidInput("unit index out of range");
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed fusion ring document: ") + e.what());
  }
}

std::string fusion_csv(const FusionRing& ring) {
  std::ostringstream os;
  os << "a,b,c,N\n";
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = 0; b < ring.size(); ++b)
      for (std::size_t c = 0; c < ring.size(); ++c)
        if (ring.constants[a][b][c] != 0) os << a << ',' << b << ',' << c << ',' << ring.constants[a][b][c] << '\n';
  return os.str();
}

FusionCache::FusionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FusionCache::path_for(Family family, int rank, std::int64_t level) const {
  return dir_ / (std::string(1, family_letter(family)) + std::to_string(rank) + "_h" + std::to_string(level) + ".json");
}

void FusionCache::store(const FusionRing& ring) const {
  std::filesystem::create_directories(dir_);
  json doc;
  doc["version"] = kCodeVersion;
  doc["ring"] = to_json(ring);
  const auto target = path_for(ring.family, ring.rank, ring.level);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) throw std::runtime_error("cannot write cache file " + tmp);
    f << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

std::optional<FusionRing> FusionCache::load(Family family, int rank, std::int64_t level, std::ostream& warn) const {
  const auto path = path_for(family, rank, level);
  std::ifstream f(path);
  if (!f) return std::nullopt;
  try {
    const json doc = json::parse(f);
    if (doc.value("version", std::string()) != kCodeVersion) {
      warn << "warning: stale cache entry " << path.string() << ", recomputing\n";
      return std::nullopt;
    }
    FusionRing r = fusion_from_json(doc.at("ring"));
    if (r.family != family || r.rank != rank || r.level != level) throw InvalidInput("key mismatch");
    return r;
  } catch (const std::exception& e) {
    warn << "warning: corrupt cache entry " << path.string() << " (" << e.what() << "), recomputing\n";
    return std::nullopt;
  }
}

std::filesystem::path resolve_cache_dir(const std::filesystem::path& configured) {
  if (const char* env = std::getenv("VERLINDE_CACHE_DIR"); env && *env) return env;
  return configured;
}

FusionRing cached_fusion_ring(const LevelData& ld, const std::filesystem::path& cache_dir, std::ostream& warn) {
  if (cache_dir.empty()) return fusion_ring(ld);
  const FusionCache cache(cache_dir);
  if (auto hit = cache.load(ld.rs.family, ld.rs.rank, ld.h, warn)) {
    // Cheap guard against a tampered file: the basis must be the level-h weights.
    if (hit->basis == level_weights(ld.rs, ld.h)) return *hit;
    warn << "warning: cache entry for " << ld.rs.name() << " level " << ld.h << " has the wrong basis, recomputing\n";
  }
  FusionRing r = fusion_ring(ld);
  try {
    cache.store(r);
  } catch (const std::exception& e) {
    warn << "warning: could not write cache (" << e.what() << ")\n";
  }
  return r;
}

}  // namespace verlinde::io
