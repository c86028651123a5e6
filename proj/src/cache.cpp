#include "anharmonic/cache.hpp"

#include <boost/crc.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace anharmonic {

namespace fs = std::filesystem;

namespace {

std::string checksum(const std::string& payload) {
  boost::crc_32_type crc;
  crc.process_bytes(payload.data(), payload.size());
  std::ostringstream out;
  out << std::hex << crc.checksum();
  return out.str();
}

} // namespace

TableCache::TableCache(fs::path dir, int schema) : dir_(std::move(dir)), schema_(schema) {}

std::optional<TableCache> TableCache::from_environment() {
  const char* dir = std::getenv("ANHARMONIC_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return TableCache(dir);
}

fs::path TableCache::path_for(int m, int n, int kmax) const {
  return dir_ / ("rspt-m" + std::to_string(m) + "-n" + std::to_string(n) + "-k" + std::to_string(kmax) + "-v" +
                 std::to_string(schema_) + ".json");
}

std::optional<CoeffTable> TableCache::load(const OscillatorSpec& spec, int n, int kmax, std::string* warning) const {
  const fs::path path = path_for(spec.m(), n, kmax);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  auto fail = [&](const std::string& why) -> std::optional<CoeffTable> {
    if (warning) *warning = "cache entry " + path.string() + " rejected: " + why;
    return std::nullopt;
  };
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("schema").get<int>() != schema_) return std::nullopt;
    const auto& table = doc.at("table");
    if (checksum(table.dump()) != doc.at("checksum").get<std::string>()) return fail("checksum mismatch");
    CoeffTable t = coeff_table_from_json(table);
    if (t.spec != spec || t.n != n || t.kmax() != kmax) return fail("key mismatch");
    return t;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

void TableCache::store(const CoeffTable& table) const {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir_);
  const fs::path target = path_for(table.spec.m(), table.n, table.kmax());
  nlohmann::json payload = to_json(table);
  nlohmann::json doc = {{"schema", schema_}, {"checksum", checksum(payload.dump())}, {"table", payload}};
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("short write on cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

CoeffTable cached_rspt_coeffs(const TableCache* cache, const OscillatorSpec& spec, int n, int kmax,
                              std::vector<std::string>* warnings) {
  if (cache) {
    std::string warning;
    if (auto hit = cache->load(spec, n, kmax, &warning)) return *hit;
    if (!warning.empty() && warnings) warnings->push_back(warning + "; recomputing");
  }
  CoeffTable table = rspt_coeffs(spec, n, kmax);
  if (cache) cache->store(table);
  return table;
}

} // namespace anharmonic
