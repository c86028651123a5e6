#pragma once

#include "anharmonic/rspt.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace anharmonic {

inline constexpr int kCacheSchema = 1;

/// On-disk store of exact coefficient tables, keyed by (m, n, Kmax, schema).
/// Writes go to a temporary file that is renamed into place, so concurrent
/// writers leave exactly one complete file behind.
class TableCache {
public:
  explicit TableCache(std::filesystem::path dir, int schema = kCacheSchema);

  /// Directory from ANHARMONIC_CACHE_DIR, if set.
  static std::optional<TableCache> from_environment();

  std::filesystem::path path_for(int m, int n, int kmax) const;

  /// Missing, stale or corrupt entries yield nullopt; corruption is reported in `warning`.
  std::optional<CoeffTable> load(const OscillatorSpec& spec, int n, int kmax, std::string* warning = nullptr) const;
  void store(const CoeffTable& table) const;

  const std::filesystem::path& dir() const { return dir_; }
  int schema() const { return schema_; }

private:
  std::filesystem::path dir_;
  int schema_;
};

/// Loads from the cache when possible; otherwise computes and stores.
/// Warnings (checksum mismatches) are appended to `warnings`.
CoeffTable cached_rspt_coeffs(const TableCache* cache, const OscillatorSpec& spec, int n, int kmax,
                              std::vector<std::string>* warnings = nullptr);

} // namespace anharmonic
