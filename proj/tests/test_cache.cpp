#include "anharmonic/cache.hpp"

#include <doctest.h>

#include <fstream>
#include <thread>

using namespace anharmonic;
namespace fs = std::filesystem;

namespace {
fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("anharmonic-cache-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}
} // namespace

TEST_CASE("cache round trip") {
  auto dir = scratch_dir("roundtrip");
  TableCache cache(dir);
  OscillatorSpec q(4);
  CHECK_FALSE(cache.load(q, 0, 40));
  std::vector<std::string> warnings;
  auto computed = cached_rspt_coeffs(&cache, q, 0, 40, &warnings);
  auto loaded = cache.load(q, 0, 40);
  REQUIRE(loaded);
  CHECK(loaded->coeffs == computed.coeffs);
  CHECK(warnings.empty());
  fs::remove_all(dir);
}

TEST_CASE("schema bump misses") {
  auto dir = scratch_dir("schema");
  OscillatorSpec c(3);
  TableCache(dir, 1).store(rspt_coeffs(c, 0, 10));
  CHECK(TableCache(dir, 1).load(c, 0, 10));
  CHECK_FALSE(TableCache(dir, 2).load(c, 0, 10));
  fs::remove_all(dir);
}

TEST_CASE("corrupt entries are recomputed with a warning") {
  auto dir = scratch_dir("corrupt");
  TableCache cache(dir);
  OscillatorSpec c(3);
  cache.store(rspt_coeffs(c, 1, 8));
  auto path = cache.path_for(3, 1, 8);
  std::string text;
  {
    std::ifstream in(path);
    std::getline(in, text);
  }
  auto pos = text.find("\"coeffs\":[\"");
  REQUIRE(pos != std::string::npos);
  text[pos + 11] = text[pos + 11] == '2' ? '3' : '2';
  std::ofstream(path) << text << '\n';

  std::string warning;
  CHECK_FALSE(cache.load(c, 1, 8, &warning));
  CHECK(warning.find("checksum") != std::string::npos);
  std::vector<std::string> warnings;
  auto t = cached_rspt_coeffs(&cache, c, 1, 8, &warnings);
  CHECK(warnings.size() == 1);
  CHECK(t.coeffs == rspt_coeffs(c, 1, 8).coeffs);
  CHECK(cache.load(c, 1, 8));
  fs::remove_all(dir);
}

TEST_CASE("concurrent writers leave one complete entry") {
  auto dir = scratch_dir("concurrent");
  TableCache cache(dir);
  auto table = rspt_coeffs(OscillatorSpec(4), 0, 20);
  std::vector<std::thread> writers;
  for (int i = 0; i < 8; ++i) writers.emplace_back([&] { cache.store(table); });
  for (auto& w : writers) w.join();
  auto loaded = cache.load(OscillatorSpec(4), 0, 20);
  REQUIRE(loaded);
  CHECK(loaded->coeffs == table.coeffs);
  int files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  fs::remove_all(dir);
}
