// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "anharmonic/acceptance.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string suite = "fast";
  std::vector<int> ids;
  app.add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  app.add_option("--criterion", ids, "criterion id (repeatable); all when omitted")->check(CLI::Range(1, 12));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  anharmonic::AcceptanceOptions options;
  options.suite = suite == "full" ? anharmonic::Suite::Full : anharmonic::Suite::Fast;
  auto cache = anharmonic::TableCache::from_environment();
  if (cache) options.cache = &*cache;

  bool all = true;
  anharmonic::run_suite(options, ids, [&](const anharmonic::CriterionResult& r) {
    std::cout << anharmonic::format_line(r) << "  [" << r.seconds << " s]" << std::endl;
    for (const auto& note : r.notes) std::cout << "        note: " << note << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
