#pragma once

#include "anharmonic/cache.hpp"

#include <functional>
#include <string>
#include <vector>

namespace anharmonic {

enum class Suite { Fast, Full };

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string measured;
  std::string expected;
  std::vector<std::string> notes; // diagnostics that do not affect the verdict
  double seconds;
};

struct AcceptanceOptions {
  Suite suite = Suite::Fast;
  const TableCache* cache = nullptr;
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1..12). Exceptions inside a criterion become a failing result.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs the given criteria (all when empty), reporting each as it finishes.
std::vector<CriterionResult> run_suite(const AcceptanceOptions& options, const std::vector<int>& ids = {},
                                       const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  5  title  measured=...  expected=..."
std::string format_line(const CriterionResult& r);

} // namespace anharmonic
