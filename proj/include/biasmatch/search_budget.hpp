#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace biasmatch {

// Raised when a search runs out of its node budget (or a size guard refuses
// an instance). Always distinct from a definite "none exists" result.
struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by bias_search when the exhaustive enumerator has *proved* that the
// residual vertices admit no perfect matching (a definite negative, unlike
// BudgetExceededError).
struct NoResidualMatchingError : std::runtime_error {
  explicit NoResidualMatchingError(const std::string& what) : std::runtime_error(what) {}
};

// Node counter shared across the searches of one run. A "node" is one unit
// of search work: a candidate support subset, an enumerated matching, a
// partial partition assignment, or a cover branch.
struct SearchBudget {
  std::uint64_t limit = UINT64_MAX;
  std::uint64_t used = 0;

  void tick(std::uint64_t cost = 1) {
    used += cost;
    if (used > limit)
      throw BudgetExceededError("search budget exceeded (" + std::to_string(limit) + " nodes)");
  }
};

}  // namespace biasmatch
