#pragma once

// Exact-cover search for splitter sets.
//
// The ground set is Z_q \ {0}; each candidate splitter s contributes the
// block M*s. The search always branches on the smallest uncovered residue,
// so every splitter set is reached along exactly one path and Exhausted is
// a proof that no splitting exists for this (q, M).

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "qx/splitting.hpp"

namespace qx {

struct SearchBudget {
  /// Governs reproducible runs; exceeding it yields TimedOut.
  u64 node_limit = std::numeric_limits<u64>::max();
  /// Advisory wall-clock limit; results that hit it are not reproducible.
  std::optional<std::chrono::milliseconds> wall_limit;
};

enum class SearchStatus { Found, Exhausted, TimedOut };

enum class BranchOrder { Ascending, Descending };

struct SearchStats {
  u64 nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Splitting> splitting;
  SearchStats stats;
  std::string diagnostic;
};

struct CountOutcome {
  u64 count = 0;
  /// False when the budget ran out; count is then a lower bound only.
  bool complete = false;
  SearchStats stats;
  std::string diagnostic;
};

std::string_view to_string(SearchStatus status);

SearchOutcome find_splitting(u64 q, const MultiplierSet& multipliers, const SearchBudget& budget = {},
                             BranchOrder order = BranchOrder::Ascending);

CountOutcome count_splittings(u64 q, const MultiplierSet& multipliers, const SearchBudget& budget = {});

}  // namespace qx
