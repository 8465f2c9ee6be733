#include "qx/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qx/numtheory.hpp"

namespace qx {

namespace {

using Clock = std::chrono::steady_clock;

class ExactCoverSearch {
 public:
  ExactCoverSearch(u64 q, const MultiplierSet& multipliers, const SearchBudget& budget, BranchOrder order)
      : q_(q), width_(multipliers.size()), budget_(budget), covered_(q, 0), start_(Clock::now()) {
    covered_[0] = 1;
    products_.assign(q * width_, 0);
    candidates_.resize(q);
    std::vector<char> hit(q, 0);
    for (u64 s = 1; s < q; ++s) {
      bool usable = true;
      for (std::size_t j = 0; j < width_; ++j) {
        const u64 p = nt::mul_mod(multipliers.residues[j], s, q);
        products_[s * width_ + j] = p;
        if (p == 0 || hit[p]) usable = false;
        hit[p] = 1;
      }
      for (std::size_t j = 0; j < width_; ++j) hit[products_[s * width_ + j]] = 0;
      if (!usable) continue;
      for (std::size_t j = 0; j < width_; ++j) candidates_[products_[s * width_ + j]].push_back(s);
    }
    if (order == BranchOrder::Descending) {
      for (auto& list : candidates_) std::reverse(list.begin(), list.end());
    }
  }

  template <typename OnSolution>
  bool run(OnSolution&& on_solution) {
    return descend(1, on_solution);
  }

  SearchStats stats() const { return {nodes_, Clock::now() - start_}; }
  bool budget_hit() const { return budget_hit_; }

 private:
  bool fits(u64 s) const {
    for (std::size_t j = 0; j < width_; ++j) {
      if (covered_[products_[s * width_ + j]]) return false;
    }
    return true;
  }

  void mark(u64 s, char value) {
    for (std::size_t j = 0; j < width_; ++j) covered_[products_[s * width_ + j]] = value;
  }

  bool over_budget() {
    if (nodes_ >= budget_.node_limit) return true;
    if (budget_.wall_limit && (nodes_ & 1023) == 0 && Clock::now() - start_ > *budget_.wall_limit) {
      return true;
    }
    return false;
  }

  // Returns false to abort (budget or caller request).
  template <typename OnSolution>
  bool descend(u64 from, OnSolution& on_solution) {
    u64 e = from;
    while (e < q_ && covered_[e]) ++e;
    if (e == q_) return on_solution(chosen_);
    for (u64 s : candidates_[e]) {
      if (!fits(s)) continue;
      if (over_budget()) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      mark(s, 1);
      chosen_.push_back(s);
      const bool keep_going = descend(e + 1, on_solution);
      chosen_.pop_back();
      mark(s, 0);
      if (!keep_going) return false;
    }
    return true;
  }

  u64 q_;
  std::size_t width_;
  SearchBudget budget_;
  std::vector<char> covered_;
  std::vector<u64> products_;
  std::vector<std::vector<u64>> candidates_;
  std::vector<u64> chosen_;
  u64 nodes_ = 0;
  bool budget_hit_ = false;
  Clock::time_point start_;
};

std::optional<std::string> precondition_failure(u64 q, const MultiplierSet& multipliers) {
  if (multipliers.q != q) {
    throw std::invalid_argument("multiplier set reduced modulo " + std::to_string(multipliers.q) +
                                ", search requested for " + std::to_string(q));
  }
  if (multipliers.size() == 0) throw std::invalid_argument("empty multiplier set");
  if ((q - 1) % multipliers.size() != 0) {
    return "q - 1 = " + std::to_string(q - 1) + " is not divisible by |M| = " +
           std::to_string(multipliers.size());
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::TimedOut: return "timed_out";
  }
  return "?";
}

SearchOutcome find_splitting(u64 q, const MultiplierSet& multipliers, const SearchBudget& budget,
                             BranchOrder order) {
  SearchOutcome outcome;
  if (auto failure = precondition_failure(q, multipliers)) {
    outcome.status = SearchStatus::Exhausted;
    outcome.diagnostic = *failure;
    return outcome;
  }
  ExactCoverSearch search(q, multipliers, budget, order);
  search.run([&](const std::vector<u64>& chosen) {
    outcome.splitting = make_splitting(multipliers, chosen);
    return false;
  });
  outcome.stats = search.stats();
  if (outcome.splitting) {
    const Verification check = verify_splitting(*outcome.splitting);
    if (!check) throw std::logic_error("search produced an invalid splitting: " + check.diagnostic);
    outcome.status = SearchStatus::Found;
  } else if (search.budget_hit()) {
    outcome.status = SearchStatus::TimedOut;
    outcome.diagnostic = "budget exhausted after " + std::to_string(outcome.stats.nodes) + " nodes";
  } else {
    outcome.status = SearchStatus::Exhausted;
    outcome.diagnostic = "search tree closed after " + std::to_string(outcome.stats.nodes) + " nodes";
  }
  return outcome;
}

CountOutcome count_splittings(u64 q, const MultiplierSet& multipliers, const SearchBudget& budget) {
  CountOutcome outcome;
  if (auto failure = precondition_failure(q, multipliers)) {
    outcome.complete = true;
    outcome.diagnostic = *failure;
    return outcome;
  }
  ExactCoverSearch search(q, multipliers, budget, BranchOrder::Ascending);
  search.run([&](const std::vector<u64>&) {
    ++outcome.count;
    return true;
  });
  outcome.stats = search.stats();
  outcome.complete = !search.budget_hit();
  if (!outcome.complete) {
    outcome.diagnostic = "budget exhausted after " + std::to_string(outcome.stats.nodes) +
                         " nodes; partial count is not usable";
  }
  return outcome;
}

}  // namespace qx
