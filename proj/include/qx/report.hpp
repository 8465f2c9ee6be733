#pragma once

// Verdict tables and run summaries in text, CSV and JSON.

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qx/classify.hpp"

namespace qx {

enum class Format { Text, Csv, Json };

std::optional<Format> format_from_string(std::string_view name);

struct ResidueClassStat {
  u64 modulus = 0;
  u64 residue = 0;
  /// Dimensions n >= 2 in the class.
  u64 total = 0;
  u64 ruled_out = 0;
};

struct Summary {
  unsigned k_plus = 0;
  unsigned k_minus = 0;
  u64 n_max = 0;
  u64 tiles = 0;
  u64 no_tiling = 0;
  u64 unknown = 0;
  /// Dimensions each criterion rules out on its own, in kCriterionOrder.
  std::vector<std::pair<CriterionId, u64>> firings;
  /// NoTiling verdicts credited to each criterion, in kCriterionOrder.
  std::vector<std::pair<CriterionId, u64>> attributed;
  std::vector<ResidueClassStat> residue_classes;
  std::vector<u64> unknown_dimensions;
};

/// Residue moduli reported by summarize.
inline constexpr std::array<u64, 2> kSummaryModuli = {3, 36};

/// Throws std::invalid_argument on an empty verdict list.
Summary summarize(unsigned k_plus, unsigned k_minus, std::span<const Verdict> verdicts);

/// Columns n,q,status,criterion,witness; rows ordered by n.
void write_verdicts(std::ostream& out, std::span<const Verdict> verdicts, Format format);

void write_summary(std::ostream& out, const Summary& summary, Format format);

/// Per-criterion outcomes for a single dimension followed by its verdict.
void write_check(std::ostream& out, const Verdict& verdict, Format format);

}  // namespace qx
