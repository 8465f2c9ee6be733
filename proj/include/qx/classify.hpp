#pragma once

// Per-dimension classification of lattice tilings for one quasi-cross shape.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qx/criteria.hpp"
#include "qx/splitting.hpp"

namespace qx {

enum class TileSource { Registry, Certificate, Trivial };

std::string_view to_string(TilingStatus status);
std::string_view to_string(TileSource source);

struct Verdict {
  u64 n = 0;
  u64 q = 0;
  TilingStatus status = TilingStatus::Unknown;
  /// Set for Tiles.
  std::optional<TileSource> source;
  /// First criterion (in the configured order) that ruled n out; set for NoTiling.
  std::optional<CriterionId> criterion;
  Witness witness;
  /// Every evaluated criterion, in kCriterionOrder, for per-criterion statistics.
  std::vector<CriterionOutcome> outcomes;
};

/// Dimensions with known lattice tilings for one shape.
struct Registry {
  unsigned k_plus = 0;
  unsigned k_minus = 0;
  /// Sorted, distinct, each >= 1.
  std::vector<u64> dimensions;
  std::string source;

  bool contains(u64 n) const;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A registry dimension (or certificate) that some criterion rules out.
class ContradictionError : public std::runtime_error {
 public:
  ContradictionError(u64 n, std::string tiling_evidence, CriterionOutcome outcome);
  u64 n() const { return n_; }
  const CriterionOutcome& outcome() const { return outcome_; }

 private:
  u64 n_;
  CriterionOutcome outcome_;
};

/// {"k_plus":3,"k_minus":1,"dimensions":[...],"source":"..."}
Registry parse_registry(const std::string& json_text);
Registry load_registry(const std::filesystem::path& path);

/// One JSON object per line: {"q":25,"k_plus":3,"k_minus":1,"splitters":[1,5,6,11,16,21]}.
std::string certificate_to_json(const Splitting& splitting);
Splitting certificate_from_json(const std::string& line);

/// Parses and verifies every line; the first unverifiable certificate throws
/// CertificateError naming its line and the first collision. A missing file
/// is an empty store.
std::vector<Splitting> load_certificates(const std::filesystem::path& path);

/// Appends the certificate unless an identical one is already stored.
/// Returns true if a line was written. Unverified splittings are rejected.
bool store_certificate(const std::filesystem::path& path, const Splitting& splitting);

struct ClassifyOptions {
  /// Attribution order for NoTiling verdicts; must be a permutation of kCriterionOrder.
  std::vector<CriterionId> order{kCriterionOrder.begin(), kCriterionOrder.end()};
  /// Criteria to evaluate; the rest are skipped entirely.
  std::vector<CriterionId> enabled{kCriterionOrder.begin(), kCriterionOrder.end()};
  /// 0 means QX_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

/// Verdicts for n = 1..n_max in ascending order.
///
/// n = 1 is Tiles(Trivial); registry and certificate dimensions are Tiles;
/// otherwise the first criterion that fires gives NoTiling, else Unknown.
/// All criteria are still evaluated at tiling dimensions and any firing
/// raises ContradictionError. The result does not depend on threads.
std::vector<Verdict> classify_range(unsigned k_plus, unsigned k_minus, u64 n_max,
                                    const std::optional<Registry>& registry,
                                    const std::vector<Splitting>& certificates, const ClassifyOptions& options = {});

/// Thread count from QX_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

}  // namespace qx
