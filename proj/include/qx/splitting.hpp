#pragma once

// Quasi-cross shapes, multiplier/splitter sets, and the splitting verifier.
//
// A (k+, k-, n)-quasi-cross lattice-tiles R^n exactly when the cyclic group
// Z_q, q = n(k+ + k-) + 1, splits as (M, S) with M = [-k-, k+]*: the products
// m*s (m in M, s in S) are distinct, non-zero, and cover Z_q \ {0}. The
// tiling lattice is then the kernel of x -> sum x_i s_i (mod q).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qx {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct QuasiCrossShape {
  unsigned k_plus = 0;
  unsigned k_minus = 0;
  u64 n = 0;

  /// k+ + k-, the size of the multiplier set.
  u64 arm_span() const { return u64{k_plus} + k_minus; }
  /// Order of the cyclic group to split.
  u64 q() const { return n * arm_span() + 1; }
  bool operator==(const QuasiCrossShape&) const = default;
};

/// Validated constructor: 1 <= k- <= k+ and n >= 1. Throws std::invalid_argument.
QuasiCrossShape make_shape(unsigned k_plus, unsigned k_minus, u64 n);

/// [-k-, k+]* reduced modulo q.
struct MultiplierSet {
  u64 q = 0;
  /// Residues in the order -k-, ..., -1, 1, ..., k+ (or caller order if not an interval).
  std::vector<u64> residues;
  /// Set when the residues come from an interval [-k_minus, k_plus]*.
  std::optional<unsigned> k_plus;
  std::optional<unsigned> k_minus;

  std::size_t size() const { return residues.size(); }
  bool is_interval() const { return k_plus.has_value() && k_minus.has_value(); }
  bool operator==(const MultiplierSet&) const = default;
};

MultiplierSet multiplier_set(const QuasiCrossShape& shape);

/// [-k-, k+]* modulo an arbitrary q > k+ + k-.
MultiplierSet interval_multipliers(unsigned k_plus, unsigned k_minus, u64 q);

/// Arbitrary residues; throws std::invalid_argument on zero or repeated residues.
MultiplierSet custom_multipliers(u64 q, std::vector<u64> residues);

struct Splitting {
  u64 q = 0;
  MultiplierSet multipliers;
  /// Ascending, each in [1, q-1].
  std::vector<u64> splitters;
  bool operator==(const Splitting&) const = default;
};

/// Builds a splitting candidate with splitters sorted into canonical order.
Splitting make_splitting(const MultiplierSet& multipliers, std::vector<u64> splitters);

/// Thrown for malformed candidates: a splitter outside [1, q-1], a duplicate, or mismatched q.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Verification {
  bool ok = false;
  /// First residue hit twice (product order: splitters ascending, then multipliers).
  std::optional<u64> collision;
  /// Smallest non-zero residue never hit.
  std::optional<u64> missed;
  /// A splitter whose product with some multiplier vanishes.
  std::optional<u64> zero_product;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Checks that M*S tiles Z_q \ {0}. Structural problems throw StructuralError.
Verification verify_splitting(const Splitting& candidate);

struct LatticeBasis {
  std::vector<std::vector<i64>> rows;
  std::size_t dimension() const { return rows.size(); }
};

/// Basis of {x in Z^n : sum x_i s_i = 0 (mod q)} in lower-triangular Hermite
/// form; the diagonal multiplies to q / gcd(q, s_1, ..., s_n).
LatticeBasis kernel_basis(u64 q, std::span<const u64> splitters);

/// Tiling lattice of a verified splitting. Throws std::invalid_argument otherwise.
LatticeBasis lattice_basis(const Splitting& splitting);

/// Sum of row[i] * s_i reduced mod q.
u64 evaluate_phi(u64 q, std::span<const u64> splitters, std::span<const i64> row);

}  // namespace qx
