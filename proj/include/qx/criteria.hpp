#pragma once

// Non-existence criteria for lattice tilings by (k+, k-, n)-quasi-crosses.
//
// Each check inspects a shape and reports RuledOut (no lattice tiling of R^n
// exists) together with a witness that can be re-checked by direct
// arithmetic, Inconclusive (the criterion applies but does not fire), or
// Inapplicable (its hypotheses are not met). Every check is a pure function.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qx/splitting.hpp"

namespace qx {

enum class CriterionId {
  Geometry,
  Kmo,
  QuadraticBalance,
  Char4Literal,
  QuarticGeneric,
  OddPrimeOrder,
  PowerSquare,
  PowerCube,
  Vandermonde,
  PSquare,
  Divisors,
};

/// Reporting order; the first criterion to fire is credited with the verdict.
inline constexpr std::array<CriterionId, 11> kCriterionOrder = {
    CriterionId::Geometry,       CriterionId::Kmo,           CriterionId::QuadraticBalance,
    CriterionId::Char4Literal,   CriterionId::QuarticGeneric, CriterionId::OddPrimeOrder,
    CriterionId::PowerSquare,    CriterionId::PowerCube,     CriterionId::Vandermonde,
    CriterionId::PSquare,        CriterionId::Divisors,
};

std::string_view to_string(CriterionId id);
std::optional<CriterionId> criterion_from_string(std::string_view name);

enum class CriterionStatus { RuledOut, Inconclusive, Inapplicable };

std::string_view to_string(CriterionStatus status);

/// Named integer facts backing an outcome, e.g. {"d", 7} or {"qr", 3}.
struct Witness {
  std::vector<std::pair<std::string, std::int64_t>> values;

  bool empty() const { return values.empty(); }
  std::optional<std::int64_t> get(std::string_view key) const;
  Witness& add(std::string key, std::int64_t value);
  /// "key=value;key=value" in insertion order.
  std::string to_string() const;
  bool operator==(const Witness&) const = default;
};

struct CriterionOutcome {
  CriterionId id = CriterionId::Geometry;
  CriterionStatus status = CriterionStatus::Inapplicable;
  Witness witness;

  bool ruled_out() const { return status == CriterionStatus::RuledOut; }
  bool operator==(const CriterionOutcome&) const = default;
};

enum class TilingStatus { Tiles, NoTiling, Unknown };

/// Verdict lookup for smaller dimensions of the same shape; nullopt = missing.
using VerdictOracle = std::function<std::optional<TilingStatus>(u64 n)>;

/// Raised when the divisor recursion reaches a dimension the oracle lacks.
class MissingVerdictError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Geometric volume bound: RuledOut iff n >= 2 and 2k+(k- + 1) - k-^2 > n(k+ + k-).
CriterionOutcome check_geometry(const QuasiCrossShape& shape);

// M = [-(k-1), k]* never splits a group whose order is coprime to k.
CriterionOutcome check_kmo(const QuasiCrossShape& shape);

// Legendre-symbol balance; q prime and n odd force equal QR/QNR counts in M.
CriterionOutcome check_quadratic_balance(const QuasiCrossShape& shape);

// (3,1,n) with 4n+1 prime and n odd: RuledOut iff 6^n != 1 (mod 4n+1).
CriterionOutcome check_char4_literal(const QuasiCrossShape& shape);

// Order-4 character sum over M must vanish when q = 1 (mod 4) is prime and n is odd.
CriterionOutcome check_quartic_generic(const QuasiCrossShape& shape);

// k+ + k- = p an odd prime and q prime: a tiling needs p | n.
CriterionOutcome check_odd_prime_order(const QuasiCrossShape& shape);

// Squares power character on (4k-1, 1, n): RuledOut iff kn = 5, 8 (mod 9).
CriterionOutcome check_power_square(const QuasiCrossShape& shape);

// Cubes power character on (4k+2, 1, n): RuledOut iff n = 3, 7 (mod 8).
CriterionOutcome check_power_cube(const QuasiCrossShape& shape);

/// Power sums: for q prime some sum_{m in M} m^i, 1 <= i <= n, must vanish mod q.
///
/// RuledOut carries {"n": n} (every power sum up to n is non-zero);
/// Inconclusive carries the first vanishing exponent as {"i": i}.
CriterionOutcome check_vandermonde(const QuasiCrossShape& shape);

/// Zero-divisor accounting for p^2 | q with p <= k+ < p^2.
///
/// The multiples of q/p must all be hit by multipliers divisible by p, which
/// forces n * ((k+ mod p) + (k- mod p)) = p - 1. Witness is the prime p.
CriterionOutcome check_psquare(const QuasiCrossShape& shape);

/// Divisor recursion.
///
/// For every divisor 1 < d < q with no prime factor <= k+, a splitting of Z_q
/// restricts to a splitting of Z_{q/d} of dimension n' = (q - d)/((k+ + k-)d).
/// Fires when n' is not an integer (witness {"d"}) or when the oracle reports
/// NoTiling at n' (witness {"d", "n_sub"}). Since d > 1 every reachable n' is
/// strictly below n, so an ascending pass over n can always answer the oracle.
///
/// This single loop covers the non-integrality lemma for d > n, the
/// residue-class theorem on (k+ + k-)n + 1 = ru, the prime-congruence
/// n = -(k+ + k-)^{-1} (mod p) rule, and (through prime-power divisors p^i)
/// upward propagation of non-existence from n to (((k+ + k-)n + 1)p^i - 1)/(k+ + k-).
///
/// Throws MissingVerdictError if the oracle has no entry for a reachable n'.
CriterionOutcome check_divisors(const QuasiCrossShape& shape, const VerdictOracle& oracle);

/// Runs one criterion; the oracle is only consulted by Divisors.
CriterionOutcome check(CriterionId id, const QuasiCrossShape& shape, const VerdictOracle& oracle = {});

/// Every criterion, in kCriterionOrder.
std::vector<CriterionOutcome> check_all(const QuasiCrossShape& shape, const VerdictOracle& oracle);

}  // namespace qx
