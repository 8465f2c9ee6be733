#pragma once

// Modular and multiplicative number theory over 64-bit integers.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qx::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Prime factorization of a positive integer; factors sorted by prime.
struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, unsigned>> factors;

  /// All positive divisors, ascending.
  std::vector<u64> divisors() const;
  bool operator==(const Factorization&) const = default;
};

/// Index into {1, i, -1, -i} under the canonical order-4 character.
struct QuarticClass {
  unsigned index = 0;
  bool operator==(const QuarticClass&) const = default;
};

u64 gcd(u64 a, u64 b);

/// Least non-negative residue of a modulo m (m >= 1).
u64 reduce(i64 a, u64 m);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 mod_pow(u64 a, u64 e, u64 m);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<u64> mod_inv(i64 a, u64 m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 m);

Factorization factorize(u64 m);

/// Legendre symbol (a/p). Throws std::invalid_argument unless p is an odd prime.
int legendre(i64 a, u64 p);

/// The smaller of the two square roots of -1 modulo a prime q = 1 (mod 4).
u64 sqrt_minus_one(u64 q);

/// Class of a under the order-4 character of Z_q^*, q prime and q = 1 (mod 4).
///
/// t = a^((q-1)/4) is a fourth root of unity; t = 1, r, -1, -r map to classes
/// 0, 1, 2, 3 where r = sqrt_minus_one(q). Throws std::invalid_argument when
/// q is not such a prime or a is not a unit.
QuarticClass quartic_class(i64 a, u64 q);

/// Same as quartic_class but with the canonical root already known.
QuarticClass quartic_class(i64 a, u64 q, u64 root);

/// Product of all primes <= m. Throws std::overflow_error past 64 bits.
u64 primorial(u64 m);

}  // namespace qx::nt
