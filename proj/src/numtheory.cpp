#include "qx/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace qx::nt {

namespace {

using u128 = unsigned __int128;

constexpr u64 kTrialDivisionLimit = 1'000'000;

// Pollard-Brent; m is odd composite.
u64 rho_factor(u64 m) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, saved = 1, product = 1;
    u64 r = 1;
    auto step = [&](u64 v) { return (mul_mod(v, v, m) + c) % m; };
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += 128) {
        saved = y;
        for (u64 i = 0; i < std::min<u64>(128, r - k); ++i) {
          y = step(y);
          product = mul_mod(product, x > y ? x - y : y - x, m);
        }
        g = gcd(product, m);
      }
      r *= 2;
    }
    if (g == m) {
      do {
        saved = step(saved);
        g = gcd(x > saved ? x - saved : saved - x, m);
      } while (g == 1);
    }
    if (g != m) return g;
  }
}

void split_into(u64 m, std::map<u64, unsigned>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    ++out[m];
    return;
  }
  const u64 d = rho_factor(m);
  split_into(d, out);
  split_into(m / d, out);
}

}  // namespace

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // -(a + 1) avoids overflow at INT64_MIN.
  const u64 r = static_cast<u64>(-(a + 1)) % m;
  return m - 1 - r;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::optional<u64> mod_inv(i64 a, u64 m) {
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = reduce(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quotient = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quotient * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quotient * s);
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

bool is_prime(u64 m) {
  if (m < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (m % p == 0) return m == p;
  }
  u64 d = m - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a witness set for all m < 3.3e24.
  for (u64 a : kBases) {
    u64 x = mod_pow(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 m) {
  if (m == 0) throw std::invalid_argument("factorize: argument must be positive");
  Factorization f;
  f.value = m;
  std::map<u64, unsigned> found;
  u64 rest = m;
  for (u64 p = 2; p <= kTrialDivisionLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++found[p];
      rest /= p;
    }
  }
  split_into(rest, found);
  f.factors.assign(found.begin(), found.end());
  return f;
}

std::vector<u64> Factorization::divisors() const {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int legendre(i64 a, u64 p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: modulus " + std::to_string(p) + " is not an odd prime");
  }
  const u64 t = mod_pow(reduce(a, p), (p - 1) / 2, p);
  if (t == 0) return 0;
  return t == 1 ? 1 : -1;
}

u64 sqrt_minus_one(u64 q) {
  if (q % 4 != 1 || !is_prime(q)) {
    throw std::invalid_argument("sqrt_minus_one: " + std::to_string(q) + " is not a prime = 1 (mod 4)");
  }
  const u64 exponent = (q - 1) / 4;
  for (u64 a = 2;; ++a) {
    const u64 t = mod_pow(a, exponent, q);
    if (t != 1 && t != q - 1) return std::min(t, q - t);
  }
}

QuarticClass quartic_class(i64 a, u64 q) { return quartic_class(a, q, sqrt_minus_one(q)); }

QuarticClass quartic_class(i64 a, u64 q, u64 root) {
  if (q % 4 != 1) {
    throw std::invalid_argument("quartic_class: modulus " + std::to_string(q) + " is not 1 (mod 4)");
  }
  const u64 residue = reduce(a, q);
  if (gcd(residue, q) != 1) {
    throw std::invalid_argument("quartic_class: argument shares a factor with " + std::to_string(q));
  }
  const u64 t = mod_pow(residue, (q - 1) / 4, q);
  if (t == 1) return {0};
  if (t == q - 1) return {2};
  if (t == root) return {1};
  if (t == q - root) return {3};
  throw std::invalid_argument("quartic_class: " + std::to_string(q) + " is not prime");
}

u64 primorial(u64 m) {
  u64 result = 1;
  for (u64 p = 2; p <= m; ++p) {
    if (!is_prime(p)) continue;
    if (result > std::numeric_limits<u64>::max() / p) {
      throw std::overflow_error("primorial(" + std::to_string(m) + ") exceeds 64 bits");
    }
    result *= p;
  }
  return result;
}

}  // namespace qx::nt
