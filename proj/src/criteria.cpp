#include "qx/criteria.hpp"

#include <array>

#include "qx/numtheory.hpp"

namespace qx {

namespace {

CriterionOutcome make(CriterionId id, CriterionStatus status, Witness witness = {}) {
  return {id, status, std::move(witness)};
}

CriterionOutcome ruled_out(CriterionId id, Witness witness) {
  return make(id, CriterionStatus::RuledOut, std::move(witness));
}

CriterionOutcome inconclusive(CriterionId id, Witness witness = {}) {
  return make(id, CriterionStatus::Inconclusive, std::move(witness));
}

CriterionOutcome inapplicable(CriterionId id) { return make(id, CriterionStatus::Inapplicable); }

i64 as_signed(u64 v) { return static_cast<i64>(v); }

constexpr std::array<std::string_view, 11> kNames = {
    "geometry",     "kmo",         "quadratic",  "char4_literal", "quartic_generic", "odd_prime_order",
    "power_square", "power_cube", "vandermonde", "psquare",       "divisors",
};

}  // namespace

std::string_view to_string(CriterionId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<CriterionId> criterion_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<CriterionId>(i);
  }
  return std::nullopt;
}

std::string_view to_string(CriterionStatus status) {
  switch (status) {
    case CriterionStatus::RuledOut: return "ruled_out";
    case CriterionStatus::Inconclusive: return "inconclusive";
    case CriterionStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::optional<std::int64_t> Witness::get(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  return std::nullopt;
}

Witness& Witness::add(std::string key, std::int64_t value) {
  values.emplace_back(std::move(key), value);
  return *this;
}

std::string Witness::to_string() const {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ';';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

CriterionOutcome check_geometry(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::Geometry;
  if (s.n < 2) return inapplicable(id);
  const i64 kp = s.k_plus, km = s.k_minus;
  const i64 bound = 2 * kp * (km + 1) - km * km;
  const i64 volume = as_signed(s.n * s.arm_span());
  Witness w;
  w.add("bound", bound).add("n_span", volume);
  return bound > volume ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_kmo(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::Kmo;
  if (s.k_plus < 2 || s.k_minus + 1 != s.k_plus) return inapplicable(id);
  const u64 g = nt::gcd(s.k_plus, s.q());
  Witness w;
  w.add("gcd", as_signed(g));
  return g == 1 ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_quadratic_balance(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::QuadraticBalance;
  const u64 q = s.q();
  if (q < 3 || !nt::is_prime(q)) return inapplicable(id);
  if (s.n % 2 == 0) return inconclusive(id, Witness{}.add("n_parity", 0));
  i64 residues = 0, non_residues = 0;
  for (u64 m : multiplier_set(s).residues) {
    (nt::legendre(as_signed(m), q) == 1 ? residues : non_residues) += 1;
  }
  Witness w;
  w.add("qr", residues).add("qnr", non_residues);
  return residues != non_residues ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_char4_literal(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::Char4Literal;
  const u64 q = s.q();
  if (s.k_plus != 3 || s.k_minus != 1 || s.n % 2 == 0 || !nt::is_prime(q)) return inapplicable(id);
  const u64 t = nt::mod_pow(6, s.n, q);
  Witness w;
  w.add("six_pow_n", as_signed(t));
  return t != 1 ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_quartic_generic(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::QuarticGeneric;
  const u64 q = s.q();
  if (q % 4 != 1 || s.n % 2 == 0 || !nt::is_prime(q)) return inapplicable(id);
  const u64 root = nt::sqrt_minus_one(q);
  std::array<i64, 4> counts{};
  for (u64 m : multiplier_set(s).residues) ++counts[nt::quartic_class(as_signed(m), q, root).index];
  Witness w;
  w.add("c0", counts[0]).add("c1", counts[1]).add("c2", counts[2]).add("c3", counts[3]);
  // sum chi(m) = (c0 - c2) + i(c1 - c3)
  const bool nonzero_sum = counts[0] != counts[2] || counts[1] != counts[3];
  return nonzero_sum ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_odd_prime_order(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::OddPrimeOrder;
  const u64 p = s.arm_span();
  if (p % 2 == 0 || !nt::is_prime(p) || !nt::is_prime(s.q())) return inapplicable(id);
  Witness w;
  w.add("p", as_signed(p)).add("n_mod_p", as_signed(s.n % p));
  return s.n % p != 0 ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_power_square(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::PowerSquare;
  if (s.k_minus != 1 || (s.k_plus + 1) % 4 != 0) return inapplicable(id);
  const u64 k = (s.k_plus + 1) / 4;
  const u64 residue = (k % 9) * (s.n % 9) % 9;
  Witness w;
  w.add("k", as_signed(k)).add("kn_mod_9", as_signed(residue));
  return residue == 5 || residue == 8 ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_power_cube(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::PowerCube;
  if (s.k_minus != 1 || s.k_plus < 6 || (s.k_plus - 2) % 4 != 0) return inapplicable(id);
  const u64 residue = s.n % 8;
  Witness w;
  w.add("k", as_signed((s.k_plus - 2) / 4)).add("n_mod_8", as_signed(residue));
  return residue == 3 || residue == 7 ? ruled_out(id, std::move(w)) : inconclusive(id, std::move(w));
}

CriterionOutcome check_vandermonde(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::Vandermonde;
  const u64 q = s.q();
  if (!nt::is_prime(q) || s.n + 1 >= q) return inapplicable(id);
  const auto residues = multiplier_set(s).residues;
  std::vector<u64> powers(residues.begin(), residues.end());
  for (u64 i = 1; i <= s.n; ++i) {
    u64 sum = 0;
    for (std::size_t j = 0; j < powers.size(); ++j) {
      sum = (sum + powers[j]) % q;
      powers[j] = nt::mul_mod(powers[j], residues[j], q);
    }
    if (sum == 0) return inconclusive(id, Witness{}.add("i", as_signed(i)));
  }
  return ruled_out(id, Witness{}.add("n", as_signed(s.n)));
}

CriterionOutcome check_psquare(const QuasiCrossShape& s) {
  constexpr auto id = CriterionId::PSquare;
  const u64 q = s.q();
  bool applicable = false;
  Witness last;
  for (u64 p = 2; p <= s.k_plus; ++p) {
    if (!nt::is_prime(p) || s.k_plus >= p * p || q % (p * p) != 0) continue;
    applicable = true;
    const u64 exception = s.n * (s.k_plus % p + s.k_minus % p);
    Witness w;
    w.add("p", as_signed(p)).add("n_residue_sum", as_signed(exception));
    if (exception != p - 1) return ruled_out(id, std::move(w));
    last = std::move(w);
  }
  return applicable ? inconclusive(id, std::move(last)) : inapplicable(id);
}

CriterionOutcome check_divisors(const QuasiCrossShape& s, const VerdictOracle& oracle) {
  constexpr auto id = CriterionId::Divisors;
  const u64 q = s.q();
  const u64 span = s.arm_span();
  // Divisors coprime to k+# are exactly the divisors of the part of q built
  // from primes above k+.
  nt::Factorization large_part = nt::factorize(q);
  std::erase_if(large_part.factors, [&](const auto& f) { return f.first <= s.k_plus; });
  for (u64 d : large_part.divisors()) {
    if (d == 1 || d == q) continue;
    if ((q - d) % (span * d) != 0) return ruled_out(id, Witness{}.add("d", as_signed(d)));
    const u64 sub = (q - d) / (span * d);
    const auto verdict = oracle ? oracle(sub) : std::nullopt;
    if (!verdict) {
      throw MissingVerdictError("divisor recursion for n=" + std::to_string(s.n) + " needs a verdict at n=" +
                                std::to_string(sub));
    }
    if (*verdict == TilingStatus::NoTiling) {
      return ruled_out(id, Witness{}.add("d", as_signed(d)).add("n_sub", as_signed(sub)));
    }
  }
  return inconclusive(id);
}

CriterionOutcome check(CriterionId id, const QuasiCrossShape& shape, const VerdictOracle& oracle) {
  switch (id) {
    case CriterionId::Geometry: return check_geometry(shape);
    case CriterionId::Kmo: return check_kmo(shape);
    case CriterionId::QuadraticBalance: return check_quadratic_balance(shape);
    case CriterionId::Char4Literal: return check_char4_literal(shape);
    case CriterionId::QuarticGeneric: return check_quartic_generic(shape);
    case CriterionId::OddPrimeOrder: return check_odd_prime_order(shape);
    case CriterionId::PowerSquare: return check_power_square(shape);
    case CriterionId::PowerCube: return check_power_cube(shape);
    case CriterionId::Vandermonde: return check_vandermonde(shape);
    case CriterionId::PSquare: return check_psquare(shape);
    case CriterionId::Divisors: return check_divisors(shape, oracle);
  }
  throw std::invalid_argument("unknown criterion");
}

std::vector<CriterionOutcome> check_all(const QuasiCrossShape& shape, const VerdictOracle& oracle) {
  std::vector<CriterionOutcome> out;
  out.reserve(kCriterionOrder.size());
  for (CriterionId id : kCriterionOrder) out.push_back(check(id, shape, oracle));
  return out;
}

}  // namespace qx
