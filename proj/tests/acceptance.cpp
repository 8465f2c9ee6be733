// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qx/classify.hpp"
#include "qx/criteria.hpp"
#include "qx/numtheory.hpp"
#include "qx/search.hpp"
#include "qx/splitting.hpp"

using namespace qx;
namespace fs = std::filesystem;

namespace {

constexpr u64 kMaxN = 250;

const std::vector<u64> kList3mod6{3,  9,   15,  27,  39,  45,  57,  69,  87,  93,  99,
                                  105, 135, 153, 165, 177, 183, 189, 207, 213, 219, 249};
const std::vector<u64> kListChar4{3,   7,   9,   13,  15,  25,  27,  39,  45,  49,  57,  67,  69,  73,  79,  87,  93,
                                  99,  105, 127, 135, 153, 165, 175, 177, 183, 189, 193, 205, 207, 213, 219, 249};
const std::vector<u64> kUnknown31{22, 24, 60, 111, 114, 121, 144, 220, 234, 235};
const std::vector<u64> kUnknown32{13, 37, 49, 73, 85, 121, 145, 157, 181, 217, 229};

std::string list(const std::vector<u64>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

bool fires(CriterionId id, unsigned kp, unsigned km, u64 n) {
  return check(id, make_shape(kp, km, n)).ruled_out();
}

std::vector<u64> unknowns(const std::vector<Verdict>& verdicts) {
  std::vector<u64> out;
  for (const auto& v : verdicts) {
    if (v.status == TilingStatus::Unknown) out.push_back(v.n);
  }
  return out;
}

Registry registry(const char* name) { return load_registry(fs::path(QX_DATA_DIR) / name); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ac1() {
  std::vector<u64> derived;
  for (u64 n = 1; n <= kMaxN; ++n) {
    if (n % 6 == 3 && oracle::prime_by_trial_division(4 * n + 1)) derived.push_back(n);
  }
  if (derived != kList3mod6) return {false, "derived set " + list(derived)};
  for (u64 n : derived) {
    if (!fires(CriterionId::QuadraticBalance, 3, 1, n)) return {false, "quadratic did not fire at n=" + std::to_string(n)};
  }
  return {true, std::to_string(derived.size()) + " dimensions"};
}

Outcome ac2() {
  std::vector<u64> derived, fired;
  for (u64 n = 1; n <= kMaxN; ++n) {
    const u64 q = 4 * n + 1;
    if (n % 2 == 1 && oracle::prime_by_trial_division(q) && oracle::slow_pow(6, n, q) != 1) derived.push_back(n);
    if (fires(CriterionId::Char4Literal, 3, 1, n)) fired.push_back(n);
  }
  if (derived != kListChar4) return {false, "derived set " + list(derived)};
  if (fired != kListChar4) return {false, "criterion fired on " + list(fired)};
  return {true, std::to_string(fired.size()) + " dimensions"};
}

Outcome ac3() {
  u64 count = 0, unresolved = 0;
  for (u64 n = 1; n <= kMaxN; ++n) {
    if (!fires(CriterionId::Vandermonde, 3, 1, n)) continue;
    ++count;
    bool other = false;
    for (CriterionId id : kCriterionOrder) {
      if (id == CriterionId::Vandermonde || id == CriterionId::Divisors) continue;
      other = other || fires(id, 3, 1, n);
    }
    if (!other) ++unresolved;
  }
  const std::string detail =
      "fires at " + std::to_string(count) + " dimensions, " + std::to_string(unresolved) + " not ruled out otherwise";
  return {count == 59, detail};
}

Outcome ac4() {
  const auto verdicts = classify_range(3, 1, kMaxN, registry("registry_3_1.json"), {});
  const auto got = unknowns(verdicts);
  return {got == kUnknown31, "Unknown = " + list(got)};
}

Outcome ac5() {
  const auto verdicts = classify_range(3, 2, kMaxN, registry("registry_3_2.json"), {});
  const auto got = unknowns(verdicts);
  return {got == kUnknown32, "Unknown = " + list(got)};
}

Outcome ac6() {
  const auto v31 = classify_range(3, 1, kMaxN, registry("registry_3_1.json"), {});
  for (const auto& v : v31) {
    if (v.n % 3 == 2 && v.status != TilingStatus::NoTiling) return {false, "(3,1) n=" + std::to_string(v.n)};
  }
  const auto v32 = classify_range(3, 2, kMaxN, registry("registry_3_2.json"), {});
  u64 survivors = 0;
  for (const auto& v : v32) {
    if (v.n < 2 || v.status == TilingStatus::NoTiling) continue;
    ++survivors;
    if (v.n % 36 != 1 && v.n % 36 != 13) return {false, "(3,2) survivor n=" + std::to_string(v.n)};
  }
  return {true, std::to_string(survivors) + " (3,2) survivors, all 1 or 13 mod 36"};
}

Outcome ac7() {
  std::ostringstream detail;
  for (auto [kp, km, n_max] : {std::tuple{3u, 1u, u64{8}}, std::tuple{3u, 2u, u64{6}}}) {
    const auto verdicts = classify_range(kp, km, n_max, std::nullopt, {});
    for (const auto& v : verdicts) {
      const auto m = interval_multipliers(kp, km, v.q);
      const auto counted = count_splittings(v.q, m, SearchBudget{2'000'000'000, std::chrono::seconds(60)});
      if (!counted.complete) return {false, "count incomplete at q=" + std::to_string(v.q)};
      const u64 by_subsets = oracle::count_splittings_by_subsets(v.q, oracle::interval_residues(kp, km, v.q));
      if (counted.count != by_subsets) return {false, "count disagrees with subset oracle at q=" + std::to_string(v.q)};
      if (v.status == TilingStatus::NoTiling && counted.count != 0)
        return {false, "splitting exists at ruled-out q=" + std::to_string(v.q)};
      const bool must_tile = v.n == 1 || (kp == 3 && km == 1 && v.n == 6);
      if (must_tile && counted.count == 0) return {false, "no splitting at q=" + std::to_string(v.q)};
      detail << "(" << kp << "," << km << "," << v.n << ")=" << counted.count << ' ';
    }
  }
  return {true, detail.str()};
}

Outcome ac8() {
  const Splitting s = make_splitting(interval_multipliers(3, 1, 25), {1, 5, 6, 11, 16, 21});
  if (!verify_splitting(s).ok) return {false, "does not verify"};
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("qx_acceptance_" + std::to_string(rd()));
  fs::create_directories(dir);
  const fs::path store = dir / "certs.jsonl";
  store_certificate(store, s);
  const auto reloaded = load_certificates(store);
  fs::remove_all(dir);
  if (reloaded.size() != 1 || !(reloaded[0] == s)) return {false, "reload mismatch"};
  const auto basis = lattice_basis(reloaded[0]);
  for (const auto& row : basis.rows) {
    if (evaluate_phi(25, s.splitters, row) != 0) return {false, "basis row outside the kernel"};
  }
  __int128 det = oracle::determinant(basis.rows);
  if (det < 0) det = -det;
  return {det == 25, "|det| = " + std::to_string(static_cast<long long>(det))};
}

Outcome ac9() {
  u64 primes = 0;
  for (u64 p = 3; p <= 10'000; p += 2) {
    if (!oracle::prime_by_trial_division(p)) continue;
    ++primes;
    auto row = [&](nt::i64 a, bool expected) {
      if (p % static_cast<u64>(a < 0 ? -a : a) == 0) return true;
      return (nt::legendre(a, p) == 1) == expected;
    };
    const bool ok = row(-1, p % 4 == 1) && row(2, p % 8 == 1 || p % 8 == 7) && row(3, p % 12 == 1 || p % 12 == 11) &&
                    row(5, p % 10 == 1 || p % 10 == 9);
    if (!ok) return {false, "quadratic row fails at p=" + std::to_string(p)};
  }
  u64 moduli = 0;
  for (u64 q = 5; q <= 1000; q += 4) {
    if (!oracle::prime_by_trial_division(q)) continue;
    ++moduli;
    const u64 root = nt::sqrt_minus_one(q);
    std::vector<unsigned> cls(q);
    for (u64 a = 1; a < q; ++a) cls[a] = nt::quartic_class(static_cast<nt::i64>(a), q, root).index;
    for (u64 a = 1; a < q; ++a) {
      for (u64 b = 1; b < q; ++b) {
        if (cls[a * b % q] != (cls[a] + cls[b]) % 4) return {false, "quartic class not multiplicative mod " + std::to_string(q)};
      }
    }
  }
  return {true, std::to_string(primes) + " primes, " + std::to_string(moduli) + " quartic moduli"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 quadratic balance list for (3,1)", ac1},
      {"AC2 quartic character list for (3,1)", ac2},
      {"AC3 Vandermonde count for (3,1)", ac3},
      {"AC4 (3,1) unresolved dimensions", ac4},
      {"AC5 (3,2) unresolved dimensions", ac5},
      {"AC6 residue-class corollaries", ac6},
      {"AC7 exhaustive counts agree with verdicts", ac7},
      {"AC8 q=25 certificate round trip", ac8},
      {"AC9 number-theory substrate", ac9},
  };
  int failures = 0;
  for (const auto& [name, body] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = body();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (result.pass ? "PASS " : "FAIL ") << name << " (" << ms << " ms): " << result.detail << '\n';
    if (!result.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
