#include "qx/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qx/numtheory.hpp"

namespace qx {

namespace {

using i128 = __int128;

struct ExtendedGcd {
  i128 g, x, y;
};

// g = x*a + y*b with g = gcd(a, b) >= 0.
ExtendedGcd extended_gcd(i128 a, i128 b) {
  i128 old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const i128 quotient = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quotient * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - quotient * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - quotient * y);
  }
  return {old_r, old_x, old_y};
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

u64 mod128(i128 a, u64 m) {
  i128 r = a % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

}  // namespace

QuasiCrossShape make_shape(unsigned k_plus, unsigned k_minus, u64 n) {
  if (k_minus < 1) throw std::invalid_argument("k_minus must be at least 1");
  if (k_minus > k_plus) throw std::invalid_argument("k_minus must not exceed k_plus");
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
  return {k_plus, k_minus, n};
}

MultiplierSet interval_multipliers(unsigned k_plus, unsigned k_minus, u64 q) {
  if (q <= u64{k_plus} + k_minus) {
    throw std::invalid_argument("group order " + std::to_string(q) +
                                " too small for the multiplier interval");
  }
  MultiplierSet set;
  set.q = q;
  set.k_plus = k_plus;
  set.k_minus = k_minus;
  set.residues.reserve(u64{k_plus} + k_minus);
  for (unsigned m = k_minus; m >= 1; --m) set.residues.push_back(q - m);
  for (unsigned m = 1; m <= k_plus; ++m) set.residues.push_back(m);
  return set;
}

MultiplierSet multiplier_set(const QuasiCrossShape& shape) {
  return interval_multipliers(shape.k_plus, shape.k_minus, shape.q());
}

MultiplierSet custom_multipliers(u64 q, std::vector<u64> residues) {
  std::vector<u64> sorted;
  for (u64& r : residues) {
    r %= q;
    if (r == 0) throw std::invalid_argument("multiplier residues must be non-zero");
    sorted.push_back(r);
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("multiplier residues must be distinct");
  }
  MultiplierSet set;
  set.q = q;
  set.residues = std::move(residues);
  return set;
}

Splitting make_splitting(const MultiplierSet& multipliers, std::vector<u64> splitters) {
  std::sort(splitters.begin(), splitters.end());
  return {multipliers.q, multipliers, std::move(splitters)};
}

Verification verify_splitting(const Splitting& candidate) {
  const u64 q = candidate.q;
  if (q < 2) throw StructuralError("group order must be at least 2");
  if (candidate.multipliers.q != q) {
    throw StructuralError("multiplier set was reduced modulo " +
                          std::to_string(candidate.multipliers.q) + ", not " + std::to_string(q));
  }
  std::vector<bool> seen_splitter(q, false);
  for (u64 s : candidate.splitters) {
    if (s < 1 || s >= q) {
      throw StructuralError("splitter " + std::to_string(s) + " outside [1, " +
                            std::to_string(q - 1) + "]");
    }
    if (seen_splitter[s]) throw StructuralError("duplicate splitter " + std::to_string(s));
    seen_splitter[s] = true;
  }

  Verification result;
  std::vector<bool> covered(q, false);
  for (u64 s : candidate.splitters) {
    for (u64 m : candidate.multipliers.residues) {
      const u64 product = nt::mul_mod(m, s, q);
      if (product == 0) {
        result.zero_product = s;
        result.diagnostic = "product " + std::to_string(m) + "*" + std::to_string(s) +
                            " vanishes modulo " + std::to_string(q);
        return result;
      }
      if (covered[product]) {
        result.collision = product;
        result.diagnostic = "collision at " + std::to_string(product) + " (splitter " +
                            std::to_string(s) + ", multiplier " + std::to_string(m) + ")";
        return result;
      }
      covered[product] = true;
    }
  }
  for (u64 e = 1; e < q; ++e) {
    if (!covered[e]) {
      result.missed = e;
      result.diagnostic = "residue " + std::to_string(e) + " not covered";
      return result;
    }
  }
  result.ok = true;
  return result;
}

LatticeBasis kernel_basis(u64 q, std::span<const u64> splitters) {
  if (q < 1) throw std::invalid_argument("kernel_basis: q must be positive");
  const std::size_t n = splitters.size();
  LatticeBasis basis;
  basis.rows.assign(n, std::vector<i64>(n, 0));

  // coef . (s_0..s_{i-1}) = g (mod q), g = gcd(q, s_0, ..., s_{i-1}).
  std::vector<i128> coef;
  u64 g = q;
  for (std::size_t i = 0; i < n; ++i) {
    const u64 s = splitters[i] % q;
    const auto eg = extended_gcd(static_cast<i128>(g), static_cast<i128>(s));
    const u64 next_g = static_cast<u64>(eg.g);
    const u64 diagonal = g / next_g;

    // Row i: diagonal * e_i plus a combination of earlier coordinates that
    // cancels diagonal * s_i, which is a multiple of g.
    std::vector<i128> row(n, 0);
    row[i] = diagonal;
    const i128 target = -static_cast<i128>(diagonal) * s;  // = -(s/next_g) * g
    const i128 multiple = target / static_cast<i128>(g);
    for (std::size_t j = 0; j < i; ++j) row[j] = mod128(coef[j] * multiple, q);
    for (std::size_t j = i; j-- > 0;) {
      const i128 d = basis.rows[j][j];
      const i128 factor = floor_div(row[j], d);
      if (factor == 0) continue;
      for (std::size_t k = 0; k <= j; ++k) row[k] -= factor * basis.rows[j][k];
    }
    for (std::size_t k = 0; k < n; ++k) basis.rows[i][k] = static_cast<i64>(row[k]);

    for (auto& c : coef) c = mod128(c * eg.x, q);
    coef.push_back(mod128(eg.y, q));
    g = next_g;
  }
  return basis;
}

LatticeBasis lattice_basis(const Splitting& splitting) {
  if (!verify_splitting(splitting)) {
    throw std::invalid_argument("lattice_basis: splitting does not verify");
  }
  return kernel_basis(splitting.q, splitting.splitters);
}

u64 evaluate_phi(u64 q, std::span<const u64> splitters, std::span<const i64> row) {
  i128 total = 0;
  for (std::size_t i = 0; i < row.size() && i < splitters.size(); ++i) {
    total = (total + static_cast<i128>(row[i]) * static_cast<i128>(splitters[i] % q)) % q;
  }
  return mod128(total, q);
}

}  // namespace qx
