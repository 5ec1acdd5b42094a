#include "rexlab/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rexlab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  if (limit > 100000000) throw std::invalid_argument("sieve limit exceeds 10^8");
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      out.push_back(i);
      for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return out;
}

std::optional<std::int64_t> prime_in_interval(
    std::int64_t lo, std::int64_t hi,
    std::optional<std::pair<std::int64_t, std::int64_t>> residue) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (residue) {
    auto [r, mod] = *residue;
    if (mod < 1 || std::gcd(((r % mod) + mod) % mod, mod) != 1)
      throw std::invalid_argument("residue not coprime to modulus");
  }
  for (std::int64_t p = hi; p >= lo && p >= 2; --p) {
    if (residue) {
      auto [r, mod] = *residue;
      if (((p - r) % mod + mod) % mod != 0) continue;
    }
    if (is_prime(p)) return p;
  }
  return std::nullopt;
}

int max_difference_count(const std::vector<std::int64_t>& elements,
                         std::int64_t modulus) {
  std::vector<int> count(static_cast<std::size_t>(modulus), 0);
  for (auto a : elements)
    for (auto b : elements) {
      if (a == b) continue;
      count[((a - b) % modulus + modulus) % modulus]++;
    }
  int mx = 0;
  for (std::int64_t alpha = 1; alpha < modulus; ++alpha) mx = std::max(mx, count[alpha]);
  return mx;
}

DifferenceSet bose_chowla(std::int64_t p, const FiniteField& F) {
  if (F.p() != p || F.m() != 2) throw std::invalid_argument("field must be GF(p^2)");
  const std::int64_t mod = p * p - 1;
  const std::int64_t theta = F.generator();
  DifferenceSet out;
  out.modulus = mod;
  std::int64_t x = 1;  // theta^0
  for (std::int64_t a = 0; a < mod; ++a) {
    // theta^a - theta lies in the prime subfield iff its index is < p
    if (F.sub(x, theta) < p) out.elements.push_back(a);
    x = F.mul(x, theta);
  }
  std::sort(out.elements.begin(), out.elements.end());
  if (static_cast<std::int64_t>(out.elements.size()) != p)
    throw std::runtime_error("Bose-Chowla set has wrong size");
  if (max_difference_count(out.elements, mod) != 1)
    throw std::runtime_error("Bose-Chowla certification failed");
  out.t_bound = 1;
  return out;
}

DifferenceSet bose_chowla(std::int64_t p) { return bose_chowla(p, gf(p, 2)); }

DifferenceSet quotient_set(std::int64_t p, int t, const FiniteField& F) {
  if (t < 1 || (p - 1) % t != 0) throw std::invalid_argument("t must divide p-1");
  auto base = bose_chowla(p, F);
  const std::int64_t mod = (p * p - 1) / t;
  DifferenceSet out;
  out.modulus = mod;
  for (auto a : base.elements) out.elements.push_back(a % mod);
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  if (static_cast<std::int64_t>(out.elements.size()) != p)
    throw std::runtime_error("quotient set lost elements");
  int bound = max_difference_count(out.elements, mod);
  if (bound > t) throw std::runtime_error("quotient set certification failed");
  out.t_bound = t;
  return out;
}

DifferenceSet quotient_set(std::int64_t p, int t) { return quotient_set(p, t, gf(p, 2)); }

namespace {

// Descending backtracking over prime s-th powers.
bool decompose_rec(std::int64_t rem, int parts_left, std::int64_t max_prime,
                   const std::vector<std::int64_t>& primes, int s,
                   std::vector<std::int64_t>& acc,
                   std::vector<std::vector<std::int64_t>>& found, bool all) {
  if (rem == 0) {
    if (acc.empty()) return false;
    found.push_back(acc);
    return !all;
  }
  if (parts_left == 0) return false;
  for (auto it = std::upper_bound(primes.begin(), primes.end(), max_prime);
       it != primes.begin();) {
    --it;
    std::int64_t pw = 1;
    for (int i = 0; i < s; ++i) pw *= *it;
    if (pw > rem) continue;
    // remaining parts must be able to cover the rest with powers <= pw
    if (pw * parts_left < rem) break;
    acc.push_back(*it);
    if (decompose_rec(rem - pw, parts_left - 1, *it, primes, s, acc, found, all))
      return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PrimePowerDecomposition> prime_power_decompose(
    std::int64_t n, int s, int max_parts, bool balance, std::int64_t min_prime,
    std::int64_t max_prime) {
  if (s < 2) throw std::invalid_argument("s must be >= 2");
  if (max_parts > 20) throw std::invalid_argument("max_parts capped at 20");
  std::int64_t root = static_cast<std::int64_t>(std::llround(std::pow(double(n), 1.0 / s)));
  while (root > 1) {
    std::int64_t pw = 1;
    bool over = false;
    for (int i = 0; i < s; ++i) {
      pw *= root;
      if (pw > n) { over = true; break; }
    }
    if (!over && pw <= n) break;
    --root;
  }
  std::vector<std::int64_t> primes;
  for (auto p : primes_up_to(std::max<std::int64_t>(root + 1, 2)))
    if (p >= min_prime && (max_prime < 0 || p <= max_prime) && [&] {
          std::int64_t pw = 1;
          for (int i = 0; i < s; ++i) pw *= p;
          return pw <= n;
        }())
      primes.push_back(p);
  if (primes.empty()) return std::nullopt;

  for (int parts = 1; parts <= max_parts; ++parts) {
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> acc;
    decompose_rec(n, parts, primes.back(), primes, s, acc, found, balance);
    if (found.empty()) continue;
    // keep only exact part counts (shorter ones were found at earlier levels)
    std::vector<std::vector<std::int64_t>> exact;
    for (auto& f : found)
      if (static_cast<int>(f.size()) == parts) exact.push_back(f);
    if (exact.empty()) continue;
    auto best = exact.front();
    if (balance) {
      for (auto& f : exact) {
        std::int64_t sf = f.front() - f.back();
        std::int64_t sb = best.front() - best.back();
        if (sf < sb || (sf == sb && f > best)) best = f;
      }
    }
    PrimePowerDecomposition out;
    out.n = n;
    out.s = s;
    out.primes = best;
    return out;
  }
  return std::nullopt;
}

}  // namespace rexlab
