#ifndef REXLAB_NUMTHEORY_HPP
#define REXLAB_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rexlab/field.hpp"

namespace rexlab {

/// A subset of Z_modulus with a certified bound on the number of ordered
/// pairs (a, b) representing any fixed nonzero difference.  t_bound = 1
/// is the Sidon property.
struct DifferenceSet {
  std::vector<std::int64_t> elements;  // sorted, distinct, in [0, modulus)
  std::int64_t modulus = 0;
  int t_bound = 0;
};

/// n written as a sum of s-th powers of primes, largest first.
struct PrimePowerDecomposition {
  std::int64_t n = 0;
  int s = 0;
  std::vector<std::int64_t> primes;  // descending
  std::int64_t spread() const {
    return primes.empty() ? 0 : primes.front() - primes.back();
  }
};

bool is_prime(std::int64_t n);

/// All primes <= limit, ascending.  limit <= 10^8.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Largest prime in [lo, hi], optionally restricted to p == r (mod mod)
/// with gcd(r, mod) = 1.
std::optional<std::int64_t> prime_in_interval(
    std::int64_t lo, std::int64_t hi,
    std::optional<std::pair<std::int64_t, std::int64_t>> residue = std::nullopt);

/// Exhaustive difference-table count: max over nonzero alpha of the number
/// of ordered pairs (a, b) with a - b == alpha (mod modulus).
int max_difference_count(const std::vector<std::int64_t>& elements,
                         std::int64_t modulus);

/// Bose-Chowla Sidon set {a in Z_{p^2-1} : theta^a - theta in GF(p)} using
/// the field's fixed generator theta.  |elements| = p, t_bound = 1,
/// certified exhaustively.
DifferenceSet bose_chowla(std::int64_t p, const FiniteField& F);
DifferenceSet bose_chowla(std::int64_t p);

/// Bose-Chowla elements reduced mod (p^2-1)/t; t must divide p-1.
/// |elements| = p, t_bound = t, certified exhaustively.
DifferenceSet quotient_set(std::int64_t p, int t, const FiniteField& F);
DifferenceSet quotient_set(std::int64_t p, int t);

/// Bounded backtracking search for n = sum of s-th powers of primes with
/// at most max_parts parts, minimizing the part count; with balance set,
/// ties among minimal part counts prefer minimal spread, then the
/// lexicographically largest prime list.  min_prime restricts the primes
/// used (pipelines needing odd characteristic pass 3).
std::optional<PrimePowerDecomposition> prime_power_decompose(
    std::int64_t n, int s, int max_parts, bool balance = false,
    std::int64_t min_prime = 2, std::int64_t max_prime = -1);

}  // namespace rexlab

#endif
