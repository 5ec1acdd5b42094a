#ifndef REXLAB_FIELD_HPP
#define REXLAB_FIELD_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rexlab {

/// Exact arithmetic in GF(p^m), 1 <= m <= 4, p^m <= 10^6.
///
/// Elements are encoded as indices in {0, ..., q-1}: the element with
/// polynomial-basis coefficients (c_0, ..., c_{m-1}) has index
/// sum c_i * p^i.  The modulus polynomial is the lexicographically least
/// monic irreducible of degree m over GF(p); the generator is the least
/// element (in index order) of full multiplicative order q-1, certified
/// by checking g^((q-1)/r) != 1 for every prime r | q-1.
///
/// Immutable after construction; all member functions are const and
/// safe to call concurrently.
class FiniteField {
 public:
  FiniteField(std::int64_t p, int m);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  std::int64_t q() const { return q_; }
  std::int64_t generator() const { return generator_; }

  /// Modulus polynomial coefficients c_0..c_m (c_m = 1).  For m = 1 this
  /// is the placeholder X.
  const std::vector<std::int64_t>& modulus_poly() const { return modulus_; }

  std::vector<std::int64_t> coeffs(std::int64_t a) const;
  std::int64_t from_coeffs(const std::vector<std::int64_t>& c) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  std::int64_t inv(std::int64_t a) const;

  /// Discrete log base the fixed generator; a must be nonzero.
  std::int64_t dlog(std::int64_t a) const;
  /// generator^k, k taken mod q-1.
  std::int64_t gen_pow(std::int64_t k) const;

  /// Trace down to the prime field, as an integer in {0,...,p-1}.
  std::int64_t trace(std::int64_t a) const;

  /// Norm onto the subfield of order q0 = p^(m/s_sub), computed as
  /// a^((q-1)/(q0-1)).  s_sub must divide m.
  std::int64_t norm(int s_sub, std::int64_t a) const;

  /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  /// Requires odd q.
  int quad_char(std::int64_t a) const;

  /// Additive character chi_b(x) = exp(2*pi*i * trace(b*x) / p).
  std::complex<double> additive_char(std::int64_t b, std::int64_t x) const;

  /// Sum of chi_b over the multiplicative subgroup generated by
  /// generator^h; h must divide q-1.
  std::complex<double> subgroup_char_sum(std::int64_t h, std::int64_t b) const;

  /// Gauss sum  sum_{x in F*} theta^j(x) chi_b(x)  with
  /// theta(generator^k) = exp(2*pi*i*k/(q-1)).
  std::complex<double> gauss_sum(std::int64_t j, std::int64_t b) const;

 private:
  std::int64_t p_;
  int m_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;  // c_0..c_m, monic
  std::int64_t generator_;
  std::vector<std::int64_t> exp_;   // exp_[k] = generator^k, k in [0, q-1)
  std::vector<std::int64_t> dlog_;  // dlog_[x] for x != 0

  std::int64_t mul_slow(std::int64_t a, std::int64_t b) const;
  std::int64_t pow_slow(std::int64_t a, std::int64_t e) const;
};

/// Factory with input validation (the spec-facing constructor).
FiniteField gf(std::int64_t p, int m);

}  // namespace rexlab

#endif
