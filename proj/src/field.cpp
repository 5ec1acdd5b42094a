#include "rexlab/field.hpp"

#include <cmath>
#include <numbers>

namespace rexlab {
namespace {

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Remainder of poly division a / b over GF(p); b monic.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    std::int64_t c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p * p) % p;
    }
  }
  a.resize(db);
  for (auto& c : a) c %= p;
  return a;
}

bool divides_poly(const std::vector<std::int64_t>& divisor,
                  const std::vector<std::int64_t>& poly, std::int64_t p) {
  auto r = poly_mod(poly, divisor, p);
  for (auto c : r)
    if (c % p != 0) return false;
  return true;
}

// Irreducibility over GF(p) for degree <= 4: rule out linear factors by
// evaluation, and (degree 4 only) monic quadratic factors by trial division.
bool is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0, xp = 1;
    for (int i = 0; i <= deg; ++i) {
      v = (v + f[i] * xp) % p;
      xp = (xp * x) % p;
    }
    if (v == 0) return false;
  }
  if (deg >= 4) {
    for (std::int64_t c1 = 0; c1 < p; ++c1)
      for (std::int64_t c0 = 0; c0 < p; ++c0)
        if (divides_poly({c0, c1, 1}, f, p)) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int m) : p_(p), m_(m) {
  if (m < 1 || m > 4) throw std::invalid_argument("extension degree must be in [1,4]");
  if (!is_prime_small(p)) throw std::invalid_argument("p is not prime");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > 1000000) throw std::invalid_argument("field order exceeds 10^6");
  }

  if (m == 1) {
    modulus_ = {0, 1};  // placeholder X
  } else {
    // Lexicographically least monic irreducible of degree m, comparing
    // coefficient tuples (c_0, ..., c_{m-1}).
    bool found = false;
    for (std::int64_t idx = 0; idx < q_ && !found; ++idx) {
      // most significant digit of idx -> c_0, so ascending idx is
      // lexicographic order on (c_0, ..., c_{m-1})
      std::vector<std::int64_t> f(m + 1, 0);
      f[m] = 1;
      std::int64_t v = idx;
      for (int i = m - 1; i >= 0; --i) {
        f[i] = v % p;
        v /= p;
      }
      if (is_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("no irreducible modulus found");
  }

  // Least generator in index order.
  auto factors = prime_factors(q_ - 1);
  generator_ = -1;
  for (std::int64_t g = q_ == 2 ? 1 : 2; g < q_; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (pow_slow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (generator_ < 0) throw std::runtime_error("no generator found");

  exp_.assign(q_ - 1, 0);
  dlog_.assign(q_, -1);
  std::int64_t x = 1;
  for (std::int64_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    dlog_[x] = k;
    x = mul_slow(x, generator_);
  }
}

std::vector<std::int64_t> FiniteField::coeffs(std::int64_t a) const {
  std::vector<std::int64_t> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::int64_t FiniteField::from_coeffs(const std::vector<std::int64_t>& c) const {
  std::int64_t a = 0;
  for (int i = m_ - 1; i >= 0; --i) a = a * p_ + ((c[i] % p_) + p_) % p_;
  return a;
}

std::int64_t FiniteField::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::int64_t FiniteField::neg(std::int64_t a) const {
  std::int64_t out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::int64_t FiniteField::mul_slow(std::int64_t a, std::int64_t b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  std::vector<std::int64_t> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  auto r = poly_mod(prod, modulus_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

std::int64_t FiniteField::mul(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(dlog_[a] + dlog_[b]) % (q_ - 1)];
}

std::int64_t FiniteField::pow_slow(std::int64_t a, std::int64_t e) const {
  std::int64_t out = 1;
  while (e > 0) {
    if (e & 1) out = mul_slow(out, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return out;
}

std::int64_t FiniteField::pow(std::int64_t a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::int64_t k = dlog_[a] % (q_ - 1);
  // exponent reduced mod q-1; e may be any nonnegative integer
  __int128 ke = static_cast<__int128>(k) * (e % (q_ - 1));
  return exp_[static_cast<std::int64_t>(ke % (q_ - 1))];
}

std::int64_t FiniteField::inv(std::int64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - dlog_[a]) % (q_ - 1)];
}

std::int64_t FiniteField::dlog(std::int64_t a) const {
  if (a == 0) throw std::domain_error("dlog of zero");
  return dlog_[a];
}

std::int64_t FiniteField::gen_pow(std::int64_t k) const {
  k %= (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

std::int64_t FiniteField::trace(std::int64_t a) const {
  std::int64_t s = 0, x = a;
  for (int i = 0; i < m_; ++i) {
    s = add(s, x);
    x = pow(x, p_);
  }
  return s % p_;  // s lies in the prime field: index equals its value
}

std::int64_t FiniteField::norm(int s_sub, std::int64_t a) const {
  if (s_sub < 1 || m_ % s_sub != 0)
    throw std::invalid_argument("subfield degree does not divide m");
  std::int64_t q0 = 1;
  for (int i = 0; i < m_ / s_sub; ++i) q0 *= p_;
  return pow(a, (q_ - 1) / (q0 - 1));
}

int FiniteField::quad_char(std::int64_t a) const {
  if (q_ % 2 == 0) throw std::domain_error("quadratic character needs odd order");
  if (a == 0) return 0;
  return dlog_[a] % 2 == 0 ? 1 : -1;
}

std::complex<double> FiniteField::additive_char(std::int64_t b, std::int64_t x) const {
  std::int64_t t = trace(mul(b, x));
  double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p_);
  return {std::cos(ang), std::sin(ang)};
}

std::complex<double> FiniteField::subgroup_char_sum(std::int64_t h, std::int64_t b) const {
  if (h < 1 || (q_ - 1) % h != 0) throw std::invalid_argument("h must divide q-1");
  std::complex<double> s = 0.0;
  for (std::int64_t k = 0; k < (q_ - 1) / h; ++k) s += additive_char(b, exp_[(k * h) % (q_ - 1)]);
  return s;
}

std::complex<double> FiniteField::gauss_sum(std::int64_t j, std::int64_t b) const {
  std::complex<double> s = 0.0;
  for (std::int64_t k = 0; k < q_ - 1; ++k) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>((j % (q_ - 1)) * k % (q_ - 1)) /
                 static_cast<double>(q_ - 1);
    s += std::complex<double>(std::cos(ang), std::sin(ang)) * additive_char(b, exp_[k]);
  }
  return s;
}

FiniteField gf(std::int64_t p, int m) { return FiniteField(p, m); }

}  // namespace rexlab
