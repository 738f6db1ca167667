#ifndef SCF_INTEGER_HPP
#define SCF_INTEGER_HPP

// Arbitrary-precision integers and rationals (GMP) plus the handful of exact
// number-theoretic helpers the rest of the library needs.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two values built over different parameters meet in one operation.
class parameter_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a certified comparison is still undecided at the precision cap.
class precision_exhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on division by (or association with) an element of norm zero.
class zero_divisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Internal consistency failure; indicates an arithmetic bug, never bad input.
class arithmetic_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer parse_integer(std::string_view text) {
  Integer v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return v;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// Always "p/q", including for integral values.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(text.substr(0, slash)), den);
  q.canonicalize();
  return q;
}

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer ceil(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// floor(cbrt(n)) for n >= 0.
inline Integer icbrt(const Integer& n) {
  if (n < 0) throw std::domain_error("icbrt of a negative integer");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

/// Exact square root if n is a perfect square, confirmed by squaring.
inline bool exact_sqrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

/// Exact cube root if n >= 0 is a perfect cube, confirmed by cubing.
inline bool exact_cbrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = icbrt(n);
  return root * root * root == n;
}

/// Deterministic trial division up to floor(sqrt(m)).
inline bool is_squarefree(const Integer& m) {
  if (m < 1) throw std::invalid_argument("is_squarefree expects m >= 1");
  Integer rest = m;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) return false;
    while (rest % p == 0) rest /= p;
  }
  return true;
}

inline Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

inline Rational pow2(long e) {
  Integer p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(Integer(1), p);
}

/// Largest k/2^bits not above q.
inline Rational round_down(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  Rational r(floor_div(scaled, q.get_den()), Integer(1));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

/// Smallest k/2^bits not below q.
inline Rational round_up(const Rational& q, unsigned bits) {
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  Rational r(ceil_div(scaled, q.get_den()), Integer(1));
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

}  // namespace scf

#endif  // SCF_INTEGER_HPP
