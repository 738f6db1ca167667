#ifndef SCF_RING_HPP
#define SCF_RING_HPP

// Exact arithmetic in Z[alpha] on the basis {1, alpha, alpha'}.
//
// An element r + s*alpha + t*alpha' is stored as its coordinates (r, s, t).
// Products are reduced with
//   alpha^2        = (a+2) + a*alpha - alpha'
//   alpha*alpha'   = -1 - alpha
//   alpha'^2       = 2 + alpha + (a+1)*alpha'
// and the generator of the Galois group acts by
//   sigma(r + s*alpha + t*alpha') = (r + a*t) - t*alpha + (s - t)*alpha',
// using alpha'' = a - alpha - alpha'.

#include <scf/field_param.hpp>
#include <scf/integer.hpp>
#include <scf/polynomial.hpp>

#include <optional>
#include <string>
#include <type_traits>
#include <utility>

namespace scf {

/// Parameter marker for the symbolic realization: a is an indeterminate.
struct Symbolic {
  friend bool operator==(Symbolic, Symbolic) { return true; }
};

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<Integer> {
  using param_type = FieldParam;
  static Integer a(const FieldParam& p) { return p.a(); }
};

template <class C>
struct coefficient_traits<Polynomial<C>> {
  using param_type = Symbolic;
  static Polynomial<C> a(Symbolic) { return symbolic_a<Polynomial<C>>(); }
};

/// sigma^k, k taken mod 3.
class GaloisIndex {
 public:
  constexpr GaloisIndex(int k = 0) : k_(((k % 3) + 3) % 3) {}
  constexpr int value() const { return k_; }
  friend constexpr bool operator==(GaloisIndex, GaloisIndex) = default;

 private:
  int k_;
};

template <class C>
class RingElt {
 public:
  using coeff_type = C;
  using param_type = typename coefficient_traits<C>::param_type;

  RingElt(param_type param, C r, C s, C t)
      : param_(std::move(param)), r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {}

  static RingElt scalar(C c, const param_type& p = param_type{}) { return RingElt(p, std::move(c), C(0L), C(0L)); }
  static RingElt zero(const param_type& p = param_type{}) { return scalar(C(0L), p); }
  static RingElt one(const param_type& p = param_type{}) { return scalar(C(1L), p); }
  static RingElt alpha(const param_type& p = param_type{}) { return RingElt(p, C(0L), C(1L), C(0L)); }
  static RingElt alpha_prime(const param_type& p = param_type{}) { return RingElt(p, C(0L), C(0L), C(1L)); }
  /// alpha'' = a - alpha - alpha'.
  static RingElt alpha_double_prime(const param_type& p = param_type{}) {
    return RingElt(p, coefficient_traits<C>::a(p), C(-1L), C(-1L));
  }

  const C& r() const { return r_; }
  const C& s() const { return s_; }
  const C& t() const { return t_; }
  const param_type& param() const { return param_; }
  C a() const { return coefficient_traits<C>::a(param_); }

  bool is_zero() const { return scf::is_zero(r_) && scf::is_zero(s_) && scf::is_zero(t_); }
  bool is_scalar() const { return scf::is_zero(s_) && scf::is_zero(t_); }

  RingElt scaled(const C& k) const { return RingElt(param_, C(k * r_), C(k * s_), C(k * t_)); }

  RingElt& operator+=(const RingElt& y) {
    check_param(y);
    r_ += y.r_;
    s_ += y.s_;
    t_ += y.t_;
    return *this;
  }

  RingElt& operator-=(const RingElt& y) {
    check_param(y);
    r_ -= y.r_;
    s_ -= y.s_;
    t_ -= y.t_;
    return *this;
  }

  friend RingElt operator+(RingElt x, const RingElt& y) { return x += y; }
  friend RingElt operator-(RingElt x, const RingElt& y) { return x -= y; }
  friend RingElt operator-(const RingElt& x) { return RingElt(x.param_, C(-x.r_), C(-x.s_), C(-x.t_)); }

  friend RingElt operator*(const RingElt& x, const RingElt& y) {
    x.check_param(y);
    const C a = x.a();
    const C ss = C(x.s_ * y.s_);
    const C tt = C(x.t_ * y.t_);
    const C cross = C(C(x.s_ * y.t_) + C(x.t_ * y.s_));
    C r = C(C(x.r_ * y.r_) + C(C(a + C(2L)) * ss) - cross + C(C(2L) * tt));
    C s = C(C(x.r_ * y.s_) + C(x.s_ * y.r_) + C(a * ss) - cross + tt);
    C t = C(C(x.r_ * y.t_) + C(x.t_ * y.r_) - ss + C(C(a + C(1L)) * tt));
    return RingElt(x.param_, std::move(r), std::move(s), std::move(t));
  }

  RingElt& operator*=(const RingElt& y) { return *this = *this * y; }

  friend bool operator==(const RingElt& x, const RingElt& y) {
    return x.param_ == y.param_ && x.r_ == y.r_ && x.s_ == y.s_ && x.t_ == y.t_;
  }

  void check_param(const RingElt& y) const {
    if (!(param_ == y.param_)) throw parameter_mismatch("ring elements belong to different fields");
  }

 private:
  param_type param_;
  C r_, s_, t_;
};

using Element = RingElt<Integer>;
using SymbolicElement = RingElt<Poly>;

inline Element element(const FieldParam& p, long r, long s, long t) {
  return Element(p, Integer(r), Integer(s), Integer(t));
}

template <class C>
RingElt<C> conjugate(const RingElt<C>& x, GaloisIndex g = 1) {
  RingElt<C> y = x;
  for (int i = 0; i < g.value(); ++i) {
    C r = C(y.r() + C(y.a() * y.t()));
    C s = C(-y.t());
    C t = C(y.s() - y.t());
    y = RingElt<C>(y.param(), std::move(r), std::move(s), std::move(t));
  }
  return y;
}

/// x * sigma(x) * sigma^2(x), reduced to a scalar.
template <class C>
C norm(const RingElt<C>& x) {
  RingElt<C> p = x * conjugate(x, 1) * conjugate(x, 2);
  if (!p.is_scalar()) throw arithmetic_error("conjugate product is not a scalar");
  return p.r();
}

/// r^3 + s^3 + t^3 + a r^2 s + a r^2 t + 3 s t^2 - (a^2+3a+6) s^2 t
///   - (a+3) r t^2 - (a+3) r s^2 + (a^2+a+3) r s t.
template <class C>
C norm_form(const RingElt<C>& x) {
  const C& r = x.r();
  const C& s = x.s();
  const C& t = x.t();
  const C a = x.a();
  const C rr = C(r * r), ss = C(s * s), tt = C(t * t);
  C n = C(rr * r) + C(ss * s) + C(tt * t);
  n += C(C(a * rr) * s);
  n += C(C(a * rr) * t);
  n += C(C(C(3L) * s) * tt);
  n -= C(C(C(C(a * a) + C(C(3L) * a)) + C(6L)) * C(ss * t));
  n -= C(C(a + C(3L)) * C(r * tt));
  n -= C(C(a + C(3L)) * C(r * ss));
  n += C(C(C(C(a * a) + a) + C(3L)) * C(C(r * s) * t));
  return n;
}

/// 3r + a(s + t).
template <class C>
C trace(const RingElt<C>& x) {
  return C(C(C(3L) * x.r()) + C(x.a() * C(x.s() + x.t())));
}

template <class C>
RingElt<C> pow(RingElt<C> base, unsigned long e) {
  RingElt<C> acc = RingElt<C>::one(base.param());
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

/// Quotient x / y in Z[alpha], or nullopt if it is not integral.
inline std::optional<Element> divide_exact(const Element& x, const Element& y) {
  x.check_param(y);
  Integer n = norm(y);
  if (n == 0) throw zero_divisor("divide_exact: divisor has norm zero");
  Element p = x * conjugate(y, 1) * conjugate(y, 2);
  if (p.r() % n != 0 || p.s() % n != 0 || p.t() % n != 0) return std::nullopt;
  return Element(x.param(), Integer(p.r() / n), Integer(p.s() / n), Integer(p.t() / n));
}

inline bool is_unit(const Element& x) {
  Integer n = norm(x);
  return n == 1 || n == -1;
}

/// The unit u with x = u * y, if x and y are associated.
inline std::optional<Element> association_witness(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) throw zero_divisor("association is undefined for zero");
  auto q = divide_exact(x, y);
  if (q && is_unit(*q)) return q;
  return std::nullopt;
}

inline bool associated(const Element& x, const Element& y) { return association_witness(x, y).has_value(); }

inline Element unit_inverse(const Element& u) {
  auto inv = divide_exact(Element::one(u.param()), u);
  if (!inv) throw std::invalid_argument("unit_inverse: element is not a unit");
  return *inv;
}

/// Monic characteristic polynomial X^3 - e1 X^2 + e2 X - e3 of x, from the
/// power traces p_k = T(x^k) via Newton's identities.
template <class C>
Polynomial<C> characteristic_polynomial(const RingElt<C>& x) {
  const RingElt<C> x2 = x * x;
  const C p1 = trace(x);
  const C p2 = trace(x2);
  const C p3 = trace(RingElt<C>(x2 * x));
  const C e1 = p1;
  const C e2 = exact_quotient(C(C(e1 * p1) - p2), Integer(2));
  const C e3 = exact_quotient(C(C(C(e2 * p1) - C(e1 * p2)) + p3), Integer(3));
  return Polynomial<C>(std::vector<C>{C(-e3), e2, C(-e1), C(1L)});
}

}  // namespace scf

#endif  // SCF_RING_HPP
