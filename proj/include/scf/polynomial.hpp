#ifndef SCF_POLYNOMIAL_HPP
#define SCF_POLYNOMIAL_HPP

#include <scf/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace scf {

template <class C>
class Polynomial;

inline bool is_zero(const Integer& v) { return v == 0; }

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

/// Exact division of an integer by an integer; throws if inexact.
inline Integer exact_quotient(const Integer& v, const Integer& d) {
  if (d == 0) throw zero_divisor("exact_quotient: division by zero");
  if (v % d != 0) throw arithmetic_error("exact_quotient: " + v.get_str() + " not divisible by " + d.get_str());
  return Integer(v / d);
}

/// Dense univariate polynomial over a commutative ring C, constant term first.
///
/// The zero polynomial has no coefficients and no representation stores a
/// trailing zero, so equality is coefficientwise. Nesting (C itself a
/// Polynomial) gives multivariate polynomials; the innermost variable is the
/// field parameter a by convention (see symbolic_a()).
template <class C>
class Polynomial {
 public:
  using coeff_type = C;

  Polynomial() = default;
  Polynomial(long v) : Polynomial(C(v)) {}
  Polynomial(const C& c) {
    if (!scf::is_zero(c)) coeffs_.push_back(c);
  }
  template <class T>
    requires(!std::is_same_v<std::remove_cvref_t<T>, C> && !std::is_arithmetic_v<T> &&
             !std::is_same_v<std::remove_cvref_t<T>, Polynomial> && std::is_constructible_v<C, const T&>)
  explicit Polynomial(const T& v) : Polynomial(C(v)) {}

  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<C>{C(0L), C(1L)}); }

  static Polynomial monomial(const C& c, std::size_t degree) {
    std::vector<C> v(degree + 1, C(0L));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coefficients() const { return coeffs_; }
  C coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0L); }

  template <class R>
  R evaluate(const R& x) const {
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = R(acc * x);
      acc = R(acc + R(*it));
    }
    return acc;
  }

  C operator()(const C& x) const { return evaluate<C>(x); }

  /// this(inner(y)).
  Polynomial compose(const Polynomial& inner) const { return evaluate<Polynomial>(inner); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0L));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0L));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }

  friend Polynomial operator-(const Polynomial& x) {
    Polynomial r = x;
    for (auto& c : r.coeffs_) c = C(-c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<C> out(x.coeffs_.size() + y.coeffs_.size() - 1, C(0L));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.coeffs_ == y.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && scf::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

/// Integer polynomial in the field parameter a.
using Poly = Polynomial<Integer>;

template <class C>
Polynomial<C> exact_quotient(const Polynomial<C>& p, const Integer& d) {
  std::vector<C> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(exact_quotient(c, d));
  return Polynomial<C>(std::move(out));
}

/// Nesting depth: 0 for Integer, 1 for Poly, ...
template <class C>
struct polynomial_depth : std::integral_constant<int, 0> {};
template <class C>
struct polynomial_depth<Polynomial<C>> : std::integral_constant<int, 1 + polynomial_depth<C>::value> {};

/// The field parameter a as an element of the (possibly nested) polynomial ring P.
template <class P>
P symbolic_a() {
  if constexpr (std::is_same_v<P, Poly>) {
    return Poly::variable();
  } else {
    using Inner = typename P::coeff_type;
    return P(symbolic_a<Inner>());
  }
}

/// Substitute a concrete value for a in every innermost coefficient.
inline Integer evaluate_at_a(const Integer& v, const Integer&) { return v; }
inline Integer evaluate_at_a(const Poly& p, const Integer& a) { return p(a); }

inline std::string format(const Integer& v, std::span<const std::string_view>) { return v.get_str(); }

/// Human-readable rendering; vars[0] names the outermost variable.
template <class C>
std::string format(const Polynomial<C>& p, std::span<const std::string_view> vars) {
  if (p.is_zero()) return "0";
  std::string_view var = vars.empty() ? std::string_view("x") : vars.front();
  auto inner_vars = vars.empty() ? vars : vars.subspan(1);
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const C& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    std::string cs = format(c, inner_vars);
    bool compound = cs.find_first_of("+ ", 1) != std::string::npos;
    bool negative = !compound && cs.front() == '-';
    if (!out.empty()) {
      out += negative ? " - " : " + ";
      if (negative) cs.erase(0, 1);
    }
    if (compound && i > 0) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs == "-1") out += "-";
    else if (cs != "1") out += cs + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

inline std::string format(const Poly& p, std::string_view var = "a") {
  std::string_view vars[] = {var};
  return format(p, std::span<const std::string_view>(vars));
}

}  // namespace scf

#endif  // SCF_POLYNOMIAL_HPP
