#ifndef SCF_INTERVAL_HPP
#define SCF_INTERVAL_HPP

// Closed intervals with exact rational endpoints. Every operation returns an
// enclosure of the exact image; nothing here touches floating point.

#include <scf/integer.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace scf {

class Interval {
 public:
  Interval() = default;
  Interval(const Rational& v) : lo_(v), hi_(v) {}
  Interval(const Integer& v) : lo_(v), hi_(v) {}
  Interval(long v) : lo_(v), hi_(v) {}
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return Rational(hi_ - lo_); }
  Rational midpoint() const { return Rational((lo_ + hi_) / 2); }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  /// Certainly positive / negative.
  bool positive() const { return lo_ > 0; }
  bool negative() const { return hi_ < 0; }

  /// Widen outward to the dyadic grid 2^-bits (keeps endpoint sizes bounded).
  Interval rounded(unsigned bits) const { return Interval(round_down(lo_, bits), round_up(hi_, bits)); }

  Interval& operator+=(const Interval& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
  }
  Interval& operator-=(const Interval& o) {
    Rational lo = lo_ - o.hi_;
    hi_ -= o.lo_;
    lo_ = lo;
    return *this;
  }

  friend Interval operator+(Interval x, const Interval& y) { return x += y; }
  friend Interval operator-(Interval x, const Interval& y) { return x -= y; }
  friend Interval operator-(const Interval& x) { return Interval(Rational(-x.hi_), Rational(-x.lo_)); }

  friend Interval operator*(const Interval& x, const Interval& y) {
    Rational p[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return Interval(*mn, *mx);
  }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero()) throw zero_divisor("interval division by an interval containing zero");
    return x * Interval(Rational(1 / y.hi_), Rational(1 / y.lo_));
  }

  friend bool operator==(const Interval& x, const Interval& y) { return x.lo_ == y.lo_ && x.hi_ == y.hi_; }

 private:
  Rational lo_;
  Rational hi_;
};

inline Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return Interval(Rational(0), std::max(Rational(-x.lo()), x.hi()));
}

inline Interval hull(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

inline Interval min_with_zero(const Interval& x) {
  return Interval(std::min(x.lo(), Rational(0)), std::min(x.hi(), Rational(0)));
}

/// true: x < y everywhere; false: x >= y everywhere; nullopt: undecided.
inline std::optional<bool> less(const Interval& x, const Interval& y) {
  if (x.hi() < y.lo()) return true;
  if (x.lo() >= y.hi()) return false;
  return std::nullopt;
}

/// true: x <= y everywhere; false: x > y everywhere; nullopt: undecided.
inline std::optional<bool> less_equal(const Interval& x, const Interval& y) {
  if (x.hi() <= y.lo()) return true;
  if (x.lo() > y.hi()) return false;
  return std::nullopt;
}

inline Interval ipow(const Interval& x, unsigned n) {
  Interval acc(1L);
  for (unsigned i = 0; i < n; ++i) acc *= x;
  return acc;
}

namespace detail {

/// Enclosure of 2*atanh(z) = log((1+z)/(1-z)) for 0 <= z_lo <= z_hi <= 1/3.
inline Interval two_atanh(const Rational& z_lo, const Rational& z_hi, unsigned bits) {
  const unsigned guard = bits + 16;
  const Rational target = pow2(-static_cast<long>(bits) - 4);
  const Rational zl2 = round_down(Rational(z_lo * z_lo), guard);
  const Rational zh2 = round_up(Rational(z_hi * z_hi), guard);
  Rational pl = z_lo, ph = z_hi;  // z^(2k+1), rounded outward
  Rational sl = 0, sh = 0;
  for (unsigned k = 0;; ++k) {
    const Rational denom(2 * k + 1);
    sl += round_down(Rational(pl / denom), guard);
    sh += round_up(Rational(ph / denom), guard);
    pl = round_down(Rational(pl * zl2), guard);
    ph = round_up(Rational(ph * zh2), guard);
    // Remaining terms sum to at most z^(2k+3) / ((2k+3)(1 - z^2)) <= (9/8) z^(2k+3) / (2k+3).
    Rational tail = Rational(ph * 9) / Rational(8 * (2 * k + 3));
    if (tail < target || ph == 0) {
      sh += tail;
      break;
    }
  }
  return Interval(Rational(2 * sl), Rational(2 * sh));
}

/// Floor of log2 q for q > 0.
inline long floor_log2(const Rational& q) {
  long e = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  while (q < pow2(e)) --e;
  while (q >= pow2(e + 1)) ++e;
  return e;
}

/// log(y) enclosure for a dyadic y in [1, 2].
inline Interval log_unit_range(const Rational& y, unsigned bits) {
  const Rational z = Rational(y - 1) / Rational(y + 1);
  return two_atanh(z, z, bits);
}

}  // namespace detail

inline Interval ln2(unsigned bits) { return detail::two_atanh(Rational(1, 3), Rational(1, 3), bits); }

/// Certified enclosure of log(x); requires x > 0 everywhere. Width is about
/// 2^-bits plus the width of log over x itself.
inline Interval log(const Interval& x, unsigned bits) {
  if (!x.positive()) throw std::domain_error("log of an interval that is not strictly positive");
  const unsigned guard = bits + 8;
  const Interval l2 = ln2(guard);
  auto one_side = [&](const Rational& q, bool lower) {
    long e = detail::floor_log2(q);
    Rational y = q / pow2(e);
    y = lower ? round_down(y, guard) : round_up(y, guard);
    Interval ly = detail::log_unit_range(y, guard);
    Interval total = Interval(Integer(e)) * l2 + ly;
    return lower ? total.lo() : total.hi();
  };
  return Interval(one_side(x.lo(), true), one_side(x.hi(), false)).rounded(guard);
}

/// Enclosure of sqrt(x) for x >= 0 with endpoints on the 2^-bits grid.
inline Interval sqrt(const Interval& x, unsigned bits) {
  if (x.lo() < 0) throw std::domain_error("sqrt of an interval with negative part");
  auto scaled_isqrt = [&](const Rational& q, bool up) -> Rational {
    // floor/ceil of sqrt(q) * 2^bits
    Rational s = q * pow2(2 * static_cast<long>(bits));
    Integer fl = floor(s);
    Integer r = isqrt(fl);
    if (up) {
      if (Rational(r * r) < s) r += 1;
    }
    return Rational(r) / pow2(static_cast<long>(bits));
  };
  return Interval(scaled_isqrt(x.lo(), false), scaled_isqrt(x.hi(), true));
}

inline std::string to_string(const Interval& x) { return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]"; }

}  // namespace scf

#endif  // SCF_INTERVAL_HPP
