#ifndef SCF_UNIT_REDUCTION_HPP
#define SCF_UNIT_REDUCTION_HPP

// Reduction of an element modulo the units alpha and alpha'' by translating
// its logarithmic embedding into a fundamental parallelepiped, and the
// coefficient bound |s|, |t| <= 2 that this reduction implies.

#include <scf/interval.hpp>
#include <scf/real_embeddings.hpp>
#include <scf/ring.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scf {

/// sign * alpha^i * (alpha'')^j.
struct UnitWord {
  int sign = 1;
  long i = 0;
  long j = 0;

  friend bool operator==(const UnitWord&, const UnitWord&) = default;
};

/// Exact ring element of a unit word; negative exponents go through exact
/// division by the norm +-1 generator.
inline Element materialize(const UnitWord& w, const FieldParam& p) {
  const Element alpha = Element::alpha(p);
  const Element alpha2 = Element::alpha_double_prime(p);
  Element base_i = w.i >= 0 ? alpha : unit_inverse(alpha);
  Element base_j = w.j >= 0 ? alpha2 : unit_inverse(alpha2);
  Element u = pow(base_i, static_cast<unsigned long>(w.i >= 0 ? w.i : -w.i)) *
              pow(base_j, static_cast<unsigned long>(w.j >= 0 ? w.j : -w.j));
  if (w.sign < 0) u = -u;
  if (!is_unit(u)) throw arithmetic_error("unit word materialized to a non-unit");
  return u;
}

/// (log|x|, log|x'|) as certified intervals.
struct LogVector {
  Interval first;
  Interval second;
  unsigned bits = 0;
};

/// Certified logarithmic embedding under embeddings 0 and 1; refines the
/// enclosure until both embeddings are bounded away from zero.
inline LogVector log_embed(const Element& x, const RootEnclosure& enc) {
  if (x.is_zero()) throw zero_divisor("log_embed of zero");
  return with_refinement(
      enc,
      [&](const RootEnclosure& e) -> std::optional<LogVector> {
        Interval e0 = abs(embed(x, e, 0));
        Interval e1 = abs(embed(x, e, 1));
        if (!e0.positive() || !e1.positive()) return std::nullopt;
        return LogVector{log(e0, e.bits()), log(e1, e.bits()), e.bits()};
      },
      "log_embed");
}

/// Certified: the log vectors of alpha and alpha'' are linearly independent.
inline bool verify_unit_independence(const RootEnclosure& enc) {
  const FieldParam& p = enc.param();
  return with_refinement(
      enc,
      [&](const RootEnclosure& e) -> std::optional<bool> {
        LogVector v1 = log_embed(Element::alpha(p), e);
        LogVector v2 = log_embed(Element::alpha_double_prime(p), e);
        Interval det = v1.first * v2.second - v1.second * v2.first;
        if (det.contains_zero()) return std::nullopt;
        return true;
      },
      "unit independence");
}

struct Reduction {
  UnitWord eta;
  Element reduced;
};

namespace detail {

/// c1 <= |xi| < (a+3) c1 and c2 <= |xi'| < (a+4) c2, certified at enclosure e.
inline std::optional<bool> satisfies_reduction_bounds(const Element& xi, const Rational& c1, const Rational& c2,
                                                      const RootEnclosure& e) {
  const Integer& a = e.param().a();
  const Interval x0 = abs(embed(xi, e, 0));
  const Interval x1 = abs(embed(xi, e, 1));
  std::optional<bool> parts[] = {
      less_equal(Interval(c1), x0),
      less(x0, Interval(Rational(c1 * Rational(a + 3)))),
      less_equal(Interval(c2), x1),
      less(x1, Interval(Rational(c2 * Rational(a + 4)))),
  };
  bool undecided = false;
  for (const auto& part : parts) {
    if (part == false) return false;
    if (!part) undecided = true;
  }
  if (undecided) return std::nullopt;
  return true;
}

}  // namespace detail

/// Finds a unit eta = +-alpha^i (alpha'')^j with
///   c1 <= |gamma eta| < (a+3) c1,   c2 <= |(gamma eta)'| < (a+4) c2.
///
/// eta = 1 is returned whenever gamma already conforms. Otherwise Log(gamma)
/// is translated into the half-open parallelepiped spanned by Log(alpha) and
/// Log(alpha'') whose lower corner sits at (log c1, log c2); the translation
/// coefficients come from the interval solution of the 2x2 system, and nearby
/// exponent pairs are tried until one certifies.
inline Reduction reduce(const Element& gamma, const Rational& c1, const Rational& c2, const RootEnclosure& enc) {
  if (gamma.is_zero()) throw zero_divisor("reduce: gamma is zero");
  if (c1 <= 0 || c2 <= 0) throw std::invalid_argument("reduce: c1 and c2 must be positive");
  if (!(gamma.param() == enc.param())) throw parameter_mismatch("reduce: gamma and enclosure differ in a");
  const FieldParam& p = gamma.param();
  const Element alpha = Element::alpha(p);
  const Element alpha2 = Element::alpha_double_prime(p);

  std::map<std::pair<long, long>, Element> units;
  auto unit = [&](long i, long j) -> const Element& {
    auto it = units.find({i, j});
    if (it == units.end()) it = units.emplace(std::pair{i, j}, materialize(UnitWord{1, i, j}, p)).first;
    return it->second;
  };

  return with_refinement(
      enc,
      [&](const RootEnclosure& e) -> std::optional<Reduction> {
        bool undecided = false;
        auto attempt = [&](long i, long j) -> std::optional<Reduction> {
          Element xi = gamma * unit(i, j);
          auto ok = detail::satisfies_reduction_bounds(xi, c1, c2, e);
          if (ok == true) return Reduction{UnitWord{1, i, j}, xi};
          if (!ok) undecided = true;
          return std::nullopt;
        };

        if (auto r = attempt(0, 0)) return r;

        const LogVector v1 = log_embed(alpha, e);
        const LogVector v2 = log_embed(alpha2, e);
        const LogVector lg = log_embed(gamma, e);
        const Interval det = v1.first * v2.second - v1.second * v2.first;
        if (det.contains_zero()) return std::nullopt;

        const Interval anchor0 = log(Interval(c1), e.bits()) - min_with_zero(v1.first) - min_with_zero(v2.first);
        const Interval anchor1 = log(Interval(c2), e.bits()) - min_with_zero(v1.second) - min_with_zero(v2.second);
        const Interval d0 = lg.first - anchor0;
        const Interval d1 = lg.second - anchor1;
        const Interval x = (d0 * v2.second - d1 * v2.first) / det;
        const Interval y = (v1.first * d1 - v1.second * d0) / det;
        const long i0 = -floor(x.midpoint()).get_si();
        const long j0 = -floor(y.midpoint()).get_si();

        std::vector<std::pair<long, long>> steps;
        for (long di = -2; di <= 2; ++di)
          for (long dj = -2; dj <= 2; ++dj) steps.emplace_back(di, dj);
        std::stable_sort(steps.begin(), steps.end(), [](const auto& u, const auto& v) {
          return std::abs(u.first) + std::abs(u.second) < std::abs(v.first) + std::abs(v.second);
        });
        for (const auto& [di, dj] : steps) {
          if (auto r = attempt(i0 + di, j0 + dj)) return r;
        }
        if (undecided) return std::nullopt;
        throw arithmetic_error("reduce: no conforming unit near the fundamental-domain translate");
      },
      "reduce");
}

/// Integer bounds on |s| and |t| for a reduced representative of any element
/// of norm at most n.
struct CoefficientBounds {
  /// Rigorous per-embedding chain; used by the enumeration.
  Integer s_bound;
  Integer t_bound;
  /// The uniform chain |mt|, |ms| < n^(1/3) (a+3)^(2/3) D with D = 2a+5
  /// (a >= 7) or the certified sum of root differences (a < 7).
  Integer paper_bound;
  /// Reduction target c1 = c2 = c used for the rigorous chain.
  Rational c;
};

namespace detail {

/// Largest integer k >= 0 with k < q (q > 0).
inline Integer largest_below(const Rational& q) { return Integer(ceil(q) - 1); }

/// Largest integer k >= 0 with k^3 < q (q > 0).
inline Integer largest_cube_below(const Rational& q) {
  Integer k = icbrt(floor(q));
  if (Rational(Integer(k * k * k)) >= q) k -= 1;
  return k;
}

/// Upper bound on the width factor max(|u|, 1/|u|) of a unit's embedding.
inline Rational spread(const Interval& abs_value) {
  Rational up = abs_value.hi();
  Rational inv = Rational(1) / abs_value.lo();
  return std::max(up, inv);
}

}  // namespace detail

/// From |mt| <= |xi||alpha'-alpha''| + |xi'||alpha''-alpha| + |xi''||alpha-alpha'|
/// (and the analogue for ms) with |xi| < K1 c, |xi'| < K2 c, |xi''| <= n / c^2,
/// where K1, K2 are the certified widths of the fundamental parallelepiped.
inline CoefficientBounds coefficient_bound_check(const FieldParam& param, const Integer& n) {
  if (n < 1 || n > param.threshold()) throw std::invalid_argument("coefficient_bound_check expects 1 <= n <= 2a+3");
  const RootEnclosure enc = isolate_roots(param, kInitialBits);
  const Interval& x0 = enc.root(0);
  const Interval& x1 = enc.root(1);
  const Interval& x2 = enc.root(2);
  const Interval d01 = abs(x0 - x1), d12 = abs(x1 - x2), d20 = abs(x2 - x0);

  // Embedding 0 of (alpha, alpha''), embedding 1 of (alpha, alpha'') = (alpha', alpha).
  const Rational k1 = Rational(detail::spread(abs(x0)) * detail::spread(abs(x2)));
  const Rational k2 = Rational(detail::spread(abs(x1)) * detail::spread(abs(x0)));
  const Rational rn(n);
  const Rational m(param.m());

  auto chains = [&](const Rational& c) {
    Interval m0 = Interval(Rational(k1 * c));
    Interval m1 = Interval(Rational(k2 * c));
    Interval m2 = Interval(Rational(rn / (c * c)));
    Interval t_num = m0 * d12 + m1 * d20 + m2 * d01;
    Interval s_num = m0 * d20 + m1 * d01 + m2 * d12;
    return std::pair<Rational, Rational>{s_num.hi() / m, t_num.hi() / m};
  };

  // The choice of c needs no certification; doubles are enough to locate it.
  const double base = std::cbrt(n.get_d() / k1.get_d());
  Rational best_c;
  double best = 0;
  for (int step = 0; step <= 200; ++step) {
    double factor = 0.25 + 3.75 * step / 200.0;
    Rational c = round_down(Rational(base * factor), 20);
    if (c <= 0) continue;
    auto [s, t] = chains(c);
    double worst = std::max(s.get_d(), t.get_d());
    if (best_c == 0 || worst < best) {
      best = worst;
      best_c = c;
    }
  }
  auto [s_ratio, t_ratio] = chains(best_c);

  Rational diff_sum = (d01 + d12 + d20).hi();
  Rational d = diff_sum;
  if (param.a() >= 7 && diff_sum < Rational(2 * param.a() + 5)) d = Rational(2 * param.a() + 5);
  const Rational a3(param.a() + 3);
  const Rational paper_cubed = rn * a3 * a3 * d * d * d / (m * m * m);

  return CoefficientBounds{detail::largest_below(s_ratio), detail::largest_below(t_ratio),
                           detail::largest_cube_below(paper_cubed), best_c};
}

inline CoefficientBounds coefficient_bound_check(const FieldParam& param, long n) {
  return coefficient_bound_check(param, Integer(n));
}

}  // namespace scf

#endif  // SCF_UNIT_REDUCTION_HPP
