#ifndef SCF_REAL_EMBEDDINGS_HPP
#define SCF_REAL_EMBEDDINGS_HPP

// Certified enclosures of the three real roots alpha < alpha' < alpha'' of f_a
// and interval evaluation of ring elements under the three real embeddings.
//
// Embedding k sends (alpha, alpha') to (root_k, root_{k+1 mod 3}); hence
// embed(conjugate(x, j), k) == embed(x, k + j).

#include <scf/field_param.hpp>
#include <scf/interval.hpp>
#include <scf/report.hpp>
#include <scf/ring.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scf {

inline constexpr unsigned kInitialBits = 64;
inline constexpr unsigned kMaxBits = 4096;

class RootEnclosure {
 public:
  RootEnclosure(FieldParam param, unsigned bits, std::array<Interval, 3> roots)
      : param_(std::move(param)), bits_(bits), roots_(std::move(roots)) {}

  const FieldParam& param() const { return param_; }
  /// Every root interval has width <= 2^-bits.
  unsigned bits() const { return bits_; }
  const Interval& root(int k) const { return roots_.at(static_cast<std::size_t>(k)); }
  const std::array<Interval, 3>& roots() const { return roots_; }

 private:
  FieldParam param_;
  unsigned bits_;
  std::array<Interval, 3> roots_;
};

namespace detail {

inline Rational eval_f(const Integer& a, const Rational& x) {
  return Rational(Rational(Rational(x - a) * x - Rational(a + 3)) * x - 1);
}

inline Rational eval_df(const Integer& a, const Rational& x) {
  return Rational(Rational(3 * x - 2 * a) * x - Rational(a + 3));
}

inline int sign(const Rational& q) { return sgn(q); }

/// The paper-style seed brackets (a >= 7) or integer sign-change brackets (a < 7).
inline std::array<Interval, 3> seed_brackets(const FieldParam& p) {
  const Integer& a = p.a();
  std::array<Interval, 3> seeds;
  if (a >= 7) {
    seeds = {Interval(Rational(-1) - Rational(1, a), Rational(-1) - Rational(Integer(1), Integer(2 * a))),
             Interval(Rational(Integer(-1), Integer(a + 2)), Rational(Integer(-1), Integer(a + 3))),
             Interval(Rational(a + 1), Rational(a + 1) + Rational(Integer(2), a))};
  } else {
    std::vector<Interval> found;
    for (Integer k = -2; k < a + 2; ++k) {
      if (sign(eval_f(a, Rational(k))) * sign(eval_f(a, Rational(k + 1))) < 0) {
        found.emplace_back(Rational(k), Rational(k + 1));
      }
    }
    if (found.size() != 3) throw arithmetic_error("sign-change scan did not find three roots");
    seeds = {found[0], found[1], found[2]};
  }
  for (const auto& s : seeds) {
    if (sign(eval_f(a, s.lo())) * sign(eval_f(a, s.hi())) >= 0) {
      throw arithmetic_error("seed bracket " + to_string(s) + " has no certified sign change");
    }
  }
  return seeds;
}

/// Narrow a sign-change bracket of the single root inside it to the dyadic
/// cell of width 2^-bits that contains the root (intersected with the seed).
inline Interval refine_root(const Integer& a, const Interval& seed, unsigned bits) {
  Rational lo = seed.lo(), hi = seed.hi();
  const int sign_lo = sign(eval_f(a, lo));
  const Rational half_cell = pow2(-static_cast<long>(bits) - 1);
  const unsigned grid = bits + 4;
  const Rational delta = pow2(-static_cast<long>(grid));

  // Newton iterates on the 2^-grid lattice; each iterate also shrinks the bracket.
  Rational x = round_down(Rational((lo + hi) / 2), grid);
  for (int iter = 0; iter < 64 && hi - lo > half_cell; ++iter) {
    if (x <= lo || x >= hi) break;
    Rational d = eval_df(a, x);
    if (d == 0) break;
    Rational fx = eval_f(a, x);
    if (sign(fx) == sign_lo) lo = x;
    else hi = x;
    Rational next = round_down(Rational(x - fx / d), grid);
    if (next <= lo || next >= hi) break;
    Rational l = next - delta, h = next + delta;
    if (l > lo && h < hi && sign(eval_f(a, l)) == sign_lo && sign(eval_f(a, h)) == -sign_lo) {
      lo = l;
      hi = h;
      break;
    }
    x = next;
  }
  while (hi - lo > half_cell) {
    Rational mid = round_down(Rational((lo + hi) / 2), grid + 1);
    if (mid <= lo || mid >= hi) mid = (lo + hi) / 2;
    if (sign(eval_f(a, mid)) == sign_lo) lo = mid;
    else hi = mid;
  }

  const Rational cell = pow2(-static_cast<long>(bits));
  Rational cell_lo = round_down(lo, bits);
  Rational g = cell_lo + cell;
  if (g < hi) {
    if (sign(eval_f(a, g)) == sign_lo) cell_lo = g;  // root lies above g
  }
  Rational cell_hi = cell_lo + cell;
  return Interval(std::max(cell_lo, seed.lo()), std::min(cell_hi, seed.hi()));
}

}  // namespace detail

/// Certified enclosures of alpha < alpha' < alpha'', each of width <= 2^-bits.
/// Increasing bits yields nested intervals.
inline RootEnclosure isolate_roots(const FieldParam& param, unsigned bits) {
  if (bits < 1) throw std::invalid_argument("precision_bits must be >= 1");
  auto seeds = detail::seed_brackets(param);
  std::array<Interval, 3> roots;
  for (int k = 0; k < 3; ++k) roots[k] = detail::refine_root(param.a(), seeds[k], bits);
  if (!(roots[0].hi() < roots[1].lo() && roots[1].hi() < roots[2].lo())) {
    throw arithmetic_error("root enclosures are not ordered and disjoint");
  }
  return RootEnclosure(param, bits, roots);
}

inline RootEnclosure refine(const RootEnclosure& enc, unsigned bits) {
  return bits == enc.bits() ? enc : isolate_roots(enc.param(), bits);
}

/// Calls step(enclosure) at enc.bits(), then doubling precision up to kMaxBits,
/// until it returns a value.
template <class F>
auto with_refinement(const RootEnclosure& enc, F&& step, const std::string& what)
    -> typename std::invoke_result_t<F&, const RootEnclosure&>::value_type {
  for (unsigned bits = enc.bits();; bits *= 2) {
    if (bits > kMaxBits) bits = kMaxBits;
    RootEnclosure current = refine(enc, bits);
    if (auto v = step(current)) return *v;
    if (bits >= kMaxBits) throw precision_exhausted(what + ": undecided at " + std::to_string(kMaxBits) + " bits");
  }
}

/// Interval value of x under embedding g.
inline Interval embed(const Element& x, const RootEnclosure& enc, GaloisIndex g) {
  if (!(x.param() == enc.param())) throw parameter_mismatch("embed: element and enclosure differ in a");
  const int k = g.value();
  return Interval(x.r()) + Interval(x.s()) * enc.root(k) + Interval(x.t()) * enc.root((k + 1) % 3);
}

/// Checks that x -> -(x+1)/x maps root_k onto root_{k+1}, i.e. that the
/// embedding convention agrees with sigma(alpha) = alpha'. nullopt if the
/// enclosure is too coarse to decide.
inline std::optional<bool> verify_embedding_convention(const RootEnclosure& enc) {
  for (int k = 0; k < 3; ++k) {
    const Interval& x = enc.root(k);
    if (x.contains_zero()) return std::nullopt;
    Interval image = -(x + Interval(1L)) / x;
    for (int j = 0; j < 3; ++j) {
      bool hit = image.overlaps(enc.root(j));
      if (j == (k + 1) % 3 && !hit) return false;
      if (j != (k + 1) % 3 && hit) return std::nullopt;
    }
  }
  return true;
}

/// Certifies the root brackets, the pairwise-difference bounds, their sum
/// bound and the unit-magnitude bounds used by the theorem; a >= 7.
inline BracketReport verify_bracket_inequalities(const RootEnclosure& enc) {
  const Integer& a = enc.param().a();
  if (a < 7) throw std::invalid_argument("bracket inequalities are stated for a >= 7");
  const Rational ra(a);
  const Rational inv_a = Rational(1) / ra;

  std::vector<std::pair<std::string, std::string>> names = {
      {"alpha_bracket", "-1-1/a < alpha < -1-1/(2a)"},
      {"alpha1_bracket", "-1/(a+2) < alpha' < -1/(a+3)"},
      {"alpha2_bracket", "a+1 < alpha'' < a+1+2/a"},
      {"diff_alpha_alpha1", "|alpha-alpha'| < 1+1/a"},
      {"diff_alpha1_alpha2", "|alpha'-alpha''| < a+1+3/a"},
      {"diff_alpha2_alpha", "|alpha''-alpha| < a+2+3/a"},
      {"diff_sum", "sum of pairwise differences < 2a+4+7/a <= 2a+5"},
      {"unit_alpha1_inverse", "a+2 < |1/alpha'| < a+3"},
      {"unit_alpha2", "a+1 < |alpha''| < a+2"},
  };

  auto decide = [&](std::size_t idx, const RootEnclosure& e) -> std::optional<bool> {
    auto between = [](const Interval& v, const Rational& lo, const Rational& hi) -> std::optional<bool> {
      auto l = less(Interval(lo), v);
      auto h = less(v, Interval(hi));
      if (l == false || h == false) return false;
      if (l && h) return true;
      return std::nullopt;
    };
    const Interval& x0 = e.root(0);
    const Interval& x1 = e.root(1);
    const Interval& x2 = e.root(2);
    switch (idx) {
      case 0: return between(x0, Rational(-1) - inv_a, Rational(-1) - inv_a / 2);
      case 1: return between(x1, Rational(-1) / Rational(ra + 2), Rational(-1) / Rational(ra + 3));
      case 2: return between(x2, Rational(ra + 1), Rational(ra + 1 + 2 * inv_a));
      case 3: return less(abs(x0 - x1), Interval(Rational(1 + inv_a)));
      case 4: return less(abs(x1 - x2), Interval(Rational(ra + 1 + 3 * inv_a)));
      case 5: return less(abs(x2 - x0), Interval(Rational(ra + 2 + 3 * inv_a)));
      case 6: {
        if (!(7 * inv_a <= 1)) return false;
        return less(abs(x0 - x1) + abs(x1 - x2) + abs(x2 - x0), Interval(Rational(2 * ra + 4 + 7 * inv_a)));
      }
      case 7: {
        if (x1.contains_zero()) return std::nullopt;
        return between(abs(Interval(1L) / x1), Rational(ra + 2), Rational(ra + 3));
      }
      case 8: return between(abs(x2), Rational(ra + 1), Rational(ra + 2));
      default: return false;
    }
  };

  BracketReport report{"bracket inequalities a=" + a.get_str(), {}};
  for (std::size_t i = 0; i < names.size(); ++i) {
    bool ok = with_refinement(
        enc, [&](const RootEnclosure& e) { return decide(i, e); }, names[i].first);
    report.add(names[i].first, names[i].second, ok);
  }
  return report;
}

}  // namespace scf

#endif  // SCF_REAL_EMBEDDINGS_HPP
