#ifndef SCF_APPLICATIONS_HPP
#define SCF_APPLICATIONS_HPP

// Parameters where 2a+3 or 6a+19 is a square (with m squarefree), and defining
// polynomials of the square-root generators sqrt(alpha+2), sqrt(alpha(2alpha-1)).

#include <scf/interval.hpp>
#include <scf/polynomial.hpp>
#include <scf/real_embeddings.hpp>
#include <scf/ring.hpp>
#include <scf/small_norm.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scf {

/// cor1: 2a+3 = b^2, theta = alpha+2.  cor2: 6a+19 = b^2, theta = alpha(2alpha-1).
enum class Corollary { cor1, cor2 };

inline const char* to_string(Corollary c) { return c == Corollary::cor1 ? "cor1" : "cor2"; }

inline Corollary parse_corollary(std::string_view s) {
  if (s == "cor1") return Corollary::cor1;
  if (s == "cor2") return Corollary::cor2;
  throw std::invalid_argument("unknown criterion '" + std::string(s) + "' (expected cor1 or cor2)");
}

/// The quantity that has to be a square.
inline Integer square_target(const FieldParam& p, Corollary which) {
  return which == Corollary::cor1 ? Integer(2 * p.a() + 3) : Integer(6 * p.a() + 19);
}

template <class E>
E generator_element(Corollary which, const typename E::param_type& p = typename E::param_type{}) {
  using C = typename E::coeff_type;
  const E al = E::alpha(p);
  if (which == Corollary::cor1) return al + E::scalar(C(2L), p);
  return al * (al.scaled(C(2L)) - E::one(p));
}

/// g(y^2), g the characteristic polynomial of theta: the defining polynomial of
/// every conjugate of sqrt(theta).
template <class C>
Polynomial<C> sextic_from_cubic(const Polynomial<C>& g) {
  std::vector<C> v(7, C(0L));
  for (std::size_t i = 0; i < 4; ++i) v[2 * i] = g.coefficient(i);
  return Polynomial<C>(std::move(v));
}

/// Defining polynomial of sqrt(theta) over Q; conjugate generators such as
/// sqrt(theta') share it, so the list has one entry.
inline std::vector<Poly> extension_generator_poly(const FieldParam& p, Corollary which) {
  return {sextic_from_cubic(characteristic_polynomial(generator_element<Element>(which, p)))};
}

/// The same sextic with coefficients in Z[a].
inline Polynomial<Poly> extension_generator_poly_symbolic(Corollary which) {
  return sextic_from_cubic(characteristic_polynomial(generator_element<SymbolicElement>(which)));
}

/// Symbolic check: the cor1 sextic is f(y^2 - 2).
inline bool cor1_sextic_is_shifted_f() {
  using YPoly = Polynomial<Poly>;
  const YPoly a = symbolic_a<YPoly>();
  const YPoly f = YPoly(std::vector<Poly>{Poly(-1L), Poly(-a.coefficient(0) - Poly(3L)), Poly(-a.coefficient(0)),
                                          Poly(1L)});
  const YPoly y = YPoly::variable();
  return extension_generator_poly_symbolic(Corollary::cor1) == f.compose(YPoly(y * y) - YPoly(2L));
}

struct SexticRootCheck {
  Interval root;   // enclosure of sqrt(theta) under embedding 0
  Interval value;  // the sextic evaluated on it
  bool contains_zero = false;
};

/// Evaluates the sextic on an enclosure of sqrt(theta^(0)) of width <= 2^-bits.
inline SexticRootCheck sextic_root_check(const FieldParam& p, Corollary which, unsigned bits = 50) {
  const Poly sextic = extension_generator_poly(p, which).front();
  const Element theta = generator_element<Element>(which, p);
  return with_refinement(
      isolate_roots(p, bits + 16),
      [&](const RootEnclosure& e) -> std::optional<SexticRootCheck> {
        Interval th = embed(theta, e, 0);
        if (!th.positive()) return std::nullopt;
        Interval root = sqrt(th, bits + 2);
        if (root.width() > pow2(-static_cast<long>(bits))) return std::nullopt;
        Interval value = sextic.evaluate<Interval>(root);
        return SexticRootCheck{root, value, value.contains_zero()};
      },
      "sextic root check");
}

struct CorollaryHit {
  Corollary which;
  Integer a;
  Integer m;
  Integer b;
  bool m_squarefree = false;
  std::optional<std::string> excluded_reason;
  std::vector<Poly> generator_polys;

  bool is_hit() const { return !excluded_reason; }
};

/// Every a in [lo, hi] whose target is a square: hits, and near-misses carrying
/// the reason they are excluded. Ordered by a.
inline std::vector<CorollaryHit> scan_corollary(Corollary which, const Integer& lo, const Integer& hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("scan_corollary expects 1 <= lo <= hi");
  std::vector<CorollaryHit> out;
  for (Integer a = lo; a <= hi; ++a) {
    const FieldParam p(a);
    Integer b;
    if (!exact_sqrt(square_target(p, which), b)) continue;
    CorollaryHit hit{which, a, p.m(), b, p.m_squarefree(), std::nullopt, {}};
    if (which == Corollary::cor2 && p.m() <= 13) {
      hit.excluded_reason = a == 1 ? "m <= 13; 6a+19 = (2a+3)^2, so b is a norm" : "m <= 13";
    } else if (!hit.m_squarefree) {
      hit.excluded_reason = "m not squarefree";
    }
    hit.generator_polys = extension_generator_poly(p, which);
    out.push_back(std::move(hit));
  }
  return out;
}

inline std::vector<CorollaryHit> scan_corollary(Corollary which, long lo, long hi) {
  return scan_corollary(which, Integer(lo), Integer(hi));
}

/// Why alpha+2 is not a square times a unit when 2a+3 = b^2: a square root r
/// would have |N(r)| = b < 2a+3, so r is associated to an integer k by the
/// minimal-norm theorem, and k^2 | alpha+2 forces k = +-1.
struct NonSquareCertificate {
  Integer a;
  Integer b;
  bool b_below_threshold = false;
  Integer coefficient_gcd;  // gcd of the coordinates (2, 1, 0) of alpha+2
  bool theorem_verified = false;
  std::size_t theorem_counterexamples = 0;

  bool holds() const { return b_below_threshold && coefficient_gcd == 1 && theorem_verified; }
};

inline NonSquareCertificate non_square_certificate(const FieldParam& p, const TheoremReport& theorem) {
  Integer b;
  if (!exact_sqrt(p.threshold(), b)) {
    throw std::invalid_argument("non_square_certificate: 2a+3 = " + p.threshold().get_str() + " is not a square");
  }
  if (!(theorem.param == p)) throw parameter_mismatch("non_square_certificate: theorem report for a different a");
  const Element theta = generator_element<Element>(Corollary::cor1, p);
  return NonSquareCertificate{p.a(),
                              b,
                              b < p.threshold(),
                              gcd(gcd(theta.r(), theta.s()), theta.t()),
                              theorem.verified(),
                              theorem.counterexamples.size()};
}

inline NonSquareCertificate non_square_certificate(const FieldParam& p) {
  Integer b;
  if (!exact_sqrt(p.threshold(), b)) {
    throw std::invalid_argument("non_square_certificate: 2a+3 = " + p.threshold().get_str() + " is not a square");
  }
  return non_square_certificate(p, verify_theorem(p));
}

}  // namespace scf

#endif  // SCF_APPLICATIONS_HPP
