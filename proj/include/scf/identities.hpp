#ifndef SCF_IDENTITIES_HPP
#define SCF_IDENTITIES_HPP

// Structural identities of Z[alpha], checked as exact polynomial identities in
// a (and in r, s, t for the generic element).

#include <scf/polynomial.hpp>
#include <scf/report.hpp>
#include <scf/ring.hpp>

#include <optional>
#include <string>

namespace scf {

namespace detail {

// Generic element coordinates: t outermost, then s, r, and a innermost.
using P2 = Polynomial<Poly>;
using P3 = Polynomial<P2>;
using P4 = Polynomial<P3>;
using GenericElement = RingElt<P4>;

inline GenericElement generic_element() {
  const P4 t = P4::variable();
  const P4 s = P4(P3::variable());
  const P4 r = P4(P3(P2::variable()));
  return GenericElement(Symbolic{}, r, s, t);
}

/// passed if `printed` holds; erratum if it fails but `corrected` holds.
inline void erratum_check(Report& report, std::string name, std::string statement, bool printed,
                          std::optional<bool> corrected = std::nullopt, std::string correction = {}) {
  if (printed) {
    report.checks.push_back({std::move(name), std::move(statement), CheckStatus::passed, {}});
  } else if (corrected && *corrected) {
    report.checks.push_back({std::move(name), std::move(statement), CheckStatus::erratum, std::move(correction)});
  } else {
    report.checks.push_back({std::move(name), std::move(statement), CheckStatus::failed, {}});
  }
}

}  // namespace detail

inline IdentityReport verify_symbolic_identities() {
  using E = SymbolicElement;
  IdentityReport report{"symbolic identities", {}};
  const Poly a = Poly::variable();
  const Poly m = Poly(a * a) + Poly(Poly(3L) * a) + Poly(9L);
  const E al = E::alpha(), al1 = E::alpha_prime(), al2 = E::alpha_double_prime();
  const E m_elt = E::scalar(m);

  {
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
      E x = conjugate(al, k);
      ok = ok && x * x * x - (x * x).scaled(a) - x.scaled(a + Poly(3L)) - E::one() == E::zero();
    }
    report.add("defining_poly", "alpha, alpha', alpha'' are roots of x^3 - a x^2 - (a+3) x - 1", ok);
  }
  report.add("multiplication_rules", "alpha alpha' = -alpha-1 and alpha^2 = a+2 + a alpha - alpha'",
             al * al1 == -al - E::one() && al * al == E::scalar(a + Poly(2L)) + al.scaled(a) - al1);

  const E quad = al * al + al1 * al1 + al2 * al2 - al * al1 - al1 * al2 - al2 * al;
  report.add("quadratic_form", "alpha^2+alpha'^2+alpha''^2-alpha alpha'-alpha' alpha''-alpha'' alpha = m",
             quad == m_elt, "value (" + format(quad.r()) + ", " + format(quad.s()) + ", " + format(quad.t()) + ")");

  // det [[1,1,1],[alpha,alpha',alpha''],[alpha',alpha'',alpha]] by cofactors along the first row.
  const E det = (al1 * al - al2 * al2) - (al * al - al2 * al1) + (al * al2 - al1 * al1);
  detail::erratum_check(report, "determinant", "det[[1,1,1],[alpha,alpha',alpha''],[alpha',alpha'',alpha]] = m",
                        det == m_elt, det == -m_elt, "determinant equals -m; the quadratic form equals m");
  report.add("determinant_squared", "det^2 = disc(1, alpha, alpha') = m^2", det * det == E::scalar(Poly(m * m)));

  {
    // x^3 + b x^2 + c x + d: b^2 c^2 - 4 c^3 - 4 b^3 d - 27 d^2 + 18 b c d
    const Poly b = -a, c = Poly(-a - Poly(3L)), d(-1L);
    Poly disc = Poly(b * b * c * c) - Poly(Poly(4L) * c * c * c) - Poly(Poly(4L) * b * b * b * d) -
                Poly(Poly(27L) * d * d) + Poly(Poly(18L) * b * c * d);
    report.add("discriminant", "disc f = m^2", disc == Poly(m * m), "disc f = " + format(disc));
    E vdm = (al - al1) * (al1 - al2) * (al2 - al);
    report.add("discriminant_product", "((alpha-alpha')(alpha'-alpha'')(alpha''-alpha))^2 = m^2",
               vdm * vdm == E::scalar(Poly(m * m)));
  }

  {
    using detail::GenericElement;
    using detail::P4;
    const GenericElement xi = detail::generic_element();
    const GenericElement g1 = GenericElement::alpha(), g2 = GenericElement::alpha_prime(),
                         g3 = GenericElement::alpha_double_prime();
    const P4 mm = P4(detail::P3(detail::P2(m)));
    auto recovers = [&](const GenericElement& multiplier, const P4& coordinate) {
      return trace(xi * multiplier) == P4(mm * coordinate);
    };
    detail::erratum_check(report, "trace_t", "m t = T(xi (alpha' - alpha''))", recovers(g2 - g3, xi.t()));
    detail::erratum_check(report, "trace_s", "m s = T(xi (alpha'' - alpha))", recovers(g3 - g1, xi.s()),
                          recovers(g1 - g3, xi.s()), "T(xi (alpha'' - alpha)) = -m s; m s = T(xi (alpha - alpha''))");
    detail::erratum_check(report, "trace_r", "m r = T(xi (alpha alpha' - alpha''^2))",
                          recovers(g1 * g2 - g3 * g3, xi.r()), recovers(g3 * g3 - g1 * g2, xi.r()),
                          "T(xi (alpha alpha' - alpha''^2)) = -m r; m r = T(xi (alpha''^2 - alpha alpha'))");
    report.add("norm_form", "x x' x'' equals the ten-term norm form in r, s, t, a", norm(xi) == norm_form(xi));
  }
  return report;
}

}  // namespace scf

#endif  // SCF_IDENTITIES_HPP
