#ifndef SCF_SMALL_NORM_HPP
#define SCF_SMALL_NORM_HPP

// Enumeration and classification of the elements of Z[alpha] whose norm is at
// most 2a+3 in absolute value, and the checks of the minimal-norm theorem:
// every such element is associated to a rational integer, or has |N| = 2a+3
// and is associated to a conjugate of alpha - 1.

#include <scf/real_embeddings.hpp>
#include <scf/report.hpp>
#include <scf/ring.hpp>
#include <scf/unit_reduction.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace scf {

/// elt = k * unit, k > 0.
struct IntegerAssociate {
  Integer k;
  Element unit;
};

/// elt = unit * sigma^conj_index(alpha - 1).
struct AlphaMinusOneAssociate {
  int conj_index;
  Element unit;
};

struct AboveThreshold {};

/// |N| < 2a+3 without an integer associate: would refute the theorem.
struct Counterexample {
  std::string reason;
};

using Classification = std::variant<IntegerAssociate, AlphaMinusOneAssociate, AboveThreshold, Counterexample>;

struct ClassifiedElement {
  Element elt;
  Integer norm_value;
  Classification classification;
};

inline const char* class_name(const Classification& c) {
  switch (c.index()) {
    case 0: return "integer_associate";
    case 1: return "alpha_minus_one_associate";
    case 2: return "above_threshold";
    default: return "counterexample";
  }
}

struct TheoremStats {
  std::size_t integer_associates = 0;
  std::size_t alpha_minus_one_associates = 0;
  std::size_t above_threshold = 0;
  std::size_t counterexamples = 0;
  double wall_seconds = 0;
};

struct TheoremReport {
  FieldParam param;
  Integer n_max;
  Integer s_bound;
  Integer t_bound;
  bool conjugates_pairwise_nonassociated = false;
  std::vector<ClassifiedElement> elements;
  std::vector<ClassifiedElement> counterexamples;
  TheoremStats stats;

  bool verified() const { return counterexamples.empty(); }
};

inline Element alpha_minus_one(const FieldParam& p) { return element(p, -1, 1, 0); }

/// Every nonzero (r,s,t) with |s| <= S, |t| <= T (from coefficient_bound_check)
/// and 0 < |N| <= n_max, ordered by (s, t, r).
///
/// For fixed (s,t), |N| <= n_max forces min_k |xi^(k)| <= n_max^(1/3), so r lies
/// within ceil(n_max^(1/3)) + 1 of one of the centres -(s e_k(alpha) + t e_k(alpha')).
inline std::vector<Element> enumerate_small_norm(const FieldParam& param, const Integer& n_max,
                                                 const RootEnclosure& enc) {
  if (n_max < 1 || n_max > param.threshold()) throw std::invalid_argument("enumerate_small_norm expects 1 <= n_max <= 2a+3");
  if (!(enc.param() == param)) throw parameter_mismatch("enumerate_small_norm: enclosure for a different a");
  const CoefficientBounds bounds = coefficient_bound_check(param, n_max);
  Integer radius;
  if (!exact_cbrt(n_max, radius)) radius += 1;
  radius += 1;

  std::vector<Element> out;
  const long S = bounds.s_bound.get_si();
  const long T = bounds.t_bound.get_si();
  for (long s = -S; s <= S; ++s) {
    for (long t = -T; t <= T; ++t) {
      std::set<Integer> rs;
      for (int k = 0; k < 3; ++k) {
        Interval centre = -(Interval(Integer(s)) * enc.root(k) + Interval(Integer(t)) * enc.root((k + 1) % 3));
        Integer lo = ceil(Rational(centre.lo() - radius));
        Integer hi = floor(Rational(centre.hi() + radius));
        for (Integer r = lo; r <= hi; ++r) rs.insert(r);
      }
      for (const Integer& r : rs) {
        Element x(param, r, Integer(s), Integer(t));
        if (x.is_zero()) continue;
        Integer n = abs_value(norm(x));
        if (n != 0 && n <= n_max) out.push_back(std::move(x));
      }
    }
  }
  return out;
}

inline ClassifiedElement classify(const Element& elt) {
  if (elt.is_zero()) throw std::invalid_argument("classify: zero element");
  const FieldParam& p = elt.param();
  Integer n = norm(elt);
  Integer abs_n = abs_value(n);

  Integer k;
  if (exact_cbrt(abs_n, k) && elt.r() % k == 0 && elt.s() % k == 0 && elt.t() % k == 0) {
    Element unit(p, Integer(elt.r() / k), Integer(elt.s() / k), Integer(elt.t() / k));
    if (is_unit(unit)) return {elt, n, IntegerAssociate{k, unit}};
  }
  if (abs_n == p.threshold()) {
    const Element base = alpha_minus_one(p);
    for (int j = 0; j < 3; ++j) {
      if (auto w = association_witness(elt, conjugate(base, j))) return {elt, n, AlphaMinusOneAssociate{j, *w}};
    }
  }
  if (abs_n >= p.threshold()) return {elt, n, AboveThreshold{}};
  return {elt, n, Counterexample{"|N| = " + abs_n.get_str() + " < 2a+3 without an integer associate"}};
}

inline ClassifiedElement classify(const Element& elt, const FieldParam& param, const RootEnclosure&) {
  if (!(elt.param() == param)) throw parameter_mismatch("classify: element for a different a");
  return classify(elt);
}

namespace detail {

/// f_a has no rational root (the only candidates are +-1).
inline bool defining_poly_irreducible(const FieldParam& p) {
  return p.defining_poly(Integer(1)) != 0 && p.defining_poly(Integer(-1)) != 0;
}

inline bool conjugates_pairwise_nonassociated(const FieldParam& p) {
  const Element base = alpha_minus_one(p);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (associated(conjugate(base, i), conjugate(base, j))) return false;
  return true;
}

/// Adds c to the report, filing theorem violations as counterexamples. An
/// element of norm exactly 2a+3 must be associated to an integer (possible
/// only when 2a+3 is a cube) or to a conjugate of alpha - 1.
inline void file(TheoremReport& report, ClassifiedElement c) {
  const bool at_threshold = abs_value(c.norm_value) == report.param.threshold();
  if (at_threshold && std::holds_alternative<AboveThreshold>(c.classification)) {
    c.classification = Counterexample{"|N| = 2a+3 but not associated to a conjugate of alpha-1"};
  }
  switch (c.classification.index()) {
    case 0: ++report.stats.integer_associates; break;
    case 1: ++report.stats.alpha_minus_one_associates; break;
    case 2: ++report.stats.above_threshold; break;
    default:
      ++report.stats.counterexamples;
      report.counterexamples.push_back(c);
      break;
  }
  report.elements.push_back(std::move(c));
}

}  // namespace detail

/// Classifies the complete reduced enumeration up to n_max (default 2a+3).
inline TheoremReport verify_theorem(const FieldParam& param, const RootEnclosure& enc,
                                    std::optional<Integer> n_max = std::nullopt) {
  const auto start = std::chrono::steady_clock::now();
  if (!detail::defining_poly_irreducible(param)) throw arithmetic_error("f_a has a rational root");
  TheoremReport report{param, n_max.value_or(param.threshold()), 0, 0, detail::conjugates_pairwise_nonassociated(param),
                       {}, {}, {}};
  const CoefficientBounds bounds = coefficient_bound_check(param, report.n_max);
  report.s_bound = bounds.s_bound;
  report.t_bound = bounds.t_bound;
  for (const Element& x : enumerate_small_norm(param, report.n_max, enc)) detail::file(report, classify(x));
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline TheoremReport verify_theorem(const FieldParam& param) {
  return verify_theorem(param, isolate_roots(param, kInitialBits));
}

/// Exhaustive classification of every nonzero (r,s,t) with |r|,|s|,|t| <= B;
/// no reduction theory and no window pruning.
inline TheoremReport box_oracle(const FieldParam& param, long B) {
  if (B < 1) throw std::invalid_argument("box_oracle expects B >= 1");
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report{param, param.threshold(), B, B, detail::conjugates_pairwise_nonassociated(param), {}, {}, {}};
  for (long s = -B; s <= B; ++s)
    for (long t = -B; t <= B; ++t)
      for (long r = -B; r <= B; ++r) {
        if (r == 0 && s == 0 && t == 0) continue;
        detail::file(report, classify(element(param, r, s, t)));
      }
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Box elements with 0 < |N| <= 2a+3 that are associated to no element of the
/// reduced enumeration (expected empty).
inline std::vector<Element> unmatched_box_elements(const TheoremReport& box, const TheoremReport& reduced) {
  std::vector<Element> missing;
  for (const auto& c : box.elements) {
    Integer n = abs_value(c.norm_value);
    if (n == 0 || n > box.param.threshold()) continue;
    bool found = false;
    for (const auto& e : reduced.elements) {
      if (abs_value(e.norm_value) == n && associated(c.elt, e.elt)) {
        found = true;
        break;
      }
    }
    if (!found) missing.push_back(c.elt);
  }
  return missing;
}

// ---------------------------------------------------------------------------
// Case analysis and Table 1

namespace detail {

using RPoly = Polynomial<Poly>;  // polynomials in r over Z[a]
using CaseElement = RingElt<RPoly>;

inline Poly poly_a(std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

inline std::string show(const Poly& p) { return format(p); }
inline std::string show(const RPoly& p) {
  std::string_view vars[] = {"r", "a"};
  return format(p, std::span<const std::string_view>(vars));
}

/// Records computed == printed; when they differ and a correction is known
/// and holds, files an erratum instead of a failure.
template <class P>
void value_check(Report& report, std::string name, std::string statement, const P& computed, const P& printed,
                 const std::optional<P>& corrected = std::nullopt) {
  if (computed == printed) {
    report.checks.push_back({std::move(name), std::move(statement), CheckStatus::passed, {}});
    return;
  }
  if (corrected && computed == *corrected) {
    report.checks.push_back({std::move(name), std::move(statement), CheckStatus::erratum,
                             "printed " + show(printed) + ", computed " + show(computed)});
    return;
  }
  report.checks.push_back({std::move(name), std::move(statement), CheckStatus::failed,
                           "expected " + show(printed) + ", computed " + show(computed)});
}

}  // namespace detail

/// Norm polynomials and tabulated norm values of the case analysis, checked as
/// polynomial identities in a (and r where the case is stated in r).
inline CaseReport verify_case_norms() {
  using detail::CaseElement;
  using detail::poly_a;
  using detail::RPoly;
  CaseReport report{"case norms", {}};

  const RPoly r = RPoly::variable();
  const RPoly A = symbolic_a<RPoly>();
  const CaseElement one = CaseElement::one();
  const CaseElement al = CaseElement::alpha();
  const CaseElement al1 = CaseElement::alpha_prime();
  const CaseElement al2 = CaseElement::alpha_double_prime();
  auto scalar = [](const RPoly& c) { return CaseElement::scalar(c); };
  auto lift = [](const Poly& p) { return RPoly(p); };
  const RPoly f_r = RPoly(r * r * r) - A * r * r - (A + RPoly(3L)) * r - RPoly(1L);

  // case 2: xi = alpha - r
  detail::value_check(report, "case2.norm_polynomial", "N(alpha - r) = -f(r)", norm(al - scalar(r)), RPoly(-f_r));
  const SymbolicElement sal = SymbolicElement::alpha();
  auto sscalar = [](const Poly& c) { return SymbolicElement::scalar(c); };
  struct Value {
    std::string name;
    std::string statement;
    SymbolicElement elt;
    Poly printed;
    std::optional<Poly> corrected;
  };
  const Poly a = Poly::variable();
  std::vector<Value> values = {
      {"case2.N(alpha)", "N(alpha) = 1", sal, poly_a({1}), {}},
      {"case2.N(alpha+1)", "N(alpha+1) = -1", sal + sscalar(1L), poly_a({-1}), {}},
      {"case2.N(alpha-1)", "N(alpha-1) = 2a+3", sal - sscalar(1L), poly_a({3, 2}), {}},
      {"case2.N(alpha+2)", "N(alpha+2) = 2a+3", sal + sscalar(2L), poly_a({3, 2}), {}},
      {"case2.N(alpha-a-1)", "N(alpha-a-1) = 2a+3", sal - sscalar(a + 1L), poly_a({3, 2}), {}},
      {"case2.N(alpha-a)", "N(alpha-a) = a^2+3a+1", sal - sscalar(a), poly_a({1, 3, 1}), {}},
      {"case2.N(alpha-a-2)", "N(alpha-a-2) = -(a^2+3a+1)", sal - sscalar(a + 2L), poly_a({-1, -3, -1}), {}},
      {"case3.N(2alpha+1)", "N(2alpha+1) = -(2a+3)", sal.scaled(2L) + sscalar(1L), poly_a({-3, -2}), {}},
      {"case3.N(2alpha-1)", "N(2alpha-1) = 6a+19", sal.scaled(2L) - sscalar(1L), poly_a({19, 6}), {}},
      {"case3.N(2alpha+3)", "N(2alpha+3) = 6a-1", sal.scaled(2L) + sscalar(3L), poly_a({-1, 6}), {}},
      {"case3.N(2alpha-2a-1)", "N(2alpha-2a-1) = 4a^2+24a+19", sal.scaled(2L) - sscalar(a * 2L + 1L),
       poly_a({19, 24, 4}), {}},
      {"case3.N(2alpha-2a-3)", "N(2alpha-2a-3) = -4a^2+17", sal.scaled(2L) - sscalar(a * 2L + 3L),
       poly_a({17, 0, -4}), {}},
  };

  // cases 6, 7, 9: xi = r + s alpha + t alpha' with a norm polynomial in r
  struct Family {
    std::string tag;
    std::string statement;
    long s, t;
    RPoly printed;
    std::vector<std::tuple<std::string, Poly, Poly, std::optional<Poly>>> table;  // label, r0, printed, corrected
  };
  const Poly m = poly_a({9, 3, 1});
  std::vector<Family> families = {
      {"case6", "N(r+alpha-alpha') = r^3 - (a^2+3a+9) r + (a^2+3a+9)", 1, -1,
       RPoly(r * r * r) - lift(m) * r + lift(m),
       {{"f(1)", poly_a({1}), poly_a({1}), {}},
        {"f(2)", poly_a({2}), poly_a({-1, -3, -1}), {}},
        {"f(a+1)", poly_a({1, 1}), poly_a({1, -6}), {}},
        {"f(a+2)", poly_a({2, 1}), poly_a({-1, 0, 2}), {}},
        {"f(-a-2)", poly_a({-2, -1}), poly_a({19, 6}), {}},
        {"f(-a-3)", poly_a({-3, -1}), poly_a({9, -6, -2}), {}}}},
      {"case7", "N(r+2alpha-alpha') = r^3 + a r^2 - (2a^2+7a+21) r + (4a^2+12a+37)", 2, -1,
       RPoly(r * r * r) + A * r * r - lift(poly_a({21, 7, 2})) * r + lift(poly_a({37, 12, 4})),
       {{"f(2)", poly_a({2}), poly_a({3, 2}), {}},
        {"f(3)", poly_a({3}), poly_a({1, 0, -2}), {}},
        {"f(a+1)", poly_a({1, 1}), poly_a({17, -12}), {}},
        {"f(a+2)", poly_a({2, 1}), poly_a({3, -7, 3}), {}},
        // printed as 30a+37
        {"f(-2a-3)", poly_a({-3, -2}), poly_a({37, 30}), poly_a({73, 30})},
        {"f(-2a-4)", poly_a({-4, -2}), poly_a({57, 2, -6}), {}}}},
      {"case9", "N(r+2alpha-2alpha') = r^3 - (4a^2+12a+36) r + 8a^2+24a+72", 2, -2,
       RPoly(r * r * r) - lift(poly_a({36, 12, 4})) * r + lift(poly_a({72, 24, 8})),
       {{"f(1)", poly_a({1}), poly_a({37, 12, 4}), {}},
        {"f(3)", poly_a({3}), poly_a({-9, -12, -4}), {}},
        {"f(2a+1)", poly_a({1, 2}), poly_a({37, -54, -8}), {}},
        {"f(2a+3)", poly_a({3, 2}), poly_a({-9, -30, 8}), {}},
        {"f(-2a-3)", poly_a({-3, -2}), poly_a({153, 78, 8}), {}},
        {"f(-2a-5)", poly_a({-5, -2}), poly_a({127, 6, -8}), {}}}},
  };

  for (const auto& v : values) detail::value_check(report, v.name, v.statement, norm(v.elt), v.printed, v.corrected);

  for (const auto& fam : families) {
    CaseElement xi = scalar(r) + al.scaled(RPoly(fam.s)) + al1.scaled(RPoly(fam.t));
    detail::value_check(report, fam.tag + ".norm_polynomial", fam.statement, norm(xi), fam.printed);
    for (const auto& [label, r0, printed, corrected] : fam.table) {
      SymbolicElement x = sscalar(r0) + sal.scaled(Poly(fam.s)) + SymbolicElement::alpha_prime().scaled(Poly(fam.t));
      detail::value_check(report, fam.tag + "." + label, fam.tag + " " + label + " = " + format(printed), norm(x),
                          printed, corrected);
    }
  }

  // Cases 4, 5, 8, 10 reduce to earlier cases through conjugation.
  for (long t : {-2L, -1L, 1L, 2L}) {
    CaseElement base = scalar(r) + al.scaled(RPoly(t));
    CaseElement xi = scalar(r) + al1.scaled(RPoly(t));
    bool ok = conjugate(base, 1) == xi && norm(xi) == norm(base);
    report.add("case4.t=" + std::to_string(t), "r + t alpha' = sigma(r + t alpha), same norm", ok);
  }
  {
    CaseElement xi = al + al1 - scalar(r);
    bool ok = xi == -al2 + scalar(A - r) && conjugate(xi, 1) == scalar(A - r) - al &&
              norm(xi) == RPoly(norm(conjugate(xi, 1)));
    report.add("case5", "alpha + alpha' - r = -alpha'' + a - r; its conjugate a - r - alpha is of case-2 type", ok);
  }
  {
    CaseElement xi = scalar(r) + al.scaled(RPoly(2L)) + al1;
    CaseElement case6 = scalar(-r - A) + al - al1;  // r' + alpha - alpha' with r' = -r - a
    bool ok = xi == scalar(r + A) + al - al2 && conjugate(xi, 1) == -case6 && norm(xi) == RPoly(-norm(case6));
    report.add("case8", "r + 2alpha + alpha' = r + a + alpha - alpha''; its conjugate is of case-6 type", ok);
  }
  {
    CaseElement xi = scalar(r) + al.scaled(RPoly(2L)) + al1.scaled(RPoly(2L));
    bool ok = xi == scalar(r + A * RPoly(2L)) - al2.scaled(RPoly(2L)) &&
              conjugate(xi, 1) == scalar(r + A * RPoly(2L)) - al.scaled(RPoly(2L)) &&
              norm(xi) == norm(conjugate(xi, 1));
    report.add("case10", "r + 2alpha + 2alpha' = r + 2a - 2alpha''; its conjugate is of case-3 type", ok);
  }
  return report;
}

/// One row of Table 1: lhs * denominator = rhs, with lhs of norm +-(2a+3).
template <class E>
struct TableRow {
  std::string subtable;  // "all", "a=1", "a=2", "a=3"
  std::string lhs_text;
  std::string rhs_text;
  E lhs;
  E denominator;
  E rhs;
};

/// The nine rows valid for every a, over either realization.
template <class E>
std::vector<TableRow<E>> universal_table_rows(const typename E::param_type& p = typename E::param_type{}) {
  using C = typename E::coeff_type;
  const E one = E::one(p), al = E::alpha(p), al1 = E::alpha_prime(p);
  const C A = coefficient_traits<C>::a(p);
  auto k = [&](long v) { return E::scalar(C(v), p); };
  const E am1 = al - one;
  const E c1 = conjugate(am1, 1), c2 = conjugate(am1, 2);
  const E ap1 = al + one;
  return {
      {"all", "alpha-1", "(alpha-1)", am1, one, am1},
      {"all", "alpha+2", "-(alpha-1)''(alpha+1)", al + k(2), one, -(c2 * ap1)},
      {"all", "alpha-(a+1)", "-(alpha-1)'/(alpha+1)", al - E::scalar(C(A + C(1L)), p), ap1, -c1},
      {"all", "2alpha+1", "-(alpha-1)'alpha", al.scaled(C(2L)) + one, one, -(c1 * al)},
      {"all", "alpha+alpha'-a+1", "-(alpha-1)''", al + al1 - E::scalar(C(A - C(1L)), p), one, -c2},
      {"all", "alpha+alpha'-a-2", "(alpha-1)'alpha/(alpha+1)", al + al1 - E::scalar(C(A + C(2L)), p), ap1, c1 * al},
      {"all", "alpha+alpha'+1", "(alpha-1)(alpha+1)/alpha", al + al1 + one, al, am1 * ap1},
      {"all", "2alpha-alpha'+2", "-(alpha-1)'(alpha+1)", al.scaled(C(2L)) - al1 + k(2), one, -(c1 * ap1)},
      {"all", "2alpha+2alpha'-2a-1", "-(alpha-1)/(alpha+1)",
       al.scaled(C(2L)) + al1.scaled(C(2L)) - E::scalar(C(C(C(2L) * A) + C(1L)), p), ap1, -am1},
  };
}

/// Rows that only occur for a = 1, 2, 3 (empty otherwise).
inline std::vector<TableRow<Element>> exceptional_table_rows(const FieldParam& p) {
  const Element one = Element::one(p), al = Element::alpha(p), al1 = Element::alpha_prime(p);
  auto k = [&](long v) { return Element::scalar(Integer(v), p); };
  const Element am1 = al - one;
  const Element c1 = conjugate(am1, 1), c2 = conjugate(am1, 2);
  const Element ap1 = al + one;
  const Element two_al = al.scaled(Integer(2));
  if (p.a() == 1) {
    return {
        {"a=1", "alpha-3", "(alpha-1)''/(alpha+1)", al - k(3), ap1, c2},
        {"a=1", "2alpha+3", "(alpha-1)(alpha+1)^2/alpha", two_al + k(3), al, am1 * ap1 * ap1},
        {"a=1", "alpha+alpha'+2", "-(alpha-1)'(alpha+1)/alpha", al + al1 + k(2), al, -(c1 * ap1)},
        {"a=1", "alpha-alpha'+2", "(alpha-1)(alpha+1)", al - al1 + k(2), one, am1 * ap1},
        {"a=1", "2alpha+alpha'-3", "-(alpha-1)''alpha/(alpha+1)", two_al + al1 - k(3), ap1, -(c2 * al)},
        {"a=1", "2alpha+2alpha'-5", "(alpha-1)''alpha^2/(alpha+1)", two_al + al1.scaled(Integer(2)) - k(5), ap1,
         c2 * al * al},
    };
  }
  if (p.a() == 2) {
    return {
        {"a=2", "alpha-alpha'+4", "(alpha-1)alpha", al - al1 + k(4), one, am1 * al},
        {"a=2", "2alpha-alpha'+3", "(alpha-1)(alpha+1)", two_al - al1 + k(3), one, am1 * ap1},
        {"a=2", "2alpha+alpha'-6", "(alpha-1)''/(alpha+1)", two_al + al1 - k(6), ap1, c2},
    };
  }
  if (p.a() == 3) {
    return {
        {"a=3", "2alpha-alpha'+5", "(alpha-1)alpha", two_al - al1 + k(5), one, am1 * al},
        {"a=3", "2alpha-alpha'-10", "-(alpha-1)''/(alpha(alpha+1))", two_al - al1 - k(10), al * ap1, -c2},
    };
  }
  return {};
}

/// Left-hand elements of every Table 1 row that applies at this a.
inline std::vector<TableRow<Element>> table1_rows_at(const FieldParam& p) {
  auto rows = universal_table_rows<Element>(p);
  auto extra = exceptional_table_rows(p);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rows;
}

/// All 20 rows: the universal ones symbolically in a, the exceptional ones at
/// their parameter; each identity is checked with the denominator cleared,
/// together with |N(lhs)| = 2a+3.
inline TableReport verify_table1() {
  TableReport report{"table 1", {}};
  const Poly threshold = detail::poly_a({3, 2});
  for (const auto& row : universal_table_rows<SymbolicElement>()) {
    Poly n = norm(row.lhs);
    bool ok = row.lhs * row.denominator == row.rhs && (n == threshold || n == Poly(-threshold));
    report.add("all: " + row.lhs_text, row.lhs_text + " = " + row.rhs_text, ok, "N = " + format(n));
  }
  for (long a : {1L, 2L, 3L}) {
    const FieldParam p(a);
    for (const auto& row : exceptional_table_rows(p)) {
      Integer n = norm(row.lhs);
      bool ok = row.lhs * row.denominator == row.rhs && abs_value(n) == p.threshold();
      report.add(row.subtable + ": " + row.lhs_text, row.lhs_text + " = " + row.rhs_text, ok, "N = " + n.get_str());
    }
  }
  return report;
}

}  // namespace scf

#endif  // SCF_SMALL_NORM_HPP
