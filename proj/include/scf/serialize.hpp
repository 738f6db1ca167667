#ifndef SCF_SERIALIZE_HPP
#define SCF_SERIALIZE_HPP

// JSON (nlohmann, insertion-ordered keys) and CSV renderings. Big integers and
// rationals are always decimal strings, rationals as "p/q".

#include <scf/applications.hpp>
#include <scf/real_embeddings.hpp>
#include <scf/report.hpp>
#include <scf/ring.hpp>
#include <scf/small_norm.hpp>
#include <scf/unit_reduction.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace scf {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& v) { return v.get_str(); }
inline Json to_json(const Rational& q) { return to_string(q); }

/// Constant term first; nested for polynomials over polynomials.
template <class C>
Json to_json(const Polynomial<C>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

inline Json to_json(const Element& x) {
  return Json{{"r", to_json(x.r())}, {"s", to_json(x.s())}, {"t", to_json(x.t())}, {"a", to_json(x.a())}};
}

template <class C>
Json to_json(const RingElt<Polynomial<C>>& x) {
  return Json{{"r", to_json(x.r())}, {"s", to_json(x.s())}, {"t", to_json(x.t())}};
}

inline Element element_from_json(const Json& j) {
  const FieldParam p(parse_integer(j.at("a").get<std::string>()));
  return Element(p, parse_integer(j.at("r").get<std::string>()), parse_integer(j.at("s").get<std::string>()),
                 parse_integer(j.at("t").get<std::string>()));
}

inline Json to_json(const Interval& x) { return Json::array({to_json(x.lo()), to_json(x.hi())}); }

inline Interval interval_from_json(const Json& j) {
  return Interval(parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>()));
}

inline Json to_json(const RootEnclosure& e) {
  return Json{{"a", to_json(e.param().a())},
              {"bits", e.bits()},
              {"alpha", to_json(e.root(0))},
              {"alpha1", to_json(e.root(1))},
              {"alpha2", to_json(e.root(2))}};
}

inline RootEnclosure enclosure_from_json(const Json& j) {
  return RootEnclosure(FieldParam(parse_integer(j.at("a").get<std::string>())), j.at("bits").get<unsigned>(),
                       {interval_from_json(j.at("alpha")), interval_from_json(j.at("alpha1")),
                        interval_from_json(j.at("alpha2"))});
}

inline Json to_json(const UnitWord& w) { return Json{{"sign", w.sign}, {"i", w.i}, {"j", w.j}}; }

inline UnitWord unit_word_from_json(const Json& j) {
  return UnitWord{j.at("sign").get<int>(), j.at("i").get<long>(), j.at("j").get<long>()};
}

inline Json to_json(const Reduction& r) { return Json{{"eta", to_json(r.eta)}, {"reduced", to_json(r.reduced)}}; }

inline Json to_json(const CoefficientBounds& b) {
  return Json{{"s_bound", to_json(b.s_bound)},
              {"t_bound", to_json(b.t_bound)},
              {"paper_bound", to_json(b.paper_bound)},
              {"c", to_json(b.c)}};
}

inline Json witness_json(const Classification& c) {
  return std::visit(
      [](const auto& w) -> Json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, IntegerAssociate>) return Json{{"k", to_json(w.k)}, {"unit", to_json(w.unit)}};
        else if constexpr (std::is_same_v<W, AlphaMinusOneAssociate>)
          return Json{{"conj", w.conj_index}, {"unit", to_json(w.unit)}};
        else if constexpr (std::is_same_v<W, Counterexample>) return Json{{"reason", w.reason}};
        else return nullptr;
      },
      c);
}

inline Json to_json(const ClassifiedElement& c) {
  return Json{{"r", to_json(c.elt.r())},
              {"s", to_json(c.elt.s())},
              {"t", to_json(c.elt.t())},
              {"norm", to_json(c.norm_value)},
              {"class", class_name(c.classification)},
              {"witness", witness_json(c.classification)}};
}

/// One record per a; wall time is deliberately left out so output is reproducible.
inline Json to_json(const TheoremReport& r, bool with_elements = true) {
  Json j{{"a", to_json(r.param.a())},
         {"n_max", to_json(r.n_max)},
         {"s_bound", to_json(r.s_bound)},
         {"t_bound", to_json(r.t_bound)},
         {"verified", r.verified()},
         {"conjugates_pairwise_nonassociated", r.conjugates_pairwise_nonassociated},
         {"stats",
          {{"integer_associate", r.stats.integer_associates},
           {"alpha_minus_one_associate", r.stats.alpha_minus_one_associates},
           {"above_threshold", r.stats.above_threshold},
           {"counterexample", r.stats.counterexamples}}}};
  if (with_elements) {
    Json elems = Json::array();
    for (const auto& c : r.elements) elems.push_back(to_json(c));
    j["elements"] = std::move(elems);
  }
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(to_json(c));
  j["counterexamples"] = std::move(cex);
  return j;
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"statement", c.statement}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  return Json{{"title", r.title}, {"all_passed", r.all_passed()}, {"checks", std::move(checks)}};
}

inline Json to_json(const CorollaryHit& h) {
  Json polys = Json::array();
  for (const auto& p : h.generator_polys) polys.push_back(to_json(p));
  return Json{{"criterion", to_string(h.which)},
              {"a", to_json(h.a)},
              {"b", to_json(h.b)},
              {"m", to_json(h.m)},
              {"m_squarefree", h.m_squarefree},
              {"hit", h.is_hit()},
              {"excluded_reason", h.excluded_reason ? Json(*h.excluded_reason) : Json(nullptr)},
              {"generator_polys", std::move(polys)}};
}

inline Json to_json(const NonSquareCertificate& c) {
  return Json{{"a", to_json(c.a)},
              {"b", to_json(c.b)},
              {"b_below_threshold", c.b_below_threshold},
              {"coefficient_gcd", to_json(c.coefficient_gcd)},
              {"theorem_verified", c.theorem_verified},
              {"theorem_counterexamples", c.theorem_counterexamples},
              {"holds", c.holds()}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string corollary_csv_header() { return "a,b,m,squarefree,excluded_reason,c0,c1,c2,c3,c4,c5,c6"; }

/// Sextic coefficients low-to-high in columns c0..c6.
inline std::string to_csv(const CorollaryHit& h) {
  std::ostringstream out;
  out << h.a << ',' << h.b << ',' << h.m << ',' << (h.m_squarefree ? "true" : "false") << ','
      << detail::csv_field(h.excluded_reason.value_or(""));
  const Poly& p = h.generator_polys.front();
  for (std::size_t i = 0; i < 7; ++i) out << ',' << p.coefficient(i);
  return out.str();
}

inline std::string theorem_csv_header() {
  return "a,n_max,s_bound,t_bound,integer_associate,alpha_minus_one_associate,above_threshold,counterexample,verified";
}

inline std::string to_csv(const TheoremReport& r) {
  std::ostringstream out;
  out << r.param.a() << ',' << r.n_max << ',' << r.s_bound << ',' << r.t_bound << ',' << r.stats.integer_associates
      << ',' << r.stats.alpha_minus_one_associates << ',' << r.stats.above_threshold << ','
      << r.stats.counterexamples << ',' << (r.verified() ? "true" : "false");
  return out.str();
}

}  // namespace scf

#endif  // SCF_SERIALIZE_HPP
