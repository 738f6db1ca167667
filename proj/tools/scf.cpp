// scf: command-line front end for the simplest-cubic-field verifier.
//
// Exit codes: 0 success, 1 verification failure, 2 precision exhausted,
// 64 usage error.

#include <scf/scf.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitPrecision = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string a;
  std::string a_range;
  std::string format = "json";
  std::string output;
  unsigned jobs = 0;
  unsigned bits = 0;
  std::string n_max;
  long box = 0;
  bool summary = false;
  bool hits_only = false;
  std::string only;
  std::string criterion = "cor1";
  std::string coeffs;
  int k = 1;
  std::string c1 = "1";
  std::string c2 = "1";
};

unsigned default_bits() {
  const char* env = std::getenv("SCF_PRECISION");
  if (!env || !*env) return scf::kInitialBits;
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("SCF_PRECISION is not a number: ") + env);
  }
}

unsigned checked_bits(unsigned bits) {
  if (bits == 0) bits = default_bits();
  if (bits < 16 || bits > scf::kMaxBits) throw UsageError("precision must lie in [16, 4096], got " + std::to_string(bits));
  return bits;
}

scf::Integer parse_int_arg(const std::string& text, const std::string& what) {
  try {
    return scf::parse_integer(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": not an integer: '" + text + "'");
  }
}

scf::FieldParam parse_param(const std::string& text) {
  scf::Integer a = parse_int_arg(text, "--a");
  if (a < 1) throw UsageError("--a must be >= 1, got " + text);
  return scf::FieldParam(a);
}

/// --a N or --a-range lo:hi, exactly one.
std::pair<scf::Integer, scf::Integer> parse_range(const Options& o) {
  if (!o.a.empty() && !o.a_range.empty()) throw UsageError("give either --a or --a-range, not both");
  if (!o.a.empty()) {
    scf::Integer a = parse_param(o.a).a();
    return {a, a};
  }
  if (o.a_range.empty()) throw UsageError("one of --a or --a-range is required");
  auto colon = o.a_range.find(':');
  if (colon == std::string::npos) throw UsageError("--a-range expects lo:hi");
  scf::Integer lo = parse_int_arg(o.a_range.substr(0, colon), "--a-range");
  scf::Integer hi = parse_int_arg(o.a_range.substr(colon + 1), "--a-range");
  if (lo < 1 || lo > hi) throw UsageError("--a-range needs 1 <= lo <= hi");
  return {lo, hi};
}

scf::Element parse_coeffs(const scf::FieldParam& p, const std::string& text) {
  std::vector<scf::Integer> v;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) v.push_back(parse_int_arg(part, "--coeffs"));
  if (v.size() != 3) throw UsageError("--coeffs expects r,s,t");
  return scf::Element(p, v[0], v[1], v[2]);
}

scf::Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return scf::parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(what + ": not a rational: '" + text + "'");
  }
}

void check_format(const std::string& f) {
  if (f != "json" && f != "text" && f != "csv") throw UsageError("--format must be json, text or csv");
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs work(0..count-1) on a bounded pool and hands results to sink in index
/// order. The first exception (by index) is rethrown after the pool drains.
template <class R, class Work, class Sink>
void ordered_map(std::size_t count, unsigned jobs, Work work, Sink sink) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<char> done(count, 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      std::optional<R> r;
      std::exception_ptr err;
      try {
        r.emplace(work(i));
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
        errors[i] = err;
        done[i] = 1;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(worker);
  std::exception_ptr failure;
  for (std::size_t i = 0; i < count && !failure; ++i) {
    std::optional<R> r;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i] != 0; });
      if (errors[i]) failure = errors[i];
      else r = std::move(slots[i]);
      slots[i].reset();
    }
    if (failure) {
      next.store(count);
      break;
    }
    sink(*r);
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void trailer(std::size_t records, unsigned jobs, std::chrono::steady_clock::time_point start) {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << scf::Json{{"trailer", {{"records", records}, {"jobs", jobs}, {"wall_seconds", secs}}}}.dump() << '\n';
}

// --- verify-theorem ---------------------------------------------------------

struct TheoremRun {
  scf::TheoremReport report;
  std::optional<scf::TheoremReport> box;
  std::size_t unmatched = 0;
};

int cmd_verify_theorem(const Options& o) {
  check_format(o.format);
  auto [lo, hi] = parse_range(o);
  const unsigned bits = checked_bits(o.bits);
  std::optional<scf::Integer> n_max;
  if (!o.n_max.empty()) n_max = parse_int_arg(o.n_max, "--n-max");
  if (o.box < 0) throw UsageError("--box must be >= 1");
  const std::size_t count = scf::Integer(hi - lo + 1).get_ui();
  const unsigned jobs = worker_count(o.jobs);
  const auto start = std::chrono::steady_clock::now();

  Output sink(o.output);
  std::ostream& out = sink.out();
  if (o.format == "csv") out << scf::theorem_csv_header() << ",box_unmatched\n";
  bool all_ok = true;
  ordered_map<TheoremRun>(
      count, jobs,
      [&](std::size_t i) {
        const scf::FieldParam p(scf::Integer(lo + i));
        if (n_max && (*n_max < 1 || *n_max > p.threshold())) {
          throw UsageError("--n-max must lie in [1, 2a+3] for a = " + p.a().get_str());
        }
        TheoremRun run{scf::verify_theorem(p, scf::isolate_roots(p, bits), n_max), std::nullopt, 0};
        if (o.box > 0) {
          run.box = scf::box_oracle(p, o.box);
          run.unmatched = scf::unmatched_box_elements(*run.box, run.report).size();
        }
        return run;
      },
      [&](const TheoremRun& run) {
        const auto& r = run.report;
        bool ok = r.verified() && (!run.box || (run.box->verified() && run.unmatched == 0));
        all_ok = all_ok && ok;
        if (o.format == "json") {
          scf::Json j = scf::to_json(r, !o.summary);
          if (run.box) {
            j["box"] = {{"B", o.box},
                        {"counterexamples", run.box->counterexamples.size()},
                        {"unmatched", run.unmatched}};
          }
          out << j.dump() << '\n';
        } else if (o.format == "csv") {
          out << scf::to_csv(r) << ',' << run.unmatched << '\n';
        } else {
          out << "a=" << r.param.a() << " n_max=" << r.n_max << " |s|<=" << r.s_bound << " |t|<=" << r.t_bound
              << " elements=" << r.elements.size() << " integer=" << r.stats.integer_associates
              << " alpha-1=" << r.stats.alpha_minus_one_associates << " above=" << r.stats.above_threshold
              << " counterexamples=" << r.stats.counterexamples;
          if (run.box) out << " box_unmatched=" << run.unmatched;
          out << (ok ? " ok" : " FAILED") << '\n';
          for (const auto& c : r.counterexamples) {
            out << "  counterexample (" << c.elt.r() << ',' << c.elt.s() << ',' << c.elt.t() << ") N=" << c.norm_value
                << '\n';
          }
        }
        out.flush();
      });
  trailer(count, jobs, start);
  return all_ok ? kExitOk : kExitFailure;
}

// --- verify-identities ------------------------------------------------------

int cmd_verify_identities(const Options& o) {
  check_format(o.format);
  std::vector<std::pair<std::string, scf::Report>> suites;
  const bool any = o.only.empty();
  auto wants_suite = [&](const std::string& name) { return any || o.only == name; };
  suites.emplace_back("identities", scf::verify_symbolic_identities());
  suites.emplace_back("cases", scf::verify_case_norms());
  suites.emplace_back("table1", scf::verify_table1());

  Output sink(o.output);
  std::ostream& out = sink.out();
  if (o.format == "csv") out << "suite,name,status,statement,detail\n";
  std::size_t shown = 0;
  bool ok = true;
  for (const auto& [suite, report] : suites) {
    const bool whole = wants_suite(suite);
    for (const auto& c : report.checks) {
      if (!whole && c.name != o.only) continue;
      ++shown;
      ok = ok && c.status != scf::CheckStatus::failed;
      if (o.format == "json") {
        scf::Json j{{"suite", suite}, {"name", c.name}, {"status", scf::to_string(c.status)}, {"statement", c.statement}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        out << j.dump() << '\n';
      } else if (o.format == "csv") {
        out << suite << ',' << scf::detail::csv_field(c.name) << ',' << scf::to_string(c.status) << ','
            << scf::detail::csv_field(c.statement) << ',' << scf::detail::csv_field(c.detail) << '\n';
      } else {
        out << scf::to_string(c.status) << ' ' << c.name << ": " << c.statement;
        if (!c.detail.empty()) out << "  [" << c.detail << ']';
        out << '\n';
      }
    }
  }
  if (shown == 0) throw UsageError("--only matches no suite or check: " + o.only);
  return ok ? kExitOk : kExitFailure;
}

// --- scan -------------------------------------------------------------------

int cmd_scan(const Options& o) {
  check_format(o.format);
  scf::Corollary which;
  try {
    which = scf::parse_corollary(o.criterion);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto [lo, hi] = parse_range(o);
  const unsigned jobs = worker_count(o.jobs);
  const auto start = std::chrono::steady_clock::now();

  // Chunks of consecutive a; the scan is stable under range splitting.
  constexpr unsigned long chunk = 1000;
  const scf::Integer total = hi - lo + 1;
  const std::size_t chunks = scf::Integer((total + chunk - 1) / chunk).get_ui();

  Output sink(o.output);
  std::ostream& out = sink.out();
  if (o.format == "csv") out << scf::corollary_csv_header() << '\n';
  std::size_t records = 0;
  ordered_map<std::vector<scf::CorollaryHit>>(
      chunks, jobs,
      [&](std::size_t i) {
        scf::Integer from = lo + i * chunk;
        scf::Integer to = from + (chunk - 1);
        if (to > hi) to = hi;
        return scf::scan_corollary(which, from, to);
      },
      [&](const std::vector<scf::CorollaryHit>& hits) {
        for (const auto& h : hits) {
          if (o.hits_only && !h.is_hit()) continue;
          ++records;
          if (o.format == "json") out << scf::to_json(h).dump() << '\n';
          else if (o.format == "csv") out << scf::to_csv(h) << '\n';
          else {
            out << scf::to_string(which) << " a=" << h.a << " b=" << h.b << " m=" << h.m << ' '
                << (h.is_hit() ? std::string("hit") : "excluded: " + *h.excluded_reason) << '\n';
          }
        }
      });
  trailer(records, jobs, start);
  return kExitOk;
}

// --- one-shot commands ------------------------------------------------------

void emit(const Options& o, const scf::Json& j, const std::string& text) {
  Output sink(o.output);
  if (o.format == "text") sink.out() << text << '\n';
  else sink.out() << j.dump() << '\n';
}

int cmd_norm(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  const scf::Element x = parse_coeffs(p, o.coeffs);
  const scf::Integer n = scf::norm(x);
  if (n != scf::norm_form(x)) throw scf::arithmetic_error("norm paths disagree");
  emit(o, {{"element", scf::to_json(x)}, {"norm", scf::to_json(n)}}, n.get_str());
  return kExitOk;
}

int cmd_trace(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  const scf::Element x = parse_coeffs(p, o.coeffs);
  const scf::Integer t = scf::trace(x);
  emit(o, {{"element", scf::to_json(x)}, {"trace", scf::to_json(t)}}, t.get_str());
  return kExitOk;
}

int cmd_conjugate(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  const scf::Element x = parse_coeffs(p, o.coeffs);
  const scf::Element y = scf::conjugate(x, o.k);
  emit(o, {{"element", scf::to_json(x)}, {"k", ((o.k % 3) + 3) % 3}, {"conjugate", scf::to_json(y)}},
       y.r().get_str() + "," + y.s().get_str() + "," + y.t().get_str());
  return kExitOk;
}

int cmd_roots(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  const scf::RootEnclosure enc = scf::isolate_roots(p, checked_bits(o.bits));
  scf::Json j = scf::to_json(enc);
  auto convention = scf::with_refinement(enc, scf::verify_embedding_convention, "embedding convention");
  j["embedding_convention"] = convention;
  std::string text = "alpha   " + scf::to_string(enc.root(0)) + "\nalpha'  " + scf::to_string(enc.root(1)) +
                     "\nalpha'' " + scf::to_string(enc.root(2));
  bool ok = convention;
  if (p.a() >= 7) {
    scf::BracketReport br = scf::verify_bracket_inequalities(enc);
    j["brackets"] = scf::to_json(br);
    ok = ok && br.all_passed();
    for (const auto& c : br.checks) text += "\n" + std::string(scf::to_string(c.status)) + " " + c.statement;
  }
  emit(o, j, text);
  return ok ? kExitOk : kExitFailure;
}

int cmd_reduce(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  const scf::Element x = parse_coeffs(p, o.coeffs);
  if (x.is_zero()) throw UsageError("reduce needs a nonzero element");
  const scf::Rational c1 = parse_rational_arg(o.c1, "--c1"), c2 = parse_rational_arg(o.c2, "--c2");
  if (c1 <= 0 || c2 <= 0) throw UsageError("--c1 and --c2 must be positive");
  const scf::Reduction red = scf::reduce(x, c1, c2, scf::isolate_roots(p, checked_bits(o.bits)));
  const auto& e = red.eta;
  emit(o, scf::to_json(red),
       "eta = " + std::string(e.sign < 0 ? "-" : "") + "alpha^" + std::to_string(e.i) + " alpha''^" +
           std::to_string(e.j) + "\nreduced = " + red.reduced.r().get_str() + "," + red.reduced.s().get_str() + "," +
           red.reduced.t().get_str());
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  scf::Integer n_max = o.n_max.empty() ? p.threshold() : parse_int_arg(o.n_max, "--n-max");
  if (n_max < 1 || n_max > p.threshold()) throw UsageError("--n-max must lie in [1, 2a+3]");
  const auto elems = scf::enumerate_small_norm(p, n_max, scf::isolate_roots(p, checked_bits(o.bits)));
  scf::Json arr = scf::Json::array();
  std::string text;
  for (const auto& x : elems) {
    scf::Integer n = scf::norm(x);
    arr.push_back({{"r", scf::to_json(x.r())}, {"s", scf::to_json(x.s())}, {"t", scf::to_json(x.t())},
                   {"norm", scf::to_json(n)}});
    text += x.r().get_str() + "," + x.s().get_str() + "," + x.t().get_str() + " N=" + n.get_str() + "\n";
  }
  if (!text.empty()) text.pop_back();
  emit(o, {{"a", scf::to_json(p.a())}, {"n_max", scf::to_json(n_max)}, {"elements", std::move(arr)}}, text);
  return kExitOk;
}

int cmd_extfield(const Options& o) {
  const scf::FieldParam p = parse_param(o.a);
  scf::Corollary which;
  try {
    which = scf::parse_corollary(o.criterion);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto polys = scf::extension_generator_poly(p, which);
  const auto check = scf::sextic_root_check(p, which);
  scf::Json j{{"a", scf::to_json(p.a())},
              {"which", scf::to_string(which)},
              {"sextic", scf::to_json(polys.front())},
              {"root_enclosure", scf::to_json(check.root)},
              {"value_enclosure", scf::to_json(check.value)},
              {"contains_zero", check.contains_zero}};
  std::string text = scf::format(polys.front(), "y") + "\nsextic at sqrt(theta) contains 0: " +
                     (check.contains_zero ? "yes" : "no");
  bool ok = check.contains_zero;
  scf::Integer b;
  if (which == scf::Corollary::cor1 && scf::exact_sqrt(p.threshold(), b)) {
    const auto cert = scf::non_square_certificate(p);
    j["non_square_certificate"] = scf::to_json(cert);
    text += "\n" + b.get_str() + " < " + p.threshold().get_str() + ", gcd(2,1,0) = " + cert.coefficient_gcd.get_str() +
            ", theorem " + (cert.theorem_verified ? "verified" : "NOT verified");
    ok = ok && cert.holds();
  }
  emit(o, j, text);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal norms in simplest cubic fields x^3 - a x^2 - (a+3) x - 1"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json | text | csv")->capture_default_str();
    sub->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };
  auto add_bits = [&](CLI::App* sub) {
    sub->add_option("--bits", o.bits, "initial precision in bits, 16..4096 (default $SCF_PRECISION or 64)");
  };
  auto add_elem = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "field parameter a >= 1")->required();
    sub->add_option("--coeffs", o.coeffs, "r,s,t of r + s alpha + t alpha'")->required()->allow_extra_args(false);
  };

  auto* vt = app.add_subcommand("verify-theorem", "enumerate and classify all elements of norm <= 2a+3");
  vt->add_option("--a", o.a, "single parameter");
  vt->add_option("--a-range", o.a_range, "inclusive range lo:hi");
  vt->add_option("--jobs,-j", o.jobs, "worker threads (default: all cores)");
  vt->add_option("--n-max", o.n_max, "norm bound (default 2a+3)");
  vt->add_option("--box", o.box, "also run the exhaustive box oracle with |r|,|s|,|t| <= B");
  vt->add_flag("--summary", o.summary, "omit the element list from JSON records");
  add_format(vt);
  add_bits(vt);

  auto* vi = app.add_subcommand("verify-identities", "symbolic identities, case norms and table rows");
  vi->add_option("--only", o.only, "identities | cases | table1 | <check name>");
  add_format(vi);

  auto* sc = app.add_subcommand("scan", "parameters with 2a+3 (cor1) or 6a+19 (cor2) a square");
  sc->add_option("--criterion", o.criterion, "cor1 | cor2")->capture_default_str();
  sc->add_option("--a", o.a, "single parameter");
  sc->add_option("--a-range", o.a_range, "inclusive range lo:hi");
  sc->add_option("--jobs,-j", o.jobs, "worker threads (default: all cores)");
  sc->add_flag("--hits-only", o.hits_only, "drop excluded parameters");
  add_format(sc);

  auto* nm = app.add_subcommand("norm", "norm of r + s alpha + t alpha'");
  add_elem(nm);
  add_format(nm);
  auto* tr = app.add_subcommand("trace", "trace of r + s alpha + t alpha'");
  add_elem(tr);
  add_format(tr);
  auto* cj = app.add_subcommand("conjugate", "sigma^k of r + s alpha + t alpha'");
  add_elem(cj);
  cj->add_option("--k", o.k, "power of sigma")->capture_default_str();
  add_format(cj);

  auto* ro = app.add_subcommand("roots", "certified enclosures of the three roots");
  ro->add_option("--a", o.a, "field parameter a >= 1")->required();
  add_bits(ro);
  add_format(ro);

  auto* rd = app.add_subcommand("reduce", "unit eta with c1 <= |x eta| < (a+3)c1, c2 <= |(x eta)'| < (a+4)c2");
  add_elem(rd);
  rd->add_option("--c1", o.c1, "positive rational")->capture_default_str();
  rd->add_option("--c2", o.c2, "positive rational")->capture_default_str();
  add_bits(rd);
  add_format(rd);

  auto* en = app.add_subcommand("enumerate", "reduced elements with 0 < |N| <= n_max");
  en->add_option("--a", o.a, "field parameter a >= 1")->required();
  en->add_option("--n-max", o.n_max, "norm bound (default 2a+3)");
  add_bits(en);
  add_format(en);

  auto* ex = app.add_subcommand("extfield", "sextic defining polynomial of sqrt(theta)");
  ex->add_option("--a", o.a, "field parameter a >= 1")->required();
  ex->add_option("--which", o.criterion, "cor1 | cor2")->capture_default_str();
  add_format(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    check_format(o.format);
    if (*vt) return cmd_verify_theorem(o);
    if (*vi) return cmd_verify_identities(o);
    if (*sc) return cmd_scan(o);
    if (*nm) return cmd_norm(o);
    if (*tr) return cmd_trace(o);
    if (*cj) return cmd_conjugate(o);
    if (*ro) return cmd_roots(o);
    if (*rd) return cmd_reduce(o);
    if (*en) return cmd_enumerate(o);
    if (*ex) return cmd_extfield(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const scf::precision_exhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
