// cmreg: exact invariants, local cohomology, and bound audits for
// homogeneous ideals, driven by line-oriented .ideal files.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmreg/bounds.hpp"
#include "cmreg/cohomology.hpp"
#include "cmreg/corpus.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/hilbert.hpp"
#include "cmreg/ideal_io.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace cmreg;

namespace {

struct Common {
  std::string order;  // empty = the file's order (or grevlex)
  std::uint64_t seed = 0;
  int trials = 3;
  int budget_degree = 40;
  std::string window;  // "t0:t1"
  std::string format = "text";
  bool strict = false;
};

void add_common(CLI::App* sub, Common& c, bool with_order = true) {
  if (with_order)
    sub->add_option("--order", c.order,
                    "term order: lex | grlex | grevlex | block(<k>)");
  sub->add_option("--seed", c.seed, "seed for randomized reductions");
  sub->add_option("--trials", c.trials, "agreement trials for gin")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget-degree", c.budget_degree,
                  "S-pair degree budget for Groebner runs")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--strict", c.strict, "reject unknown expect: keys");
}

GBOptions gb_options(const Common& c) {
  GBOptions o;
  o.budget_degree = c.budget_degree;
  return o;
}

TermOrder pick_order(const Common& c, const IdealFile& f) {
  return c.order.empty() ? f.order : TermOrder::parse(c.order);
}

std::pair<long, long> pick_window(const Common& c, long def_lo, long def_hi) {
  if (c.window.empty()) return {def_lo, def_hi};
  auto colon = c.window.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::invalid_input, "window must be t0:t1");
  long lo, hi;
  try {
    lo = std::stol(c.window.substr(0, colon));
    hi = std::stol(c.window.substr(colon + 1));
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_input, "window must be t0:t1 with integer ends");
  }
  if (lo > hi) fail(ErrorCode::invalid_input, "window start exceeds end");
  return {lo, hi};
}

IdealHandle make_handle(const IdealFile& f, const Common& c) {
  return IdealHandle(f.ring, f.gens, c.seed, c.trials, gb_options(c));
}

// ---- formatting helpers ----

// Expands P(t) = sum_i (-1)^i e_i C(t+d-1-i, d-1-i) into monomial-basis
// rational coefficients c[k] of t^k.
std::vector<mpq_class> expand_hpoly(const HilbertPolynomial& hp) {
  std::vector<mpq_class> out(std::max(hp.d, 1), mpq_class(0));
  for (int i = 0; i < hp.d; ++i) {
    int k = hp.d - 1 - i;  // C(t + k, k)
    std::vector<mpq_class> term{1};
    for (int j = 1; j <= k; ++j) {  // multiply by (t + k - j + 1) / j
      std::vector<mpq_class> next(term.size() + 1, mpq_class(0));
      mpq_class shift(k - j + 1);
      for (std::size_t a = 0; a < term.size(); ++a) {
        next[a + 1] += term[a];
        next[a] += term[a] * shift;
      }
      for (auto& q : next) q /= j;
      term = std::move(next);
    }
    mpq_class sign = (i % 2 == 0) ? 1 : -1;
    for (std::size_t a = 0; a < term.size(); ++a)
      out[a] += sign * mpq_class(hp.e[i]) * term[a];
  }
  return out;
}

std::string format_q(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  return r.get_str();
}

// Renders coefficients c[k] of t^k as "a*t^2 + b*t + c" with 1-coefficients
// and zero terms elided.
std::string format_poly_in(const std::vector<mpq_class>& coeffs,
                           const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const mpq_class& q = coeffs[k];
    if (q == 0) continue;
    bool neg = sgn(q) < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    mpq_class a = abs(mpq_class(q));
    if (a != 1 || k == 0) {
      os << format_q(a);
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return first ? "0" : os.str();
}

std::string format_z_poly(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
  return format_poly_in(q, "z");
}

// Run-length compressed integer tuple: (1, 0^16).
std::string format_runs(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  std::size_t i = 0;
  bool first = true;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!first) os << ", ";
    first = false;
    os << v[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

template <typename T>
std::string format_tuple(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_same_v<T, mpz_class>)
      os << v[i].get_str();
    else
      os << v[i];
  }
  os << ")";
  return os.str();
}

std::string gens_str(const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].str();
  }
  os << ")";
  return os.str();
}

void emit(const ordered_json& j, const Common& c, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---- subcommands ----

int run_gb(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  TermOrder order = pick_order(c, f);
  GroebnerBasis G = buchberger(f.ring, f.gens, order, gb_options(c));
  ordered_json j{{"id", f.id}, {"order", order.name()}};
  std::ostringstream os;
  os << "order: " << order.name() << "\n"
     << "reduced basis (" << G.basis().size() << "):\n";
  for (const Polynomial& g : G.basis()) {
    os << "  " << g.str() << "\n";
    j["basis"].push_back(g.str());
  }
  emit(j, c, os.str());
  return 0;
}

int run_in(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  TermOrder order = pick_order(c, f);
  MonomialIdeal I = initial_ideal(f.ring, f.gens, order, gb_options(c));
  ordered_json j{{"id", f.id},
                 {"order", order.name()},
                 {"initial_ideal", I.str()}};
  emit(j, c, "in_" + order.name() + " = " + I.str() + "\n");
  return 0;
}

int run_gin(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  TermOrder order = c.order.empty() ? TermOrder::grevlex()
                                    : TermOrder::parse(c.order);
  GinResult g = generic_initial_ideal(f.ring, f.gens, order, c.seed, c.trials,
                                      gb_options(c));
  bool stable = is_strongly_stable(g.ideal);
  ordered_json j{{"id", f.id},          {"order", order.name()},
                 {"gin", g.ideal.str()}, {"trials", g.trials},
                 {"agreed", g.agreed},  {"strongly_stable", stable}};
  std::ostringstream os;
  os << "gin_" << order.name() << " = " << g.ideal.str() << "\n"
     << "trials: " << g.trials << (g.agreed ? " (agreed)" : " (DISAGREED)")
     << ", strongly stable: " << (stable ? "yes" : "no") << "\n";
  emit(j, c, os.str());
  return 0;
}

int run_hilbert(const std::string& path, const Common& c,
                const std::string& show) {
  IdealFile f = load_ideal_file(path, c.strict);
  IdealHandle H = make_handle(f, c);
  const HilbertSeries& hs = H.series();
  const HilbertPolynomial& hp = H.hpoly();

  ordered_json j{{"id", f.id},
                 {"nvars", hs.nvars},
                 {"dim", hs.dim},
                 {"numerator", ordered_json::array()},
                 {"e", ordered_json::array()},
                 {"postulation", H.postulation()}};
  for (const mpz_class& a : hs.numerator) j["numerator"].push_back(a.get_str());
  for (const mpz_class& a : hp.e) j["e"].push_back(a.get_str());

  std::ostringstream os;
  os << "numerator = " << format_z_poly(hs.numerator) << "\n"
     << "dim R/I = " << hs.dim << ", e = " << H.multiplicity().get_str()
     << "\n"
     << "P(t) = " << format_poly_in(expand_hpoly(hp), "t") << "\n"
     << "e = " << format_tuple(hp.e) << "\n"
     << "postulation = " << H.postulation() << "\n";

  if (show == "gotzmann" || show == "all") {
    const GotzmannData& g = H.gotzmann();
    os << "c = " << format_runs(g.c) << "\n"
       << "s = " << g.s << "\n"
       << "B = " << format_tuple(g.B) << "\n";
    j["gotzmann_c"] = g.c;
    j["gotzmann_s"] = g.s;
    j["B"] = ordered_json::array();
    for (const mpz_class& b : g.B) j["B"].push_back(b.get_str());
  }
  if (show == "values" || show == "all") {
    auto [lo, hi] = pick_window(c, 0, std::max(H.postulation(), 0L) + 5);
    os << "H(" << lo << ".." << hi << ") =";
    j["H"] = ordered_json::array();
    for (long t = lo; t <= hi; ++t) {
      os << " " << hs.function(t).get_str();
      j["H"].push_back(hs.function(t).get_str());
    }
    os << "\n";
  }
  emit(j, c, os.str());
  return 0;
}

int run_reg(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  IdealHandle H = make_handle(f, c);
  const RegularityResult& r = H.regularity_result();
  std::string confidence =
      r.upper_bound_only ? "upper-bound" : (r.exact ? "exact" : "generic");
  ordered_json j{{"id", f.id},
                 {"reg_quotient", r.reg_quotient},
                 {"reg", r.reg_ideal},
                 {"method", r.method},
                 {"confidence", confidence}};
  std::ostringstream os;
  os << "reg(R/I) = " << r.reg_quotient << ", reg I = " << r.reg_ideal << "\n"
     << "method: " << r.method << " (" << confidence << ")\n";
  if (r.upper_bound_only)
    os << "warning: trials disagreed; reported value is the minimum over "
          "trials and only an upper bound\n";
  emit(j, c, os.str());
  return 0;
}

int run_adeg(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  IdealHandle H = make_handle(f, c);
  if (!H.monomial())
    fail(ErrorCode::unsupported,
         "exact arithmetic degree needs a monomial ideal; use `audit` for "
         "the initial-ideal upper estimate");
  DegreeData d = degree_data(*H.monomial());
  ordered_json j{{"id", f.id},
                 {"dim", d.dim},
                 {"codim", d.codim},
                 {"e", d.degree},
                 {"adeg", d.arith_degree},
                 {"layers", d.layer}};
  std::ostringstream os;
  os << "adeg = " << d.arith_degree << ", e = " << d.degree
     << ", dim R/I = " << d.dim << "\n"
     << "standard pairs by face dimension: " << format_tuple(d.layer) << "\n";
  emit(j, c, os.str());
  return 0;
}

int run_cohomology(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  IdealHandle H = make_handle(f, c);
  const CohomologyTable& tbl = H.table();
  bool own = H.monomial().has_value() && is_borel_type(*H.monomial());
  long d = tbl.dim;
  auto [lo, hi] =
      pick_window(c, -(H.reg_quotient() + d + 5), H.reg_quotient() + 5);

  ordered_json j{{"id", f.id}, {"t_lo", lo}, {"t_hi", hi},
                 {"dim", tbl.dim}, {"reg_quotient", tbl.reg_quotient}};
  std::ostringstream os;
  if (!own)
    os << "note: table computed from the generic initial ideal; individual "
          "h^j are upper estimates for the original (reg and depth are "
          "preserved)\n";
  os << "t:   ";
  for (long t = lo; t <= hi; ++t) os << t << " ";
  os << "\n";
  j["a"] = ordered_json::array();
  for (int jj = 0; jj <= tbl.dim; ++jj) {
    os << "h^" << jj << ": ";
    ordered_json row = ordered_json::array();
    for (long t = lo; t <= hi; ++t) {
      mpz_class v = tbl.value(jj, t);
      os << v.get_str() << " ";
      row.push_back(v.get_str());
    }
    os << "\n";
    j["h"].push_back(row);
    j["a"].push_back(tbl.a[jj] == kMinusInfinity
                         ? ordered_json(nullptr)
                         : ordered_json(tbl.a[jj]));
  }
  os << "a = (";
  for (int jj = 0; jj <= tbl.dim; ++jj) {
    if (jj) os << ", ";
    if (tbl.a[jj] == kMinusInfinity)
      os << "-inf";
    else
      os << tbl.a[jj];
  }
  os << "), reg(R/I) = " << tbl.reg_quotient << "\n";
  j["from_gin"] = !own;
  emit(j, c, os.str());
  return 0;
}

int run_lex_segment(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  IdealHandle H = make_handle(f, c);
  MonomialIdeal L = lex_segment_ideal(H.series(), f.ring);
  long maxdeg = 0;
  for (const Monomial& m : L.gens())
    maxdeg = std::max(maxdeg, static_cast<long>(m.degree()));
  ordered_json j{{"id", f.id},
                 {"lex_segment", L.str()},
                 {"ngens", L.ngens()},
                 {"max_degree", maxdeg}};
  std::ostringstream os;
  os << "lex-segment ideal = " << L.str() << "\n"
     << "generators: " << L.ngens() << ", max degree: " << maxdeg << "\n";
  emit(j, c, os.str());
  return 0;
}

int run_section(const std::string& path, const Common& c) {
  IdealFile f = load_ideal_file(path, c.strict);
  SectionResult s = hyperplane_section(f.ring, f.gens, c.seed, gb_options(c));
  IdealFile out;
  out.id = f.id + "-section";
  out.ring = s.ring;
  out.gens = s.gens;
  std::string text = serialize_ideal(out);
  ordered_json j{{"id", out.id}, {"nvars", s.ring->nvars}, {"seed", s.seed}};
  for (const Polynomial& g : s.gens) j["gens"].push_back(g.str());
  emit(j, c, "# generic hyperplane section (seed " + std::to_string(s.seed) +
                 ")\n" + text);
  return 0;
}

// Compares an expect: entry against the snapshot.  Exact invariants compare
// for equality; values the pipeline can only bound from above (adeg via gin,
// regularity when trials disagreed) degrade to "computed estimate must not
// fall below the expected true value".
void append_expect_checks(BoundReport& rep, const IdealFile& f) {
  const InvariantSnapshot& v = rep.invariants;
  for (const auto& [key, want] : f.expect) {
    BoundCheck ck;
    ck.name = "expected-" + key;
    ck.relation = "eq";
    ck.hypotheses_met = true;
    std::optional<mpz_class> got;
    bool estimate = false;
    if (key == "dim") got = v.d;
    else if (key == "codim") got = v.c;
    else if (key == "delta") got = v.delta;
    else if (key == "depth") got = v.depth;
    else if (key == "e") got = v.e;
    else if (key == "postulation") got = v.postulation;
    else if (key == "s") got = v.gotzmann_s;
    else if (key == "e_1") {
      if (v.e_list.size() > 1) got = v.e_list[1];
    } else if (key == "adeg") {
      if (v.adeg) {
        got = *v.adeg;
        estimate = !v.adeg_exact;
      }
    } else if (key == "reg" || key == "regq") {
      got = key == "reg" ? v.reg_ideal : v.reg_quotient;
      estimate = v.reg_confidence == "upper-bound";
    }
    if (!got) {
      rep.errors.push_back("expected-" + key +
                           ": invariant not available for this ideal");
      continue;
    }
    if (estimate) {
      ck.relation = "le";
      ck.actual = want;
      ck.bound = *got;
      ck.satisfied = want <= *got;
      ck.note = "computed value is an upper estimate; checking it does not "
                "undercut the expected exact value";
    } else {
      ck.actual = *got;
      ck.bound = want;
      ck.satisfied = *got == want;
    }
    ck.slack = ck.bound - ck.actual;
    if (!ck.satisfied) rep.violation = true;
    rep.checks.push_back(std::move(ck));
  }
}

int run_audit(const std::string& path, const Common& c,
              const std::string& report_path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.path().extension() == ".ideal") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      fail(ErrorCode::invalid_input,
           "no .ideal files in directory '" + path + "'");
  } else {
    files.emplace_back(path);
  }

  std::vector<BoundReport> reports;
  std::map<std::string, double> timings;
  std::ostringstream os;
  for (const fs::path& p : files) {
    auto start = std::chrono::steady_clock::now();
    IdealFile f = load_ideal_file(p.string(), c.strict);
    IdealHandle H = make_handle(f, c);
    BoundReport rep = audit_ideal(H, f.id);
    append_expect_checks(rep, f);
    std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - start;
    timings[f.id] = dt.count();

    int violations = 0;
    for (const BoundCheck& ck : rep.checks)
      if (ck.hypotheses_met && !ck.satisfied) ++violations;
    os << rep.id << ": checks: " << rep.checks.size()
       << ", violations: " << violations << ", errors: " << rep.errors.size()
       << "\n";
    for (const BoundCheck& ck : rep.checks)
      if (ck.hypotheses_met && !ck.satisfied)
        os << "  violation: " << ck.name << ": actual "
           << ck.actual.get_str() << " vs bound " << ck.bound.get_str()
           << "\n  reproduce: cmreg audit " << p.string() << " --seed "
           << c.seed << " --trials " << c.trials << "\n";
    for (const std::string& e : rep.errors) os << "  error: " << e << "\n";
    reports.push_back(std::move(rep));
  }

  bool violated = false;
  for (const BoundReport& r : reports) violated |= r.violation;
  os << (violated ? "violations found" : "all bounds satisfied") << " ("
     << reports.size() << " ideal" << (reports.size() == 1 ? "" : "s")
     << ")\n";

  std::string json_text = report_json(reports, c.seed, c.trials, timings);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) fail(ErrorCode::invalid_input,
                   "cannot write report to '" + report_path + "'");
    out << json_text;
  }
  if (c.format == "json")
    std::cout << json_text;
  else
    std::cout << os.str();
  return violated ? 2 : 0;
}

int run_enumerate(int n, int a, int d, const Common& c) {
  FinitenessResult r = finiteness_explorer(n, a, d);
  ordered_json j{{"n", r.n},
                 {"a", r.a},
                 {"d", r.d},
                 {"ideals_examined", r.ideals_examined},
                 {"distinct_hilbert_functions", r.functions.size()},
                 {"max_reg_quotient", r.max_reg_quotient},
                 {"reg_cap", r.reg_cap.get_str()},
                 {"all_within_cap", r.all_within_cap}};
  std::ostringstream os;
  os << "squarefree monomial ideals in " << r.n << " variables, dim R/I = "
     << r.d << ", facets <= " << r.a << ":\n"
     << "ideals examined: " << r.ideals_examined << "\n"
     << "distinct Hilbert functions: " << r.functions.size() << "\n";
  for (const auto& row : r.functions) {
    os << "  H = ";
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? " " : "") << row[i].get_str();
    os << " ...\n";
  }
  os << "max reg(R/I): " << r.max_reg_quotient
     << ", regularity cap: " << r.reg_cap.get_str() << ", within cap: "
     << (r.all_within_cap ? "yes" : "NO") << "\n";
  emit(j, c, os.str());
  return r.all_within_cap ? 0 : 2;
}

int run_corpus(const std::string& dir) {
  fs::create_directories(dir);
  for (const CorpusEntry& e : named_corpus()) {
    fs::path p = fs::path(dir) / (e.file.id + ".ideal");
    std::ofstream out(p);
    if (!out)
      fail(ErrorCode::invalid_input, "cannot write '" + p.string() + "'");
    out << serialize_ideal(e.file);
    std::cout << p.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants, local cohomology, and bound audits for "
               "homogeneous ideals"};
  app.require_subcommand(1);

  Common c;
  std::string path, show = "none", report_path, corpus_dir;
  int en = 4, ea = 3, ed = 2;

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("file", path)->required();
  add_common(gb, c);

  CLI::App* in = app.add_subcommand("in", "initial ideal");
  in->add_option("file", path)->required();
  add_common(in, c);

  CLI::App* gin = app.add_subcommand("gin", "generic initial ideal");
  gin->add_option("file", path)->required();
  add_common(gin, c);

  CLI::App* hilb = app.add_subcommand(
      "hilbert", "Hilbert series, polynomial, and Gotzmann data");
  hilb->add_option("file", path)->required();
  hilb->add_option("--show", show, "extra sections")
      ->check(CLI::IsMember({"none", "gotzmann", "values", "all"}));
  hilb->add_option("--window", c.window, "t0:t1 range for --show values");
  add_common(hilb, c);

  CLI::App* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg->add_option("file", path)->required();
  add_common(reg, c);

  CLI::App* adeg =
      app.add_subcommand("adeg", "arithmetic degree (monomial ideals)");
  adeg->add_option("file", path)->required();
  add_common(adeg, c);

  CLI::App* coh =
      app.add_subcommand("cohomology", "graded local cohomology table");
  coh->add_option("file", path)->required();
  coh->add_option("--window", c.window, "t0:t1 reporting window");
  add_common(coh, c);

  CLI::App* lex = app.add_subcommand(
      "lex-segment", "lex-segment ideal with the same Hilbert function");
  lex->add_option("file", path)->required();
  add_common(lex, c);

  CLI::App* sec =
      app.add_subcommand("section", "generic hyperplane section");
  sec->add_option("file", path)->required();
  add_common(sec, c);

  CLI::App* audit = app.add_subcommand(
      "audit", "evaluate every applicable bound on a file or directory");
  audit->add_option("path", path)->required();
  audit->add_option("--report", report_path, "write the JSON report here");
  add_common(audit, c, /*with_order=*/false);

  CLI::App* enumerate_ = app.add_subcommand(
      "enumerate", "finiteness check over squarefree monomial ideals");
  enumerate_->add_option("--n", en, "number of variables")->required();
  enumerate_->add_option("--a", ea, "max facet count")->required();
  enumerate_->add_option("--d", ed, "dim R/I")->required();
  add_common(enumerate_, c, /*with_order=*/false);

  CLI::App* corpus = app.add_subcommand(
      "corpus", "regenerate the named corpus ideal files");
  corpus->add_option("dir", corpus_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gb->parsed()) return run_gb(path, c);
    if (in->parsed()) return run_in(path, c);
    if (gin->parsed()) return run_gin(path, c);
    if (hilb->parsed()) return run_hilbert(path, c, show);
    if (reg->parsed()) return run_reg(path, c);
    if (adeg->parsed()) return run_adeg(path, c);
    if (coh->parsed()) return run_cohomology(path, c);
    if (lex->parsed()) return run_lex_segment(path, c);
    if (sec->parsed()) return run_section(path, c);
    if (audit->parsed()) return run_audit(path, c, report_path);
    if (enumerate_->parsed()) return run_enumerate(en, ea, ed, c);
    if (corpus->parsed()) return run_corpus(corpus_dir);
  } catch (const Error& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
