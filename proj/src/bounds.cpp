#include "cmreg/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cmreg/util.hpp"

namespace cmreg {

namespace {

const mpz_class& need(const InvariantMap& m, const std::string& key,
                      const std::string& bound) {
  auto it = m.find(key);
  if (it == m.end())
    fail(ErrorCode::invalid_input,
         "bound '" + bound + "' needs invariant '" + key + "'");
  return it->second;
}

long need_long(const InvariantMap& m, const std::string& key,
               const std::string& bound) {
  const mpz_class& v = need(m, key, bound);
  if (!v.fits_slong_p())
    fail(ErrorCode::overflow, "invariant '" + key + "' does not fit a long");
  return v.get_si();
}

mpz_class zpow(const mpz_class& base, const mpz_class& exp) {
  if (exp < 0) fail(ErrorCode::invalid_input, "negative exponent");
  if (!exp.fits_ulong_p())
    fail(ErrorCode::overflow, "exponent too large for exact evaluation");
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return r;
}

// Floor of 2^k for integer k; negative k floors to 0 (the bracket notation
// of the dyadic exponents).
mpz_class pow2_floor(long k) {
  if (k < 0) return 0;
  if (k > 512) fail(ErrorCode::overflow, "dyadic exponent out of range");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

// floor(3x/2): the integer form of a "<= (3/2) x" comparison.
mpz_class floor_3half(const mpz_class& x) {
  mpz_class r;
  mpz_class num = 3 * x;
  mpz_fdiv_q_ui(r.get_mpz_t(), num.get_mpz_t(), 2);
  return r;
}

// floor(((3 delta^c + 2 delta)/2)^k), the integer form of
// "<= (3/2 delta^c + delta)^k".
mpz_class rational_base_pow_floor(const mpz_class& delta, const mpz_class& c,
                                  const mpz_class& k) {
  mpz_class num = 3 * zpow(delta, c) + 2 * delta;  // 2*(3/2 d^c + d)
  mpz_class q = zpow(num, k);
  mpz_class den = zpow(mpz_class(2), k);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
  return r;
}

// Largest integer strictly below ((3 delta^c + 2 delta)/2)^k.
mpz_class rational_base_pow_strict(const mpz_class& delta, const mpz_class& c,
                                   const mpz_class& k) {
  mpz_class num = 3 * zpow(delta, c) + 2 * delta;
  mpz_class q = zpow(num, k);
  mpz_class den = zpow(mpz_class(2), k);
  mpz_class r, rem;
  mpz_fdiv_qr(r.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
  if (rem == 0) r -= 1;
  return r;
}

}  // namespace

mpz_class eval_bound(const std::string& name, const InvariantMap& args) {
  auto geti = [&](const std::string& k) { return need(args, k, name); };
  auto getl = [&](const std::string& k) { return need_long(args, k, name); };

  if (name == "reg-from-adeg-reduced" || name == "regq-from-adeg-reduced" ||
      name == "h1-from-adeg-reduced") {
    mpz_class e = geti("e"), adeg = geti("adeg");
    long d = getl("d");
    if (d < 2)
      fail(ErrorCode::invalid_input, "bound '" + name + "' needs d >= 2");
    mpz_class m = e * (e - 1) / 2 + adeg;
    mpz_class top = zpow(m, pow2_floor(d - 2));
    if (name == "reg-from-adeg-reduced") return top;
    if (name == "regq-from-adeg-reduced") return top - 1;
    return top - e * zpow(m, pow2_floor(d - 3));
  }
  if (name == "reg-from-adeg-surface") return geti("adeg");
  if (name == "reg-from-gen-degrees" || name == "regq-from-gen-degrees" ||
      name == "h0-from-gen-degrees") {
    mpz_class pi = geti("pi"), delta = geti("delta");
    long d = getl("d");
    if (d < 1)
      fail(ErrorCode::invalid_input, "bound '" + name + "' needs d >= 1");
    mpz_class base = pi + delta - 1;
    mpz_class top = zpow(base, pow2_floor(d - 1));
    if (name == "reg-from-gen-degrees") return top;
    if (name == "regq-from-gen-degrees") return top - 1;
    return top - zpow(base, pow2_floor(d - 2));
  }
  if (name == "regq-dim-le-one") return geti("sigma") + geti("delta") - 1;
  if (name == "h0-from-pi-curve") return geti("pi") - 1;
  if (name == "e1-from-adeg-reg")
    return zpow(geti("adeg"), geti("c")) * geti("reg");
  if (name == "ei-from-adeg-reg")
    return floor_3half(zpow(geti("adeg"), geti("c")) *
                       zpow(geti("reg"), geti("i")));
  if (name == "e1-from-max-deg-reg") {
    mpz_class b = std::max(geti("delta"), geti("adeg"));
    return zpow(b, geti("c")) * geti("reg");
  }
  if (name == "ei-from-max-deg-reg") {
    mpz_class b = std::max(geti("delta"), geti("adeg"));
    return floor_3half(zpow(b, geti("c")) * zpow(geti("reg"), geti("i")));
  }
  if (name == "e1-from-pi-reg") return geti("pi") * geti("reg");
  if (name == "ei-from-pi-reg")
    return floor_3half(geti("pi") * zpow(geti("reg"), geti("i")));
  if (name == "e1-from-adeg-reduced") {
    mpz_class e = geti("e"), adeg = geti("adeg");
    return zpow(adeg, geti("c")) * (e * (e - 1) / 2 + adeg);
  }
  if (name == "ei-from-adeg-reduced") {
    mpz_class e = geti("e"), adeg = geti("adeg");
    long i = getl("i");
    mpz_class m = e * (e - 1) / 2 + adeg;
    return floor_3half(zpow(adeg, geti("c")) *
                       zpow(m, mpz_class(i) * pow2_floor(i - 1)));
  }
  if (name == "e1-from-gen-degrees") {
    mpz_class base = geti("pi") + geti("delta") - 1;
    return geti("pi") * base * base;
  }
  if (name == "ei-from-gen-degrees") {
    mpz_class base = geti("pi") + geti("delta") - 1;
    long i = getl("i");
    return floor_3half(geti("pi") * zpow(base, mpz_class(i) * pow2_floor(i)));
  }
  if (name == "ei-from-delta") {
    long i = getl("i");
    return rational_base_pow_strict(geti("delta"), geti("c"),
                                    1 + mpz_class(i) * pow2_floor(i));
  }
  if (name == "ei-monomial") {
    mpz_class adeg = geti("adeg"), delta = geti("delta");
    mpz_class n = geti("n"), c = geti("c"), i = geti("i");
    mpz_class lhs = zpow(adeg, c + i);
    mpz_class rhs = zpow(n, i) * zpow(delta, c + i);
    return floor_3half(std::min(lhs, rhs));
  }
  if (name == "hilbert-from-cap") {
    mpz_class b = geti("b");
    long d = getl("d"), t = getl("t");
    return (b - 1) * binom_nat(t + d - 2, d - 1) + binom_nat(t + d - 1, d - 1);
  }
  if (name == "codim-from-adeg-radical") return geti("d") * (geti("adeg") - 1);
  if (name == "reg-in-from-gotzmann")
    return std::max(geti("reg"), geti("b_last"));
  if (name == "b-growth") {
    mpz_class alpha = geti("alpha"), beta = geti("beta");
    long j = getl("j");
    return zpow(geti("m"), (alpha + mpz_class(j) * beta) * pow2_floor(j));
  }
  if (name == "reg-hilb-from-delta") {
    long d = getl("d");
    if (d < 1)
      fail(ErrorCode::invalid_input, "bound '" + name + "' needs d >= 1");
    return rational_base_pow_floor(geti("delta"), geti("c"),
                                   mpz_class(d) * pow2_floor(d - 1));
  }
  if (name == "reg-hilb-from-adeg") {
    long d = getl("d");
    return zpow(geti("adeg"), (geti("n") - 1) * pow2_floor(d - 1));
  }
  if (name == "h0-from-cap") {
    long d = getl("d"), t = getl("t");
    return (geti("b") - 1) * binom_nat(t + d - 2, d - 1);
  }
  if (name == "hj-from-cap") {
    long d = getl("d"), j = getl("j"), t = getl("t"), r = getl("regq");
    return (geti("b") - 1) * binom_nat(r + d - j - 2, d - j - 1) *
           binom_nat(r - t, j);
  }
  if (name == "hd-from-cap") {
    long d = getl("d"), t = getl("t"), r = getl("regq");
    return geti("e") * binom_nat(r - t - 1, d - 1);
  }
  if (name == "h1-sum-cm-curve") {
    mpz_class e = geti("e");
    return e * (e - 1) / 2;
  }
  if (name == "h1-at-minus-one") return geti("adeg") - geti("e");
  if (name == "chain-module-from-colength") {
    long ni = getl("ni"), c = getl("c"), t = getl("t");
    return (geti("B") - 1) * binom_nat(t + ni - c - 2, ni - c - 1);
  }
  fail(ErrorCode::invalid_input, "unknown bound name '" + name + "'");
}

std::vector<std::string> bound_names() {
  return {
      "b-growth",
      "chain-module-from-colength",
      "codim-from-adeg-radical",
      "e1-from-adeg-reduced",
      "e1-from-adeg-reg",
      "e1-from-gen-degrees",
      "e1-from-max-deg-reg",
      "e1-from-pi-reg",
      "ei-from-adeg-reduced",
      "ei-from-adeg-reg",
      "ei-from-delta",
      "ei-from-gen-degrees",
      "ei-from-max-deg-reg",
      "ei-from-pi-reg",
      "ei-monomial",
      "h0-from-cap",
      "h0-from-gen-degrees",
      "h0-from-pi-curve",
      "h1-at-minus-one",
      "h1-from-adeg-reduced",
      "h1-sum-cm-curve",
      "hd-from-cap",
      "hilbert-from-cap",
      "hj-from-cap",
      "reg-from-adeg-reduced",
      "reg-from-adeg-surface",
      "reg-from-gen-degrees",
      "reg-hilb-from-adeg",
      "reg-hilb-from-delta",
      "reg-in-from-gotzmann",
      "regq-dim-le-one",
      "regq-from-adeg-reduced",
      "regq-from-gen-degrees",
  };
}

InvariantSnapshot snapshot(IdealHandle& H) {
  InvariantSnapshot s;
  s.n = H.ring()->nvars;
  s.d = H.dim();
  s.c = H.codim();
  s.deltas = H.minimal_degrees();
  s.delta = H.max_gen_degree();
  s.pi = H.degree_product();
  s.sigma = H.degree_sum_shifted();
  s.e = H.multiplicity();
  s.e_list = H.hpoly().e;
  const AdegData& a = H.adeg();
  s.adeg = a.arith_degree;
  s.adeg_source = a.source;
  s.adeg_exact = a.exact;
  const RegularityResult& r = H.regularity_result();
  s.reg_quotient = r.reg_quotient;
  s.reg_ideal = r.reg_ideal;
  s.reg_confidence =
      r.upper_bound_only ? "upper-bound" : (r.exact ? "exact" : "generic");
  s.depth = H.depth();
  s.postulation = H.postulation();
  s.monomial = H.monomial().has_value();
  if (s.monomial) {
    const MonomialIdeal& M = *H.monomial();
    s.squarefree = M.is_squarefree();
    s.borel_type = is_borel_type(M);
    s.strongly_stable = is_strongly_stable(M);
    DegreeData dd = degree_data(M);
    if (dd.colength_split)
      s.colength = mpz_class(static_cast<long>(*dd.colength_split));
  } else {
    DegreeData dd = degree_data(H.gin());
    if (dd.colength_split)
      s.colength = mpz_class(static_cast<long>(*dd.colength_split));
  }
  s.prime_known = H.prime_declared();
  s.reduced_known = s.squarefree || s.prime_known;
  if (s.d >= 1) {
    const GotzmannData& g = H.gotzmann();
    s.gotzmann_c = g.c;
    s.gotzmann_s = g.s;
    s.b_list = g.B;
  }
  return s;
}

namespace {

// Tracks the tightest instance of a per-t (or per-(i,t)) family of
// inequalities, so each family reports as a single check.
struct Sweep {
  bool any = false;
  bool ok = true;
  mpz_class bound, actual, slack;
  std::string at;

  void feed(const std::string& where, const mpz_class& lhs,
            const mpz_class& rhs) {
    mpz_class sl = rhs - lhs;
    if (!any || sl < slack) {
      any = true;
      slack = sl;
      bound = rhs;
      actual = lhs;
      at = where;
    }
    if (lhs > rhs) ok = false;
  }
};

std::string confidence_note(const InvariantSnapshot& v) {
  std::string note;
  if (v.reg_confidence == "generic")
    note = "regularity via agreed generic reduction";
  else if (v.reg_confidence == "upper-bound")
    note = "regularity trials disagreed; value is only an upper bound";
  return note;
}

}  // namespace

BoundReport audit_ideal(IdealHandle& H, const std::string& id,
                        const AuditOptions& opts) {
  if (!H.is_homogeneous())
    fail(ErrorCode::invalid_input, "audit needs a homogeneous ideal");
  if (H.is_zero() || H.is_unit())
    fail(ErrorCode::invalid_input, "audit needs a proper nonzero ideal");

  BoundReport rep;
  rep.id = id;
  rep.invariants = snapshot(H);
  const InvariantSnapshot& v = rep.invariants;

  const bool infinite_field = H.ring()->field.characteristic() == 0;
  const bool reg_certified = v.reg_confidence != "upper-bound";
  const bool table_exact = v.monomial && v.borel_type;
  const mpz_class reg_i(v.reg_ideal);
  const mpz_class regq(v.reg_quotient);
  const long t_hi = v.reg_quotient + opts.t_extra;
  const long t_lo = -(v.reg_quotient + v.d + 5 + opts.t_extra);

  auto add = [&](BoundCheck ck) {
    ck.slack = ck.bound - ck.actual;
    if (ck.hypotheses_met && !ck.satisfied) rep.violation = true;
    rep.checks.push_back(std::move(ck));
  };
  auto guarded = [&](const std::string& label, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      rep.errors.push_back(label + ": [" + std::string(e.code_name()) + "] " +
                           e.what());
    } catch (const std::exception& e) {
      rep.errors.push_back(label + ": " + std::string(e.what()));
    }
  };
  // A single inequality instance.
  auto le_check = [&](const std::string& name, const mpz_class& actual,
                      const mpz_class& bound, bool met,
                      const std::string& note) {
    BoundCheck ck;
    ck.name = name;
    ck.relation = "le";
    ck.actual = actual;
    ck.bound = bound;
    ck.satisfied = actual <= bound;
    ck.hypotheses_met = met;
    ck.note = note;
    add(std::move(ck));
  };
  auto eq_check = [&](const std::string& name, const mpz_class& actual,
                      const mpz_class& expected, bool met,
                      const std::string& note) {
    BoundCheck ck;
    ck.name = name;
    ck.relation = "eq";
    ck.actual = actual;
    ck.bound = expected;
    ck.satisfied = actual == expected;
    ck.hypotheses_met = met;
    ck.note = note;
    add(std::move(ck));
  };
  // A swept family; on failure the hypotheses survive only if the measured
  // side is exact (lhs_exact), since an upper estimate above the bound is
  // inconclusive rather than a counterexample.
  auto sweep_check = [&](const std::string& name, const Sweep& sw, bool met,
                         bool lhs_exact, std::string note) {
    if (!sw.any) return;
    BoundCheck ck;
    ck.name = name;
    ck.relation = "le";
    ck.actual = sw.actual;
    ck.bound = sw.bound;
    ck.satisfied = sw.ok;
    ck.hypotheses_met = met;
    if (!sw.ok && !lhs_exact) {
      ck.hypotheses_met = false;
      if (!note.empty()) note += "; ";
      note += "measured side is an initial-ideal upper estimate; failure is "
              "inconclusive";
    }
    if (!note.empty()) note += "; ";
    note += "tightest at " + sw.at;
    ck.note = note;
    add(std::move(ck));
  };

  // Exact h^0 values via certified saturation: h^0(t) = H_{R/I}(t) -
  // H_{R/I^sat}(t).  Valid for every homogeneous ideal.
  std::optional<HilbertSeries> sat_series;
  auto exact_h0 = [&](long t) -> mpz_class {
    if (!sat_series) {
      if (v.monomial)
        sat_series = hilbert_series(H.monomial()->m_saturate());
      else
        sat_series = hilbert_series(
            H.ring(), m_saturate_ideal(H.ring(), H.gens(), H.seed(),
                                       H.options()),
            H.options());
    }
    return H.series().function(t) - sat_series->function(t);
  };

  const std::string reg_note = confidence_note(v);
  const std::string adeg_note =
      v.adeg_exact ? ""
                   : "arithmetic degree is an upper estimate (" +
                         v.adeg_source + ")";
  const std::string field_note =
      infinite_field ? "" : "genericity argument needs an infinite field";

  // ---- Gotzmann bookkeeping (exact consequences of the pipeline) ----
  if (v.d >= 1) {
    guarded("b-sequence-recursion", [&] {
      std::vector<mpz_class> rec = b_sequence_from_coefficients(H.hpoly());
      std::size_t k = 0;
      while (k < rec.size() && k < v.b_list.size() && rec[k] == v.b_list[k])
        ++k;
      bool same = k == rec.size() && k == v.b_list.size();
      if (same) {
        eq_check("b-sequence-recursion", v.b_list.back(), rec.back(), true,
                 "greedy decomposition matches the coefficient recursion");
      } else {
        mpz_class got = k < v.b_list.size() ? v.b_list[k] : mpz_class(-1);
        mpz_class want = k < rec.size() ? rec[k] : mpz_class(-1);
        eq_check("b-sequence-recursion", got, want, true,
                 "sequences differ at index " + std::to_string(k));
      }
    });
    guarded("b0-equals-degree", [&] {
      eq_check("b0-equals-degree", v.b_list.front(), v.e, true, "");
    });
    guarded("s-equals-last-b", [&] {
      eq_check("s-equals-last-b", mpz_class(v.gotzmann_s), v.b_list.back(),
               true, "");
    });
  }

  // ---- Regularity bounds ----
  if (v.d >= 1) {
    guarded("reg-from-gen-degrees", [&] {
      InvariantMap m{{"pi", v.pi},
                     {"delta", mpz_class(v.delta)},
                     {"d", mpz_class(v.d)}};
      le_check("reg-from-gen-degrees", reg_i,
               eval_bound("reg-from-gen-degrees", m), reg_certified, reg_note);
      le_check("regq-from-gen-degrees", regq,
               eval_bound("regq-from-gen-degrees", m), reg_certified,
               reg_note);
      Sweep sw;
      mpz_class cap = eval_bound("h0-from-gen-degrees", m);
      for (long t = 1; t <= t_hi; ++t) sw.feed("t=" + std::to_string(t),
                                               exact_h0(t), cap);
      sweep_check("h0-from-gen-degrees", sw, true, true, "");
    });
  }
  if (v.d <= 1) {
    guarded("regq-dim-le-one", [&] {
      InvariantMap m{{"sigma", mpz_class(v.sigma)},
                     {"delta", mpz_class(v.delta)}};
      le_check("regq-dim-le-one", regq, eval_bound("regq-dim-le-one", m),
               reg_certified, reg_note);
    });
  }
  if (v.d >= 2 && v.adeg) {
    guarded("reg-from-adeg-reduced", [&] {
      InvariantMap m{{"e", v.e}, {"adeg", *v.adeg}, {"d", mpz_class(v.d)}};
      bool met = v.reduced_known && v.adeg_exact && reg_certified;
      std::string note = reg_note;
      auto append = [&note](const std::string& s) {
        if (s.empty()) return;
        if (!note.empty()) note += "; ";
        note += s;
      };
      if (!v.reduced_known) append("ring not known to be reduced");
      append(adeg_note);
      le_check("reg-from-adeg-reduced", reg_i,
               eval_bound("reg-from-adeg-reduced", m), met, note);
      le_check("regq-from-adeg-reduced", regq,
               eval_bound("regq-from-adeg-reduced", m), met, note);
    });
  }
  if (v.d == 2 && v.adeg) {
    guarded("reg-from-adeg-surface", [&] {
      bool met = v.reduced_known && v.adeg_exact && reg_certified;
      std::string note = v.reduced_known
                             ? "algebraic closure assumed via base change"
                             : "ring not known to be reduced";
      le_check("reg-from-adeg-surface", reg_i, *v.adeg, met, note);
    });
  }

  // ---- Local cohomology bounds ----
  if (v.d >= 2 && v.adeg) {
    guarded("h1-from-adeg-reduced", [&] {
      InvariantMap m{{"e", v.e}, {"adeg", *v.adeg}, {"d", mpz_class(v.d)}};
      mpz_class cap = eval_bound("h1-from-adeg-reduced", m);
      const CohomologyTable& tab = H.table();
      Sweep sw;
      for (long t = 0; t <= t_hi; ++t)
        sw.feed("t=" + std::to_string(t), tab.value(1, t), cap);
      bool met = v.reduced_known && v.adeg_exact;
      sweep_check("h1-from-adeg-reduced", sw, met, table_exact,
                  v.reduced_known ? adeg_note : "ring not known to be reduced");
    });
    guarded("h1-at-minus-one", [&] {
      mpz_class cap = *v.adeg - v.e;
      mpz_class upper = H.table().value(1, -1);
      bool met = v.reduced_known && v.adeg_exact;
      if (upper <= cap || table_exact) {
        le_check("h1-at-minus-one", upper, cap, met,
                 table_exact ? "" : "upper estimate already within the bound");
      } else {
        // Exact recovery: with H(-1) = h^0(-1) = 0 the alternating identity
        // gives h^1(-1) = P(-1) as soon as every higher module vanishes at -1.
        mpz_class higher = 0;
        for (int j = 2; j <= v.d; ++j) higher += H.table().value(j, -1);
        if (higher == 0) {
          le_check("h1-at-minus-one", H.hpoly().eval(-1), cap, met,
                   "recovered exactly from the alternating identity");
        } else {
          le_check("h1-at-minus-one", upper, cap, false,
                   "only an initial-ideal upper estimate is available");
        }
      }
    });
  }
  if (v.d == 1 && v.depth == 1) {
    guarded("h1-sum-cm-curve", [&] {
      const CohomologyTable& tab = H.table();
      mpz_class sum = 0;
      for (long t = 0; t < v.reg_quotient; ++t) sum += tab.value(1, t);
      InvariantMap m{{"e", v.e}};
      bool lhs_exact = table_exact;
      mpz_class cap = eval_bound("h1-sum-cm-curve", m);
      bool ok_met = lhs_exact || sum <= cap;
      le_check("h1-sum-cm-curve", sum, cap, ok_met,
               lhs_exact ? "" : "h^1 measured on the generic reduction");
    });
  }
  if (v.d == 1) {
    guarded("h0-from-pi-curve", [&] {
      mpz_class cap = eval_bound("h0-from-pi-curve", {{"pi", v.pi}});
      Sweep sw;
      for (long t = 1; t <= t_hi; ++t)
        sw.feed("t=" + std::to_string(t), exact_h0(t), cap);
      sweep_check("h0-from-pi-curve", sw, true, true, "");
    });
  }

  // ---- Cohomology caps from b = min{pi, adeg^c} and from the colength ----
  auto h_cap_family = [&](const std::string& suffix, const mpz_class& b,
                          bool met, const std::string& base_note) {
    guarded("h0-from-cap" + suffix, [&] {
      Sweep sw;
      for (long t = 0; t <= t_hi; ++t)
        sw.feed("t=" + std::to_string(t), exact_h0(t),
                eval_bound("h0-from-cap", {{"b", b},
                                           {"d", mpz_class(v.d)},
                                           {"t", mpz_class(t)}}));
      sweep_check("h0-from-cap" + suffix, sw, met, true, base_note);
    });
    guarded("hj-from-cap" + suffix, [&] {
      const CohomologyTable& tab = H.table();
      Sweep sw;
      for (int j = 1; j <= v.d - 1; ++j)
        for (long t = t_lo; t <= v.reg_quotient; ++t)
          sw.feed("j=" + std::to_string(j) + ",t=" + std::to_string(t),
                  tab.value(j, t),
                  eval_bound("hj-from-cap", {{"b", b},
                                             {"d", mpz_class(v.d)},
                                             {"j", mpz_class(j)},
                                             {"t", mpz_class(t)},
                                             {"regq", regq}}));
      sweep_check("hj-from-cap" + suffix, sw, met && reg_certified,
                  table_exact, base_note);
    });
    guarded("hd-from-cap" + suffix, [&] {
      const CohomologyTable& tab = H.table();
      Sweep sw;
      for (long t = t_lo; t < v.reg_quotient; ++t)
        sw.feed("t=" + std::to_string(t), tab.value(v.d, t),
                eval_bound("hd-from-cap", {{"e", v.e},
                                           {"d", mpz_class(v.d)},
                                           {"t", mpz_class(t)},
                                           {"regq", regq}}));
      sweep_check("hd-from-cap" + suffix, sw, met && reg_certified,
                  table_exact, base_note);
    });
  };
  if (v.d >= 1 && v.adeg) {
    mpz_class adeg_pow = zpow(*v.adeg, mpz_class(v.c));
    mpz_class b = std::min(v.pi, adeg_pow);
    bool b_exact = v.adeg_exact || v.pi <= adeg_pow;
    h_cap_family("[min-pi-adeg]", b, b_exact,
                 b_exact ? "" : adeg_note);
  }
  {
    // Borel-fixed route with the split colength as the cap.
    const MonomialIdeal* measured =
        v.monomial ? &*H.monomial() : &H.gin();
    if (v.d >= 1 && v.colength && is_strongly_stable(*measured))
      h_cap_family("[colength]", *v.colength, true, "");
  }

  // ---- Saturation-chain structure ----
  {
    const MonomialIdeal* measured = v.monomial ? &*H.monomial() : nullptr;
    if (measured && v.borel_type) {
      guarded("last-chain-length-eq-degree", [&] {
        SaturationChain chain = saturation_chain(*measured);
        mpz_class total = 0;
        for (long long u : chain.steps.back().lengths)
          total += static_cast<long>(u);
        eq_check("last-chain-length-eq-degree", total, v.e, true, "");
      });
      guarded("chain-module-from-colength", [&] {
        if (!v.colength) return;
        SaturationChain chain = saturation_chain(*measured);
        Sweep sw;
        for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
          const ChainStep& st = chain.steps[i];
          for (long t = 0; t < static_cast<long>(st.lengths.size()); ++t)
            sw.feed("i=" + std::to_string(i) + ",t=" + std::to_string(t),
                    mpz_class(static_cast<long>(st.lengths[t])),
                    eval_bound("chain-module-from-colength",
                               {{"B", *v.colength},
                                {"ni", mpz_class(st.mj)},
                                {"c", mpz_class(v.c)},
                                {"t", mpz_class(t)}}));
        }
        sweep_check("chain-module-from-colength", sw, v.strongly_stable, true,
                    v.strongly_stable ? "" : "stated for stable staircases");
      });
      guarded("euler-residual", [&] {
        EulerCheck ec = euler_characteristic_check(*measured, t_lo, t_hi);
        mpz_class worst = 0;
        for (std::size_t k = 0; k < ec.lhs.size(); ++k) {
          mpz_class diff = abs(mpz_class(ec.lhs[k] - ec.rhs[k]));
          if (diff > worst) worst = diff;
        }
        eq_check("euler-residual", worst, 0, true,
                 "window [" + std::to_string(t_lo) + "," +
                     std::to_string(t_hi) + "]");
      });
    }
  }

  // ---- Hilbert coefficient bounds ----
  auto abs_e = [&](int i) -> mpz_class { return abs(v.e_list[i]); };
  for (int i = 1; i <= v.d - 1; ++i) {
    const std::string tag = "[i=" + std::to_string(i) + "]";
    const mpz_class ei = abs_e(i);
    guarded("e-bounds" + tag, [&] {
      InvariantMap base{{"i", mpz_class(i)},  {"c", mpz_class(v.c)},
                        {"reg", reg_i},       {"pi", v.pi},
                        {"delta", mpz_class(v.delta)}, {"e", v.e},
                        {"n", mpz_class(v.n)}};
      if (v.adeg) base["adeg"] = *v.adeg;
      std::string gnote = field_note;
      bool gmet = infinite_field && reg_certified;
      if (v.adeg) {
        le_check(i == 1 ? "e1-from-adeg-reg" : "ei-from-adeg-reg" + tag, ei,
                 eval_bound(i == 1 ? "e1-from-adeg-reg" : "ei-from-adeg-reg",
                            base),
                 gmet && v.adeg_exact, gnote.empty() ? adeg_note : gnote);
        le_check(i == 1 ? "e1-from-max-deg-reg" : "ei-from-max-deg-reg" + tag,
                 ei,
                 eval_bound(
                     i == 1 ? "e1-from-max-deg-reg" : "ei-from-max-deg-reg",
                     base),
                 gmet && v.adeg_exact, gnote.empty() ? adeg_note : gnote);
      }
      if (v.d >= 2)
        le_check(i == 1 ? "e1-from-pi-reg" : "ei-from-pi-reg" + tag, ei,
                 eval_bound(i == 1 ? "e1-from-pi-reg" : "ei-from-pi-reg",
                            base),
                 gmet, gnote);
      if (v.adeg && v.d >= 2) {
        bool met = v.reduced_known && v.adeg_exact && infinite_field;
        le_check(
            i == 1 ? "e1-from-adeg-reduced" : "ei-from-adeg-reduced" + tag,
            ei,
            eval_bound(
                i == 1 ? "e1-from-adeg-reduced" : "ei-from-adeg-reduced",
                base),
            met, v.reduced_known ? adeg_note : "ring not known to be reduced");
      }
      le_check(i == 1 ? "e1-from-gen-degrees" : "ei-from-gen-degrees" + tag,
               ei,
               eval_bound(
                   i == 1 ? "e1-from-gen-degrees" : "ei-from-gen-degrees",
                   base),
               infinite_field, field_note);
      le_check("ei-from-delta" + tag, ei, eval_bound("ei-from-delta", base),
               infinite_field, field_note);
      if (v.monomial && v.adeg)
        le_check("ei-monomial" + tag, ei, eval_bound("ei-monomial", base),
                 v.adeg_exact, "");
    });
  }

  // ---- Hilbert function cap and prime-decomposition codimension ----
  if (v.d >= 1 && v.adeg) {
    guarded("hilbert-from-cap", [&] {
      mpz_class adeg_pow = zpow(*v.adeg, mpz_class(v.c));
      mpz_class b = std::min(v.pi, adeg_pow);
      bool b_exact = v.adeg_exact || v.pi <= adeg_pow;
      long stop = std::max({v.postulation, v.reg_quotient,
                            static_cast<long>(v.delta), v.gotzmann_s}) +
                  opts.t_extra;
      Sweep sw;
      for (long t = 0; t <= stop; ++t)
        sw.feed("t=" + std::to_string(t), H.series().function(t),
                eval_bound("hilbert-from-cap", {{"b", b},
                                                {"d", mpz_class(v.d)},
                                                {"t", mpz_class(t)}}));
      sweep_check("hilbert-from-cap", sw, b_exact && infinite_field, true,
                  b_exact ? field_note : adeg_note);
    });
  }
  if (v.d >= 1 && v.adeg && (v.squarefree || v.prime_known) &&
      !v.deltas.empty() && v.deltas.back() >= 2) {
    guarded("codim-from-adeg-radical", [&] {
      std::string note = adeg_note;
      if (!v.squarefree) {
        if (!note.empty()) note += "; ";
        note += "algebraic closure assumed via base change";
      }
      le_check("codim-from-adeg-radical", mpz_class(v.c),
               eval_bound("codim-from-adeg-radical",
                          {{"adeg", *v.adeg}, {"d", mpz_class(v.d)}}),
               v.adeg_exact, note);
    });
  }

  // ---- Regularity of initial ideals against Hilbert-function bounds ----
  if (opts.initial_order_checks && v.d >= 1) {
    const std::vector<std::pair<std::string, TermOrder>> orders = {
        {"lex", TermOrder::lex()},
        {"grlex", TermOrder::grlex()},
        {"grevlex", TermOrder::grevlex()}};
    for (const auto& [oname, order] : orders) {
      guarded("reg-in[" + oname + "]", [&, oname = oname, order = order] {
        MonomialIdeal J = H.initial(order);
        long reg_in;
        bool in_certified;
        if (v.monomial && J == *H.monomial()) {
          reg_in = v.reg_ideal;
          in_certified = reg_certified;
        } else {
          IdealHandle JH(J, H.seed(), H.trials(), H.options());
          const RegularityResult& rr = JH.regularity_result();
          reg_in = rr.reg_ideal;
          in_certified = !rr.upper_bound_only;
        }
        const std::string tag = "[" + oname + "]";
        le_check("reg-in-from-gotzmann" + tag, mpz_class(reg_in),
                 eval_bound("reg-in-from-gotzmann",
                            {{"reg", reg_i}, {"b_last", v.b_list.back()}}),
                 in_certified && reg_certified, reg_note);
        le_check("reg-hilb-from-delta" + tag, mpz_class(reg_in),
                 eval_bound("reg-hilb-from-delta",
                            {{"delta", mpz_class(v.delta)},
                             {"c", mpz_class(v.c)},
                             {"d", mpz_class(v.d)}}),
                 in_certified, "");
        if (v.reduced_known && v.adeg)
          le_check("reg-hilb-from-adeg" + tag, mpz_class(reg_in),
                   eval_bound("reg-hilb-from-adeg",
                              {{"adeg", *v.adeg},
                               {"n", mpz_class(v.n)},
                               {"d", mpz_class(v.d)}}),
                   in_certified && v.adeg_exact, adeg_note);
      });
    }
  }

  return rep;
}

namespace {

// Stanley-Reisner ideal of the complex with the given facets (bitmasks).
MonomialIdeal stanley_reisner(const RingPtr& ring,
                              const std::vector<unsigned>& facets) {
  MonomialIdeal I = MonomialIdeal::zero(ring);
  bool first = true;
  for (unsigned f : facets) {
    std::vector<Monomial> gens;
    for (int i = 0; i < ring->nvars; ++i)
      if (!(f & (1u << i))) gens.push_back(Monomial::variable(ring->nvars, i));
    MonomialIdeal P = MonomialIdeal::make(ring, gens);
    I = first ? P : I.intersect(P);
    first = false;
  }
  return I;
}

}  // namespace

FinitenessResult finiteness_explorer(int n, int a, int d) {
  if (n < 1 || n > 6)
    fail(ErrorCode::invalid_input, "finiteness explorer needs 1 <= n <= 6");
  if (d < 1 || d >= n)
    fail(ErrorCode::invalid_input, "finiteness explorer needs 1 <= d < n");
  if (a < 1) fail(ErrorCode::invalid_input, "facet budget must be positive");

  RingPtr ring = make_ring(n, Field::rationals());

  // Candidate facets: subsets of the vertex set with 1..d elements.
  std::vector<unsigned> pool;
  for (unsigned m = 1; m < (1u << n); ++m)
    if (__builtin_popcount(m) <= d) pool.push_back(m);

  FinitenessResult res;
  res.n = n;
  res.a = a;
  res.d = d;

  std::map<std::vector<mpz_class>, std::vector<mpz_class>> seen;  // key -> row
  long long combos = 0;

  std::vector<unsigned> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    if (++combos > 2000000)
      fail(ErrorCode::size_cap, "facet enumeration exceeded the cap");
    if (!chosen.empty()) {
      int maxsz = 0;
      for (unsigned f : chosen)
        maxsz = std::max(maxsz, __builtin_popcount(f));
      if (maxsz == d) {
        ++res.ideals_examined;
        MonomialIdeal I = stanley_reisner(ring, chosen);
        DegreeData dd = degree_data(I);
        if (dd.dim != d || dd.arith_degree != static_cast<long long>(
                                                  chosen.size()))
          fail(ErrorCode::internal,
               "facet bookkeeping disagrees with standard pairs");
        IdealHandle HI(I, 1, 2);
        const HilbertSeries& hs = HI.series();
        long post = HI.postulation();
        std::vector<mpz_class> key = hs.numerator;
        key.push_back(hs.dim);
        if (!seen.count(key)) {
          std::vector<mpz_class> row;
          for (long t = 0; t <= std::max(post, 1L); ++t)
            row.push_back(hs.function(t));
          seen.emplace(std::move(key), std::move(row));
        }
        long regq = HI.reg_quotient();
        res.max_reg_quotient = std::max(res.max_reg_quotient, regq);
        mpz_class e = HI.multiplicity();
        mpz_class m = e * (e - 1) / 2 + HI.adeg().arith_degree;
        mpz_class cap = d >= 2 ? zpow(m, pow2_floor(d - 2)) : m;
        res.reg_cap = std::max(res.reg_cap, cap);
        if (mpz_class(HI.reg_ideal()) > cap) res.all_within_cap = false;
      }
    }
    if (chosen.size() == static_cast<std::size_t>(a)) return;
    for (std::size_t k = start; k < pool.size(); ++k) {
      unsigned f = pool[k];
      bool antichain = true;
      for (unsigned g : chosen)
        if ((f & g) == f || (f & g) == g) {
          antichain = false;
          break;
        }
      if (!antichain) continue;
      chosen.push_back(f);
      recurse(k + 1);
      chosen.pop_back();
    }
  };
  recurse(0);

  for (auto& kv : seen) res.functions.push_back(kv.second);
  return res;
}

}  // namespace cmreg
