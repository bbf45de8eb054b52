#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/handle.hpp"

namespace cmreg {

// Named-invariant bundle for formula evaluation.  Every formula pulls its
// inputs by name and raises invalid_input when one is missing -- there are no
// silent defaults.
using InvariantMap = std::map<std::string, mpz_class>;

// Evaluates one registered bound formula to an exact integer.  Formulas with
// a rational 3/2 factor return the exact integer floor, which is equivalent
// for comparisons against integer invariants; strict "<" bounds return the
// largest admissible integer.
mpz_class eval_bound(const std::string& name, const InvariantMap& args);

// All registered formula names, sorted.
std::vector<std::string> bound_names();

// One audited inequality (or equality) instance.
struct BoundCheck {
  std::string name;        // formula id, possibly suffixed with [context]
  std::string relation;    // "le" (actual <= bound) or "eq" (actual == bound)
  bool hypotheses_met = false;
  std::string note;        // hypothesis status / exactness caveats
  mpz_class bound;
  mpz_class actual;
  bool satisfied = false;
  mpz_class slack;         // bound - actual (signed)
};

// Snapshot of the invariants feeding an audit, for reporting.
struct InvariantSnapshot {
  int n = 0;
  int d = 0;
  int c = 0;
  long delta = 0;                  // max minimal generator degree
  std::vector<long> deltas;        // all minimal generator degrees, descending
  mpz_class pi;                    // product of the top c generator degrees
  long sigma = 0;                  // sum of (degree - 1) over the top c
  mpz_class e;                     // degree (multiplicity)
  std::vector<mpz_class> e_list;   // Hilbert coefficients e_0..e_{d-1}
  std::optional<mpz_class> adeg;
  std::string adeg_source;
  bool adeg_exact = false;
  long reg_quotient = 0;
  long reg_ideal = 0;
  std::string reg_confidence;      // "exact" | "generic" | "upper-bound"
  int depth = 0;
  std::optional<mpz_class> colength;  // l(R/(I, x_{c+1}..x_n)), via gin if needed
  std::vector<long> gotzmann_c;
  long gotzmann_s = 0;
  std::vector<mpz_class> b_list;   // B_0..B_{d-1}
  long postulation = 0;
  bool monomial = false;
  bool squarefree = false;
  bool borel_type = false;
  bool strongly_stable = false;
  bool reduced_known = false;      // squarefree, or asserted prime
  bool prime_known = false;
};

struct AuditOptions {
  bool initial_order_checks = true;  // regularity sweeps over lex/grlex/grevlex
  long t_extra = 5;                  // window padding beyond computed ends
};

struct BoundReport {
  std::string id;
  InvariantSnapshot invariants;
  std::vector<BoundCheck> checks;
  std::vector<std::string> errors;  // isolated per-check failures
  bool violation = false;  // some check failed with hypotheses met
};

InvariantSnapshot snapshot(IdealHandle& H);

// Evaluates every applicable registered bound against exactly computed
// invariants.  Bounds whose mathematical hypotheses are not established are
// still evaluated and reported with hypotheses_met = false.  A check that
// fails while its hypotheses hold sets report.violation.
BoundReport audit_ideal(IdealHandle& H, const std::string& id,
                        const AuditOptions& opts = {});

// Desk-scale finiteness check: enumerate all squarefree monomial ideals in n
// variables with dim R/I = d and arithmetic degree (= facet count) at most a,
// and collect their distinct Hilbert functions.
struct FinitenessResult {
  int n = 0, a = 0, d = 0;
  long long ideals_examined = 0;
  // One row per distinct Hilbert function: values H(0), H(1), ... up to the
  // largest postulation index observed for that function.
  std::vector<std::vector<mpz_class>> functions;
  long max_reg_quotient = kMinusInfinity;
  mpz_class reg_cap;       // max over ideals of the degree/adeg regularity cap
  bool all_within_cap = true;
};

FinitenessResult finiteness_explorer(int n, int a, int d);

}  // namespace cmreg
