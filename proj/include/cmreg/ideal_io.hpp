#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmreg/bounds.hpp"
#include "cmreg/handle.hpp"

namespace cmreg {

// A parsed ideal file.  Line-oriented format:
//
//   # comment
//   ring: Q            (or GF(<p>))
//   vars: x1 x2 x3     (declaration order = term-order precedence)
//   order: grevlex     (optional; lex | grlex | grevlex | block(<k>))
//   gens:
//     x1^2 - x2*x3     (one expression per indented line)
//   expect:            (optional; expected invariant values)
//     reg: 3
//
// Polynomials are sums of signed terms; a term is an optional integer or
// a/b coefficient followed by variables with explicit '*' between factors
// and '^' for exponents.  Every generator must be homogeneous.
struct IdealFile {
  std::string id;  // basename stem for file loads; caller-set otherwise
  RingPtr ring;
  TermOrder order = TermOrder::grevlex();
  bool order_given = false;
  std::vector<Polynomial> gens;
  std::map<std::string, mpz_class> expect;
};

// Keys admitted in the expect: block.
const std::vector<std::string>& expect_keys();

// Parses the format above with position-annotated errors.  strict rejects
// unknown expect: keys; otherwise they are ignored.
IdealFile parse_ideal_file(const std::string& text, bool strict = false);
IdealFile load_ideal_file(const std::string& path, bool strict = false);

std::string serialize_ideal(const IdealFile& f);

// JSON audit report.  Big integers are carried as decimal strings; timings
// live under a single top-level key so callers can strip them when comparing
// runs.  The rendering is stable: same reports and seeds give identical text.
std::string report_json(const std::vector<BoundReport>& reports,
                        std::uint64_t seed, int trials,
                        const std::map<std::string, double>& timings = {});

// Inverse of report_json up to the timings block; used by the round-trip
// tests and by tooling that post-processes audit output.
struct ReportDocument {
  std::string version;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<BoundReport> reports;
};
ReportDocument report_from_json(const std::string& text);

}  // namespace cmreg
