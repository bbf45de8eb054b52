#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/cohomology.hpp"
#include "cmreg/groebner.hpp"
#include "cmreg/hilbert.hpp"
#include "cmreg/monomial_ideal.hpp"

namespace cmreg {

// Where the arithmetic degree came from.  Bound audits only treat a bound's
// hypotheses as met when the arithmetic degree is exact: upper estimates via
// an initial ideal keep violation verdicts sound but turn passes into mere
// consistency statements.
struct AdegData {
  mpz_class degree;        // geometric degree e
  mpz_class arith_degree;  // arithmetic degree
  std::string source;      // "standard-pairs" | "prime-degree" | "gin-upper" | "supplied"
  bool exact = false;
};

// A homogeneous ideal together with caches for every derived invariant the
// toolkit computes.  All randomized reductions below are deterministic in
// (seed, trials).
class IdealHandle {
public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens,
              std::uint64_t seed = 0, int trials = 3, GBOptions opts = {});
  explicit IdealHandle(const MonomialIdeal& I, std::uint64_t seed = 0,
                       int trials = 3, GBOptions opts = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GBOptions& options() const { return opts_; }
  std::uint64_t seed() const { return seed_; }
  int trials() const { return trials_; }

  bool is_homogeneous() const;
  bool is_zero();
  bool is_unit();
  bool proper_nonzero() { return !is_zero() && !is_unit(); }

  // The monomial structure, when every generator is a term.
  const std::optional<MonomialIdeal>& monomial();

  // Declares the ideal prime (e.g. verified toric): the arithmetic degree
  // then equals the degree.
  void declare_prime();
  bool prime_declared() const { return prime_known_; }
  // Supplies an externally computed arithmetic degree (treated as exact).
  void supply_arith_degree(const mpz_class& value);

  const GroebnerBasis& groebner(const TermOrder& order);
  MonomialIdeal initial(const TermOrder& order);
  const HilbertSeries& series();
  const HilbertPolynomial& hpoly();
  long postulation();
  const GotzmannData& gotzmann();

  int dim();    // Krull dimension of R/I
  int codim();  // height of I
  mpz_class multiplicity();

  // Minimal homogeneous generators (exact, via Nakayama trimming) and the
  // derived degree statistics: degrees sorted descending, their maximum, and
  // the product/shifted-sum of the top codim() of them.
  const std::vector<Polynomial>& minimal_generators();
  const std::vector<long>& minimal_degrees();
  long max_gen_degree();          // Delta
  mpz_class degree_product();     // delta_1 * ... * delta_c
  long degree_sum_shifted();      // (delta_1 - 1) + ... + (delta_c - 1)

  const AdegData& adeg();

  const RegularityResult& regularity_result();
  long reg_quotient() { return regularity_result().reg_quotient; }
  long reg_ideal() { return regularity_result().reg_ideal; }
  // max_{j >= k} (a_j + j); needs the cohomology table.
  long reg_tail(int k);
  // min{ j : h^j(R/I) != 0 }; depth of R/I.
  int depth();
  bool cohen_macaulay() { return depth() == dim(); }

  // The cohomology table backing the regularity result (the ideal's own
  // table for Borel-type monomial input, the reduction's otherwise).
  const CohomologyTable& table();

  // The generic initial ideal used for reductions (grevlex).
  const MonomialIdeal& gin();
  bool gin_is_exact_proxy();  // true when trials agreed

private:
  void require_proper();

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::uint64_t seed_;
  int trials_;
  GBOptions opts_;

  bool monomial_checked_ = false;
  std::optional<MonomialIdeal> monomial_;
  bool prime_known_ = false;
  std::optional<mpz_class> supplied_adeg_;

  std::map<std::string, GroebnerBasis> gb_cache_;
  std::optional<HilbertSeries> series_;
  std::optional<HilbertPolynomial> hpoly_;
  std::optional<long> postulation_;
  std::optional<GotzmannData> gotzmann_;
  std::optional<std::vector<Polynomial>> min_gens_;
  std::optional<std::vector<long>> min_degrees_;
  std::optional<AdegData> adeg_;
  std::optional<RegularityResult> reg_;
  std::optional<GinResult> gin_;
};

}  // namespace cmreg
