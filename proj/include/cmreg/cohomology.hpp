#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "cmreg/groebner.hpp"
#include "cmreg/hilbert.hpp"
#include "cmreg/monomial_ideal.hpp"

namespace cmreg {

// Sentinel for "module vanishes" in a-invariant slots.
inline constexpr long kMinusInfinity = LONG_MIN;

// One link of the saturation chain of an ideal of Borel type:
//   I_0 = I,  I_{j+1} = I_j : x_{m_j}^infty,  m_j = max variable in I_j.
// The generators of I_j live in K[x_1..x_{m_j}]; sat is the saturation of
// I_j with respect to (x_1..x_{m_j}) in that subring, and lengths[u] is the
// K-dimension of degree-u part of sat/I_j, a finite-length module.
struct ChainStep {
  MonomialIdeal ideal;
  int mj = 0;
  MonomialIdeal sat;
  std::vector<long long> lengths;  // index u = 0..end; empty if sat == ideal
  long end = kMinusInfinity;       // last u with lengths[u] != 0
};

struct SaturationChain {
  RingPtr ring;
  std::vector<ChainStep> steps;
  int codim = 0;  // n - m_last... equals codim of I; cross-checked
};

// Requires a proper nonzero monomial ideal of Borel type.
SaturationChain saturation_chain(const MonomialIdeal& I);

// Graded local cohomology of R/I with respect to the graded maximal ideal,
// assembled from the saturation chain: the j-th module is the finite-length
// piece of the chain step with n - m_i = j, extended by the binomial kernel
//   h^j(t) = sum_u lengths[u] * C(u - t - 1, j - 1)   (j >= 1),
// and h^0(t) = lengths[t] directly.
struct CohomologyTable {
  int nvars = 0;
  int dim = 0;                                // dim R/I
  long t_lo = 0, t_hi = -1;                   // reporting window
  std::vector<std::vector<mpz_class>> h;      // h[j][t - t_lo], j = 0..dim
  std::vector<long> a;                        // a[j] = max{t : h^j(t) != 0}
  long reg_quotient = 0;                      // max_j (a[j] + j)
  std::vector<long> reg_tail;                 // reg_tail[k] = max_{j>=k}(a[j]+j)
  // Per-degree lengths of the finite-length chain module feeding h^j; h^j(t)
  // for arbitrary t is reconstructed from these, so value() is not limited
  // to the reporting window.
  std::vector<std::vector<long long>> mod_lengths;

  mpz_class value(int j, long t) const;       // exact h^j(t) for any t
};

CohomologyTable cohomology_table(const SaturationChain& chain, long t_lo,
                                 long t_hi);

enum class RegMethod { auto_pick, chain, stable_generators, generic_initial };

struct RegularityResult {
  long reg_quotient = 0;  // reg(R/I)
  long reg_ideal = 1;     // reg(I) = reg(R/I) + 1 for proper nonzero I
  bool exact = true;      // false when a randomized reduction was involved
  bool upper_bound_only = false;  // trials disagreed; value is min over them
  std::string method;
  std::optional<CohomologyTable> table;
  std::optional<MonomialIdeal> reduction_used;  // the monomial ideal measured
};

// Regularity of R/I for a monomial ideal (exact; picks the cheapest valid
// route for the requested method).
RegularityResult regularity(const MonomialIdeal& I, RegMethod method,
                            long window_lo = -5, long window_hi = 10);

// Regularity of R/I for an arbitrary homogeneous ideal, via a random
// coordinate change and the reverse-lex initial ideal (which preserves the
// regularity for almost all changes).  Deterministic in the seed.
RegularityResult regularity(const RingPtr& ring,
                            const std::vector<Polynomial>& gens,
                            RegMethod method, std::uint64_t seed, int trials,
                            const GBOptions& opts = {}, long window_lo = -5,
                            long window_hi = 10);

// Serre/Grothendieck bookkeeping check: for every t in the window,
//   H(t) - P(t) = sum_j (-1)^j h^j(t).
// Returns the largest absolute discrepancy (0 on success) together with the
// per-t values; callers decide whether nonzero is fatal.
struct EulerCheck {
  long t_lo = 0, t_hi = -1;
  std::vector<mpz_class> lhs;  // H - P
  std::vector<mpz_class> rhs;  // alternating sum of h^j
  bool ok = true;
};
EulerCheck euler_characteristic_check(const MonomialIdeal& I, long t_lo,
                                      long t_hi);

// One generic hyperplane section: apply a random coordinate change, add the
// last variable, saturate with respect to the maximal ideal, then set that
// variable to zero.  Returns the section ideal in a ring with one variable
// fewer.  Requires n >= 2.
struct SectionResult {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::uint64_t seed = 0;
};
SectionResult hyperplane_section(const RingPtr& ring,
                                 const std::vector<Polynomial>& gens,
                                 std::uint64_t seed, const GBOptions& opts = {});

}  // namespace cmreg
