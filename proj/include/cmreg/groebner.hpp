#pragma once

#include <cstdint>
#include <vector>

#include "cmreg/linchange.hpp"
#include "cmreg/monomial_ideal.hpp"
#include "cmreg/polynomial.hpp"

namespace cmreg {

// Resource caps for Buchberger's algorithm.  Exceeding any of them raises a
// budget error; nothing is ever truncated silently.
struct GBOptions {
  int budget_degree = 40;     // max total degree of an S-pair lcm
  long budget_pairs = 200000; // max S-pairs processed
  int basis_cap = 2000;       // max intermediate basis size
  enum class Strategy { normal, fifo } strategy = Strategy::normal;
};

// A reduced Groebner basis: pairwise irreducible, normalized elements sorted
// by ascending leading monomial.  Unique for (ideal, order); over Q elements
// are integer-primitive with positive leading coefficient, over GF(p) monic.
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), order_(std::move(order)),
        basis_(std::move(basis)) {}

  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const;

  std::vector<Monomial> leading_monomials() const;

private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<Polynomial> basis_;
};

// Buchberger with the normal selection strategy and Gebauer-Moeller pair
// elimination, followed by inter-reduction to the reduced basis.
GroebnerBasis buchberger(const RingPtr& ring,
                         const std::vector<Polynomial>& gens,
                         const TermOrder& order, const GBOptions& opts = {});

// Fully reduced normal form; f - normal_form(f, G) lies in the ideal and no
// term of the result is divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f);
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

// Monomial ideal of leading terms (minimal generators).
MonomialIdeal initial_ideal(const GroebnerBasis& G);
MonomialIdeal initial_ideal(const RingPtr& ring,
                            const std::vector<Polynomial>& gens,
                            const TermOrder& order, const GBOptions& opts = {});

// Exact division f / g; fails unless g divides f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Ideal intersection via a degree-0 tag variable and an elimination order.
std::vector<Polynomial> intersect_ideals(const RingPtr& ring,
                                         const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b,
                                         const GBOptions& opts = {});

// (I : f) = (I cap (f)) / f.
std::vector<Polynomial> colon_by_poly(const RingPtr& ring,
                                      const std::vector<Polynomial>& gens,
                                      const Polynomial& f,
                                      const GBOptions& opts = {});

// (I : f^infinity) by iterating colon until the reduced basis stabilizes.
std::vector<Polynomial> saturate_by_poly(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         const Polynomial& f,
                                         const GBOptions& opts = {});

// (I : m^infinity) computed as saturation by a seeded random linear form,
// certified with two further random forms; retries with fresh forms up to
// five times and raises a genericity error if certification keeps failing.
std::vector<Polynomial> m_saturate_ideal(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         std::uint64_t seed,
                                         const GBOptions& opts = {});

// Elements of a Groebner basis (block order) free of the first k variables;
// returned in the same ring.
std::vector<Polynomial> eliminate_first(const RingPtr& ring,
                                        const std::vector<Polynomial>& gens,
                                        int k, const GBOptions& opts = {});

// Generic initial ideal: in(order, g(I)) for seeded random coordinate
// changes, repeated `trials` times; all trials must agree and the result
// must pass the Borel-position certificates.  Over GF(p) the characteristic
// must be at least 32003.
struct GinResult {
  MonomialIdeal ideal;
  int trials = 0;
  std::vector<std::uint64_t> trial_seeds;
  std::vector<MonomialIdeal> candidates;  // one per trial (deduplicated on agreement)
  bool agreed = false;
};
GinResult generic_initial_ideal(const RingPtr& ring,
                                const std::vector<Polynomial>& gens,
                                const TermOrder& order, std::uint64_t seed,
                                int trials, const GBOptions& opts = {});

}  // namespace cmreg
