#pragma once

#include <optional>
#include <vector>

#include "cmreg/groebner.hpp"
#include "cmreg/monomial_ideal.hpp"

namespace cmreg {

// Hilbert series of a graded quotient R/I: numerator N(z) over (1-z)^n
// together with the reduced form h(z) over (1-z)^dim, h(1) != 0.
// For the unit ideal the numerator is 0 and dim is -1.
struct HilbertSeries {
  int nvars = 0;
  std::vector<mpz_class> numerator;  // N(z), index = degree
  int dim = -1;
  std::vector<mpz_class> reduced;    // h(z)
  mpz_class multiplicity() const;    // h(1); length of R/I when dim = 0

  // Hilbert function H(t) of R/I (0 for t < 0).
  mpz_class function(long t) const;
  bool operator==(const HilbertSeries& o) const {
    return nvars == o.nvars && numerator == o.numerator;
  }
};

// Exact series by pivot recursion on the staircase.
HilbertSeries hilbert_series(const MonomialIdeal& I);
// Series of R/I for a polynomial ideal via the initial ideal (any order).
HilbertSeries hilbert_series(const RingPtr& ring,
                             const std::vector<Polynomial>& gens,
                             const GBOptions& opts = {});

// Hilbert polynomial in the binomial-coefficient basis
//   P(t) = sum_i (-1)^i e_i * C(t + d-1-i, d-1-i),   e = e_0 > 0,
// with d = dim (P = 0 when d = 0, with the multiplicity kept separately).
struct HilbertPolynomial {
  int d = 0;
  std::vector<mpz_class> e;  // e_0 .. e_{d-1}
  mpz_class eval(long t) const;
  bool operator==(const HilbertPolynomial& o) const {
    return d == o.d && e == o.e;
  }
};
HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs);

// Least t0 >= 0 from which H and P agree for d+1 consecutive values (and
// onwards).  Scans upward; hard cap guards against malformed input.
long postulation_index(const HilbertSeries& hs, const HilbertPolynomial& hp);

struct HilbertFunctionTable {
  long t0 = 0, t1 = -1;
  std::vector<mpz_class> values;  // H(t0) .. H(t1)
  long postulation = 0;
};
HilbertFunctionTable hilbert_function_table(const HilbertSeries& hs,
                                            const HilbertPolynomial& hp,
                                            long t0, long t1);

// The unique Gotzmann/Macaulay decomposition of a Hilbert polynomial,
//   P(t) = sum_{j=1..s} C(c_j + t - j + 1, t - j + 1),
// with c_1 >= ... >= c_s >= 0, and the partial counts
//   B_i = #{ j : c_j >= (d-1) - i },  i = 0..d-1  (so B_{d-1} = s).
struct GotzmannData {
  std::vector<long> c;
  long s = 0;
  std::vector<mpz_class> B;
};
GotzmannData gotzmann_decomposition(const HilbertPolynomial& hp);

// The same B_i computed independently from the e_i by the alternating
// binomial recursion B_i = (-1)^i e_i + C(B_{i-1}+1, 2) - C(B_{i-2}+1, 3) +
// ...; every B_i must come out positive, else the input is rejected.
std::vector<mpz_class> b_sequence_from_coefficients(const HilbertPolynomial& hp);

// The lex-segment ideal with the same Hilbert function, built degree by
// degree and certified by exact equality of Hilbert series.
MonomialIdeal lex_segment_ideal(const HilbertSeries& target, const RingPtr& ring);

// Linear-algebra Hilbert oracle: dim (R/I)_t by exact row reduction of the
// degree-t multiples of the generators.  Wholly independent of the Groebner
// and series code paths.
mpz_class brute_force_hilbert(const RingPtr& ring,
                              const std::vector<Polynomial>& gens, long t);

// All monomials of the given total degree, in descending lex order.
std::vector<Monomial> monomials_of_degree(int nvars, long degree,
                                          std::uint64_t cap = 2000000);

}  // namespace cmreg
