#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmreg/handle.hpp"
#include "cmreg/ideal_io.hpp"

namespace cmreg {

// A corpus ideal: the file payload (ring, generators, expected invariants)
// plus structural facts certified by the construction itself.
struct CorpusEntry {
  IdealFile file;
  bool prime = false;                   // kernel of a map onto a domain
  std::optional<mpz_class> known_adeg;  // pinned down by the construction
};

// Builds the handle and applies the certified declarations.
IdealHandle corpus_handle(const CorpusEntry& entry, std::uint64_t seed = 0,
                          int trials = 3, GBOptions opts = {});

// Kernel of K[x_1..x_m] -> K[u_1..u_p], x_i -> u^{v_i}, with v_i the rows of
// exps.  Rows of unequal total degree are homogenized by an extra parameter,
// so the result is always homogeneous in the standard grading.  Every output
// generator is re-substituted and checked to vanish (internal error if not).
std::vector<Polynomial> toric_kernel(const std::vector<std::vector<long>>& exps,
                                     const RingPtr& target,
                                     const GBOptions& opts = {});

// The rational normal cubic curve: kernel of x_i -> s^{4-i} t^{i-1}.
CorpusEntry twisted_cubic(const GBOptions& opts = {});

// Surface ruled by the monomials x^e, x^{e-1}y, xy^{e-1}, y^e (e >= 3): a
// projection of the degree-e rational normal scroll with known cohomology.
CorpusEntry toric_surface(long e, const GBOptions& opts = {});

// A double structure on a plane: ((x,y)^2, x*u^t + y*v^t) in K[x,y,u,v].
// Degree and arithmetic degree are 2; the regularity grows linearly in t.
CorpusEntry double_plane(long t);

// The Borel-type intersection (x_1..x_c) with (x_1^r..x_c^r,
// x_{c+1}^{r-1}..x_{n-1}^{r-1}): a subspace carrying a fat embedded
// component, with closed-form regularity (n-1)r - 2n + c + 2.
CorpusEntry borel_intersection(int n, int c, int r);

// The four standard named entries with their stock parameters.
std::vector<CorpusEntry> named_corpus(const GBOptions& opts = {});

enum class RandomFlavor { general, monomial, squarefree, borel };

// Deterministic random ideals (same seed, same corpus).  Caps: n <= 6,
// max_degree <= 5.  borel draws monomials and closes them under the
// variable-swap moves, so every output is strongly stable.
std::vector<IdealFile> random_ideals(int n, int max_degree, int count,
                                     std::uint64_t seed, RandomFlavor flavor);

}  // namespace cmreg
