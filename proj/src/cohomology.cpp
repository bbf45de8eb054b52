#include "cmreg/cohomology.hpp"

#include <algorithm>

#include "cmreg/linchange.hpp"

namespace cmreg {

namespace {

// Embed a monomial in the first m variables into the full ring.
Monomial pad_from(int nvars, const Monomial& small) {
  Monomial m(nvars);
  for (int i = 0; i < small.nvars(); ++i) m.set(i, small[i]);
  return m;
}

std::optional<MonomialIdeal> try_monomial(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens) {
  std::vector<Monomial> mons;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.terms().size() != 1) return std::nullopt;
    mons.push_back(g.terms()[0].m);
  }
  return MonomialIdeal::make(ring, std::move(mons));
}

}  // namespace

SaturationChain saturation_chain(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    fail(ErrorCode::invalid_input, "saturation chain needs a proper nonzero ideal");
  if (!is_borel_type(I))
    fail(ErrorCode::hypothesis, "saturation chain needs an ideal of Borel type");
  const RingPtr& ring = I.ring();
  const int n = ring->nvars;

  SaturationChain chain;
  chain.ring = ring;
  MonomialIdeal cur = I;
  while (!cur.is_unit()) {
    ChainStep step{cur, cur.max_var(), cur, {}, kMinusInfinity};
    if (step.mj <= 0) fail(ErrorCode::internal, "chain hit an improper ideal");
    step.sat = cur.initial_segment_saturate(step.mj);

    // Lengths of (sat/cur)_u, counting monomials in the first mj variables.
    long u_max = 0;
    for (const auto& g : cur.gens())
      u_max = std::max(u_max, static_cast<long>(g.degree()));
    for (const auto& g : step.sat.gens())
      u_max = std::max(u_max, static_cast<long>(g.degree()));
    // Both ideals are generated in degrees <= u_max, so once the counts agree
    // at some u >= u_max they agree forever after.
    std::vector<long long> lengths;
    for (long u = 0;; ++u) {
      long long l = 0;
      for (const auto& small : monomials_of_degree(step.mj, u)) {
        Monomial m = pad_from(n, small);
        if (step.sat.contains(m) && !cur.contains(m)) ++l;
      }
      lengths.push_back(l);
      if (u >= u_max && l == 0) break;
      if (u > u_max + 100000)
        fail(ErrorCode::internal, "chain module lengths failed to terminate");
    }
    while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
    step.lengths = lengths;
    step.end = lengths.empty() ? kMinusInfinity
                               : static_cast<long>(lengths.size()) - 1;
    chain.steps.push_back(std::move(step));

    MonomialIdeal next = cur.var_saturate(chain.steps.back().mj);
    if (next == cur)
      fail(ErrorCode::internal, "saturation chain failed to make progress");
    if (!next.is_unit() && !is_borel_type(next))
      fail(ErrorCode::internal, "chain member lost the Borel-type property");
    cur = next;
  }

  chain.codim = chain.steps.back().mj;
  if (dimension(I) != n - chain.codim)
    fail(ErrorCode::internal, "chain codimension disagrees with dimension");
  return chain;
}

mpz_class CohomologyTable::value(int j, long t) const {
  if (j < 0 || j > dim || mod_lengths[j].empty()) return 0;
  const auto& len = mod_lengths[j];
  if (j == 0) {
    if (t < 0 || t >= static_cast<long>(len.size())) return 0;
    return mpz_class(static_cast<long>(len[t]));
  }
  mpz_class s = 0;
  for (size_t u = 0; u < len.size(); ++u)
    if (len[u])
      s += mpz_class(static_cast<long>(len[u])) *
           binom_nat(static_cast<long>(u) - t - 1, j - 1);
  return s;
}

CohomologyTable cohomology_table(const SaturationChain& chain, long t_lo,
                                 long t_hi) {
  if (t_hi < t_lo) fail(ErrorCode::invalid_input, "empty cohomology window");
  const int n = chain.ring->nvars;
  CohomologyTable tab;
  tab.nvars = n;
  tab.dim = n - chain.codim;
  tab.t_lo = t_lo;
  tab.t_hi = t_hi;
  const size_t width = static_cast<size_t>(t_hi - t_lo + 1);
  tab.h.assign(tab.dim + 1, std::vector<mpz_class>(width, 0));
  tab.a.assign(tab.dim + 1, kMinusInfinity);
  tab.mod_lengths.assign(tab.dim + 1, {});

  for (const auto& step : chain.steps) {
    int j = n - step.mj;
    if (j < 0 || j > tab.dim)
      fail(ErrorCode::internal, "chain step outside cohomological range");
    if (step.end == kMinusInfinity) continue;  // module vanishes
    tab.mod_lengths[j] = step.lengths;
    if (j == 0)
      tab.a[0] = step.end;
    else
      tab.a[j] = step.end - j;
  }
  for (int j = 0; j <= tab.dim; ++j)
    for (long t = t_lo; t <= t_hi; ++t) tab.h[j][t - t_lo] = tab.value(j, t);

  long reg = kMinusInfinity;
  for (int j = 0; j <= tab.dim; ++j)
    if (tab.a[j] != kMinusInfinity) reg = std::max(reg, tab.a[j] + j);
  if (reg == kMinusInfinity)
    fail(ErrorCode::internal, "all cohomology modules vanished");
  tab.reg_quotient = reg;

  tab.reg_tail.assign(tab.dim + 1, kMinusInfinity);
  for (int k = tab.dim; k >= 0; --k) {
    long best = (k + 1 <= tab.dim) ? tab.reg_tail[k + 1] : kMinusInfinity;
    if (tab.a[k] != kMinusInfinity) best = std::max(best, tab.a[k] + k);
    tab.reg_tail[k] = best;
  }
  return tab;
}

namespace {

RegularityResult regularity_via_chain(const MonomialIdeal& I, long window_lo,
                                      long window_hi) {
  SaturationChain chain = saturation_chain(I);
  CohomologyTable tab = cohomology_table(chain, window_lo, window_hi);
  RegularityResult res;
  res.reg_quotient = tab.reg_quotient;
  res.reg_ideal = tab.reg_quotient + 1;
  res.exact = true;
  res.method = "saturation-chain";
  res.table = std::move(tab);
  if (is_strongly_stable(I)) {
    long maxdeg = 0;
    for (const auto& g : I.gens())
      maxdeg = std::max(maxdeg, static_cast<long>(g.degree()));
    if (maxdeg != res.reg_ideal)
      fail(ErrorCode::internal,
           "chain regularity disagrees with stable generator degree");
  }
  return res;
}

}  // namespace

RegularityResult regularity(const MonomialIdeal& I, RegMethod method,
                            long window_lo, long window_hi) {
  if (I.is_zero() || I.is_unit())
    fail(ErrorCode::invalid_input, "regularity needs a proper nonzero ideal");
  switch (method) {
    case RegMethod::stable_generators: {
      if (!is_strongly_stable(I))
        fail(ErrorCode::hypothesis,
             "generator-degree route needs a strongly stable ideal");
      RegularityResult res;
      long maxdeg = 0;
      for (const auto& g : I.gens())
        maxdeg = std::max(maxdeg, static_cast<long>(g.degree()));
      res.reg_ideal = maxdeg;
      res.reg_quotient = maxdeg - 1;
      res.exact = true;
      res.method = "stable-generators";
      return res;
    }
    case RegMethod::chain:
      return regularity_via_chain(I, window_lo, window_hi);
    case RegMethod::auto_pick:
      if (is_borel_type(I)) return regularity_via_chain(I, window_lo, window_hi);
      return regularity(I.ring(), I.to_polynomials(), RegMethod::generic_initial,
                        0, 3, {}, window_lo, window_hi);
    case RegMethod::generic_initial:
      return regularity(I.ring(), I.to_polynomials(), RegMethod::generic_initial,
                        0, 3, {}, window_lo, window_hi);
  }
  fail(ErrorCode::internal, "unhandled regularity method");
}

RegularityResult regularity(const RingPtr& ring,
                            const std::vector<Polynomial>& gens,
                            RegMethod method, std::uint64_t seed, int trials,
                            const GBOptions& opts, long window_lo,
                            long window_hi) {
  if (method != RegMethod::generic_initial) {
    auto mono = try_monomial(ring, gens);
    if (mono) return regularity(*mono, method, window_lo, window_hi);
    if (method != RegMethod::auto_pick)
      fail(ErrorCode::hypothesis,
           "requested regularity route needs a monomial ideal");
  }

  GinResult gin = generic_initial_ideal(ring, gens, TermOrder::grevlex(), seed,
                                        trials, opts);
  std::vector<const MonomialIdeal*> usable;
  for (const auto& cand : gin.candidates)
    if (is_borel_type(cand)) usable.push_back(&cand);
  if (usable.empty())
    fail(ErrorCode::genericity,
         "no trial produced an ideal of Borel type; coordinate change not "
         "generic enough");

  if (gin.agreed) {
    RegularityResult res = regularity_via_chain(*usable.front(), window_lo,
                                                window_hi);
    res.exact = false;
    res.method = "generic-initial(grevlex)";
    res.reduction_used = *usable.front();
    return res;
  }
  // Trials disagreed: each candidate still gives an upper bound for the
  // regularity, so report the best one and flag it.
  RegularityResult best;
  bool have = false;
  for (const auto* cand : usable) {
    RegularityResult r = regularity_via_chain(*cand, window_lo, window_hi);
    if (!have || r.reg_quotient < best.reg_quotient) {
      best = std::move(r);
      best.reduction_used = *cand;
    }
    have = true;
  }
  best.exact = false;
  best.upper_bound_only = true;
  best.method = "generic-initial(grevlex), trials disagreed";
  return best;
}

EulerCheck euler_characteristic_check(const MonomialIdeal& I, long t_lo,
                                      long t_hi) {
  SaturationChain chain = saturation_chain(I);
  CohomologyTable tab = cohomology_table(chain, t_lo, t_hi);
  HilbertSeries hs = hilbert_series(I);
  HilbertPolynomial hp = hilbert_polynomial(hs);

  EulerCheck chk;
  chk.t_lo = t_lo;
  chk.t_hi = t_hi;
  for (long t = t_lo; t <= t_hi; ++t) {
    chk.lhs.push_back(hs.function(t) - hp.eval(t));
    mpz_class s = 0;
    for (int j = 0; j <= tab.dim; ++j) {
      if (j % 2 == 0)
        s += tab.h[j][t - t_lo];
      else
        s -= tab.h[j][t - t_lo];
    }
    chk.rhs.push_back(s);
  }
  chk.ok = (chk.lhs == chk.rhs);
  return chk;
}

SectionResult hyperplane_section(const RingPtr& ring,
                                 const std::vector<Polynomial>& gens,
                                 std::uint64_t seed, const GBOptions& opts) {
  const int n = ring->nvars;
  if (n < 2)
    fail(ErrorCode::invalid_input, "hyperplane section needs at least 2 variables");

  LinearChange phi = LinearChange::random(ring, mix_seed(seed, 0x5EC));
  std::vector<Polynomial> moved = phi.apply(gens);
  moved.push_back(Polynomial::variable(ring, n - 1));
  std::vector<Polynomial> sat =
      m_saturate_ideal(ring, moved, mix_seed(seed, 0x5EC7), opts);

  std::vector<std::string> names(ring->var_names.begin(),
                                 ring->var_names.end() - 1);
  RingPtr target = make_ring(n - 1, ring->field, names);
  std::vector<Polynomial> images;
  for (int i = 0; i < n - 1; ++i)
    images.push_back(Polynomial::variable(target, i));
  images.push_back(Polynomial::constant(target, 0));

  SectionResult out;
  out.ring = target;
  out.seed = seed;
  for (const auto& g : sat) {
    Polynomial img = g.substitute(target, images);
    if (!img.is_zero()) out.gens.push_back(img);
  }
  return out;
}

}  // namespace cmreg
