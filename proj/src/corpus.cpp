#include "cmreg/corpus.hpp"

#include <algorithm>
#include <set>

#include "cmreg/groebner.hpp"
#include "cmreg/util.hpp"

namespace cmreg {

IdealHandle corpus_handle(const CorpusEntry& entry, std::uint64_t seed,
                          int trials, GBOptions opts) {
  IdealHandle H(entry.file.ring, entry.file.gens, seed, trials, opts);
  if (entry.prime) H.declare_prime();
  if (entry.known_adeg) H.supply_arith_degree(*entry.known_adeg);
  return H;
}

std::vector<Polynomial> toric_kernel(const std::vector<std::vector<long>>& exps,
                                     const RingPtr& target,
                                     const GBOptions& opts) {
  const int m = static_cast<int>(exps.size());
  if (m != target->nvars)
    fail(ErrorCode::invalid_input, "one exponent row per target variable");
  if (m < 1 || m > 6)
    fail(ErrorCode::invalid_input, "at most 6 target variables");
  const int p = exps.empty() ? 0 : static_cast<int>(exps[0].size());
  if (p < 1 || p > 3)
    fail(ErrorCode::invalid_input, "between 1 and 3 parameters");
  long dmax = 0;
  for (const auto& row : exps) {
    if (static_cast<int>(row.size()) != p)
      fail(ErrorCode::invalid_input, "ragged exponent rows");
    long d = 0;
    for (long x : row) {
      if (x < 0) fail(ErrorCode::invalid_input, "negative exponent");
      d += x;
    }
    dmax = std::max(dmax, d);
  }
  if (dmax == 0) fail(ErrorCode::invalid_input, "constant parametrization");

  // Rows of smaller degree get the slack on one extra parameter, keeping the
  // kernel homogeneous.
  bool pad = false;
  for (const auto& row : exps) {
    long d = 0;
    for (long x : row) d += x;
    if (d != dmax) pad = true;
  }
  const int np = p + (pad ? 1 : 0);

  std::vector<std::vector<long>> rows = exps;
  for (auto& row : rows) {
    long d = 0;
    for (long x : row) d += x;
    if (pad) row.push_back(dmax - d);
  }

  std::vector<std::string> names;
  for (int j = 1; j <= np; ++j) names.push_back("u" + std::to_string(j));
  for (const auto& nm : target->var_names) {
    if (std::find(names.begin(), names.end(), nm) != names.end())
      fail(ErrorCode::invalid_input,
           "target variable name '" + nm + "' collides with a parameter");
    names.push_back(nm);
  }
  RingPtr big = make_ring(np + m, target->field, names);

  std::vector<Polynomial> gens;
  for (int i = 0; i < m; ++i) {
    Monomial xi(np + m);
    xi.set(np + i, 1);
    Monomial ui(np + m);
    for (int j = 0; j < np; ++j) ui.set(j, static_cast<std::uint64_t>(rows[i][j]));
    gens.push_back(
        Polynomial::make(big, {{xi, mpq_class(1)}, {ui, mpq_class(-1)}}));
  }

  std::vector<Polynomial> elim = eliminate_first(big, gens, np, opts);

  RingPtr pring = make_ring(np, target->field);
  std::vector<Polynomial> out;
  for (const Polynomial& g : elim) {
    std::vector<Term> tterms, sterms;
    for (const Term& t : g.terms()) {
      for (int j = 0; j < np; ++j)
        if (t.m[j])
          fail(ErrorCode::internal, "elimination left a parameter variable");
      Monomial w(m);
      for (int i = 0; i < m; ++i) w.set(i, t.m[np + i]);
      tterms.push_back({w, t.c});
      // Substitute the parametrization back in.
      Monomial q(np);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < np; ++j)
          q.set(j, q[j] + std::uint64_t(w[i]) * std::uint64_t(rows[i][j]));
      sterms.push_back({q, t.c});
    }
    if (!Polynomial::make(pring, std::move(sterms)).is_zero())
      fail(ErrorCode::internal,
           "kernel generator does not vanish under the parametrization");
    out.push_back(Polynomial::make(target, std::move(tterms)));
  }
  return out;
}

CorpusEntry twisted_cubic(const GBOptions& opts) {
  CorpusEntry e;
  RingPtr ring = make_ring(4, Field::rationals());
  e.file.id = "twisted-cubic";
  e.file.ring = ring;
  e.file.gens = toric_kernel({{3, 0}, {2, 1}, {1, 2}, {0, 3}}, ring, opts);
  e.prime = true;
  e.file.expect["dim"] = 2;
  e.file.expect["e"] = 3;
  e.file.expect["adeg"] = 3;
  e.file.expect["regq"] = 1;
  e.file.expect["reg"] = 2;
  e.file.expect["postulation"] = 0;
  return e;
}

CorpusEntry toric_surface(long e, const GBOptions& opts) {
  if (e < 3) fail(ErrorCode::invalid_input, "toric_surface needs e >= 3");
  CorpusEntry entry;
  RingPtr ring = make_ring(4, Field::rationals());
  entry.file.id = "toric-surface-e" + std::to_string(e);
  entry.file.ring = ring;
  entry.file.gens =
      toric_kernel({{e, 0}, {e - 1, 1}, {1, e - 1}, {0, e}}, ring, opts);
  entry.prime = true;
  entry.file.expect["dim"] = 2;
  entry.file.expect["e"] = e;
  entry.file.expect["adeg"] = e;
  if (e == 6) {
    entry.file.expect["regq"] = 4;
    entry.file.expect["reg"] = 5;
    entry.file.expect["e_1"] = 5;
  }
  return entry;
}

CorpusEntry double_plane(long t) {
  if (t < 1) fail(ErrorCode::invalid_input, "double_plane needs t >= 1");
  CorpusEntry entry;
  RingPtr ring =
      make_ring(4, Field::rationals(), {"x", "y", "u", "v"});
  entry.file.id = "double-plane-t" + std::to_string(t);
  entry.file.ring = ring;
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial y = Polynomial::variable(ring, 1);
  Monomial xut(4), yvt(4);
  xut.set(0, 1);
  xut.set(2, static_cast<std::uint64_t>(t));
  yvt.set(1, 1);
  yvt.set(3, static_cast<std::uint64_t>(t));
  entry.file.gens = {
      x * x, x * y, y * y,
      Polynomial::make(ring, {{xut, mpq_class(1)}, {yvt, mpq_class(1)}})};
  entry.known_adeg = 2;
  entry.file.expect["dim"] = 2;
  entry.file.expect["e"] = 2;
  entry.file.expect["adeg"] = 2;
  entry.file.expect["regq"] = t;
  entry.file.expect["reg"] = t + 1;
  // H(s) = 3s+1 up to degree t, then 2s+t+1 = 2(s+1) + (t-1) onwards.
  entry.file.expect["e_1"] = -(t - 1);
  return entry;
}

CorpusEntry borel_intersection(int n, int c, int r) {
  if (n < 2 || n > 6 || c < 1 || c >= n || r < 2)
    fail(ErrorCode::invalid_input,
         "borel_intersection needs 2 <= n <= 6, 1 <= c < n, r >= 2");
  CorpusEntry entry;
  RingPtr ring = make_ring(n, Field::rationals());
  entry.file.id = "borel-intersection-n" + std::to_string(n) + "c" +
                  std::to_string(c) + "r" + std::to_string(r);
  entry.file.ring = ring;
  std::vector<Monomial> pg, qg;
  for (int i = 0; i < c; ++i) pg.push_back(Monomial::variable(n, i));
  for (int i = 0; i < c; ++i)
    qg.push_back(Monomial::variable(n, i, static_cast<std::uint32_t>(r)));
  for (int j = c; j < n - 1; ++j)
    qg.push_back(Monomial::variable(n, j, static_cast<std::uint32_t>(r - 1)));
  MonomialIdeal P = MonomialIdeal::make(ring, pg);
  MonomialIdeal Q = MonomialIdeal::make(ring, qg);
  entry.file.gens = P.intersect(Q).to_polynomials();
  int d = n - c;
  entry.file.expect["dim"] = d;
  entry.file.expect["e"] = 1;
  entry.file.expect["regq"] =
      static_cast<long>(n - 1) * r - 2 * n + c + 2;
  if (d == 2) {
    mpz_class rc = 1;
    for (int i = 0; i < c; ++i) rc *= r;
    entry.file.expect["e_1"] = -((rc - 1) * (r - 1));
  }
  if (n == 4 && c == 2 && r == 3) entry.file.expect["adeg"] = 17;
  return entry;
}

std::vector<CorpusEntry> named_corpus(const GBOptions& opts) {
  std::vector<CorpusEntry> out;
  out.push_back(twisted_cubic(opts));
  out.push_back(double_plane(3));
  out.push_back(toric_surface(6, opts));
  out.push_back(borel_intersection(4, 2, 3));
  return out;
}

namespace {

Monomial random_monomial(SeededInts& rng, int n, long degree) {
  Monomial m(n);
  for (long k = 0; k < degree; ++k) {
    int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    m.set(i, std::uint64_t(m[i]) + 1);
  }
  return m;
}

Monomial random_squarefree(SeededInts& rng, int n, long degree) {
  Monomial m(n);
  long placed = 0;
  while (placed < degree) {
    int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (!m[i]) {
      m.set(i, 1);
      ++placed;
    }
  }
  return m;
}

// Strongly stable closure: add x_i * m / x_j for every i < j with x_j | m,
// until nothing new appears.
std::vector<Monomial> stable_closure(const std::vector<Monomial>& start, int n) {
  std::set<Monomial> seen(start.begin(), start.end());
  std::vector<Monomial> work(start);
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    for (int j = 1; j < n; ++j) {
      if (!m[j]) continue;
      for (int i = 0; i < j; ++i) {
        Monomial w = m;
        w.set(j, std::uint64_t(m[j]) - 1);
        w.set(i, std::uint64_t(w[i]) + 1);
        if (seen.insert(w).second) work.push_back(w);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

const char* flavor_name(RandomFlavor f) {
  switch (f) {
    case RandomFlavor::general: return "general";
    case RandomFlavor::monomial: return "monomial";
    case RandomFlavor::squarefree: return "squarefree";
    case RandomFlavor::borel: return "borel";
  }
  return "unknown";
}

}  // namespace

std::vector<IdealFile> random_ideals(int n, int max_degree, int count,
                                     std::uint64_t seed, RandomFlavor flavor) {
  if (n < 1 || n > 6) fail(ErrorCode::invalid_input, "random_ideals needs n <= 6");
  if (max_degree < 1 || max_degree > 5)
    fail(ErrorCode::invalid_input, "random_ideals needs max degree <= 5");
  if (count < 1 || count > 1000)
    fail(ErrorCode::invalid_input, "random_ideals count out of range");

  RingPtr ring = make_ring(n, Field::rationals());
  std::vector<IdealFile> out;
  const std::uint64_t salt_base =
      (static_cast<std::uint64_t>(flavor) + 1) << 32;

  for (int idx = 0; idx < count; ++idx) {
    SeededInts rng(mix_seed(seed, salt_base | static_cast<std::uint64_t>(idx)));
    IdealFile f;
    f.ring = ring;
    f.id = std::string(flavor_name(flavor)) + "-n" + std::to_string(n) + "d" +
           std::to_string(max_degree) + "s" + std::to_string(seed) + "-" +
           std::to_string(idx);

    if (flavor == RandomFlavor::general) {
      int k = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
      for (int g = 0; g < k; ++g) {
        long deg = 1 + static_cast<long>(
                           rng.next_below(static_cast<std::uint64_t>(max_degree)));
        Polynomial poly;
        do {
          std::vector<Term> terms;
          int nt = 2 + static_cast<int>(rng.next_below(3));
          for (int s = 0; s < nt; ++s) {
            long cval = 0;
            while (cval == 0) cval = static_cast<long>(rng.next_below(7)) - 3;
            terms.push_back({random_monomial(rng, n, deg), mpq_class(cval)});
          }
          poly = Polynomial::make(ring, std::move(terms));
        } while (poly.is_zero());
        f.gens.push_back(std::move(poly));
      }
    } else {
      int k = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n + 1)));
      std::vector<Monomial> mons;
      for (int g = 0; g < k; ++g) {
        long cap = flavor == RandomFlavor::squarefree
                       ? std::min<long>(n, max_degree)
                       : max_degree;
        long deg = 1 + static_cast<long>(
                           rng.next_below(static_cast<std::uint64_t>(cap)));
        mons.push_back(flavor == RandomFlavor::squarefree
                           ? random_squarefree(rng, n, deg)
                           : random_monomial(rng, n, deg));
      }
      if (flavor == RandomFlavor::borel) mons = stable_closure(mons, n);
      MonomialIdeal I = MonomialIdeal::make(ring, std::move(mons));
      f.gens = I.to_polynomials();
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace cmreg
