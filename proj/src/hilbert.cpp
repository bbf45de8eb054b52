#include "cmreg/hilbert.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "cmreg/linalg.hpp"

namespace cmreg {

namespace {

using Poly = std::vector<mpz_class>;  // coefficients in z

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add_shifted(Poly& a, const Poly& b, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

struct NumeratorContext {
  long nodes = 0;
  static constexpr long kNodeCap = 400000;
};

// Numerator of the Hilbert series of R/I over (1-z)^n, by splitting the
// staircase at a power of the most shared variable.
Poly numerator_rec(const RingPtr& ring, const std::vector<Monomial>& gens,
                   NumeratorContext& ctx) {
  if (++ctx.nodes > NumeratorContext::kNodeCap)
    fail(ErrorCode::size_cap, "hilbert series recursion exceeded node cap");
  if (gens.empty()) return {1};
  if (gens.size() == 1 && gens[0].degree() == 0) return {};  // unit ideal

  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) { coprime = false; break; }
  if (coprime) {
    Poly r{1};
    for (const auto& g : gens) {
      Poly f(static_cast<size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f[f.size() - 1] = -1;
      r = poly_mul(r, f);
    }
    return r;
  }

  const int n = ring->nvars;
  int best_var = -1;
  int best_count = 0;
  for (int v = 0; v < n; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > best_count) { best_count = count; best_var = v; }
  }
  // best_count >= 2 here: otherwise the generators were pairwise coprime.
  std::vector<uint32_t> exps;
  for (const auto& g : gens)
    if (g[best_var] > 0) exps.push_back(g[best_var]);
  std::sort(exps.begin(), exps.end());
  uint32_t a = exps[(exps.size() - 1) / 2];  // lower median; never a pure power cap
  Monomial pivot = Monomial::variable(n, best_var, a);

  auto with_pivot = gens;
  with_pivot.push_back(pivot);
  MonomialIdeal plus = MonomialIdeal::make(ring, std::move(with_pivot));
  MonomialIdeal colon = MonomialIdeal::make(ring, gens).colon(pivot);

  Poly r = numerator_rec(ring, plus.gens(), ctx);
  Poly q = numerator_rec(ring, colon.gens(), ctx);
  poly_add_shifted(r, q, a);
  return r;
}

}  // namespace

mpz_class HilbertSeries::multiplicity() const {
  mpz_class s = 0;
  for (const auto& c : reduced) s += c;
  return s;
}

mpz_class HilbertSeries::function(long t) const {
  if (t < 0) return 0;
  mpz_class s = 0;
  for (size_t j = 0; j < numerator.size(); ++j) {
    if (static_cast<long>(j) > t) break;
    if (numerator[j] == 0) continue;
    s += numerator[j] * binom_nat(t - static_cast<long>(j) + nvars - 1, nvars - 1);
  }
  return s;
}

HilbertSeries hilbert_series(const MonomialIdeal& I) {
  HilbertSeries hs;
  hs.nvars = I.ring()->nvars;
  NumeratorContext ctx;
  Poly num = numerator_rec(I.ring(), I.gens(), ctx);
  poly_trim(num);
  hs.numerator = num;
  if (num.empty()) {  // unit ideal
    hs.dim = -1;
    return hs;
  }
  // Divide out (1-z) while the value at z = 1 is zero.
  Poly h = num;
  int k = 0;
  while (true) {
    mpz_class at_one = 0;
    for (const auto& c : h) at_one += c;
    if (at_one != 0) break;
    // h := h / (1-z): synthetic division.
    Poly q(h.size() - 1, 0);
    mpz_class carry = 0;
    // h(z) = (1-z) q(z) => q_0 = h_0, q_j = h_j + q_{j-1}.
    for (size_t j = 0; j + 1 < h.size(); ++j) {
      carry = (j == 0) ? h[0] : h[j] + carry;
      q[j] = carry;
    }
    h = q;
    poly_trim(h);
    ++k;
    if (k > hs.nvars) fail(ErrorCode::internal, "series numerator overdivided");
  }
  hs.dim = hs.nvars - k;
  hs.reduced = h;
  if (hs.dim < 0) fail(ErrorCode::internal, "negative dimension from series");
  return hs;
}

HilbertSeries hilbert_series(const RingPtr& ring,
                             const std::vector<Polynomial>& gens,
                             const GBOptions& opts) {
  TermOrder ord = TermOrder::grevlex();
  GroebnerBasis gb = buchberger(ring, gens, ord, opts);
  return hilbert_series(initial_ideal(gb));
}

mpz_class HilbertPolynomial::eval(long t) const {
  mpz_class s = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    long k = d - 1 - static_cast<long>(i);
    mpz_class term = e[i] * binom_poly(mpz_class(t + k), k);
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs) {
  if (hs.dim < 0) fail(ErrorCode::invalid_input, "unit ideal has no Hilbert polynomial");
  HilbertPolynomial hp;
  hp.d = hs.dim;
  if (hp.d == 0) return hp;  // P = 0
  hp.e.resize(hp.d, 0);
  for (int i = 0; i < hp.d; ++i)
    for (size_t j = 0; j < hs.reduced.size(); ++j)
      hp.e[i] += binom_nat(static_cast<long>(j), i) * hs.reduced[j];
  // Cross-validate against the series expansion at d+1 sample points far
  // enough out that H(t) = P(t).
  long start = static_cast<long>(hs.reduced.size()) + hp.d + 1;
  for (long t = start; t <= start + hp.d; ++t)
    if (hp.eval(t) != hs.function(t))
      fail(ErrorCode::internal, "hilbert polynomial disagrees with series");
  return hp;
}

long postulation_index(const HilbertSeries& hs, const HilbertPolynomial& hp) {
  const long need = hp.d + 1;
  long run = 0;
  for (long t = 0; t <= 100000; ++t) {
    if (hs.function(t) == hp.eval(t)) {
      if (++run == need) {
        // Agreement holds onwards once t passes deg(numerator): certify.
        long t0 = t - need + 1;
        long horizon = static_cast<long>(hs.numerator.size()) + hp.d + 1;
        for (long u = t + 1; u <= std::max(t + 1, horizon); ++u)
          if (hs.function(u) != hp.eval(u))
            fail(ErrorCode::internal, "postulation run did not persist");
        return t0;
      }
    } else {
      run = 0;
    }
  }
  fail(ErrorCode::size_cap, "postulation index not found below 100000");
}

HilbertFunctionTable hilbert_function_table(const HilbertSeries& hs,
                                            const HilbertPolynomial& hp,
                                            long t0, long t1) {
  if (t1 < t0) fail(ErrorCode::invalid_input, "empty window");
  HilbertFunctionTable tab;
  tab.t0 = t0;
  tab.t1 = t1;
  for (long t = t0; t <= t1; ++t) tab.values.push_back(hs.function(t));
  tab.postulation = postulation_index(hs, hp);
  return tab;
}

GotzmannData gotzmann_decomposition(const HilbertPolynomial& hp) {
  GotzmannData gd;
  if (hp.d == 0) return gd;
  const int d = hp.d;
  // Forward differences Delta^k P at the current base point (starts at 0).
  std::vector<mpz_class> vals;
  for (long t = 0; t < d; ++t) vals.push_back(hp.eval(t));
  std::vector<mpz_class> delta = vals;  // delta[k] = Delta^k P(base)
  for (int k = 1; k < d; ++k)
    for (int j = d - 1; j >= k; --j) delta[j] = delta[j] - delta[j - 1];

  constexpr long kCap = 2000000;
  long prev_c = LONG_MAX;
  while (true) {
    int deg = -1;
    for (int k = d - 1; k >= 0; --k)
      if (delta[k] != 0) { deg = k; break; }
    if (deg == -1) break;
    if (deg == 0) {
      // Constant remainder: that many trailing c_j = 0 terms.
      if (delta[0] < 0)
        fail(ErrorCode::not_hilbert, "remainder went negative in binomial expansion");
      if (delta[0] > kCap - gd.s)
        fail(ErrorCode::size_cap, "binomial expansion too long");
      long k = delta[0].get_si();
      for (long i = 0; i < k; ++i) gd.c.push_back(0);
      gd.s += k;
      break;
    }
    long c = deg;
    if (c > prev_c)
      fail(ErrorCode::not_hilbert, "binomial expansion degrees not non-increasing");
    if (delta[deg] < 0)
      fail(ErrorCode::not_hilbert, "leading difference negative in binomial expansion");
    prev_c = c;
    gd.c.push_back(c);
    if (++gd.s > kCap) fail(ErrorCode::size_cap, "binomial expansion too long");
    // Subtract C(t + c, c) at the current base point t (its Delta^k at the
    // base is C(c, c-k) when evaluated where the representation is exact;
    // tracking differences keeps everything translation-invariant).
    for (int k = 0; k <= deg; ++k) delta[k] -= binom_nat(c, c - k);
    // Shift base point by one: Delta^k at t+1 = Delta^k + Delta^{k+1} at t.
    for (int k = 0; k < d - 1; ++k) delta[k] = delta[k] + delta[k + 1];
  }

  // Self-check: the decomposition re-evaluates to P on d+1 sample points.
  for (long t = 0; t <= d; ++t) {
    mpz_class s = 0;
    for (size_t j = 0; j < gd.c.size(); ++j) {
      long cj = gd.c[j];
      s += binom_poly(mpz_class(cj + t - static_cast<long>(j)), cj);
    }
    if (s != hp.eval(t))
      fail(ErrorCode::internal, "binomial expansion self-check failed");
  }

  gd.B.resize(d, 0);
  for (int i = 0; i < d; ++i) {
    long threshold = (d - 1) - i;
    long count = 0;
    for (long cj : gd.c)
      if (cj >= threshold) ++count;
    gd.B[i] = count;
  }
  return gd;
}

std::vector<mpz_class> b_sequence_from_coefficients(const HilbertPolynomial& hp) {
  std::vector<mpz_class> B;
  for (int i = 0; i < hp.d; ++i) {
    mpz_class b = (i % 2 == 0) ? hp.e[i] : mpz_class(-hp.e[i]);
    for (int k = 1; k <= i; ++k) {
      mpz_class top = B[i - k] + 1;
      mpz_class binom;
      mpz_bin_ui(binom.get_mpz_t(), top.get_mpz_t(),
                 static_cast<unsigned long>(k + 1));
      if (k % 2 == 1)
        b += binom;
      else
        b -= binom;
    }
    if (b <= 0)
      fail(ErrorCode::not_hilbert,
           "partial-sum recursion produced a non-positive count");
    B.push_back(b);
  }
  return B;
}

std::vector<Monomial> monomials_of_degree(int nvars, long degree,
                                          std::uint64_t cap) {
  if (degree < 0) return {};
  mpz_class total = binom_nat(degree + nvars - 1, nvars - 1);
  if (total > static_cast<long>(cap))
    fail(ErrorCode::size_cap, "too many monomials in requested degree");
  std::vector<Monomial> out;
  std::vector<uint32_t> exps(nvars, 0);
  // Descending lex enumeration by recursion on the first variable.
  auto rec = [&](auto&& self, int var, long remaining) -> void {
    if (var == nvars - 1) {
      exps[var] = static_cast<uint32_t>(remaining);
      Monomial m(nvars);
      for (int i = 0; i < nvars; ++i) m.set(i, exps[i]);
      out.push_back(m);
      return;
    }
    for (long e = remaining; e >= 0; --e) {
      exps[var] = static_cast<uint32_t>(e);
      self(self, var + 1, remaining - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(0));
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

MonomialIdeal lex_segment_ideal(const HilbertSeries& target, const RingPtr& ring) {
  const int n = ring->nvars;
  if (target.nvars != n)
    fail(ErrorCode::ring_mismatch, "series and ring variable counts differ");
  if (target.dim < 0) {
    // Unit ideal: lex segment is (1).
    return MonomialIdeal::make(ring, {Monomial(n)});
  }
  std::vector<Monomial> gens;
  MonomialIdeal L = MonomialIdeal::make(ring, {});
  for (long m = 1; m <= 500; ++m) {
    if (hilbert_series(L) == target) return L;
    mpz_class ambient = binom_nat(m + n - 1, n - 1);
    mpz_class want = ambient - target.function(m);
    if (want < 0)
      fail(ErrorCode::not_hilbert, "hilbert function exceeds ambient dimension");
    auto mons = monomials_of_degree(n, m);
    mpz_class idx = 0;
    for (const auto& mon : mons) {
      bool old = L.contains(mon);
      if (idx < want) {
        if (!old) gens.push_back(mon);
      } else if (old) {
        fail(ErrorCode::not_hilbert,
             "lex segment overflow: function violates Macaulay growth");
      }
      ++idx;
    }
    L = MonomialIdeal::make(ring, gens);
  }
  if (hilbert_series(L) == target) return L;
  fail(ErrorCode::size_cap, "lex segment not closed out within degree 500");
}

mpz_class brute_force_hilbert(const RingPtr& ring,
                              const std::vector<Polynomial>& gens, long t) {
  if (t < 0) return 0;
  const int n = ring->nvars;
  auto mons = monomials_of_degree(n, t, 100000);
  struct ExpLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return a.exponents() < b.exponents();
    }
  };
  std::map<Monomial, size_t, ExpLess> index;
  for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;

  RowReducer red(ring->field, mons.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      fail(ErrorCode::invalid_input,
           "linear-algebra oracle needs homogeneous generators");
    long dg = g.degree();
    if (dg > t) continue;
    for (const auto& shift : monomials_of_degree(n, t - dg, 100000)) {
      std::vector<mpq_class> row(mons.size(), 0);
      for (const auto& term : g.terms()) {
        Monomial m = term.m * shift;
        row[index.at(m)] = term.c;
      }
      red.add_row(row);
    }
  }
  return mpz_class(static_cast<long>(mons.size()) -
                   static_cast<long>(red.rank()));
}

}  // namespace cmreg
