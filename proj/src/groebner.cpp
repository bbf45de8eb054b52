#include "cmreg/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cmreg {

namespace {

// Working representation during reduction: terms keyed by monomial in
// descending order of the active term order, so the leading term is begin().
struct OrderGreater {
  const TermOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->compare(a, b) > 0;
  }
};
using OPoly = std::map<Monomial, mpq_class, OrderGreater>;

OPoly to_opoly(const Polynomial& f, const TermOrder& ord) {
  OPoly p(OrderGreater{&ord});
  for (const auto& t : f.terms()) p.emplace(t.m, t.c);
  return p;
}

Polynomial from_opoly(const RingPtr& ring, const OPoly& p) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& [m, c] : p) ts.push_back(Term{m, c});
  return Polynomial::make(ring, std::move(ts));
}

struct Entry {
  OPoly poly;
  Monomial lm;
  mpq_class lc;
};

// p -= (c/lc(g)) * (m/lm(g)) * g  where m is the leading monomial of p being
// cancelled; c its coefficient.
void cancel_against(const Field& F, OPoly& p, const Monomial& m,
                    const mpq_class& c, const Entry& g) {
  Monomial shift = m.divide(g.lm);
  mpq_class factor = F.div(c, g.lc);
  for (const auto& [gm, gc] : g.poly) {
    Monomial key = gm * shift;
    mpq_class delta = F.mul(factor, gc);
    auto it = p.find(key);
    if (it == p.end()) {
      p.emplace(std::move(key), F.neg(delta));
    } else {
      it->second = F.sub(it->second, delta);
      if (F.is_zero(it->second)) p.erase(it);
    }
  }
}

// Fully reduced normal form of p against the entries (in the given scan
// order: the first entry whose leading monomial divides decides).
OPoly reduce_full(const Field& F, OPoly p, const std::vector<Entry>& basis,
                  const TermOrder& ord) {
  OPoly rem(OrderGreater{&ord});
  while (!p.empty()) {
    auto lead = p.begin();
    const Entry* reducer = nullptr;
    for (const auto& e : basis) {
      if (e.lm.divides(lead->first)) {
        reducer = &e;
        break;
      }
    }
    if (!reducer) {
      rem.emplace(lead->first, lead->second);
      p.erase(lead);
      continue;
    }
    Monomial m = lead->first;
    mpq_class c = lead->second;
    // Subtracts (c/lc) * (m/lm) * reducer from p; the head cancels exactly.
    cancel_against(F, p, m, c, *reducer);
    p.erase(m);
  }
  return rem;
}

struct PairKey {
  std::uint64_t deg;
  Monomial lcm;
  int i, j;
  long seq;
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_.front().nterms() == 1 &&
         basis_.front().terms().front().m.is_one();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_term(order_).m);
  return out;
}

GroebnerBasis buchberger(const RingPtr& ring,
                         const std::vector<Polynomial>& gens,
                         const TermOrder& order, const GBOptions& opts) {
  const Field& F = ring->field;

  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    check_same_ring(ring, g.ring());
    if (!g.is_zero()) input.push_back(g.normalized(order));
  }
  // Deterministic start: sort by leading monomial, then term count, then
  // canonical term data, and dedupe.
  auto poly_less = [&](const Polynomial& a, const Polynomial& b) {
    int c = order.compare(a.leading_term(order).m, b.leading_term(order).m);
    if (c) return c < 0;
    if (a.nterms() != b.nterms()) return a.nterms() < b.nterms();
    for (int i = 0; i < a.nterms(); ++i) {
      int mc = order.compare(a.terms()[i].m, b.terms()[i].m);
      if (mc) return mc < 0;
      if (a.terms()[i].c != b.terms()[i].c)
        return a.terms()[i].c < b.terms()[i].c;
    }
    return false;
  };
  std::sort(input.begin(), input.end(), poly_less);
  input.erase(std::unique(input.begin(), input.end()), input.end());

  if (input.empty()) return GroebnerBasis(ring, order, {});

  std::vector<Entry> basis;
  auto add_entry = [&](const Polynomial& f) {
    Entry e{to_opoly(f, order), f.leading_term(order).m,
            f.leading_term(order).c};
    basis.push_back(std::move(e));
  };

  // Live S-pairs with Gebauer-Moeller elimination on insertion.
  struct LivePair {
    Monomial lcm;
    std::uint64_t deg;
    int i, j;
    long seq;
  };
  std::vector<LivePair> pairs;
  long seq_counter = 0;
  long processed = 0;

  auto update_pairs = [&](int t) {
    const Monomial& lmt = basis[t].lm;
    // Candidate new pairs (i, t).
    struct Cand {
      Monomial lcm;
      int i;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (int i = 0; i < t; ++i) {
      Monomial l = basis[i].lm.lcm(lmt);
      cands.push_back(Cand{l, i, basis[i].lm.coprime(lmt)});
    }
    // Criterion M: drop (i,t) when another candidate lcm properly divides.
    // Criterion F: among equal lcms keep the smallest index.
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      for (size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          if (cands[b].lcm != cands[a].lcm) {
            cands[a].keep = false;
            break;
          }
          if (b < a) {
            cands[a].keep = false;
            break;
          }
        }
      }
    }
    // Criterion B on the old pairs.
    std::vector<LivePair> kept_old;
    kept_old.reserve(pairs.size());
    for (auto& pr : pairs) {
      Monomial lij = pr.lcm;
      bool drop = lmt.divides(lij) &&
                  basis[pr.i].lm.lcm(lmt) != lij &&
                  basis[pr.j].lm.lcm(lmt) != lij;
      if (!drop) kept_old.push_back(std::move(pr));
    }
    pairs = std::move(kept_old);
    // Buchberger's coprime criterion last.
    for (auto& cnd : cands) {
      if (!cnd.keep || cnd.coprime) continue;
      pairs.push_back(
          LivePair{cnd.lcm, cnd.lcm.degree(), cnd.i, t, seq_counter++});
    }
  };

  for (size_t i = 0; i < input.size(); ++i) {
    add_entry(input[i]);
    update_pairs(static_cast<int>(i));
  }

  while (!pairs.empty()) {
    // Selection: normal strategy = minimal (degree, lcm, i, j); fifo =
    // insertion order.
    size_t pick = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const LivePair& a = pairs[k];
      const LivePair& b = pairs[pick];
      bool better;
      if (opts.strategy == GBOptions::Strategy::fifo) {
        better = a.seq < b.seq;
      } else {
        if (a.deg != b.deg) {
          better = a.deg < b.deg;
        } else {
          int c = order.compare(a.lcm, b.lcm);
          if (c != 0)
            better = c < 0;
          else if (a.i != b.i)
            better = a.i < b.i;
          else
            better = a.j < b.j;
        }
      }
      if (better) pick = k;
    }
    LivePair pr = pairs[pick];
    pairs.erase(pairs.begin() + pick);

    if (pr.deg > static_cast<std::uint64_t>(opts.budget_degree))
      fail(ErrorCode::budget,
           "S-pair degree " + std::to_string(pr.deg) + " exceeds budget " +
               std::to_string(opts.budget_degree));
    if (++processed > opts.budget_pairs)
      fail(ErrorCode::budget, "S-pair count exceeds budget");

    const Entry& gi = basis[pr.i];
    const Entry& gj = basis[pr.j];
    // S-polynomial: (lcm/lt_i) gi - (lcm/lt_j) gj, built in OPoly form.
    OPoly s(OrderGreater{&order});
    {
      Monomial mi = pr.lcm.divide(gi.lm);
      mpq_class ci = F.inv(gi.lc);
      for (const auto& [m, c] : gi.poly) s.emplace(m * mi, F.mul(c, ci));
      Monomial mj = pr.lcm.divide(gj.lm);
      mpq_class cj = F.inv(gj.lc);
      for (const auto& [m, c] : gj.poly) {
        Monomial key = m * mj;
        mpq_class delta = F.mul(c, cj);
        auto it = s.find(key);
        if (it == s.end()) {
          s.emplace(std::move(key), F.neg(delta));
        } else {
          it->second = F.sub(it->second, delta);
          if (F.is_zero(it->second)) s.erase(it);
        }
      }
    }
    OPoly r = reduce_full(F, std::move(s), basis, order);
    if (r.empty()) continue;
    Polynomial rp = from_opoly(ring, r).normalized(order);
    if (static_cast<int>(basis.size()) + 1 > opts.basis_cap)
      fail(ErrorCode::budget, "intermediate basis exceeds cap");
    add_entry(rp);
    update_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: keep entries whose leading monomial no other kept entry's
  // leading monomial divides.
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    bool minimal = true;
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
      if (i == j) continue;
      if (basis[j].lm.divides(basis[i].lm) && basis[j].lm != basis[i].lm) {
        minimal = false;
        break;
      }
      if (basis[j].lm == basis[i].lm && j < i) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(i);
  }
  std::vector<Entry> minimal_basis;
  for (int i : keep) minimal_basis.push_back(basis[i]);

  // Inter-reduce tails to obtain the reduced basis.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal_basis.size(); ++i) {
    std::vector<Entry> others;
    for (size_t j = 0; j < minimal_basis.size(); ++j)
      if (j != i) others.push_back(minimal_basis[j]);
    OPoly r = reduce_full(F, minimal_basis[i].poly, others, order);
    reduced.push_back(from_opoly(ring, r).normalized(order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.compare(a.leading_term(order).m,
                                   b.leading_term(order).m) < 0;
            });
  return GroebnerBasis(ring, order, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  check_same_ring(f.ring(), G.ring());
  const Field& F = G.ring()->field;
  std::vector<Entry> basis;
  basis.reserve(G.basis().size());
  for (const auto& g : G.basis())
    basis.push_back(Entry{to_opoly(g, G.order()),
                          g.leading_term(G.order()).m,
                          g.leading_term(G.order()).c});
  OPoly r = reduce_full(F, to_opoly(f, G.order()), basis, G.order());
  return from_opoly(G.ring(), r);
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(a.order() == b.order()))
    fail(ErrorCode::invalid_input, "same_ideal needs matching orders");
  return a.basis() == b.basis();
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) {
  return MonomialIdeal::make(G.ring(), G.leading_monomials());
}

MonomialIdeal initial_ideal(const RingPtr& ring,
                            const std::vector<Polynomial>& gens,
                            const TermOrder& order, const GBOptions& opts) {
  return initial_ideal(buchberger(ring, gens, order, opts));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f.ring(), g.ring());
  if (g.is_zero()) fail(ErrorCode::invalid_input, "division by zero polynomial");
  const Field& F = f.ring()->field;
  TermOrder ord = TermOrder::grevlex();
  Entry ge{to_opoly(g, ord), g.leading_term(ord).m, g.leading_term(ord).c};
  OPoly rem = to_opoly(f, ord);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!ge.lm.divides(lead->first))
      fail(ErrorCode::invalid_input, "polynomial division is not exact");
    Monomial qm = lead->first.divide(ge.lm);
    mpq_class qc = F.div(lead->second, ge.lc);
    quotient.push_back(Term{qm, qc});
    for (const auto& [m, c] : ge.poly) {
      Monomial key = m * qm;
      mpq_class delta = F.mul(qc, c);
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(std::move(key), F.neg(delta));
      } else {
        it->second = F.sub(it->second, delta);
        if (F.is_zero(it->second)) rem.erase(it);
      }
    }
  }
  return Polynomial::make(f.ring(), std::move(quotient));
}

namespace {

// Ring with one auxiliary tag variable in front.
RingPtr tag_ring(const RingPtr& ring) {
  std::vector<std::string> names;
  names.push_back("_w");
  for (const auto& v : ring->var_names) names.push_back(v);
  return make_ring(ring->nvars + 1, ring->field, std::move(names));
}

Polynomial lift_after_front(const Polynomial& f, const RingPtr& ext) {
  std::vector<Polynomial> images;
  images.reserve(f.ring()->nvars);
  for (int i = 0; i < f.ring()->nvars; ++i)
    images.push_back(Polynomial::variable(ext, i + 1));
  return f.substitute(ext, images);
}

Polynomial drop_front_var(const Polynomial& f, const RingPtr& base) {
  // Requires f free of the tag variable.
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    if (t.m[0])
      fail(ErrorCode::invalid_input, "polynomial still involves the tag variable");
    Monomial m(base->nvars);
    for (int i = 0; i < base->nvars; ++i) m.set(i, t.m[i + 1]);
    ts.push_back(Term{m, t.c});
  }
  return Polynomial::make(base, std::move(ts));
}

}  // namespace

std::vector<Polynomial> eliminate_first(const RingPtr& ring,
                                        const std::vector<Polynomial>& gens,
                                        int k, const GBOptions& opts) {
  if (k < 0 || k > ring->nvars)
    fail(ErrorCode::invalid_input, "elimination block out of range");
  GroebnerBasis G = buchberger(ring, gens, TermOrder::block(k), opts);
  std::vector<Polynomial> out;
  for (const auto& g : G.basis()) {
    bool free_of_block = true;
    for (const auto& t : g.terms()) {
      for (int i = 0; i < k && free_of_block; ++i)
        if (t.m[i]) free_of_block = false;
      if (!free_of_block) break;
    }
    if (free_of_block) out.push_back(g);
  }
  return out;
}

std::vector<Polynomial> intersect_ideals(const RingPtr& ring,
                                         const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b,
                                         const GBOptions& opts) {
  RingPtr ext = tag_ring(ring);
  Polynomial w = Polynomial::variable(ext, 0);
  Polynomial one_minus_w = Polynomial::constant(ext, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(w * lift_after_front(f, ext));
  for (const auto& g : b) gens.push_back(one_minus_w * lift_after_front(g, ext));
  std::vector<Polynomial> elim = eliminate_first(ext, gens, 1, opts);
  std::vector<Polynomial> out;
  out.reserve(elim.size());
  for (const auto& f : elim) out.push_back(drop_front_var(f, ring));
  return out;
}

std::vector<Polynomial> colon_by_poly(const RingPtr& ring,
                                      const std::vector<Polynomial>& gens,
                                      const Polynomial& f,
                                      const GBOptions& opts) {
  if (f.is_zero()) fail(ErrorCode::invalid_input, "colon by zero polynomial");
  std::vector<Polynomial> inter = intersect_ideals(ring, gens, {f}, opts);
  std::vector<Polynomial> out;
  out.reserve(inter.size());
  for (const auto& g : inter) out.push_back(exact_divide(g, f));
  return out;
}

std::vector<Polynomial> saturate_by_poly(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         const Polynomial& f,
                                         const GBOptions& opts) {
  TermOrder ord = TermOrder::grevlex();
  std::vector<Polynomial> current = gens;
  GroebnerBasis prev = buchberger(ring, current, ord, opts);
  for (int round = 0; round < 256; ++round) {
    std::vector<Polynomial> next = colon_by_poly(ring, prev.basis(), f, opts);
    GroebnerBasis G = buchberger(ring, next, ord, opts);
    if (same_ideal(G, prev)) return prev.basis();
    prev = std::move(G);
  }
  fail(ErrorCode::budget, "saturation did not stabilize within 256 rounds");
}

std::vector<Polynomial> m_saturate_ideal(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens,
                                         std::uint64_t seed,
                                         const GBOptions& opts) {
  TermOrder ord = TermOrder::grevlex();
  for (int attempt = 0; attempt < 5; ++attempt) {
    Polynomial ell = LinearChange::random_linear_form(
        ring, mix_seed(seed, 0x5A7 + 16 * attempt));
    std::vector<Polynomial> cand = saturate_by_poly(ring, gens, ell, opts);
    GroebnerBasis Gc = buchberger(ring, cand, ord, opts);
    // Certificate: two further generic forms must not enlarge the ideal.
    bool certified = true;
    for (int k = 1; k <= 2 && certified; ++k) {
      Polynomial check = LinearChange::random_linear_form(
          ring, mix_seed(seed, 0x5A7 + 16 * attempt + k));
      std::vector<Polynomial> col = colon_by_poly(ring, Gc.basis(), check, opts);
      GroebnerBasis Gcol = buchberger(ring, col, ord, opts);
      if (!same_ideal(Gcol, Gc)) certified = false;
    }
    if (certified) return Gc.basis();
  }
  fail(ErrorCode::genericity,
       "saturation by generic linear forms failed certification (5 attempts)");
}

GinResult generic_initial_ideal(const RingPtr& ring,
                                const std::vector<Polynomial>& gens,
                                const TermOrder& order, std::uint64_t seed,
                                int trials, const GBOptions& opts) {
  if (trials < 1) fail(ErrorCode::invalid_input, "gin needs trials >= 1");
  if (ring->field.kind() == FieldKind::prime &&
      ring->field.characteristic() < 32003)
    fail(ErrorCode::unsupported,
         "generic initial ideals over GF(p) need p >= 32003");
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      fail(ErrorCode::invalid_input, "gin needs homogeneous generators");

  std::vector<std::uint64_t> trial_seeds;
  std::vector<MonomialIdeal> candidates;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = mix_seed(seed, 0x617 + t);
    LinearChange phi = LinearChange::random(ring, s);
    trial_seeds.push_back(s);
    candidates.push_back(initial_ideal(ring, phi.apply(gens), order, opts));
  }
  bool agreed = true;
  for (int t = 1; t < trials; ++t)
    if (candidates[t] != candidates[0]) agreed = false;
  if (agreed) {
    // Position certificates: the generic initial ideal is Borel type in any
    // characteristic, strongly stable in characteristic zero.
    if (!is_borel_type(candidates[0])) agreed = false;
    if (ring->field.kind() == FieldKind::rationals &&
        !is_strongly_stable(candidates[0]))
      agreed = false;
  }
  return GinResult{candidates[0], trials, std::move(trial_seeds),
                   std::move(candidates), agreed};
}

}  // namespace cmreg
