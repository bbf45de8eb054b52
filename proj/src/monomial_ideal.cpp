#include "cmreg/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cmreg {

namespace {

struct GrevlexAsc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return TermOrder::grevlex().compare(a, b) < 0;
  }
};

}  // namespace

MonomialIdeal MonomialIdeal::make(RingPtr ring, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.nvars() != ring->nvars)
      fail(ErrorCode::ring_mismatch, "generator nvars != ring nvars");
  std::sort(gens.begin(), gens.end(), GrevlexAsc{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Ascending degree order guarantees a generator can only be divided by an
  // earlier kept one.
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : minimal) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  MonomialIdeal I(std::move(ring));
  I.gens_ = std::move(minimal);
  return I;
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  int n = ring->nvars;
  return make(std::move(ring), {Monomial(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return ring_->nvars == o.ring_->nvars && gens_ == o.gens_;
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
  check_same_ring(ring_, o.ring_);
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return make(ring_, std::move(all));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  check_same_ring(ring_, o.ring_);
  std::vector<Monomial> out;
  out.reserve(gens_.size() * o.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) out.push_back(a.lcm(b));
  return make(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.divide(g.gcd(m)));
  return make(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& o) const {
  check_same_ring(ring_, o.ring_);
  if (o.is_zero()) return unit(ring_);
  bool first = true;
  MonomialIdeal acc = zero(ring_);
  for (const auto& b : o.gens_) {
    MonomialIdeal piece = colon(b);
    acc = first ? piece : acc.intersect(piece);
    first = false;
  }
  return acc;
}

MonomialIdeal MonomialIdeal::var_saturate(int j) const {
  if (j < 1 || j > ring_->nvars)
    fail(ErrorCode::invalid_input, "variable index out of range");
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) {
    Monomial h = g;
    h.set(j - 1, 0);
    out.push_back(h);
  }
  return make(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::initial_segment_saturate(int j) const {
  if (j < 1 || j > ring_->nvars)
    fail(ErrorCode::invalid_input, "variable index out of range");
  MonomialIdeal acc = var_saturate(1);
  for (int i = 2; i <= j; ++i) acc = acc.intersect(var_saturate(i));
  return acc;
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) {
    Monomial h(ring_->nvars);
    for (int i = 0; i < ring_->nvars; ++i) h.set(i, g[i] ? 1 : 0);
    out.push_back(h);
  }
  return make(ring_, std::move(out));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

int MonomialIdeal::max_var() const {
  int mv = 0;
  for (const auto& g : gens_) mv = std::max(mv, g.max_var());
  return mv;
}

std::vector<Polynomial> MonomialIdeal::to_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(Polynomial::monomial(ring_, g));
  return out;
}

std::string MonomialIdeal::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << Polynomial::monomial(ring_, gens_[i]).str();
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Irreducible decomposition by generator splitting.

namespace {

bool is_pure_power(const Monomial& m, int* var = nullptr) {
  int found = -1;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i]) {
      if (found >= 0) return false;
      found = i;
    }
  }
  if (var) *var = found;
  return true;  // 1 counts: unit ideal handled by caller
}

void decompose_rec(const MonomialIdeal& I,
                   std::set<std::vector<Monomial>>& seen,
                   std::vector<MonomialIdeal>& out, int depth) {
  if (depth > 512)
    fail(ErrorCode::size_cap, "irreducible decomposition recursion too deep");
  if (!seen.insert(I.gens()).second) return;
  // Find a generator that is not a pure variable power and split it into
  // coprime halves: I = (I + (m1)) cap (I + (m2)).
  for (const auto& g : I.gens()) {
    if (is_pure_power(g)) continue;
    int v = -1;
    for (int i = 0; i < g.nvars(); ++i) {
      if (g[i]) {
        v = i;
        break;
      }
    }
    Monomial m1 = Monomial::variable(g.nvars(), v, g[v]);
    Monomial m2 = g.divide(m1);
    auto g1 = I.gens();
    g1.push_back(m1);
    auto g2 = I.gens();
    g2.push_back(m2);
    decompose_rec(MonomialIdeal::make(I.ring(), std::move(g1)), seen, out,
                  depth + 1);
    decompose_rec(MonomialIdeal::make(I.ring(), std::move(g2)), seen, out,
                  depth + 1);
    return;
  }
  out.push_back(I);
  if (out.size() > 100000)
    fail(ErrorCode::size_cap, "irreducible decomposition exceeds 1e5 parts");
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
  if (I.is_zero())
    fail(ErrorCode::invalid_input, "zero ideal has no irreducible decomposition");
  if (I.is_unit()) return {};
  std::set<std::vector<Monomial>> seen;
  std::vector<MonomialIdeal> parts;
  decompose_rec(I, seen, parts, 0);
  // Dedupe.
  std::sort(parts.begin(), parts.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.gens() < b.gens();
            });
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  // Drop components strictly containing another component (the list is
  // already deduplicated), then enforce full irredundancy against the
  // intersection of the rest.
  std::vector<MonomialIdeal> kept;
  for (size_t i = 0; i < parts.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < parts.size() && !redundant; ++j)
      if (i != j && parts[i].contains(parts[j])) redundant = true;
    if (!redundant) kept.push_back(parts[i]);
  }
  // Exact irredundancy pass.
  bool changed = true;
  while (changed && kept.size() > 1) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      MonomialIdeal inter = MonomialIdeal::zero(I.ring());
      bool first = true;
      for (size_t j = 0; j < kept.size(); ++j) {
        if (i == j) continue;
        inter = first ? kept[j] : inter.intersect(kept[j]);
        first = false;
      }
      if (!first && kept[i].contains(inter)) {
        kept.erase(kept.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return kept;
}

std::vector<PrimaryPiece> primary_decomposition(const MonomialIdeal& I) {
  auto parts = irreducible_decomposition(I);
  std::map<std::vector<int>, MonomialIdeal> grouped;
  for (const auto& q : parts) {
    std::vector<int> support;
    for (int i = 0; i < q.ring()->nvars; ++i) {
      for (const auto& g : q.gens()) {
        if (g[i]) {
          support.push_back(i);
          break;
        }
      }
    }
    auto it = grouped.find(support);
    if (it == grouped.end())
      grouped.emplace(support, q);
    else
      it->second = it->second.intersect(q);
  }
  std::vector<PrimaryPiece> out;
  for (auto& [supp, comp] : grouped)
    out.push_back(PrimaryPiece{supp, comp});
  return out;
}

// ---------------------------------------------------------------------------
// Standard pairs by staircase recursion.

namespace {

// Does pair (u1, Z1) lie inside the cone of (u2, Z2)?
bool pair_inside(const StandardPair& p1, const StandardPair& p2) {
  if (!std::includes(p2.face.begin(), p2.face.end(), p1.face.begin(),
                     p1.face.end()))
    return false;
  if (!p2.u.divides(p1.u)) return false;
  Monomial q = p1.u.divide(p2.u);
  for (int i = 0; i < q.nvars(); ++i) {
    if (q[i] &&
        !std::binary_search(p2.face.begin(), p2.face.end(), i))
      return false;
  }
  return true;
}

void standard_pairs_rec(const MonomialIdeal& I, std::vector<int> avail,
                        const Monomial& prefix,
                        std::vector<StandardPair>& out) {
  if (I.is_unit()) return;
  if (I.is_zero()) {
    out.push_back(StandardPair{prefix, avail});
    if (out.size() > 2000000)
      fail(ErrorCode::size_cap, "standard pair enumeration exceeds 2e6");
    return;
  }
  // Pick the available variable hit by the most generators.
  int n = I.ring()->nvars;
  int best = -1, best_count = -1;
  for (int v : avail) {
    int cnt = 0;
    for (const auto& g : I.gens())
      if (g[v]) ++cnt;
    if (cnt > best_count) {
      best_count = cnt;
      best = v;
    }
  }
  if (best < 0 || best_count <= 0)
    fail(ErrorCode::invalid_input, "generators outside the available face");
  int v = best;
  std::uint32_t emax = 0;
  for (const auto& g : I.gens()) emax = std::max(emax, g[v]);

  std::vector<int> sub_avail;
  for (int w : avail)
    if (w != v) sub_avail.push_back(w);

  for (std::uint32_t a = 0; a <= emax; ++a) {
    // Generators surviving in (I : xv^a) with xv set to 0.
    std::vector<Monomial> gs;
    for (const auto& g : I.gens()) {
      if (g[v] <= a) {
        Monomial h = g;
        h.set(v, 0);
        gs.push_back(h);
      }
    }
    MonomialIdeal J = MonomialIdeal::make(I.ring(), std::move(gs));
    if (a < emax) {
      Monomial pre = prefix;
      pre.set(v, std::uint64_t(prefix[v]) + a);
      standard_pairs_rec(J, sub_avail, pre, out);
    } else {
      // xv no longer appears: it becomes a free variable of the face.
      (void)n;
      std::vector<StandardPair> inner;
      standard_pairs_rec(J, sub_avail, prefix, inner);
      for (auto& p : inner) {
        auto f = p.face;
        f.insert(std::lower_bound(f.begin(), f.end(), v), v);
        out.push_back(StandardPair{p.u, std::move(f)});
      }
    }
  }
}

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& I) {
  if (I.is_unit()) return {};
  std::vector<int> avail;
  for (int i = 0; i < I.ring()->nvars; ++i) avail.push_back(i);
  std::vector<StandardPair> cands;
  standard_pairs_rec(I, avail, Monomial(I.ring()->nvars), cands);
  // Keep the maximal pairs only (and dedupe).
  std::vector<StandardPair> out;
  for (size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cands.size() && !dominated; ++j) {
      if (i == j) continue;
      bool ij = pair_inside(cands[i], cands[j]);
      bool ji = pair_inside(cands[j], cands[i]);
      if (ij && !ji) dominated = true;
      if (ij && ji && j < i) dominated = true;  // exact duplicate: keep first
    }
    if (!dominated) out.push_back(cands[i]);
  }
  return out;
}

int dimension(const MonomialIdeal& I) {
  if (I.is_unit())
    fail(ErrorCode::invalid_input, "dimension of the unit ideal is undefined");
  int n = I.ring()->nvars;
  if (n > 24) fail(ErrorCode::size_cap, "dimension via support complex needs n <= 24");
  MonomialIdeal rad = I.radical();
  std::vector<std::uint32_t> gen_masks;
  for (const auto& g : rad.gens()) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (g[i]) mask |= (1u << i);
    gen_masks.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t face = 0; face < (1u << n); ++face) {
    bool ok = true;
    for (auto gm : gen_masks) {
      if ((gm & face) == gm) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(face));
  }
  return best;
}

MonomialIdeal MonomialIdeal::m_saturate() const {
  if (is_zero() || is_unit()) return *this;
  auto parts = irreducible_decomposition(*this);
  int n = ring_->nvars;
  MonomialIdeal acc = unit(ring_);
  bool first = true;
  for (const auto& q : parts) {
    int touched = 0;
    for (int i = 0; i < n; ++i) {
      for (const auto& g : q.gens()) {
        if (g[i]) {
          ++touched;
          break;
        }
      }
    }
    if (touched == n) continue;  // primary to the irrelevant maximal ideal
    acc = first ? q : acc.intersect(q);
    first = false;
  }
  return acc;
}

DegreeData degree_data(const MonomialIdeal& I) {
  if (I.is_unit())
    fail(ErrorCode::invalid_input, "degree data of the unit ideal is undefined");
  const int n = I.ring()->nvars;
  auto pairs = standard_pairs(I);
  DegreeData dd;
  int dim_pairs = 0;
  for (const auto& p : pairs)
    dim_pairs = std::max(dim_pairs, static_cast<int>(p.face.size()));
  int dim_complex = dimension(I);
  if (dim_pairs != dim_complex)
    fail(ErrorCode::invalid_input,
         "internal: standard-pair dimension disagrees with support complex");
  dd.dim = dim_pairs;
  dd.codim = n - dd.dim;
  dd.layer.assign(dd.dim + 1, 0);
  for (const auto& p : pairs) {
    ++dd.arith_degree;
    ++dd.layer[p.face.size()];
  }
  dd.degree = dd.layer[dd.dim];

  // l(R/(I + (x_{c+1}, ..., x_n))), when finite.
  const int c = dd.codim;
  if (c == 0) {
    dd.colength_split = 1;  // only the zero ideal has dim = n
  } else {
    std::vector<Monomial> inner;
    for (const auto& g : I.gens()) {
      bool only_first_c = true;
      for (int i = c; i < n; ++i)
        if (g[i]) {
          only_first_c = false;
          break;
        }
      if (only_first_c) inner.push_back(g);
    }
    MonomialIdeal J = MonomialIdeal::make(I.ring(), std::move(inner));
    // Finite iff every x_i (i <= c) has a pure power among the generators.
    std::vector<std::uint64_t> cap(c, 0);
    bool finite = true;
    for (int i = 0; i < c && finite; ++i) {
      std::uint64_t best = 0;
      for (const auto& g : J.gens()) {
        int var = -1;
        if (is_pure_power(g, &var) && var == i)
          best = best ? std::min<std::uint64_t>(best, g[i]) : g[i];
      }
      if (best == 0)
        finite = false;
      else
        cap[i] = best;
    }
    if (finite) {
      double size = 1;
      for (int i = 0; i < c; ++i) size *= static_cast<double>(cap[i]);
      if (size > 1e7)
        fail(ErrorCode::size_cap, "colength enumeration exceeds 1e7 cells");
      long long count = 0;
      Monomial m(n);
      std::vector<std::uint32_t> idx(c, 0);
      while (true) {
        for (int i = 0; i < c; ++i) m.set(i, idx[i]);
        if (!J.contains(m)) ++count;
        int pos = c - 1;
        while (pos >= 0) {
          if (++idx[pos] < cap[pos]) break;
          idx[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      dd.colength_split = count;
    }
  }
  return dd;
}

bool is_strongly_stable(const MonomialIdeal& I) {
  const int n = I.ring()->nvars;
  for (const auto& g : I.gens()) {
    for (int j = 1; j < n; ++j) {
      if (!g[j]) continue;
      for (int i = 0; i < j; ++i) {
        Monomial h = g;
        h.set(j, g[j] - 1);
        h.set(i, std::uint64_t(g[i]) + 1);
        if (!I.contains(h)) return false;
      }
    }
  }
  return true;
}

bool is_borel_type(const MonomialIdeal& I) {
  const int n = I.ring()->nvars;
  if (I.is_zero() || I.is_unit()) return true;
  for (int j = 1; j <= n; ++j) {
    if (I.var_saturate(j) != I.initial_segment_saturate(j)) return false;
  }
  return true;
}

}  // namespace cmreg
