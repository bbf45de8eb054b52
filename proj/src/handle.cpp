#include "cmreg/handle.hpp"

#include <algorithm>

#include "cmreg/util.hpp"

namespace cmreg {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens,
                         std::uint64_t seed, int trials, GBOptions opts)
    : ring_(std::move(ring)), seed_(seed), trials_(trials), opts_(opts) {
  if (!ring_) fail(ErrorCode::invalid_input, "ideal handle needs a ring");
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    check_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealHandle::IdealHandle(const MonomialIdeal& I, std::uint64_t seed, int trials,
                         GBOptions opts)
    : IdealHandle(I.ring(), I.to_polynomials(), seed, trials, opts) {}

bool IdealHandle::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool IdealHandle::is_zero() { return gens_.empty(); }

bool IdealHandle::is_unit() {
  if (gens_.empty()) return false;
  return groebner(TermOrder::grevlex()).is_unit_ideal();
}

void IdealHandle::require_proper() {
  if (is_zero() || is_unit())
    fail(ErrorCode::invalid_input,
         "this invariant needs a proper nonzero ideal");
}

const std::optional<MonomialIdeal>& IdealHandle::monomial() {
  if (!monomial_checked_) {
    monomial_checked_ = true;
    bool all_terms = !gens_.empty();
    std::vector<Monomial> ms;
    for (const auto& g : gens_) {
      if (g.nterms() != 1) {
        all_terms = false;
        break;
      }
      ms.push_back(g.terms().front().m);
    }
    if (all_terms) monomial_ = MonomialIdeal::make(ring_, ms);
  }
  return monomial_;
}

void IdealHandle::declare_prime() { prime_known_ = true; adeg_.reset(); }

void IdealHandle::supply_arith_degree(const mpz_class& value) {
  supplied_adeg_ = value;
  adeg_.reset();
}

const GroebnerBasis& IdealHandle::groebner(const TermOrder& order) {
  auto it = gb_cache_.find(order.name());
  if (it == gb_cache_.end())
    it = gb_cache_.emplace(order.name(), buchberger(ring_, gens_, order, opts_))
             .first;
  return it->second;
}

MonomialIdeal IdealHandle::initial(const TermOrder& order) {
  return initial_ideal(groebner(order));
}

const HilbertSeries& IdealHandle::series() {
  if (!series_) {
    if (monomial())
      series_ = hilbert_series(*monomial_);
    else
      series_ = hilbert_series(ring_, gens_, opts_);
  }
  return *series_;
}

const HilbertPolynomial& IdealHandle::hpoly() {
  if (!hpoly_) hpoly_ = hilbert_polynomial(series());
  return *hpoly_;
}

long IdealHandle::postulation() {
  if (!postulation_) postulation_ = postulation_index(series(), hpoly());
  return *postulation_;
}

const GotzmannData& IdealHandle::gotzmann() {
  require_proper();
  if (!gotzmann_) gotzmann_ = gotzmann_decomposition(hpoly());
  return *gotzmann_;
}

int IdealHandle::dim() { return series().dim; }

int IdealHandle::codim() { return ring_->nvars - dim(); }

mpz_class IdealHandle::multiplicity() { return series().multiplicity(); }

const std::vector<Polynomial>& IdealHandle::minimal_generators() {
  if (!min_gens_) {
    require_proper();
    if (!is_homogeneous())
      fail(ErrorCode::invalid_input,
           "minimal generators need a homogeneous ideal");
    // Nakayama trimming: scan generators by ascending degree and keep those
    // not already generated.  For homogeneous input the kept degrees are the
    // unique minimal generator degrees.
    std::vector<Polynomial> sorted = gens_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Polynomial& a, const Polynomial& b) {
                       return a.degree() < b.degree();
                     });
    std::vector<Polynomial> kept;
    for (const auto& g : sorted) {
      if (kept.empty()) {
        kept.push_back(g);
        continue;
      }
      GroebnerBasis G = buchberger(ring_, kept, TermOrder::grevlex(), opts_);
      if (!ideal_contains(G, g)) kept.push_back(g);
    }
    min_gens_ = std::move(kept);
  }
  return *min_gens_;
}

const std::vector<long>& IdealHandle::minimal_degrees() {
  if (!min_degrees_) {
    std::vector<long> degs;
    for (const auto& g : minimal_generators())
      degs.push_back(static_cast<long>(g.degree()));
    std::sort(degs.rbegin(), degs.rend());
    min_degrees_ = std::move(degs);
  }
  return *min_degrees_;
}

long IdealHandle::max_gen_degree() {
  const auto& d = minimal_degrees();
  return d.empty() ? 0 : d.front();
}

mpz_class IdealHandle::degree_product() {
  const auto& d = minimal_degrees();
  int c = codim();
  if (static_cast<int>(d.size()) < c)
    fail(ErrorCode::internal, "fewer minimal generators than the height");
  mpz_class p = 1;
  for (int i = 0; i < c; ++i) p *= d[i];
  return p;
}

long IdealHandle::degree_sum_shifted() {
  const auto& d = minimal_degrees();
  int c = codim();
  if (static_cast<int>(d.size()) < c)
    fail(ErrorCode::internal, "fewer minimal generators than the height");
  long s = 0;
  for (int i = 0; i < c; ++i) s += d[i] - 1;
  return s;
}

const AdegData& IdealHandle::adeg() {
  if (!adeg_) {
    require_proper();
    AdegData data;
    data.degree = multiplicity();
    if (supplied_adeg_) {
      data.arith_degree = *supplied_adeg_;
      data.source = "supplied";
      data.exact = true;
    } else if (monomial()) {
      DegreeData dd = degree_data(*monomial_);
      data.arith_degree = mpz_class(static_cast<long>(dd.arith_degree));
      data.source = "standard-pairs";
      data.exact = true;
    } else if (prime_known_) {
      data.arith_degree = data.degree;
      data.source = "prime-degree";
      data.exact = true;
    } else {
      // adeg(I) <= adeg(gin I): exact for the reduction, an upper estimate
      // for the ideal itself.
      DegreeData dd = degree_data(gin());
      data.arith_degree = mpz_class(static_cast<long>(dd.arith_degree));
      data.source = "gin-upper";
      data.exact = false;
    }
    adeg_ = std::move(data);
  }
  return *adeg_;
}

const RegularityResult& IdealHandle::regularity_result() {
  if (!reg_) {
    require_proper();
    if (monomial() && is_borel_type(*monomial_))
      reg_ = regularity(*monomial_, RegMethod::chain);
    else
      reg_ = regularity(ring_, gens_, RegMethod::generic_initial, seed_,
                        trials_, opts_);
  }
  return *reg_;
}

const CohomologyTable& IdealHandle::table() {
  const RegularityResult& r = regularity_result();
  if (!r.table)
    fail(ErrorCode::internal, "regularity route produced no cohomology table");
  return *r.table;
}

long IdealHandle::reg_tail(int k) {
  const CohomologyTable& tab = table();
  if (k < 0) k = 0;
  if (k >= static_cast<int>(tab.reg_tail.size())) return kMinusInfinity;
  return tab.reg_tail[k];
}

int IdealHandle::depth() {
  const CohomologyTable& tab = table();
  for (int j = 0; j < static_cast<int>(tab.a.size()); ++j)
    if (tab.a[j] != kMinusInfinity) return j;
  fail(ErrorCode::internal, "cohomology table with no nonvanishing module");
}

const MonomialIdeal& IdealHandle::gin() {
  if (!gin_) {
    require_proper();
    gin_ = generic_initial_ideal(ring_, gens_, TermOrder::grevlex(), seed_,
                                 trials_, opts_);
  }
  return gin_->ideal;
}

bool IdealHandle::gin_is_exact_proxy() {
  gin();
  return gin_->agreed;
}

}  // namespace cmreg
