#include "cmreg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cmreg {

RingPtr make_ring(int nvars, const Field& field) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(nvars, field, std::move(names));
}

RingPtr make_ring(int nvars, const Field& field,
                  std::vector<std::string> names) {
  if (nvars <= 0) fail(ErrorCode::invalid_input, "ring needs >= 1 variable");
  if (static_cast<int>(names.size()) != nvars)
    fail(ErrorCode::invalid_input, "variable name count != nvars");
  return std::make_shared<Ring>(Ring{nvars, field, std::move(names)});
}

namespace {

// Canonical storage comparator: descending grevlex.
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return TermOrder::grevlex().compare(a, b) > 0;
  }
};

}  // namespace

Polynomial Polynomial::make(RingPtr ring, std::vector<Term> terms) {
  std::map<Monomial, mpq_class, GrevlexDesc> acc;
  const Field& F = ring->field;
  for (auto& t : terms) {
    if (t.m.nvars() != ring->nvars)
      fail(ErrorCode::ring_mismatch, "term nvars != ring nvars");
    mpq_class c = F.reduce(t.c);
    if (F.is_zero(c)) continue;
    auto it = acc.find(t.m);
    if (it == acc.end()) {
      acc.emplace(t.m, c);
    } else {
      it->second = F.add(it->second, c);
      if (F.is_zero(it->second)) acc.erase(it);
    }
  }
  Polynomial p(std::move(ring));
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
  return make(ring, {Term{Monomial(ring->nvars), c}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const mpq_class& c) {
  return make(ring, {Term{std::move(m), c}});
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars)
    fail(ErrorCode::invalid_input, "variable index out of range");
  return monomial(ring, Monomial::variable(ring->nvars, i));
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty())
    fail(ErrorCode::invalid_input, "zero polynomial has no leading term");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.m, best->m) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return make(ring_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  const Field& F = ring_->field;
  for (auto& t : r.terms_) t.c = F.neg(t.c);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  const Field& F = ring_->field;
  mpq_class cc = F.reduce(c);
  if (F.is_zero(cc)) return zero(ring_);
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = F.mul(t.c, cc);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const mpq_class& c) const {
  const Field& F = ring_->field;
  mpq_class cc = F.reduce(c);
  if (F.is_zero(cc)) return zero(ring_);
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(Term{t.m * m, F.mul(t.c, cc)});
  // Multiplying by a fixed monomial preserves the canonical ordering, so we
  // can keep the vector as-is.
  Polynomial r(ring_);
  r.terms_ = std::move(ts);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_);
  const Field& F = ring_->field;
  std::map<Monomial, mpq_class, GrevlexDesc> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.m * b.m;
      mpq_class c = F.mul(a.c, b.c);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = F.add(it->second, c);
        if (F.is_zero(it->second)) acc.erase(it);
      }
    }
  }
  Polynomial r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring_.get() == o.ring_.get() || *ring_ == *o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].m != o.terms_[i].m) return false;
    if (terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars)
    fail(ErrorCode::invalid_input, "substitute needs one image per variable");
  for (const auto& im : images) check_same_ring(target, im.ring());

  // Cache powers of each image as needed.
  std::vector<std::vector<Polynomial>> powers(ring_->nvars);
  auto power = [&](int var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, 1));
      cache.push_back(images[var]);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial result = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.c);
    for (int i = 0; i < ring_->nvars; ++i) {
      if (t.m[i]) term = term * power(i, t.m[i]);
    }
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::normalized(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  const Field& F = ring_->field;
  if (F.kind() == FieldKind::prime) {
    const Term& lt = leading_term(order);
    return scaled(F.inv(lt.c));
  }
  // Over Q: clear denominators, divide by integer content, make the leading
  // coefficient positive.
  mpz_class den = 1;
  for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                       t.c.get_den().get_mpz_t());
  mpz_class content = 0;
  for (const auto& t : terms_) {
    mpz_class num = t.c.get_num() * (den / t.c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class scale = mpq_class(den) / mpq_class(content);
  Polynomial r = scaled(scale);
  if (sgn(r.leading_term(order).c) < 0) r = r.scaled(-1);
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    mpq_class a = abs(c);
    bool unit_coeff = (a == 1) && !t.m.is_one();
    if (!unit_coeff) os << a.get_str();
    bool printed = !unit_coeff;
    for (int i = 0; i < ring_->nvars; ++i) {
      if (!t.m[i]) continue;
      if (printed) os << "*";
      os << ring_->var_names[i];
      if (t.m[i] > 1) os << "^" << t.m[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace cmreg
