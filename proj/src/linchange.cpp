#include "cmreg/linchange.hpp"

#include "cmreg/linalg.hpp"

namespace cmreg {

LinearChange LinearChange::identity(const RingPtr& ring) {
  int n = ring->nvars;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return LinearChange(ring, std::move(a), 0);
}

LinearChange LinearChange::from_matrix(const RingPtr& ring,
                                       std::vector<std::vector<mpq_class>> a) {
  int n = ring->nvars;
  if (static_cast<int>(a.size()) != n)
    fail(ErrorCode::invalid_input, "change-of-coordinates matrix must be n x n");
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::invalid_input,
           "change-of-coordinates matrix must be n x n");
    for (auto& x : row) x = ring->field.reduce(x);
  }
  if (!invert_matrix(ring->field, a))
    fail(ErrorCode::invalid_input, "change-of-coordinates matrix is singular");
  return LinearChange(ring, std::move(a), 0);
}

LinearChange LinearChange::random(const RingPtr& ring, std::uint64_t seed) {
  int n = ring->nvars;
  const Field& F = ring->field;
  for (int attempt = 0; attempt < 64; ++attempt) {
    SeededInts rng(mix_seed(seed, 0x11CEA5E + attempt));
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = F.from_long(rng.next_entry());
    if (invert_matrix(F, a)) return LinearChange(ring, std::move(a), seed);
  }
  fail(ErrorCode::genericity,
       "could not draw an invertible coordinate change (64 attempts)");
}

Polynomial LinearChange::apply(const Polynomial& f) const {
  check_same_ring(ring_, f.ring());
  int n = ring_->nvars;
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Term> ts;
    for (int i = 0; i < n; ++i) {
      if (ring_->field.is_zero(a_[i][j])) continue;
      ts.push_back(Term{Monomial::variable(n, i), a_[i][j]});
    }
    images.push_back(Polynomial::make(ring_, std::move(ts)));
  }
  return f.substitute(ring_, images);
}

std::vector<Polynomial> LinearChange::apply(
    const std::vector<Polynomial>& fs) const {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(apply(f));
  return out;
}

LinearChange LinearChange::inverse() const {
  auto inv = invert_matrix(ring_->field, a_);
  if (!inv) fail(ErrorCode::invalid_input, "matrix is singular");
  return LinearChange(ring_, std::move(*inv), seed_);
}

Polynomial LinearChange::random_linear_form(const RingPtr& ring,
                                            std::uint64_t seed) {
  int n = ring->nvars;
  const Field& F = ring->field;
  for (int attempt = 0; attempt < 64; ++attempt) {
    SeededInts rng(mix_seed(seed, 0x11F0 + attempt));
    std::vector<Term> ts;
    for (int i = 0; i < n; ++i) {
      mpq_class c = F.from_long(rng.next_entry());
      if (!F.is_zero(c)) ts.push_back(Term{Monomial::variable(n, i), c});
    }
    Polynomial f = Polynomial::make(ring, std::move(ts));
    if (!f.is_zero()) return f;
  }
  fail(ErrorCode::genericity, "could not draw a nonzero linear form");
}

}  // namespace cmreg
