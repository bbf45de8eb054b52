#pragma once

#include <vector>

#include "cmreg/polynomial.hpp"

namespace cmreg {

// An invertible linear change of coordinates x_j -> sum_i A[i][j] * x_i.
// Random instances draw entries uniformly from [-10000, 10000] (reduced into
// the field) and retry until the matrix is invertible; construction records
// the seed so every draw is reproducible.
class LinearChange {
public:
  static LinearChange identity(const RingPtr& ring);
  static LinearChange random(const RingPtr& ring, std::uint64_t seed);
  static LinearChange from_matrix(const RingPtr& ring,
                                  std::vector<std::vector<mpq_class>> a);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<mpq_class>>& matrix() const { return a_; }
  std::uint64_t seed() const { return seed_; }

  Polynomial apply(const Polynomial& f) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& fs) const;
  LinearChange inverse() const;

  // A random linear form with seeded entries (not necessarily invertible as
  // a change; used for saturation by generic linear forms).
  static Polynomial random_linear_form(const RingPtr& ring,
                                       std::uint64_t seed);

private:
  LinearChange(RingPtr ring, std::vector<std::vector<mpq_class>> a,
               std::uint64_t seed)
      : ring_(std::move(ring)), a_(std::move(a)), seed_(seed) {}
  RingPtr ring_;
  std::vector<std::vector<mpq_class>> a_;  // column j = image of x_j
  std::uint64_t seed_;
};

}  // namespace cmreg
