#pragma once

#include <optional>
#include <vector>

#include "cmreg/polynomial.hpp"

namespace cmreg {

// A monomial ideal held by its unique minimal generating set, sorted in
// ascending grevlex order.  The zero ideal has no generators; the unit ideal
// is generated by 1.
class MonomialIdeal {
public:
  static MonomialIdeal make(RingPtr ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(RingPtr ring) { return make(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
  }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& o) const;
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  MonomialIdeal sum(const MonomialIdeal& o) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal colon(const MonomialIdeal& o) const;
  // I : xj^infinity (j is 1-based).
  MonomialIdeal var_saturate(int j) const;
  // I : (x1..xj)^infinity (j is 1-based).
  MonomialIdeal initial_segment_saturate(int j) const;
  // I : m^infinity, computed from the irreducible decomposition by dropping
  // the components primary to the irrelevant maximal ideal.
  MonomialIdeal m_saturate() const;

  MonomialIdeal radical() const;
  bool is_squarefree() const;

  // Largest 1-based index of a variable appearing in some generator; 0 when
  // the ideal is zero or the unit ideal generated by 1.
  int max_var() const;

  std::vector<Polynomial> to_polynomials() const;
  std::string str() const;

private:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

// Irreducible decomposition: each component is generated by pure variable
// powers.  The returned list is irredundant.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I);

// Associated primes as sorted lists of 0-based variable indices, and the
// primary component attached to each (intersection of the irreducible
// components sharing that support).
struct PrimaryPiece {
  std::vector<int> prime_support;  // 0-based variable indices
  MonomialIdeal component;
};
std::vector<PrimaryPiece> primary_decomposition(const MonomialIdeal& I);

// A standard pair (u, Z): u a monomial with support disjoint from Z, and
// u * K[Z] embeds into R/I.  The list is the set of maximal admissible pairs.
struct StandardPair {
  Monomial u;
  std::vector<int> face;  // 0-based variable indices, sorted
};
std::vector<StandardPair> standard_pairs(const MonomialIdeal& I);

// Exact degree data of R/I for a proper monomial ideal I.
struct DegreeData {
  int dim = 0;                       // Krull dimension of R/I
  int codim = 0;                     // n - dim
  long long degree = 0;              // standard pairs with |Z| = dim
  long long arith_degree = 0;        // all standard pairs
  std::vector<long long> layer;      // layer[s] = pairs with |Z| = s, s=0..dim
  std::optional<long long> colength_split;  // l(R/(I + (x_{c+1}..x_n))), if finite
};
DegreeData degree_data(const MonomialIdeal& I);

// Borel-position tests.  strongly_stable ignores the characteristic;
// borel_type is the saturation-chain condition I : xj^inf = I : (x1..xj)^inf
// for every j.
bool is_strongly_stable(const MonomialIdeal& I);
bool is_borel_type(const MonomialIdeal& I);

// Dimension of R/I via the support complex of the radical (exponential in
// nvars, which is small here).  degree_data cross-checks this against the
// standard-pair computation.
int dimension(const MonomialIdeal& I);

}  // namespace cmreg
