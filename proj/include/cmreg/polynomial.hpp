#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmreg/field.hpp"
#include "cmreg/monomial.hpp"
#include "cmreg/order.hpp"

namespace cmreg {

struct Ring {
  int nvars;
  Field field;
  std::vector<std::string> var_names;

  bool operator==(const Ring& o) const {
    return nvars == o.nvars && field == o.field && var_names == o.var_names;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int nvars, const Field& field);
RingPtr make_ring(int nvars, const Field& field,
                  std::vector<std::string> names);

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get() && !(*a == *b))
    fail(ErrorCode::ring_mismatch, "operands live in different rings");
}

struct Term {
  Monomial m;
  mpq_class c;
};

// Sparse polynomial with terms stored in descending grevlex order (a fixed
// canonical order independent of whatever term order a computation uses).
// Zero is the empty term list.  Coefficients are always reduced into the
// ring's field.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Builds from an arbitrary term list: reduces coefficients, merges equal
  // monomials, drops zeros, sorts canonically.
  static Polynomial make(RingPtr ring, std::vector<Term> terms);
  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const mpq_class& c);
  static Polynomial monomial(RingPtr ring, Monomial m,
                             const mpq_class& c = mpq_class(1));
  static Polynomial variable(RingPtr ring, int i);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }

  // Total degree of the highest term (0 for the zero polynomial).
  std::uint64_t degree() const;
  bool is_homogeneous() const;

  // Leading term with respect to an arbitrary order (linear scan).
  const Term& leading_term(const TermOrder& order) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_term(const Monomial& m, const mpq_class& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Ring map: variable i of this ring maps to images[i] in the target ring.
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;

  // Scale so the content is 1 and the canonical leading coefficient is
  // positive (over Q), or so the polynomial is monic in the given order
  // (over GF(p) the two conventions coincide: we always make it monic for
  // prime fields, primitive-integer for Q).
  Polynomial normalized(const TermOrder& order) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;  // canonical: descending grevlex
};

}  // namespace cmreg
