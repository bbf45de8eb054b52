#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cmreg/util.hpp"

namespace cmreg {

enum class FieldKind { rationals, prime };

// A coefficient field: Q or GF(p) with p prime, p < 2^31.  Elements are
// carried as mpq_class values; for GF(p) the canonical representative has
// denominator 1 and numerator in [0, p).  All arithmetic goes through the
// Field so the prime-field reduction is never skipped.
class Field {
public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }

  // Canonicalize an arbitrary rational into this field.  For GF(p) the
  // denominator must be invertible mod p.
  mpq_class reduce(const mpq_class& a) const;
  mpq_class from_long(long a) const { return reduce(mpq_class(a)); }

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const;

  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
  bool is_one(const mpq_class& a) const { return a == 1; }

  std::string str(const mpq_class& a) const;
  std::string name() const;

  static bool is_prime(std::uint64_t n);

private:
  Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

}  // namespace cmreg
