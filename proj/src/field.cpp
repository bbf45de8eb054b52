#include "cmreg/field.hpp"

namespace cmreg {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool Field::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for n < 3.2 * 10^18.
  for (std::uint64_t a :
       {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31))
    fail(ErrorCode::invalid_input, "prime field characteristic must be < 2^31");
  if (!is_prime(p))
    fail(ErrorCode::invalid_input,
         "characteristic " + std::to_string(p) + " is not prime");
  return Field(FieldKind::prime, p);
}

mpq_class Field::reduce(const mpq_class& a) const {
  if (kind_ == FieldKind::rationals) {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_);
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = a.get_den() % p;
  if (den < 0) den += p;
  if (den == 0)
    fail(ErrorCode::invalid_input, "denominator not invertible mod p");
  if (den != 1) {
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      fail(ErrorCode::invalid_input, "denominator not invertible mod p");
    num = (num * deninv) % p;
  }
  return mpq_class(num);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::rationals) return a + b;
  return reduce(a + b);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::rationals) return a - b;
  return reduce(a - b);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
  if (kind_ == FieldKind::rationals) return a * b;
  return reduce(a * b);
}

mpq_class Field::neg(const mpq_class& a) const {
  if (kind_ == FieldKind::rationals) return -a;
  return reduce(-a);
}

mpq_class Field::inv(const mpq_class& a) const {
  if (is_zero(a)) fail(ErrorCode::invalid_input, "division by zero");
  if (kind_ == FieldKind::rationals) return 1 / a;
  mpz_class p(p_);
  mpz_class num = reduce(a).get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorCode::invalid_input, "element not invertible mod p");
  return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const {
  return mul(a, inv(b));
}

std::string Field::str(const mpq_class& a) const { return a.get_str(); }

std::string Field::name() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

}  // namespace cmreg
