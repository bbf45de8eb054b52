#include "cmreg/util.hpp"

namespace cmreg {

mpz_class binom_nat(long a, long b) {
  if (b < 0 || a < b) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

mpz_class binom_poly(const mpz_class& a, long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  mpz_class factor;
  for (long s = 0; s < k; ++s) {
    factor = a - s;
    num *= factor;
  }
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

static std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
  return splitmix64(s);
}

std::uint64_t SeededInts::next_raw() { return splitmix64(state_); }

long SeededInts::next_entry() {
  return static_cast<long>(next_raw() % 20001ULL) - 10000;
}

std::uint64_t SeededInts::next_below(std::uint64_t n) {
  return n == 0 ? 0 : next_raw() % n;
}

}  // namespace cmreg
