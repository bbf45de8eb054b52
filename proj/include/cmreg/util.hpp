#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cmreg {

// Error taxonomy shared across the library.  Every failure mode that a caller
// can react to carries one of these codes; the CLI maps them to exit status 1
// and a machine-parsable "error[code]:" line on stderr.
enum class ErrorCode {
  invalid_input,    // bad arguments, malformed data, contract violation
  ring_mismatch,    // operands live in different rings
  parse,            // ideal file / expression syntax errors
  budget,           // configured resource cap exceeded (never silent truncation)
  genericity,       // randomized genericity assumption failed / uncertified
  hypothesis,       // mathematical hypothesis of an operation not met
  size_cap,         // exact computation would exceed a hard size limit
  overflow,         // exponent or degree would overflow its fixed-width type
  not_hilbert,      // input is not a Hilbert function/polynomial of the claimed kind
  unsupported,      // operation not available for this input class
  internal,         // cross-check between two independent computations failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

  const char* code_name() const {
    switch (code_) {
      case ErrorCode::invalid_input: return "invalid-input";
      case ErrorCode::ring_mismatch: return "ring-mismatch";
      case ErrorCode::parse: return "parse";
      case ErrorCode::budget: return "budget";
      case ErrorCode::genericity: return "genericity";
      case ErrorCode::hypothesis: return "hypothesis";
      case ErrorCode::size_cap: return "size-cap";
      case ErrorCode::overflow: return "overflow";
      case ErrorCode::not_hilbert: return "not-hilbert";
      case ErrorCode::unsupported: return "unsupported";
      case ErrorCode::internal: return "internal";
    }
    return "unknown";
  }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Combinatorial binomial coefficient: C(a, b) = 0 whenever b < 0 or a < b.
// This is the convention used throughout the cohomology formulas, where a
// may well be negative.
mpz_class binom_nat(long a, long b);

// Polynomial binomial: the degree-k polynomial C(a, k) = a(a-1)...(a-k+1)/k!
// evaluated at an arbitrary (possibly negative) integer a.  Used when a
// Hilbert polynomial is evaluated outside the combinatorial range.
mpz_class binom_poly(const mpz_class& a, long k);

// Deterministic seed derivation (splitmix64).  Used so that one user-facing
// seed expands into independent per-trial / per-draw streams that are stable
// across platforms.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Uniform integer in [-10000, 10000] drawn from a splitmix64 stream.  We do
// not use std::uniform_int_distribution because its output is
// implementation-defined; this generator is bit-stable everywhere.
class SeededInts {
public:
  explicit SeededInts(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_raw();
  long next_entry();                   // uniform in [-10000, 10000]
  std::uint64_t next_below(std::uint64_t n);  // uniform in [0, n)

private:
  std::uint64_t state_;
};

}  // namespace cmreg
