#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "cmreg/util.hpp"

namespace cmreg {

// A monomial in n variables: an exponent vector with 32-bit entries.  Any
// operation that would overflow an exponent is a hard error; nothing wraps.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  std::uint32_t operator[](int i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  void set(int i, std::uint64_t v) {
    if (v > UINT32_MAX)
      fail(ErrorCode::overflow, "monomial exponent exceeds 32 bits");
    e_[i] = static_cast<std::uint32_t>(v);
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  // Canonical container order on exponent vectors; not a term order.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i) {
      std::uint64_t s = std::uint64_t(e_[i]) + o.e_[i];
      if (s > UINT32_MAX)
        fail(ErrorCode::overflow, "monomial exponent exceeds 32 bits");
      r.e_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // this / o; requires o.divides(*this).
  Monomial divide(const Monomial& o) const {
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i) {
      if (o.e_[i] > e_[i])
        fail(ErrorCode::invalid_input, "monomial division is not exact");
      r.e_[i] = e_[i] - o.e_[i];
    }
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i)
      r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r(nvars());
    for (int i = 0; i < nvars(); ++i)
      r.e_[i] = std::min(e_[i], o.e_[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  // Largest index (1-based) of a variable dividing the monomial; 0 for 1.
  int max_var() const {
    for (int i = nvars() - 1; i >= 0; --i)
      if (e_[i]) return i + 1;
    return 0;
  }

  bool is_squarefree() const {
    for (auto x : e_)
      if (x > 1) return false;
    return true;
  }

  static Monomial variable(int nvars, int i, std::uint32_t exp = 1) {
    Monomial m(nvars);
    m.e_[i] = exp;
    return m;
  }

private:
  std::vector<std::uint32_t> e_;
};

}  // namespace cmreg
