#pragma once

#include <string>
#include <vector>

#include "cmreg/monomial.hpp"

namespace cmreg {

// Term orders on monomials.  The variable convention is x1 > x2 > ... > xn
// throughout: index 0 is the largest variable.
//
//   lex       pure lexicographic
//   grlex     total degree, ties by lex
//   grevlex   total degree, ties by reverse lexicographic
//   block(k)  lex on x1..xk, ties by grevlex on the remaining variables
//             (an elimination order for the first k variables)
//   weights   full-rank integer weight matrix, rows applied top-down
class TermOrder {
public:
  enum class Kind { lex, grlex, grevlex, block, weights };

  static TermOrder lex() { return TermOrder(Kind::lex, 0); }
  static TermOrder grlex() { return TermOrder(Kind::grlex, 0); }
  static TermOrder grevlex() { return TermOrder(Kind::grevlex, 0); }
  static TermOrder block(int k);
  // Validates that the matrix defines a global term order: full rank n and
  // the first nonzero entry of every column positive, plus a sampled
  // antisymmetry self-check.
  static TermOrder weights(std::vector<std::vector<long>> rows, int nvars);

  Kind kind() const { return kind_; }
  int block_k() const { return k_; }
  const std::vector<std::vector<long>>& matrix() const { return w_; }

  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  std::string name() const;
  bool operator==(const TermOrder& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && w_ == o.w_;
  }

  // Parse "lex" / "grlex" / "grevlex" / "block(3)".
  static TermOrder parse(const std::string& s);

private:
  TermOrder(Kind k, int bk) : kind_(k), k_(bk) {}
  Kind kind_;
  int k_ = 0;
  std::vector<std::vector<long>> w_;
};

}  // namespace cmreg
