#include "cmreg/order.hpp"

#include <gmpxx.h>

namespace cmreg {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, int from, int to) {
  for (int i = from; i < to; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, int from, int to) {
  std::uint64_t da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  // Equal degree: the last index where they differ decides; the smaller
  // exponent there wins.
  for (int i = to - 1; i >= from; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

TermOrder TermOrder::block(int k) {
  if (k < 0) fail(ErrorCode::invalid_input, "block order needs k >= 0");
  TermOrder t(Kind::block, k);
  return t;
}

TermOrder TermOrder::weights(std::vector<std::vector<long>> rows, int nvars) {
  if (rows.empty() || nvars <= 0)
    fail(ErrorCode::invalid_input, "weight order needs a nonempty matrix");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != nvars)
      fail(ErrorCode::invalid_input, "weight matrix row width != nvars");

  // First nonzero entry of every column must be positive (so xi > 1 for all
  // i, making the order global).
  for (int j = 0; j < nvars; ++j) {
    long first = 0;
    for (const auto& r : rows) {
      if (r[j] != 0) {
        first = r[j];
        break;
      }
    }
    if (first <= 0)
      fail(ErrorCode::invalid_input,
           "weight matrix column " + std::to_string(j + 1) +
               " has non-positive leading entry; not a global order");
  }

  // Exact rank over Q must be nvars, otherwise distinct monomials tie.
  {
    std::vector<std::vector<mpq_class>> m(rows.size(),
                                          std::vector<mpq_class>(nvars));
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < nvars; ++j) m[i][j] = rows[i][j];
    int rank = 0;
    int col = 0;
    size_t nrows = m.size();
    while (col < nvars && rank < static_cast<int>(nrows)) {
      size_t piv = nrows;
      for (size_t i = rank; i < nrows; ++i) {
        if (m[i][col] != 0) {
          piv = i;
          break;
        }
      }
      if (piv == nrows) {
        ++col;
        continue;
      }
      std::swap(m[rank], m[piv]);
      for (size_t i = rank + 1; i < nrows; ++i) {
        if (m[i][col] != 0) {
          mpq_class f = m[i][col] / m[rank][col];
          for (int j = col; j < nvars; ++j) m[i][j] -= f * m[rank][j];
        }
      }
      ++rank;
      ++col;
    }
    if (rank < nvars)
      fail(ErrorCode::invalid_input,
           "weight matrix rank " + std::to_string(rank) + " < " +
               std::to_string(nvars) + "; order is not total");
  }

  TermOrder t(Kind::weights, 0);
  t.w_ = std::move(rows);

  // Sampled antisymmetry self-check on small exponent vectors.
  SeededInts rng(0xC0FFEE);
  for (int trial = 0; trial < 64; ++trial) {
    Monomial a(nvars), b(nvars);
    for (int j = 0; j < nvars; ++j) {
      a.set(j, rng.next_below(5));
      b.set(j, rng.next_below(5));
    }
    int ab = t.compare(a, b);
    int ba = t.compare(b, a);
    if (ab != -ba || (ab == 0 && a != b))
      fail(ErrorCode::invalid_input,
           "weight matrix failed the antisymmetry self-check");
  }
  return t;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = a.nvars();
  if (n != b.nvars())
    fail(ErrorCode::ring_mismatch, "comparing monomials with different nvars");
  switch (kind_) {
    case Kind::lex:
      return cmp_lex(a, b, 0, n);
    case Kind::grlex: {
      std::uint64_t da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return cmp_lex(a, b, 0, n);
    }
    case Kind::grevlex:
      return cmp_grevlex(a, b, 0, n);
    case Kind::block: {
      int k = std::min(k_, n);
      int c = cmp_lex(a, b, 0, k);
      if (c) return c;
      return cmp_grevlex(a, b, k, n);
    }
    case Kind::weights: {
      for (const auto& row : w_) {
        __int128 s = 0;
        for (int i = 0; i < n; ++i)
          s += static_cast<__int128>(row[i]) *
               (static_cast<long long>(a[i]) - static_cast<long long>(b[i]));
        if (s != 0) return s > 0 ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grlex: return "grlex";
    case Kind::grevlex: return "grevlex";
    case Kind::block: return "block(" + std::to_string(k_) + ")";
    case Kind::weights: return "weights";
  }
  return "?";
}

TermOrder TermOrder::parse(const std::string& s) {
  if (s == "lex") return lex();
  if (s == "grlex") return grlex();
  if (s == "grevlex") return grevlex();
  if (s.rfind("block(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(6, s.size() - 7);
    try {
      size_t pos = 0;
      int k = std::stoi(inner, &pos);
      if (pos == inner.size() && k >= 0) return block(k);
    } catch (...) {
    }
  }
  fail(ErrorCode::parse, "unknown term order '" + s + "'");
}

}  // namespace cmreg
