#pragma once

#include <optional>
#include <vector>

#include "cmreg/field.hpp"

namespace cmreg {

// Incremental exact row reduction over a Field.  Rows are dense coefficient
// vectors; the reducer keeps an echelonized copy of the span and reports the
// rank.  This is the workhorse behind the linear-algebra Hilbert oracle and
// matrix inversion.
class RowReducer {
public:
  RowReducer(const Field& field, int width)
      : field_(field), width_(width) {}

  // Reduces the row against the current span.  Returns true if the row was
  // independent (rank grew).  The row is consumed.
  bool add_row(std::vector<mpq_class> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

private:
  Field field_;
  int width_;
  std::vector<std::vector<mpq_class>> rows_;  // echelon rows
  std::vector<int> pivots_;                   // pivot column per row
};

// Exact inverse of a square matrix over the field; nullopt when singular.
std::optional<std::vector<std::vector<mpq_class>>> invert_matrix(
    const Field& field, const std::vector<std::vector<mpq_class>>& a);

}  // namespace cmreg
