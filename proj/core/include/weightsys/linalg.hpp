#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weightsys/poly.hpp"

namespace weightsys {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Integer>>;

// Clears denominators and returns a sorted integer row.
SparseRow integer_row(const std::vector<std::pair<int, Rational>>& entries);

// Incremental row echelon form over the integers (fraction-free elimination with
// content normalization). Ranks are exact.
class RowEchelon {
 public:
  // Returns true if the row was independent of the rows added so far.
  bool add(SparseRow row);
  // Reduces row against the current pivots; true if it reduces to zero.
  bool in_span(SparseRow row) const;
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  SparseRow reduce(SparseRow row) const;

  std::vector<SparseRow> rows_;
  std::vector<std::pair<int, std::size_t>> pivots_;  // sorted by pivot column
};

int exact_rank(const std::vector<SparseRow>& rows);

// Rank modulo a prime; never larger than the rational rank.
int modular_rank(const std::vector<SparseRow>& rows, std::uint64_t prime);

}  // namespace weightsys
