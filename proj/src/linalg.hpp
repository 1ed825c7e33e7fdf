#pragma once

// Small exact linear-algebra helpers shared by the polytope code.

#include <optional>
#include <vector>

#include "gapbound/rational.hpp"

namespace gapbound::detail {

/// Incremental rank of an integer row set. Rows are kept in echelon form and
/// reduced fraction-free (cross multiplication, then division by content).
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t columns) : columns_(columns) {}

  /// Returns true when the row increased the rank.
  bool add(std::vector<Integer> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns);

/// Basis of {z : m z = 0}, one vector per free column.
RationalMatrix nullspace(RationalMatrix m, std::size_t columns);

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b);

}  // namespace gapbound::detail
