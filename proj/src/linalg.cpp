#include "linalg.hpp"

#include <utility>

namespace gapbound::detail {

namespace {

void divide_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

bool RankAccumulator::add(std::vector<Integer> row) {
  row.resize(columns_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    if (row[pc] == 0) continue;
    const Integer a = rows_[k][pc];
    const Integer b = row[pc];
    for (std::size_t j = 0; j < columns_; ++j) row[j] = a * row[j] - b * rows_[k][j];
    divide_content(row);
  }
  std::size_t pc = 0;
  while (pc < columns_ && row[pc] == 0) ++pc;
  if (pc == columns_) return false;
  divide_content(row);
  // eliminate the new pivot from the older rows so every pivot column stays
  // a unit pattern
  for (auto& old : rows_) {
    if (old[pc] == 0) continue;
    const Integer a = row[pc];
    const Integer b = old[pc];
    for (std::size_t j = 0; j < columns_; ++j) old[j] = a * old[j] - b * row[j];
    divide_content(old);
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pc);
  return true;
}

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalMatrix nullspace(RationalMatrix m, std::size_t columns) {
  const auto pivots = rref(m, columns);
  std::vector<char> is_pivot(columns, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  RationalMatrix basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> z(columns, 0);
    z[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = -m[i][f];
    basis.push_back(std::move(z));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  if (pivots.size() < n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace gapbound::detail
