#pragma once

#include <vector>

#include "jacgb/monomial.hpp"

namespace jacgb {

// Matrix-defined monomial order: u < v iff matrix*u < matrix*v
// lexicographically by rows. The matrix must have full column rank (so
// distinct monomials never tie) and a strictly positive first row (so the
// order is a well-order and term weights are the first-row values).
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<std::vector<long long>> rows);

  // The order used throughout: first row carries the weights
  // w(C_{-i}) = i+1 and w(y) = m+2, followed by one -1 row per variable
  // scanning y, C_{-1}, C_{-2}, ..., C_{-m}. Columns follow the canonical
  // variable order C_{-(m+1)}, C_{-m}, ..., C_{-1}, y.
  static MonomialOrder weighted_degrevlex(int m);

  // -1, 0, +1 for u<v, u==v, u>v.
  int compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  std::size_t columns() const { return cols_; }
  const std::vector<std::vector<long long>>& matrix() const { return rows_; }

  // First-row value of a monomial (its weighted degree).
  long long weighted_degree(const Monomial& u) const;

 private:
  std::vector<std::vector<long long>> rows_;
  // Sparse mirror of rows_: (column, value) pairs, skipping zeros. The
  // tie-break rows have a single entry each, so comparisons after the
  // weight row cost O(1) per row instead of O(columns).
  std::vector<std::vector<std::pair<std::size_t, long long>>> sparse_rows_;
  std::size_t cols_ = 0;
};

}  // namespace jacgb
