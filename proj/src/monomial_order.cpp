#include "jacgb/monomial_order.hpp"

#include <stdexcept>

#include "jacgb/errors.hpp"
#include "jacgb/rational.hpp"

namespace jacgb {

namespace {

// Exact rank via fraction-free style elimination over Q.
std::size_t rank_of(const std::vector<std::vector<long long>>& rows,
                    std::size_t cols) {
  std::vector<std::vector<Rational>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> row;
    row.reserve(cols);
    for (long long v : r) row.emplace_back(static_cast<long>(v));
    a.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      Rational factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MonomialOrder::MonomialOrder(std::vector<std::vector<long long>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("monomial order: empty matrix");
  cols_ = rows_[0].size();
  if (cols_ == 0) throw std::invalid_argument("monomial order: no variables");
  for (const auto& r : rows_)
    if (r.size() != cols_)
      throw std::invalid_argument("monomial order: ragged matrix");
  for (long long v : rows_[0])
    if (v <= 0)
      throw std::invalid_argument(
          "monomial order: first row must be strictly positive");
  if (rank_of(rows_, cols_) != cols_)
    throw std::invalid_argument("monomial order: matrix not of full column rank");
  sparse_rows_.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<std::pair<std::size_t, long long>> sparse;
    for (std::size_t i = 0; i < cols_; ++i)
      if (row[i] != 0) sparse.emplace_back(i, row[i]);
    sparse_rows_.push_back(std::move(sparse));
  }
}

MonomialOrder MonomialOrder::weighted_degrevlex(int m) {
  if (m < 1) throw std::invalid_argument("monomial order: m must be >= 1");
  const std::size_t n = static_cast<std::size_t>(m) + 2;
  std::vector<std::vector<long long>> rows;
  rows.reserve(n);

  // Weight row: columns C_{-(m+1)}, ..., C_{-1} carry m+2, ..., 2; y carries m+2.
  std::vector<long long> w(n, 0);
  for (std::size_t j = 0; j + 1 < n; ++j) w[j] = static_cast<long long>(m) + 2 - static_cast<long long>(j);
  w[n - 1] = static_cast<long long>(m) + 2;
  rows.push_back(std::move(w));

  // Tie-break rows: -1 on y, then C_{-1}, C_{-2}, ..., C_{-m}.
  {
    std::vector<long long> r(n, 0);
    r[n - 1] = -1;
    rows.push_back(std::move(r));
  }
  for (int k = 1; k <= m; ++k) {
    std::vector<long long> r(n, 0);
    r[static_cast<std::size_t>(m + 1 - k)] = -1;  // column of C_{-k}
    rows.push_back(std::move(r));
  }
  return MonomialOrder(std::move(rows));
}

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.size() != cols_ || v.size() != cols_)
    throw RingMismatchError("monomial order: dimension mismatch");
  if (u == v) return 0;
  for (const auto& row : sparse_rows_) {
    long long diff = 0;
    for (const auto& [i, w] : row) diff += w * (u[i] - v[i]);
    if (diff != 0) return diff < 0 ? -1 : 1;
  }
  // Full column rank makes this unreachable for distinct monomials.
  throw InvariantViolation("monomial order: distinct monomials compared equal");
}

long long MonomialOrder::weighted_degree(const Monomial& u) const {
  if (u.size() != cols_)
    throw RingMismatchError("monomial order: dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < cols_; ++i) s += rows_[0][i] * u[i];
  return s;
}

}  // namespace jacgb
