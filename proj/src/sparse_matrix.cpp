#include "recring/sparse_matrix.hpp"

#include <algorithm>

#include "recring/exact_linalg.hpp"

namespace recring {

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
  return m;
}

Rat SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

void SparseMatrix::add_at(std::size_t r, std::size_t c, const Rat& v) {
  if (v == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const auto& row) { return row.empty(); });
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  SparseMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : other.data_[r]) out.add_at(r, c, v);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  SparseMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : other.data_[r]) out.add_at(r, c, -v);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : other.data_[k]) out.add_at(r, c, a * b);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rat& c) const {
  SparseMatrix out(rows_, cols_);
  if (c == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [col, v] : data_[r]) out.data_[r].emplace_back(col, v * c);
  return out;
}

SparseMatrix SparseMatrix::kron_identity(std::size_t m) const {
  SparseMatrix out(rows_ * m, cols_ * m);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r])
      for (std::size_t j = 0; j < m; ++j)
        out.data_[r * m + j].emplace_back(c * m + j, v);
  return out;
}

std::optional<std::tuple<std::size_t, std::size_t, Rat>>
SparseMatrix::first_nonzero() const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (!data_[r].empty())
      return std::make_tuple(r, data_[r].front().first, data_[r].front().second);
  return std::nullopt;
}

std::size_t SparseMatrix::rank() const {
  std::vector<std::vector<Entry>> nonzero_rows;
  for (const auto& row : data_)
    if (!row.empty()) nonzero_rows.push_back(row);
  return rank_of_rational_rows(nonzero_rows);
}

}  // namespace recring
