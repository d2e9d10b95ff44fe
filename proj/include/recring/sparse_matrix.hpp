#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "recring/types.hpp"

namespace recring {

// Exact rational matrix, stored row-sparse. Level matrices of the built-in
// systems have at most one entry per row, so dense storage would waste most
// of the 4096^2 cells the level cap allows.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rat>;  // (column, value)

  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }

  Rat at(std::size_t r, std::size_t c) const;
  // Adds v to entry (r, c); rows stay sorted and zero-free.
  void add_at(std::size_t r, std::size_t c, const Rat& v);

  std::size_t nnz() const;
  bool is_zero() const;
  bool operator==(const SparseMatrix& other) const;
  bool operator!=(const SparseMatrix& other) const { return !(*this == other); }

  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix scaled(const Rat& c) const;
  // self (x) I_m : the block embedding used by the growth functional.
  SparseMatrix kron_identity(std::size_t m) const;

  // (row, col, value) of the first nonzero entry in row-major order.
  std::optional<std::tuple<std::size_t, std::size_t, Rat>> first_nonzero()
      const;

  // Exact rank by fraction-free elimination over the integers.
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace recring
