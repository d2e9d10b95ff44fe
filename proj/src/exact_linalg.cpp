#include "recring/exact_linalg.hpp"

#include <algorithm>
#include <map>

namespace recring {

std::size_t bareiss_rank(std::vector<std::vector<Int>>& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  Int prev_pivot = 1;
  std::size_t rank = 0;
  std::size_t col = 0;
  for (std::size_t k = 0; rank < rows && col < cols; ++col) {
    // Pivot: smallest nonzero magnitude in the column keeps entries tame.
    std::size_t pivot_row = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      if (pivot_row == rows ||
          mpz_cmpabs(m[i][col].get_mpz_t(), m[pivot_row][col].get_mpz_t()) < 0)
        pivot_row = i;
    }
    if (pivot_row == rows) continue;
    std::swap(m[rank], m[pivot_row]);
    const Int pivot = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0 && pivot == prev_pivot) continue;
      const Int factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        Int v = m[i][j] * pivot - m[rank][j] * factor;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        m[i][j] = v;
      }
    }
    prev_pivot = pivot;
    ++rank;
    (void)k;
  }
  return rank;
}

std::size_t modular_rank(const std::vector<std::vector<Int>>& m,
                         std::uint64_t prime) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows,
                                            std::vector<std::uint64_t>(cols));
  Int p = Int(static_cast<unsigned long>(prime));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int r = m[i][j] % p;
      if (r < 0) r += p;
      a[i][j] = r.get_ui();
    }
  auto mulmod = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * y) % prime);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t inv = powmod(a[rank][col], prime - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = mulmod(a[i][col], inv);
      for (std::size_t j = col; j < cols; ++j) {
        std::uint64_t v = a[i][j] + prime - mulmod(f, a[rank][j]);
        if (v >= prime) v -= prime;
        a[i][j] = v;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

template <typename Value, typename ToInt>
std::vector<std::vector<Int>> compact(
    const std::vector<std::vector<std::pair<std::size_t, Value>>>& rows,
    ToInt to_int_row) {
  std::map<std::size_t, std::size_t> col_index;
  for (const auto& row : rows)
    for (const auto& [c, v] : row) col_index.emplace(c, 0);
  std::size_t next = 0;
  for (auto& [c, idx] : col_index) idx = next++;
  std::vector<std::vector<Int>> dense;
  dense.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Int> r(next, Int(0));
    to_int_row(row, col_index, r);
    dense.push_back(std::move(r));
  }
  return dense;
}

}  // namespace

std::size_t rank_of_rational_rows(
    const std::vector<std::vector<std::pair<std::size_t, Rat>>>& rows) {
  auto dense = compact(
      rows, [](const std::vector<std::pair<std::size_t, Rat>>& row,
               const std::map<std::size_t, std::size_t>& col_index,
               std::vector<Int>& out) {
        Int lcm = 1;
        for (const auto& [c, v] : row)
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        for (const auto& [c, v] : row) {
          Rat scaled = v * Rat(lcm);
          out[col_index.at(c)] = scaled.get_num();
        }
      });
  return bareiss_rank(dense);
}

std::vector<std::vector<Int>> densify_integer_rows(
    const std::vector<std::vector<std::pair<std::size_t, Int>>>& rows) {
  return compact(rows, [](const std::vector<std::pair<std::size_t, Int>>& row,
                          const std::map<std::size_t, std::size_t>& col_index,
                          std::vector<Int>& out) {
    for (const auto& [c, v] : row) out[col_index.at(c)] = v;
  });
}

}  // namespace recring
