#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "recring/types.hpp"

namespace recring {

// Rank of an integer matrix by Bareiss fraction-free elimination.
// Destroys its argument.
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m);

// Rank over a prime field, for use as a cheap lower-bound prefilter
// before the exact elimination.
std::size_t modular_rank(const std::vector<std::vector<Int>>& m,
                         std::uint64_t prime);

// Rank of rows given as sparse rational vectors: clears denominators
// row-wise, drops empty columns, then runs Bareiss.
std::size_t rank_of_rational_rows(
    const std::vector<std::vector<std::pair<std::size_t, Rat>>>& rows);

// Same compaction for sparse integer rows.
std::vector<std::vector<Int>> densify_integer_rows(
    const std::vector<std::vector<std::pair<std::size_t, Int>>>& rows);

}  // namespace recring
