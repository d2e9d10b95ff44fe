#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recring/level_expander.hpp"
#include "recring/sparse_matrix.hpp"
#include "recring/types.hpp"

namespace recring {

struct FreenessReport {
  unsigned max_len = 0;  // L: longest word length in the batch
  int level = 0;         // n: deepest truncation level stacked
  std::size_t word_count = 0;
  std::size_t rank = 0;
  std::string verdict;  // "free-at-scale" or "level-insufficient"
  std::size_t max_coefficient_bits = 0;
  double wall_seconds = 0;
};

// Desk-scale certification for the integral system R1: exact level
// matrices, linear independence over word batches, transcendence of s.
class FreenessVerifier {
 public:
  explicit FreenessVerifier(unsigned threads = 1, std::uint64_t seed = 1);

  // Level-n matrix of a word; entries are integers.
  SparseMatrix level_matrix(const Word& w, int n);

  // All words of length 1..max_len, length-lexicographic order.
  static std::vector<Word> words_up_to(unsigned max_len);

  // Exact rank of the stacked level-0..n vectorizations of all words of
  // length 1..max_len; "free-at-scale" iff rank equals the word count.
  FreenessReport independence_rank(unsigned max_len, int n);
  // Escalates the level from max_len + 2 until full rank or the rank
  // stabilizes below the word count.
  FreenessReport certify(unsigned max_len, int max_level = 12);

  // Independence of I, s, s^2, ..., s^degree.
  FreenessReport transcendence_check(unsigned degree, int n);

 private:
  unsigned threads_;
  std::uint64_t seed_;
  LevelExpander expander_;

  FreenessReport rank_report(const std::vector<Word>& batch, unsigned max_len,
                             int n, const std::string& pass_verdict);
  std::vector<std::pair<std::size_t, Int>> vectorize(const Word& w, int n);
};

}  // namespace recring
