#include <doctest.h>

#include "recring/freeness.hpp"
#include "recring/recursion_system.hpp"

using namespace recring;

TEST_CASE("word batches are length-lexicographic") {
  const auto words = FreenessVerifier::words_up_to(2);
  CHECK(words == std::vector<Word>{"s", "t", "ss", "st", "ts", "tt"});
  CHECK(FreenessVerifier::words_up_to(4).size() == 30);
}

TEST_CASE("generator s stays diagonal with power-of-two entries") {
  FreenessVerifier verifier;
  for (int n = 0; n <= 6; ++n) {
    const SparseMatrix s = verifier.level_matrix("s", n);
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (const auto& [c, v] : s.row(r)) {
        CHECK(c == r);
        // v is a power of two: v & (v - 1) == 0 for v > 0.
        const Int num = v.get_num();
        CHECK(v.get_den() == 1);
        CHECK(num > 0);
        Int masked = num & (num - 1);
        CHECK(masked == 0);
      }
  }
}

TEST_CASE("small batch reaches full rank") {
  FreenessVerifier verifier;
  const FreenessReport report = verifier.independence_rank(2, 4);
  CHECK(report.word_count == 6);
  CHECK(report.rank == 6);
  CHECK(report.verdict == "free-at-scale");
  CHECK(report.max_coefficient_bits > 0);
}

TEST_CASE("level zero is honestly insufficient") {
  FreenessVerifier verifier;
  const FreenessReport report = verifier.independence_rank(2, 0);
  CHECK(report.rank < report.word_count);
  CHECK(report.verdict == "level-insufficient");
}

TEST_CASE("certification escalates the level") {
  FreenessVerifier verifier;
  const FreenessReport report = verifier.certify(3);
  CHECK(report.word_count == 14);
  CHECK(report.rank == 14);
  CHECK(report.verdict == "free-at-scale");
  CHECK(report.level >= 5);
}

TEST_CASE("threaded vectorization matches single-threaded") {
  FreenessVerifier single(1), pooled(4);
  const FreenessReport a = single.independence_rank(3, 5);
  const FreenessReport b = pooled.independence_rank(3, 5);
  CHECK(a.rank == b.rank);
  CHECK(a.word_count == b.word_count);
  CHECK(a.verdict == b.verdict);
}

TEST_CASE("transcendence of s") {
  FreenessVerifier verifier;
  const FreenessReport ok = verifier.transcendence_check(3, 4);
  CHECK(ok.word_count == 4);  // I, s, s^2, s^3
  CHECK(ok.rank == 4);
  CHECK(ok.verdict == "independent");

  // At level 0 every power collapses to the scalar 1.
  const FreenessReport collapsed = verifier.transcendence_check(3, 0);
  CHECK(collapsed.rank < collapsed.word_count);
}
