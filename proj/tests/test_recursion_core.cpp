#include <doctest.h>

#include "recring/level_expander.hpp"
#include "recring/parser.hpp"
#include "recring/recursion_system.hpp"

using namespace recring;

TEST_CASE("builtin systems exist") {
  for (const auto& name : {"R1", "R2", "SIGMA", "BR"}) {
    CHECK(is_builtin_system(name));
    CHECK(builtin_system(name).arity() == 2);
  }
  CHECK(!is_builtin_system("nope"));
  CHECK_THROWS_AS(builtin_system("nope"), DomainError);
}

TEST_CASE("R1 generator s expands to diagonal powers of two") {
  LevelExpander ex(builtin_system("R1"));
  const SparseMatrix s1 = ex.level_matrix(Word("s"), 1);
  CHECK(s1.at(0, 0) == 1);
  CHECK(s1.at(1, 1) == 2);
  CHECK(s1.nnz() == 2);

  const SparseMatrix s2 = ex.level_matrix(Word("s"), 2);
  CHECK(s2.at(0, 0) == 1);
  CHECK(s2.at(1, 1) == 1);
  CHECK(s2.at(2, 2) == 2);
  CHECK(s2.at(3, 3) == 4);
  CHECK(s2.nnz() == 4);
}

TEST_CASE("level matrices are multiplicative in the word") {
  LevelExpander ex(builtin_system("R1"));
  for (const Word& u : {"s", "t", "st", "tst"})
    for (const Word& v : {"t", "ss", "ts"})
      for (int n : {0, 1, 2, 3, 4})
        CHECK(ex.level_matrix(u + v, n) ==
              ex.level_matrix(Word(u), n) * ex.level_matrix(Word(v), n));
}

TEST_CASE("R2 truncations surface nonzero-ness with a delay") {
  // Both phi values are 0, so level 0 is always zero and t needs two
  // levels before its nonzero-ness shows up through the s block.
  LevelExpander ex(builtin_system("R2"));
  CHECK(ex.level_matrix(Word("s"), 0).is_zero());
  CHECK(!ex.level_matrix(Word("s"), 1).is_zero());
  CHECK(ex.level_matrix(Word("s"), 1).at(1, 0) == 1);
  CHECK(ex.level_matrix(Word("t"), 1).is_zero());
  CHECK(!ex.level_matrix(Word("t"), 2).is_zero());
  // ss is genuinely zero at every level.
  for (int n = 0; n <= 6; ++n) CHECK(ex.level_matrix(Word("ss"), n).is_zero());
}

TEST_CASE("SIGMA generator is the level permutation") {
  LevelExpander ex(builtin_system("SIGMA"));
  const SparseMatrix g1 = ex.level_matrix(Word("g"), 1);
  CHECK(g1.at(0, 1) == 1);
  CHECK(g1.at(1, 0) == 1);
  CHECK(g1.nnz() == 2);

  // g at level i+1 equals the block-antidiagonal embedding of I_{2^i}:
  // identical to g_{2} (x) I_{2^i}.
  for (int i = 1; i <= 5; ++i) {
    const SparseMatrix gi = ex.level_matrix(Word("g"), i);
    const SparseMatrix gnext = ex.level_matrix(Word("g"), i + 1);
    const std::size_t half = gi.rows();
    CHECK(gnext.rows() == 2 * half);
    for (std::size_t r = 0; r < half; ++r) {
      CHECK(gnext.at(r, half + r) == 1);
      CHECK(gnext.at(half + r, r) == 1);
    }
    CHECK(gnext.nnz() == 2 * half);
    CHECK(gnext * gnext == SparseMatrix::identity(2 * half));
  }
}

TEST_CASE("block decomposition matches the generator data") {
  LevelExpander ex(builtin_system("R2"));
  const BlockDecomposition dec = ex.decompose(NcPolynomial::word("t"));
  CHECK(dec.phi == 0);
  CHECK(dec.blocks[0][0].is_zero());
  CHECK(dec.blocks[0][1] == NcPolynomial::word("t"));
  CHECK(dec.blocks[1][0].is_zero());
  CHECK(dec.blocks[1][1] == NcPolynomial::word("s"));

  // tt unfolds to [[0, ts],[0, ss]] before any zero recognition.
  const BlockDecomposition tt = ex.decompose(NcPolynomial::word("tt"));
  CHECK(tt.blocks[0][1] == NcPolynomial::word("ts"));
  CHECK(tt.blocks[1][1] == NcPolynomial::word("ss"));
}

TEST_CASE("block form tree expands recursively") {
  LevelExpander ex(builtin_system("R2"));
  const BlockFormTree tree = ex.block_form(NcPolynomial::word("tst"), 2);
  CHECK(tree.entries[0][1] == NcPolynomial::word("tt"));
  CHECK(tree.entries[1][1] == NcPolynomial::word("st"));
  REQUIRE(!tree.children.empty());
  // tt unfolds again one level down.
  CHECK(tree.children[0][1]->entries[0][1] == NcPolynomial::word("ts"));
}

TEST_CASE("state sets are finite for the built-ins") {
  LevelExpander ex(builtin_system("SIGMA"));
  const StateSet st = ex.state_set('g', 64);
  CHECK(!st.capped);
  // States of g: g itself plus the constants 0 and 1.
  CHECK(st.exact_count == 3);
  CHECK(st.span_rank == 2);

  // R1 states never stabilize as a set (2s, 4s, 8s, ...), but their
  // linear span does: every state is a multiple of 1 or of s.
  LevelExpander r1(builtin_system("R1"));
  const StateSet s_states = r1.state_set('s', 64);
  CHECK(s_states.capped);
  CHECK(s_states.span_rank == 2);

  const StateSet cap = r1.state_set('t', 1);
  CHECK(cap.capped);
}

TEST_CASE("rank ratios are full for the permutation system") {
  LevelExpander ex(builtin_system("SIGMA"));
  for (const Rat& r : ex.rank_ratio_sequence(NcPolynomial::word("g"), 5))
    CHECK(r == 1);
}

TEST_CASE("identity checks and refutations") {
  LevelExpander br(builtin_system("BR"));
  const NcPolynomial w = parse_poly_expr("s t");
  CHECK(br.check_identity(w.pow(6), w.pow(4), 4).holds);

  // s and t share the root value 1 but split apart at level 1.
  const IdentityVerdict bad = br.check_identity(NcPolynomial::word("s"),
                                                NcPolynomial::word("t"), 4);
  CHECK(!bad.holds);
  CHECK(bad.fail_level == 1);

  LevelExpander r1(builtin_system("R1"));
  CHECK(!r1.check_identity(NcPolynomial::word("st"),
                           NcPolynomial::word("ts"), 3)
             .holds);
}

TEST_CASE("level cap raises a resource error") {
  LevelExpander ex(builtin_system("R1"), 8);
  CHECK_NOTHROW(ex.level_matrix(Word("s"), 3));
  CHECK_THROWS_AS(ex.level_matrix(Word("s"), 4), LevelCapExceeded);
  CHECK_THROWS_AS(ex.dimension_at(4), ResourceError);
}

TEST_CASE("distinct short R2 monomials differ at truncation in R1") {
  // Monomial independence probe: in the integral system R1 distinct words
  // of length <= 4 give distinct level-6 matrices.
  LevelExpander ex(builtin_system("R1"));
  std::vector<Word> words;
  std::vector<Word> layer = {""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& v : layer)
      for (char x : {'s', 't'}) next.push_back(v + x);
    words.insert(words.end(), next.begin(), next.end());
    layer = next;
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      CHECK(ex.level_matrix(words[i], 6) != ex.level_matrix(words[j], 6));
}
