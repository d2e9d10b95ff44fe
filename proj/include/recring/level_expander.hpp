#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "recring/nc_polynomial.hpp"
#include "recring/recursion_system.hpp"
#include "recring/sparse_matrix.hpp"

namespace recring {

// The (m+1)x(m+1) block form of an element: root scalar plus an m x m
// block of polynomials.
struct BlockDecomposition {
  Rat phi;
  std::vector<std::vector<NcPolynomial>> blocks;
};

// Nested expansion of the block form to a fixed depth.
struct BlockFormTree {
  Rat phi;
  std::vector<std::vector<NcPolynomial>> entries;
  // Present when expanded one level further; indexed [row][col].
  std::vector<std::vector<std::unique_ptr<BlockFormTree>>> children;
};

struct StateSet {
  std::vector<NcPolynomial> states;  // in discovery order
  bool capped = false;               // closure did not stabilize under the cap
  std::size_t exact_count = 0;       // valid when !capped
  std::size_t span_rank = 0;         // rank of the linear span of the states
};

struct IdentityVerdict {
  bool holds = true;
  // Populated on failure: the first level and entry where the two sides
  // disagree. A failure is conclusive; success is a truncation certificate.
  int fail_level = -1;
  std::size_t row = 0, col = 0;
  Rat difference;
};

// Expands a recursion system into exact level matrices: the action induced
// on the span of length-n tree words.
class LevelExpander {
 public:
  explicit LevelExpander(const RecursionSystem& sys,
                         std::size_t max_dim = kDefaultMaxDim);

  static constexpr std::size_t kDefaultMaxDim = 4096;

  const RecursionSystem& system() const { return sys_; }

  // Exact action of p on V_n; a ring homomorphism in p for fixed n.
  SparseMatrix level_matrix(const NcPolynomial& p, int n);
  SparseMatrix level_matrix(const Word& w, int n);

  // One unfolding step of the block form.
  BlockDecomposition decompose(const NcPolynomial& p) const;
  // The block form recursively expanded to the given depth (>= 1).
  BlockFormTree block_form(const NcPolynomial& p, int depth) const;

  StateSet state_set(char generator, std::size_t cap);

  // r_i = rank(level i) / m^i for i = 1..n_max.
  std::vector<Rat> rank_ratio_sequence(const NcPolynomial& p, int n_max);
  // rank(L_i - L_{i-1} (x) I_m) for i = 1..n_max.
  std::vector<std::size_t> growth_profile(const NcPolynomial& p, int n_max);

  IdentityVerdict check_identity(const NcPolynomial& lhs,
                                 const NcPolynomial& rhs, int n_max);

  std::size_t dimension_at(int n) const;  // m^n, throws past the cap

 private:
  RecursionSystem sys_;
  std::size_t max_dim_;
  std::vector<std::vector<SparseMatrix>> gen_levels_;

  const SparseMatrix& generator_matrix(int gen_index, int n);
};

}  // namespace recring
