#include "recring/level_expander.hpp"

#include <deque>
#include <map>

#include "recring/exact_linalg.hpp"

namespace recring {

LevelExpander::LevelExpander(const RecursionSystem& sys, std::size_t max_dim)
    : sys_(sys), max_dim_(max_dim), gen_levels_(sys_.generators().size()) {}

std::size_t LevelExpander::dimension_at(int n) const {
  if (n < 0) throw DomainError("level must be nonnegative");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(sys_.arity());
    if (dim > max_dim_) throw LevelCapExceeded(n, dim, max_dim_);
  }
  return dim;
}

const SparseMatrix& LevelExpander::generator_matrix(int gen_index, int n) {
  auto& levels = gen_levels_[gen_index];
  if (static_cast<int>(levels.size()) > n) return levels[n];
  dimension_at(n);
  const int m = sys_.arity();
  const auto& gen = sys_.generators()[gen_index];
  for (int lvl = static_cast<int>(levels.size()); lvl <= n; ++lvl) {
    if (lvl == 0) {
      SparseMatrix root(1, 1);
      root.add_at(0, 0, gen.phi);
      levels.push_back(std::move(root));
      continue;
    }
    const std::size_t sub = dimension_at(lvl - 1);
    SparseMatrix out(sub * m, sub * m);
    for (int y = 0; y < m; ++y)
      for (int yp = 0; yp < m; ++yp) {
        SparseMatrix blk = level_matrix(gen.blocks[y][yp], lvl - 1);
        for (std::size_t r = 0; r < sub; ++r)
          for (const auto& [c, v] : blk.row(r))
            out.add_at(y * sub + r, yp * sub + c, v);
      }
    levels.push_back(std::move(out));
  }
  return levels[n];
}

SparseMatrix LevelExpander::level_matrix(const NcPolynomial& p, int n) {
  sys_.validate_polynomial(p);
  const std::size_t dim = dimension_at(n);
  SparseMatrix out(dim, dim);
  for (const auto& [w, coeff] : p.terms()) {
    SparseMatrix prod = SparseMatrix::identity(dim);
    for (char letter : w)
      prod = prod * generator_matrix(sys_.index_of(letter), n);
    prod = prod.scaled(coeff);
    out = out + prod;
  }
  return out;
}

SparseMatrix LevelExpander::level_matrix(const Word& w, int n) {
  return level_matrix(NcPolynomial::word(w), n);
}

BlockDecomposition LevelExpander::decompose(const NcPolynomial& p) const {
  sys_.validate_polynomial(p);
  const int m = sys_.arity();
  BlockDecomposition out;
  out.phi = Rat(0);
  out.blocks.assign(m, std::vector<NcPolynomial>(m));
  for (const auto& [w, coeff] : p.terms()) {
    Rat phi(coeff);
    std::vector<std::vector<NcPolynomial>> blocks(m,
                                                  std::vector<NcPolynomial>(m));
    for (int i = 0; i < m; ++i) blocks[i][i] = NcPolynomial::constant(Rat(1));
    for (char letter : w) {
      const auto& gen = sys_.generator(letter);
      phi *= gen.phi;
      std::vector<std::vector<NcPolynomial>> next(m,
                                                  std::vector<NcPolynomial>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            next[i][j] += blocks[i][k] * gen.blocks[k][j];
      blocks = std::move(next);
    }
    out.phi += phi;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.blocks[i][j] += blocks[i][j].scaled(coeff);
  }
  return out;
}

BlockFormTree LevelExpander::block_form(const NcPolynomial& p, int depth) const {
  if (depth < 1) throw DomainError("block form depth must be at least 1");
  const int m = sys_.arity();
  BlockDecomposition dec = decompose(p);
  BlockFormTree node;
  node.phi = dec.phi;
  node.entries = dec.blocks;
  if (depth > 1) {
    node.children.resize(m);
    for (int i = 0; i < m; ++i) {
      node.children[i].resize(m);
      for (int j = 0; j < m; ++j)
        node.children[i][j] = std::make_unique<BlockFormTree>(
            block_form(dec.blocks[i][j], depth - 1));
    }
  }
  return node;
}

StateSet LevelExpander::state_set(char generator, std::size_t cap) {
  if (cap < 1) throw DomainError("state cap must be at least 1");
  StateSet out;
  std::set<NcPolynomial> seen;
  std::deque<NcPolynomial> frontier;
  const NcPolynomial start =
      NcPolynomial::word(Word(1, sys_.generator(generator).name));
  seen.insert(start);
  out.states.push_back(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    if (seen.size() > cap) {
      out.capped = true;
      break;
    }
    NcPolynomial p = std::move(frontier.front());
    frontier.pop_front();
    BlockDecomposition dec = decompose(p);
    for (const auto& row : dec.blocks)
      for (const auto& entry : row)
        if (seen.insert(entry).second) {
          out.states.push_back(entry);
          frontier.push_back(entry);
        }
  }
  if (!out.capped) out.exact_count = seen.size();

  // Rank of the states as vectors over the word basis.
  std::map<Word, std::size_t> word_index;
  for (const auto& st : out.states)
    for (const auto& [w, c] : st.terms()) word_index.emplace(w, 0);
  std::size_t next = 0;
  for (auto& [w, idx] : word_index) idx = next++;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> vectors;
  for (const auto& st : out.states) {
    std::vector<std::pair<std::size_t, Rat>> v;
    for (const auto& [w, c] : st.terms()) v.emplace_back(word_index[w], c);
    vectors.push_back(std::move(v));
  }
  out.span_rank = rank_of_rational_rows(vectors);
  return out;
}

std::vector<Rat> LevelExpander::rank_ratio_sequence(const NcPolynomial& p,
                                                    int n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::vector<Rat> out;
  for (int i = 1; i <= n_max; ++i) {
    const SparseMatrix mat = level_matrix(p, i);
    Rat ratio(static_cast<long>(mat.rank()),
              static_cast<long>(dimension_at(i)));
    ratio.canonicalize();
    out.push_back(ratio);
  }
  return out;
}

std::vector<std::size_t> LevelExpander::growth_profile(const NcPolynomial& p,
                                                       int n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::vector<std::size_t> out;
  SparseMatrix prev = level_matrix(p, 0);
  for (int i = 1; i <= n_max; ++i) {
    SparseMatrix cur = level_matrix(p, i);
    SparseMatrix delta = cur - prev.kron_identity(sys_.arity());
    out.push_back(delta.rank());
    prev = std::move(cur);
  }
  return out;
}

IdentityVerdict LevelExpander::check_identity(const NcPolynomial& lhs,
                                              const NcPolynomial& rhs,
                                              int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const NcPolynomial diff = lhs - rhs;
  IdentityVerdict verdict;
  for (int n = 0; n <= n_max; ++n) {
    SparseMatrix d = level_matrix(diff, n);
    if (auto entry = d.first_nonzero()) {
      verdict.holds = false;
      verdict.fail_level = n;
      verdict.row = std::get<0>(*entry);
      verdict.col = std::get<1>(*entry);
      verdict.difference = std::get<2>(*entry);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace recring
