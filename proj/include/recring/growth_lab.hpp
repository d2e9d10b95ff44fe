#pragma once

#include <map>
#include <optional>
#include <vector>

#include "recring/monomial_engine.hpp"
#include "recring/types.hpp"

namespace recring {

struct GrowthRow {
  unsigned n = 0;
  Int f;  // |V(n)|, nonzero monomials of length n
  Int g;  // |W(n)| = f(n+1) - f(n)
  Int F;  // cumulative sum of f
};

struct AvoidReport {
  // counts[len - 1]: nonzero words of that length with no factor occurrence.
  std::vector<Int> counts;
  // Last length with a surviving word, when an empty layer was reached;
  // all longer layers are empty too (suffixes of avoiders avoid).
  std::optional<unsigned> vanish_length;
};

struct GkReport {
  double c_target = 0;       // log 2 / log alpha
  double gk_target = 0;      // 1 + c
  double fitted_slope = 0;   // least-squares slope of log F against log n
  bool band_ok = false;      // (1/8) n^c < f(n) < 2 n^c over the range
  unsigned band_fail_n = 0;  // first failing n, when !band_ok
  unsigned fit_lo = 0, fit_hi = 0;
};

// Enumeration of nonzero monomials, the boundary set W, the growth
// functions f, g, F, factor avoidance, and the growth-exponent fit.
class GrowthLab {
 public:
  explicit GrowthLab(MonomialEngine& engine) : engine_(engine) {}

  // V(n), sorted.
  std::vector<Word> enumerate_nonzero(unsigned n);
  // W(n) = {v in V(n) | sv != 0, tv != 0}, by filtering.
  std::vector<Word> boundary_set(unsigned n);
  // All W-words of length <= n_max grown from the seed t by
  // sigma: w -> ws (only when w ends in t) and kappa: w -> lambda(sw).
  std::map<unsigned, std::vector<Word>> boundary_generate(unsigned n_max);

  // Exact table by layered enumeration.
  std::vector<GrowthRow> growth_table(unsigned n_max);
  // Same values through the W-operator generation; no is_zero calls.
  std::vector<GrowthRow> growth_table_fast(unsigned n_max);

  AvoidReport avoid_factor_count(const Word& factor, unsigned n_max);

  GkReport gk_estimate(unsigned n_max, unsigned window);

  static Word apply_sigma(const Word& w) { return w + "s"; }
  static Word apply_kappa(const Word& w) {
    return MonomialEngine::lambda_map("s" + w);
  }

 private:
  MonomialEngine& engine_;

  std::vector<std::vector<Word>> layers(unsigned n_max);
  // g(1..n_max) from the operator generation.
  std::vector<Int> boundary_counts(unsigned n_max);
};

}  // namespace recring
