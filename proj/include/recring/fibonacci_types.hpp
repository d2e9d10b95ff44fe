#pragma once

#include <string>
#include <vector>

#include "recring/types.hpp"

namespace recring {

// Extended Fibonacci numbers: a_0 = 0, a_1 = 1, a_{-i} = (-1)^{i+1} a_i.
Int fib(long i);

struct WordType {
  Int c;  // s-length
  Int d;  // t-length

  bool operator==(const WordType& other) const = default;
};

WordType sigma_star(const WordType& t);   // (c, d) -> (c+1, d)
WordType lambda_star(const WordType& t);  // (c, d) -> (d, c+d)
WordType kappa_star(const WordType& t);   // (c, d) -> (d, c+d+1)

// Type of an actual word over {s, t}.
WordType type_of(const Word& w);

// The four zeta word forms built from q = kappa^{n_1} sigma ... kappa^{n_m}.
enum class ZetaForm { QSigma, Q, SigmaQSigma, SigmaQ };

std::string to_string(ZetaForm f);

struct OperatorWord {
  ZetaForm form = ZetaForm::Q;
  std::vector<unsigned> partition;  // n_1 .. n_m, all >= 1
};

// Left-to-right application of the operator's sigma*/kappa* factors.
WordType type_apply(const OperatorWord& op, WordType start);
// The same operator applied to a real word via sigma: w -> ws and
// kappa: w -> lambda(sw).
Word word_apply(const OperatorWord& op, const Word& start);

struct PartitionDelta {
  unsigned n = 0;
  std::vector<unsigned> partition;
  Int delta1, delta2, delta;
};

// Delta_1 = sum_j a_{n - S_j - 1}, Delta_2 = sum_j a_{n - S_j} over the
// partial sums S_j = n_1 + ... + n_j, j = 1..m-1; both 0 for m = 1.
PartitionDelta delta(unsigned n, const std::vector<unsigned>& partition);

struct LengthFormula {
  Int c, d, length;
};

// The four displayed type/length formulas for (0,1) under the zeta forms,
// with lengths (a_{n+4}-1)+Delta, (a_{n+4}-2)+Delta, (2a_{n+3}-1)+Delta,
// (2a_{n+3}-2)+Delta respectively.
LengthFormula length_formula(ZetaForm form, unsigned n,
                             const std::vector<unsigned>& partition);

// Recovers a partition of n with the given Delta value via a backtracking
// base-Fibonacci decomposition; Delta must lie in [0, a_{n+2} - 2].
std::vector<unsigned> partition_from_delta(unsigned n, const Int& target);

// Predicted number of W-words with length in [a_{n+4}-2, a_{n+5}-2).
Int count_range(unsigned n);

// All compositions of n into positive parts (2^{n-1} of them).
std::vector<std::vector<unsigned>> compositions(unsigned n);

}  // namespace recring
