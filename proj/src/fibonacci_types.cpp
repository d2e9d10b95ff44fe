#include "recring/fibonacci_types.hpp"

#include <functional>

namespace recring {

Int fib(long i) {
  const bool negative = i < 0;
  const long k = negative ? -i : i;
  Int a = 0, b = 1;  // a_0, a_1
  for (long j = 0; j < k; ++j) {
    Int next = a + b;
    a = b;
    b = next;
  }
  if (negative && k % 2 == 0) return -a;  // a_{-i} = (-1)^{i+1} a_i
  return a;
}

WordType sigma_star(const WordType& t) { return {t.c + 1, t.d}; }
WordType lambda_star(const WordType& t) { return {t.d, t.c + t.d}; }
WordType kappa_star(const WordType& t) { return {t.d, t.c + t.d + 1}; }

WordType type_of(const Word& w) {
  WordType t{0, 0};
  for (char letter : w) {
    if (letter == 's')
      ++t.c;
    else if (letter == 't')
      ++t.d;
    else
      throw DomainError("word types are defined over the alphabet {s, t}");
  }
  return t;
}

std::string to_string(ZetaForm f) {
  switch (f) {
    case ZetaForm::QSigma:
      return "q sigma";
    case ZetaForm::Q:
      return "q";
    case ZetaForm::SigmaQSigma:
      return "sigma q sigma";
    case ZetaForm::SigmaQ:
      return "sigma q";
  }
  return "?";
}

namespace {

void check_partition(const std::vector<unsigned>& partition) {
  if (partition.empty()) throw DomainError("partition must be nonempty");
  for (unsigned part : partition)
    if (part < 1) throw DomainError("partition parts must be positive");
}

// 0 = sigma, 1 = kappa, in application order.
std::vector<int> factor_sequence(const OperatorWord& op) {
  check_partition(op.partition);
  std::vector<int> seq;
  if (op.form == ZetaForm::SigmaQ || op.form == ZetaForm::SigmaQSigma)
    seq.push_back(0);
  for (std::size_t i = 0; i < op.partition.size(); ++i) {
    if (i > 0) seq.push_back(0);
    for (unsigned j = 0; j < op.partition[i]; ++j) seq.push_back(1);
  }
  if (op.form == ZetaForm::QSigma || op.form == ZetaForm::SigmaQSigma)
    seq.push_back(0);
  return seq;
}

Word lambda_letters(const Word& w) {
  Word out;
  for (char letter : w) out += (letter == 's') ? Word("t") : Word("st");
  return out;
}

}  // namespace

WordType type_apply(const OperatorWord& op, WordType start) {
  for (int factor : factor_sequence(op))
    start = factor == 0 ? sigma_star(start) : kappa_star(start);
  return start;
}

Word word_apply(const OperatorWord& op, const Word& start) {
  Word w = start;
  for (int factor : factor_sequence(op))
    w = factor == 0 ? w + "s" : "t" + lambda_letters(w);
  return w;
}

PartitionDelta delta(unsigned n, const std::vector<unsigned>& partition) {
  check_partition(partition);
  unsigned sum = 0;
  for (unsigned part : partition) sum += part;
  if (sum != n) throw DomainError("partition does not sum to n");
  PartitionDelta out;
  out.n = n;
  out.partition = partition;
  out.delta1 = 0;
  out.delta2 = 0;
  long s = 0;
  for (std::size_t j = 0; j + 1 < partition.size(); ++j) {
    s += partition[j];
    out.delta1 += fib(static_cast<long>(n) - s - 1);
    out.delta2 += fib(static_cast<long>(n) - s);
  }
  out.delta = out.delta1 + out.delta2;
  return out;
}

LengthFormula length_formula(ZetaForm form, unsigned n,
                             const std::vector<unsigned>& partition) {
  const PartitionDelta d = delta(n, partition);
  const long ln = static_cast<long>(n);
  LengthFormula out;
  switch (form) {
    case ZetaForm::QSigma:
      out.c = fib(ln + 2) + d.delta1;
      out.d = fib(ln + 3) - 1 + d.delta2;
      break;
    case ZetaForm::Q:
      out.c = fib(ln + 2) - 1 + d.delta1;
      out.d = fib(ln + 3) - 1 + d.delta2;
      break;
    case ZetaForm::SigmaQSigma:
      out.c = 2 * fib(ln + 1) + d.delta1;
      out.d = 2 * fib(ln + 2) - 1 + d.delta2;
      break;
    case ZetaForm::SigmaQ:
      out.c = 2 * fib(ln + 1) - 1 + d.delta1;
      out.d = 2 * fib(ln + 2) - 1 + d.delta2;
      break;
  }
  out.length = out.c + out.d;
  return out;
}

std::vector<unsigned> partition_from_delta(unsigned n, const Int& target) {
  if (n < 1) throw DomainError("n must be positive");
  if (target < 0 || target > fib(static_cast<long>(n) + 2) - 2)
    throw DomainError("delta out of range [0, a_{n+2} - 2]");
  if (target == 0) return {n};
  // Choose strictly decreasing indices n >= k_1 > ... > k_r >= 2 with
  // sum a_{k_i} = target; then n_1 = n - k_1 + 1, n_i = k_{i-1} - k_i,
  // n_{r+1} = k_r - 1 is a partition of n realizing the value.
  std::vector<long> ks;
  std::function<bool(Int, long)> search = [&](Int rem, long k_max) -> bool {
    if (rem == 0) return true;
    for (long k = k_max; k >= 2; --k) {
      const Int ak = fib(k);
      if (ak > rem) continue;
      // Indices 2..k-1 can contribute at most a_{k+1} - 2 in total.
      if (rem - ak > fib(k + 1) - 2) continue;
      ks.push_back(k);
      if (search(rem - ak, k - 1)) return true;
      ks.pop_back();
    }
    return false;
  };
  if (!search(target, static_cast<long>(n)))
    throw DomainError("no base-Fibonacci partition found");
  std::vector<unsigned> partition;
  partition.push_back(n - static_cast<unsigned>(ks[0]) + 1);
  for (std::size_t i = 1; i < ks.size(); ++i)
    partition.push_back(static_cast<unsigned>(ks[i - 1] - ks[i]));
  partition.push_back(static_cast<unsigned>(ks.back() - 1));
  return partition;
}

Int count_range(unsigned n) {
  if (n < 1) throw DomainError("n must be positive");
  Int out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), n + 1);
  return out;
}

std::vector<std::vector<unsigned>> compositions(unsigned n) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = 1; part <= rem; ++part) {
      cur.push_back(part);
      rec(rem - part);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace recring
