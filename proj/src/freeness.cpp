#include "recring/freeness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>

#include "recring/exact_linalg.hpp"
#include "recring/recursion_system.hpp"

namespace recring {

FreenessVerifier::FreenessVerifier(unsigned threads, std::uint64_t seed)
    : threads_(threads == 0 ? 1 : threads),
      seed_(seed),
      expander_(builtin_system("R1")) {}

SparseMatrix FreenessVerifier::level_matrix(const Word& w, int n) {
  return expander_.level_matrix(w, n);
}

std::vector<Word> FreenessVerifier::words_up_to(unsigned max_len) {
  std::vector<Word> out;
  std::vector<Word> layer = {""};
  for (unsigned len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& v : layer)
      for (char letter : {'s', 't'}) next.push_back(v + letter);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::pair<std::size_t, Int>> FreenessVerifier::vectorize(
    const Word& w, int n) {
  std::vector<std::pair<std::size_t, Int>> row;
  std::size_t offset = 0;
  for (int k = 0; k <= n; ++k) {
    const SparseMatrix mat = expander_.level_matrix(w, k);
    const std::size_t dim = mat.rows();
    for (std::size_t r = 0; r < dim; ++r)
      for (const auto& [c, v] : mat.row(r))
        row.emplace_back(offset + r * dim + c, v.get_num());
    offset += dim * dim;
  }
  return row;
}

FreenessReport FreenessVerifier::rank_report(const std::vector<Word>& batch,
                                             unsigned max_len, int n,
                                             const std::string& pass_verdict) {
  const auto start = std::chrono::steady_clock::now();
  FreenessReport report;
  report.max_len = max_len;
  report.level = n;
  report.word_count = batch.size();

  // Warm the generator level matrices so the parallel phase only reads.
  expander_.level_matrix(Word("s"), n);
  expander_.level_matrix(Word("t"), n);

  std::vector<std::vector<std::pair<std::size_t, Int>>> rows(batch.size());
  auto build = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) rows[i] = vectorize(batch[i], n);
  };
  if (threads_ <= 1 || batch.size() < 2 * threads_) {
    build(0, batch.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (batch.size() + threads_ - 1) / threads_;
    for (unsigned t = 0; t < threads_; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(batch.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(build, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& row : rows)
    for (const auto& [c, v] : row)
      report.max_coefficient_bits = std::max(
          report.max_coefficient_bits, mpz_sizeinbase(v.get_mpz_t(), 2));

  auto dense = densify_integer_rows(rows);
  // Modular prefilter: a rank bound over a random large prime field,
  // confirmed exactly unless it already certifies full rank.
  std::mt19937_64 rng(seed_);
  Int prime_seed = Int(static_cast<unsigned long>(
      (rng() & ((1ull << 60) - 1)) | (1ull << 59)));
  Int prime;
  mpz_nextprime(prime.get_mpz_t(), prime_seed.get_mpz_t());
  const std::size_t mod_rank = modular_rank(dense, prime.get_ui());
  report.rank =
      mod_rank == batch.size() ? mod_rank : bareiss_rank(dense);
  report.verdict =
      report.rank == report.word_count ? pass_verdict : "level-insufficient";
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

FreenessReport FreenessVerifier::independence_rank(unsigned max_len, int n) {
  if (max_len < 1) throw DomainError("max_len must be at least 1");
  return rank_report(words_up_to(max_len), max_len, n, "free-at-scale");
}

FreenessReport FreenessVerifier::certify(unsigned max_len, int max_level) {
  FreenessReport last;
  std::size_t prev_rank = 0;
  bool have_prev = false;
  for (int n = static_cast<int>(max_len) + 2; n <= max_level; ++n) {
    last = independence_rank(max_len, n);
    if (last.rank == last.word_count) return last;
    if (have_prev && last.rank == prev_rank) return last;  // stabilized short
    prev_rank = last.rank;
    have_prev = true;
  }
  return last;
}

FreenessReport FreenessVerifier::transcendence_check(unsigned degree, int n) {
  if (degree < 1) throw DomainError("degree must be at least 1");
  std::vector<Word> batch;
  Word power;
  batch.push_back(power);  // the identity
  for (unsigned k = 1; k <= degree; ++k) {
    power += 's';
    batch.push_back(power);
  }
  return rank_report(batch, degree, n, "independent");
}

}  // namespace recring
