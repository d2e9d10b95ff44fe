#include "recring/growth_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace recring {

std::vector<std::vector<Word>> GrowthLab::layers(unsigned n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::vector<std::vector<Word>> out;
  std::vector<Word> layer;
  for (char letter : engine_.system().letters())
    if (!engine_.is_zero(Word(1, letter))) layer.push_back(Word(1, letter));
  std::sort(layer.begin(), layer.end());
  out.push_back(layer);
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<Word> next;
    for (char letter : engine_.system().letters())
      for (const Word& v : out.back()) {
        Word w = letter + v;
        if (!engine_.is_zero(w)) next.push_back(std::move(w));
      }
    std::sort(next.begin(), next.end());
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Word> GrowthLab::enumerate_nonzero(unsigned n) {
  return layers(n).back();
}

std::vector<Word> GrowthLab::boundary_set(unsigned n) {
  std::vector<Word> out;
  for (const Word& v : enumerate_nonzero(n))
    if (!engine_.is_zero("s" + v) && !engine_.is_zero("t" + v))
      out.push_back(v);
  return out;
}

std::map<unsigned, std::vector<Word>> GrowthLab::boundary_generate(
    unsigned n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  std::map<unsigned, std::set<Word>> buckets;
  buckets[1].insert("t");
  for (unsigned len = 1; len <= n_max; ++len) {
    auto it = buckets.find(len);
    if (it == buckets.end()) continue;
    for (const Word& w : it->second) {
      if (w.back() == 't') {
        Word ws = apply_sigma(w);
        if (ws.size() <= n_max)
          buckets[static_cast<unsigned>(ws.size())].insert(std::move(ws));
      }
      Word wk = apply_kappa(w);
      if (wk.size() <= n_max)
        buckets[static_cast<unsigned>(wk.size())].insert(std::move(wk));
    }
  }
  std::map<unsigned, std::vector<Word>> out;
  for (auto& [len, words] : buckets)
    out.emplace(len, std::vector<Word>(words.begin(), words.end()));
  return out;
}

std::vector<GrowthRow> GrowthLab::growth_table(unsigned n_max) {
  const auto all = layers(n_max);
  std::vector<GrowthRow> rows;
  Int cumulative = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    row.f = Int(static_cast<unsigned long>(all[n - 1].size()));
    Int boundary = 0;
    for (const Word& v : all[n - 1])
      if (!engine_.is_zero("s" + v) && !engine_.is_zero("t" + v)) ++boundary;
    row.g = boundary;
    cumulative += row.f;
    row.F = cumulative;
    rows.push_back(row);
  }
  return rows;
}

std::vector<Int> GrowthLab::boundary_counts(unsigned n_max) {
  const auto buckets = boundary_generate(n_max);
  std::vector<Int> g(n_max, Int(0));
  for (const auto& [len, words] : buckets)
    g[len - 1] = Int(static_cast<unsigned long>(words.size()));
  return g;
}

std::vector<GrowthRow> GrowthLab::growth_table_fast(unsigned n_max) {
  const std::vector<Int> g = boundary_counts(n_max);
  std::vector<GrowthRow> rows;
  Int f = 2;  // f(1): the words s and t
  Int cumulative = 0;
  for (unsigned n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    row.f = f;
    row.g = g[n - 1];
    cumulative += f;
    row.F = cumulative;
    rows.push_back(row);
    f += g[n - 1];
  }
  return rows;
}

AvoidReport GrowthLab::avoid_factor_count(const Word& factor, unsigned n_max) {
  if (factor.empty()) throw DomainError("factor must be nonempty");
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  AvoidReport report;
  report.counts.assign(n_max, Int(0));
  std::vector<Word> layer;
  for (char letter : engine_.system().letters()) {
    Word w(1, letter);
    if (!engine_.is_zero(w) && w != factor) layer.push_back(std::move(w));
  }
  unsigned last_nonempty = 0;
  for (unsigned len = 1; len <= n_max; ++len) {
    if (len > 1) {
      std::vector<Word> next;
      for (char letter : engine_.system().letters())
        for (const Word& v : layer) {
          Word w = letter + v;
          // v already avoids the factor, so a new occurrence must
          // start at the fresh first letter.
          if (w.size() >= factor.size() &&
              w.compare(0, factor.size(), factor) == 0)
            continue;
          if (!engine_.is_zero(w)) next.push_back(std::move(w));
        }
      layer = std::move(next);
    }
    report.counts[len - 1] = Int(static_cast<unsigned long>(layer.size()));
    if (!layer.empty()) last_nonempty = len;
    if (layer.empty()) {
      // Suffixes of avoiders avoid and stay nonzero: all longer layers
      // are empty too.
      report.vanish_length = last_nonempty;
      break;
    }
  }
  return report;
}

GkReport GrowthLab::gk_estimate(unsigned n_max, unsigned window) {
  if (window < 10 || n_max < window)
    throw DomainError("need n_max >= window >= 10");
  GkReport report;
  const long double alpha = (1.0L + std::sqrt(5.0L)) / 2.0L;
  const long double c = std::log(2.0L) / std::log(alpha);
  report.c_target = static_cast<double>(c);
  report.gk_target = static_cast<double>(1.0L + c);

  const auto rows = growth_table_fast(n_max);
  report.band_ok = true;
  for (unsigned n = 3; n <= n_max; ++n) {
    const long double fn = rows[n - 1].f.get_d();
    const long double nc = std::pow(static_cast<long double>(n), c);
    if (!(nc / 8.0L < fn && fn < 2.0L * nc)) {
      report.band_ok = false;
      report.band_fail_n = n;
      break;
    }
  }

  report.fit_lo = n_max - window + 1;
  report.fit_hi = n_max;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const long double count = static_cast<long double>(window);
  for (unsigned n = report.fit_lo; n <= report.fit_hi; ++n) {
    const long double x = std::log(static_cast<long double>(n));
    const long double y = std::log(static_cast<long double>(
        rows[n - 1].F.get_d()));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.fitted_slope =
      static_cast<double>((count * sxy - sx * sy) / (count * sxx - sx * sx));
  return report;
}

}  // namespace recring
