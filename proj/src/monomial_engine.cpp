#include "recring/monomial_engine.hpp"

#include <algorithm>
#include <cstddef>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

namespace recring {

FormalSum FormalSum::word(const Word& w, const Int& c) {
  FormalSum x;
  x.add(w, c);
  return x;
}

void FormalSum::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum FormalSum::operator+(const FormalSum& other) const {
  FormalSum out = *this;
  for (const auto& [w, c] : other.terms_) out.add(w, c);
  return out;
}

std::string to_string(MonomialType t) {
  switch (t) {
    case MonomialType::PureS:
      return "s";
    case MonomialType::TV:
      return "t v(t,st)";
    case MonomialType::STV:
      return "st v(t,st)";
    case MonomialType::TVS:
      return "t v(t,st) s";
    case MonomialType::STVS:
      return "st v(t,st) s";
  }
  return "?";
}

namespace {

// Single-word block entry of a generator, or nullopt for a zero entry.
std::optional<Word> mono_entry(const NcPolynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const auto& terms = p.terms();
  if (terms.size() != 1 || terms.begin()->second != 1) return std::nullopt;
  return terms.begin()->first;
}

using Form = std::vector<std::vector<std::optional<Word>>>;

Form generator_form(const GeneratorDef& gen) {
  const std::size_t m = gen.blocks.size();
  Form f(m, std::vector<std::optional<Word>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) f[i][j] = mono_entry(gen.blocks[i][j]);
  return f;
}

Form multiply(const Form& a, const Form& b) {
  const std::size_t m = a.size();
  Form c(m, std::vector<std::optional<Word>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[k][j]) c[i][j] = *a[i][k] + *b[k][j];
    }
  return c;
}

}  // namespace

bool MonomialEngine::is_monomial_system(const RecursionSystem& sys) {
  for (const auto& gen : sys.generators())
    for (const auto& row : gen.blocks) {
      int nonzero = 0;
      for (const auto& p : row) {
        if (p.is_zero()) continue;
        ++nonzero;
        const auto& terms = p.terms();
        if (terms.size() != 1 || terms.begin()->second != 1) return false;
      }
      if (nonzero > 1) return false;
    }
  return true;
}

MonomialEngine::MonomialEngine(const RecursionSystem& sys, std::size_t memo_cap)
    : sys_(sys), memo_cap_(memo_cap) {
  if (!is_monomial_system(sys_)) throw DomainError("not a monomial system");
  if (memo_cap_ < 16) memo_cap_ = 16;
}

Rat MonomialEngine::phi_of(const Word& w) const {
  Rat phi(1);
  for (char letter : w) phi *= sys_.generator(letter).phi;
  return phi;
}

MonoBlockForm MonomialEngine::block_form(const Word& w) {
  if (w.empty()) throw DomainError("block form of the empty word");
  Form f = generator_form(sys_.generator(w[0]));
  for (std::size_t i = 1; i < w.size(); ++i)
    f = multiply(f, generator_form(sys_.generator(w[i])));
  return MonoBlockForm{std::move(f)};
}

MonoBlockForm MonomialEngine::block_form_normalized(const Word& w) {
  MonoBlockForm f = block_form(w);
  for (auto& row : f.entries)
    for (auto& entry : row)
      if (entry && !entry->empty() && is_zero(*entry)) entry.reset();
  return f;
}

void MonomialEngine::memo_insert(const Word& w, bool zero) {
  if (memo_.size() >= memo_cap_) {
    // Drop the older half by stamp; crude but keeps hot suffixes around.
    std::vector<std::uint64_t> stamps;
    stamps.reserve(memo_.size());
    for (const auto& [k, e] : memo_) stamps.push_back(e.stamp);
    auto mid = stamps.begin() + stamps.size() / 2;
    std::nth_element(stamps.begin(), mid, stamps.end());
    const std::uint64_t cutoff = *mid;
    for (auto it = memo_.begin(); it != memo_.end();)
      it = it->second.stamp < cutoff ? memo_.erase(it) : std::next(it);
  }
  memo_[w] = MemoEntry{zero, clock_++};
}

MonomialEngine::RecOutcome MonomialEngine::zero_rec(const Word& w,
                                                    std::size_t depth) {
  constexpr std::size_t kNoDep = std::numeric_limits<std::size_t>::max();
  if (w.empty()) return {false, kNoDep};  // the identity is nonzero
  if (auto it = memo_.find(w); it != memo_.end()) {
    it->second.stamp = clock_++;
    return {it->second.zero, kNoDep};
  }
  if (auto it = active_.find(w); it != active_.end())
    // Re-entered a word currently being evaluated: report it zero for
    // now. Zero-ness is the greatest fixpoint of "phi vanishes and all
    // block entries are zero", so a cyclic dependency resolves to zero
    // unless some path reaches a concrete nonzero value.
    return {true, it->second};
  active_.emplace(w, depth);
  bool zero = (phi_of(w) == 0);
  std::size_t low = kNoDep;
  if (zero) {
    const MonoBlockForm f = block_form(w);
    for (const auto& row : f.entries) {
      for (const auto& entry : row) {
        if (!entry) continue;
        const RecOutcome sub = zero_rec(*entry, depth + 1);
        low = std::min(low, sub.lowlink);
        if (!sub.zero) {
          zero = false;
          break;
        }
      }
      if (!zero) break;
    }
  }
  active_.erase(w);
  // A nonzero verdict rests on concrete evidence and is always safe to
  // cache; a zero verdict is cached only when it did not lean on a word
  // still under evaluation above us.
  if (!zero || low >= depth) memo_insert(w, zero);
  return {zero, low};
}

bool MonomialEngine::is_zero(const Word& w) {
  active_.clear();
  return zero_rec(w, 0).zero;
}

MonomialType MonomialEngine::classify(const Word& w) {
  if (is_zero(w)) throw DomainError("zero monomial has no type");
  if (w == "s") return MonomialType::PureS;
  Word core = w;
  bool trail_s = false;
  if (core.size() > 1 && core.back() == 's') {
    trail_s = true;
    core.pop_back();
  }
  // core must factor greedily over {t, st}; the first block fixes the type.
  bool leading_st = false;
  std::size_t i = 0;
  bool first = true;
  while (i < core.size()) {
    if (core[i] == 't') {
      ++i;
    } else if (i + 1 < core.size() && core[i] == 's' && core[i + 1] == 't') {
      if (first) leading_st = true;
      i += 2;
    } else {
      throw DomainError("word is not of one of the five monomial types: " + w);
    }
    first = false;
  }
  if (leading_st) return trail_s ? MonomialType::STVS : MonomialType::STV;
  return trail_s ? MonomialType::TVS : MonomialType::TV;
}

std::optional<unsigned> MonomialEngine::nil_degree(const Word& w,
                                                   unsigned cap) {
  if (cap < 1) throw DomainError("cap must be at least 1");
  Word power;
  for (unsigned k = 1; k <= cap; ++k) {
    power += w;
    if (is_zero(power)) return k;
  }
  return std::nullopt;
}

std::optional<unsigned> MonomialEngine::nil_degree(const FormalSum& x,
                                                   unsigned cap) {
  if (cap < 1) throw DomainError("cap must be at least 1");
  // The ring is monomial and torsion-free: distinct words never cancel,
  // so x^k = 0 iff every expanded word is zero. Zero words are pruned
  // between steps since their extensions stay zero.
  std::map<Word, Int> base;
  for (const auto& [w, c] : x.terms())
    if (!is_zero(w)) base.emplace(w, c);
  std::map<Word, Int> cur = base;
  for (unsigned k = 1; k <= cap; ++k) {
    if (cur.empty()) return k;
    if (k == cap) break;
    std::map<Word, Int> next;
    for (const auto& [u, cu] : cur)
      for (const auto& [v, cv] : base) {
        Word uv = u + v;
        if (!is_zero(uv)) next[std::move(uv)] += cu * cv;
      }
    cur = std::move(next);
  }
  return std::nullopt;
}

Word MonomialEngine::lambda_map(const Word& w) {
  Word out;
  out.reserve(2 * w.size());
  for (char letter : w) {
    if (letter == 's') {
      out += 't';
    } else if (letter == 't') {
      out += "st";
    } else {
      throw DomainError("lambda is defined on the alphabet {s, t}");
    }
  }
  return out;
}

Word MonomialEngine::phi_substitution(const Word& w) {
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 't') {
      out += 's';
      ++i;
    } else if (i + 1 < w.size() && w[i] == 's' && w[i + 1] == 't') {
      out += 't';
      i += 2;
    } else {
      throw DomainError("word does not factor over {t, st}: " + w);
    }
  }
  return out;
}

RelatorFamily MonomialEngine::relator_family(unsigned k) {
  if (k < 1) throw DomainError("relator count must be at least 1");
  RelatorFamily fam;
  fam.relators.push_back("ss");
  while (fam.relators.size() < k) {
    const Word& prev = fam.relators.back();
    if (fam.relators.size() % 2 == 1)
      fam.relators.push_back("t" + lambda_map(prev));
    else
      fam.relators.push_back(lambda_map(prev));
  }
  fam.relators.resize(k);
  return fam;
}

bool MonomialEngine::is_minimal_relator(const Word& u) {
  if (u.size() < 2) return true;
  // Every proper contiguous factor omits the first or the last letter,
  // so it is a factor of one of the two maximal proper factors; in a
  // monomial ring a word containing a zero factor is zero, hence all
  // proper factors are nonzero iff the two maximal ones are.
  return !is_zero(u.substr(0, u.size() - 1)) && !is_zero(u.substr(1));
}

RelatorVerdict MonomialEngine::verify_relators(unsigned k) {
  RelatorVerdict verdict;
  for (const Word& u : relator_family(k).relators) {
    const bool zero = is_zero(u);
    const bool minimal = is_minimal_relator(u);
    if (!zero) verdict.all_zero = false;
    if (!minimal) verdict.all_minimal = false;
    if (!zero || !minimal) verdict.failures.push_back(u);
  }
  return verdict;
}

std::vector<Word> MonomialEngine::nonzero_words_of_length(unsigned n) {
  if (n < 1) throw DomainError("length must be at least 1");
  std::vector<Word> layer;
  for (char letter : sys_.letters())
    if (!is_zero(Word(1, letter))) layer.push_back(Word(1, letter));
  for (unsigned len = 2; len <= n; ++len) {
    std::vector<Word> next;
    for (const Word& v : layer)
      for (char letter : sys_.letters()) {
        Word w = v + letter;
        if (!is_zero(w)) next.push_back(std::move(w));
      }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

AnnihilatorVerdict MonomialEngine::annihilator_level(const Word& u,
                                                     unsigned i) {
  if (i < 1) throw DomainError("annihilator level must be at least 1");
  if (is_zero(u)) throw DomainError("annihilator level of a zero word");
  AnnihilatorVerdict verdict;
  verdict.in_level = true;
  for (const Word& w : nonzero_words_of_length(i))
    if (!is_zero(u + w)) {
      verdict.in_level = false;
      break;
    }
  if (i == 1) {
    // L_0 = {0}, and u itself is nonzero.
    verdict.strict = true;
  } else {
    for (const Word& w : nonzero_words_of_length(i - 1))
      if (!is_zero(u + w)) {
        verdict.strict = true;
        verdict.witness = w;
        break;
      }
  }
  return verdict;
}

std::vector<Word> MonomialEngine::power_set_words(const Word& w, unsigned k) {
  auto rep = [k](const Word& base) {
    Word out;
    for (unsigned i = 0; i < k; ++i) out += base;
    return out;
  };
  const Word sw = "s" + w, tw = "t" + w, tsw = "ts" + w, stw = "st" + w,
             ttw = "tt" + w;
  return {tw + rep(sw), sw + rep(tw), tw + rep(tsw), tsw + rep(stw),
          tsw + rep(ttw)};
}

PowerSetReport MonomialEngine::verify_power_sets(unsigned cap_len) {
  if (cap_len < 3) throw DomainError("cap_len must be at least 3");
  PowerSetReport report;
  // M(k): values of S(w,k) over the base monomials w = 1, t, ts.
  const std::vector<Word> base = {"", "t", "ts"};
  for (unsigned k = 1; k <= 4; ++k) {
    std::set<Word> values;
    for (const Word& w : base)
      for (const Word& u : power_set_words(w, k))
        if (!is_zero(u)) values.insert(u);
    report.m_sets.emplace_back(values.begin(), values.end());
  }
  report.m4_zero = report.m_sets[3].empty();
  report.m3_in_levels = true;
  for (const Word& u : report.m_sets[2]) {
    bool in_some = false;
    for (unsigned i = 1; i <= 4 && !in_some; ++i)
      in_some = annihilator_level(u, i).in_level;
    if (!in_some) report.m3_in_levels = false;
  }
  report.s_w4_zero = true;
  for (unsigned len = 1; len <= cap_len; ++len)
    for (const Word& w : nonzero_words_of_length(len)) {
      ++report.words_checked;
      for (const Word& u : power_set_words(w, 4))
        if (!is_zero(u)) report.s_w4_zero = false;
    }
  return report;
}

void MonomialEngine::save_cache(std::ostream& out) const {
  for (const auto& [w, e] : memo_)
    out << w << ' ' << (e.zero ? 1 : 0) << '\n';
}

void MonomialEngine::load_cache(std::istream& in) {
  Word w;
  int flag;
  while (in >> w >> flag) {
    bool valid = !w.empty() && (flag == 0 || flag == 1);
    for (char letter : w) valid = valid && sys_.has_generator(letter);
    if (valid) memo_[w] = MemoEntry{flag == 1, clock_++};
  }
}

}  // namespace recring
