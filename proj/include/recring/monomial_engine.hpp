#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "recring/recursion_system.hpp"
#include "recring/types.hpp"

namespace recring {

// Integer linear combination of words; no zero coefficients stored.
class FormalSum {
 public:
  FormalSum() = default;

  static FormalSum word(const Word& w, const Int& c = Int(1));

  const std::map<Word, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Word& w, const Int& c);
  FormalSum operator+(const FormalSum& other) const;

 private:
  std::map<Word, Int> terms_;
};

// 2x2 (in general m x m) symbolic block form: each entry is Zero
// (nullopt) or a single word; the empty word is the identity.
struct MonoBlockForm {
  std::vector<std::vector<std::optional<Word>>> entries;

  bool operator==(const MonoBlockForm& other) const = default;
};

enum class MonomialType {
  PureS,     // s
  TV,        // t v(t,st)
  STV,       // st v(t,st)
  TVS,       // t v(t,st) s
  STVS,      // st v(t,st) s
};

std::string to_string(MonomialType t);

struct RelatorFamily {
  std::vector<Word> relators;  // u_1 .. u_k
};

struct RelatorVerdict {
  bool all_zero = true;
  bool all_minimal = true;
  std::vector<Word> failures;  // relators breaking either condition
};

struct AnnihilatorVerdict {
  bool in_level = false;  // u in L_i
  bool strict = false;    // u not in L_{i-1}
  // Length i-1 word with u w != 0, when strict and i > 1.
  std::optional<Word> witness;
};

struct PowerSetReport {
  // m_sets[k-1] holds the nonzero elements of M(k), k = 1..4, sorted.
  std::vector<std::vector<Word>> m_sets;
  bool m4_zero = false;
  bool m3_in_levels = false;  // each element of M(3) in some L_i, i <= 4
  bool s_w4_zero = false;     // S(w,4) = {0} for all nonzero |w| <= cap_len
  std::size_t words_checked = 0;
};

// Exact zero-ness calculus for monomial systems: every generator block
// has at most one nonzero entry per row and all entries are plain words.
// R2 satisfies this; products of such block matrices stay row-monomial,
// which keeps every derived block entry a single word.
class MonomialEngine {
 public:
  explicit MonomialEngine(const RecursionSystem& sys,
                          std::size_t memo_cap = kDefaultMemoCap);

  static constexpr std::size_t kDefaultMemoCap = 1u << 20;

  static bool is_monomial_system(const RecursionSystem& sys);

  const RecursionSystem& system() const { return sys_; }

  // True iff the word acts as zero on every level.
  bool is_zero(const Word& w);

  // Raw symbolic block form: the left-to-right product of the generator
  // blocks, entries not yet tested for zero-ness.
  MonoBlockForm block_form(const Word& w);
  // Same with zero entries blanked out; satisfies the contraction
  // property (entry lengths < |w| for nonzero words with |w| >= 3).
  MonoBlockForm block_form_normalized(const Word& w);

  // The five-type classification; throws DomainError on zero words.
  MonomialType classify(const Word& w);

  // Least k <= cap with x^k = 0, or nullopt ("exceeds cap").
  std::optional<unsigned> nil_degree(const Word& w, unsigned cap);
  std::optional<unsigned> nil_degree(const FormalSum& x, unsigned cap);

  // Letterwise s -> t, t -> st.
  static Word lambda_map(const Word& w);
  // Block substitution t -> s, st -> t; the word must factor over
  // {t, st}. Throws DomainError otherwise.
  static Word phi_substitution(const Word& w);

  // u_1 = ss, u_{2i} = t lambda(u_{2i-1}), u_{2i+1} = lambda(u_{2i}).
  static RelatorFamily relator_family(unsigned k);
  RelatorVerdict verify_relators(unsigned k);
  // Every proper contiguous factor of u is nonzero. In a monomial ring
  // this is equivalent to both maximal proper factors being nonzero.
  bool is_minimal_relator(const Word& u);

  AnnihilatorVerdict annihilator_level(const Word& u, unsigned i);

  std::vector<Word> nonzero_words_of_length(unsigned n);

  // S(w,k) = {(tw)(sw)^k, (sw)(tw)^k, (tw)(tsw)^k, (tsw)(stw)^k,
  //           (tsw)(t^2 w)^k} as plain words.
  static std::vector<Word> power_set_words(const Word& w, unsigned k);
  PowerSetReport verify_power_sets(unsigned cap_len);

  std::size_t memo_size() const { return memo_.size(); }
  // Textual cache format: one "word 0|1" line per entry.
  void save_cache(std::ostream& out) const;
  void load_cache(std::istream& in);

 private:
  struct MemoEntry {
    bool zero;
    std::uint64_t stamp;
  };
  struct RecOutcome {
    bool zero;
    std::size_t lowlink;  // shallowest active word this result depends on
  };

  RecursionSystem sys_;
  std::size_t memo_cap_;
  std::uint64_t clock_ = 0;
  std::unordered_map<Word, MemoEntry> memo_;
  std::unordered_map<Word, std::size_t> active_;

  RecOutcome zero_rec(const Word& w, std::size_t depth);
  void memo_insert(const Word& w, bool zero);
  Rat phi_of(const Word& w) const;
};

}  // namespace recring
