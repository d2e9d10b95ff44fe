// recurse-ring: exact workbench for functionally recursive matrix rings.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recring/fibonacci_types.hpp"
#include "recring/freeness.hpp"
#include "recring/growth_lab.hpp"
#include "recring/level_expander.hpp"
#include "recring/monomial_engine.hpp"
#include "recring/parser.hpp"
#include "recring/types.hpp"

using json = nlohmann::ordered_json;
using namespace recring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

struct Options {
  std::string system = "R2";
  int levels = 6;
  std::size_t cap_states = 4096;
  std::size_t cap_memos = MonomialEngine::kDefaultMemoCap;
  std::size_t cap_bytes = 1ull << 30;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string csv_path;
  std::string json_path;
};

RecursionSystem load_system(const std::string& name) {
  if (is_builtin_system(name)) return builtin_system(name);
  std::ifstream in(name);
  if (!in) throw DomainError("no built-in system or readable file '" + name + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_system(text.str());
}

std::optional<std::string> cache_file(const RecursionSystem& sys) {
  const char* dir = std::getenv("RECURSE_RING_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::string(dir) + "/" + sys.name() + ".zero";
}

MonomialEngine make_engine(const RecursionSystem& sys, const Options& opt) {
  MonomialEngine engine(sys, opt.cap_memos);
  if (auto path = cache_file(sys)) {
    std::ifstream in(*path);
    if (in) engine.load_cache(in);
  }
  return engine;
}

void persist_cache(const MonomialEngine& engine) {
  if (auto path = cache_file(engine.system())) {
    std::ofstream out(*path);
    if (out) engine.save_cache(out);
  }
}

void emit_json(const Options& opt, json report, double wall_seconds) {
  if (opt.json_path.empty()) return;
  report["wall_time"] = wall_seconds;
  std::ofstream out(opt.json_path);
  out << report.dump(2) << "\n";
}

json base_report(const std::string& command, const Options& opt) {
  json report;
  report["command"] = command;
  report["system"] = opt.system;
  return report;
}

std::string poly_word_string(const NcPolynomial& p) { return p.to_string(); }

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void print_rows(const std::vector<GrowthRow>& rows, std::ostream& out) {
  out << "n,f,g,F\n";
  for (const auto& row : rows)
    out << row.n << ',' << row.f.get_str() << ',' << row.g.get_str() << ','
        << row.F.get_str() << '\n';
}

int run_growth(const Options& opt, unsigned n, bool fast) {
  Timer timer;
  RecursionSystem sys = load_system(opt.system);
  MonomialEngine engine = make_engine(sys, opt);
  GrowthLab lab(engine);
  const auto rows = fast ? lab.growth_table_fast(n) : lab.growth_table(n);
  Int stored_bytes = 0;
  for (const auto& row : rows) stored_bytes += row.f * row.n;
  if (stored_bytes > Int(static_cast<unsigned long>(opt.cap_bytes)))
    throw ResourceError("word storage estimate exceeds --cap-bytes");
  print_rows(rows, std::cout);
  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    print_rows(rows, out);
  }
  json report = base_report("growth", opt);
  report["n"] = n;
  report["fast"] = fast;
  json values = json::array();
  for (const auto& row : rows)
    values.push_back({{"n", row.n},
                      {"f", row.f.get_str()},
                      {"g", row.g.get_str()},
                      {"F", row.F.get_str()}});
  report["rows"] = values;
  emit_json(opt, report, timer.seconds());
  persist_cache(engine);
  return kExitOk;
}

int run_relators(const Options& opt, unsigned count) {
  Timer timer;
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  const auto family = MonomialEngine::relator_family(count);
  bool ok = true;
  for (const Word& u : family.relators) {
    const bool zero = engine.is_zero(u);
    const bool minimal = engine.is_minimal_relator(u);
    ok = ok && zero && minimal;
    std::cout << u << " zero=" << (zero ? "yes" : "no")
              << " minimal=" << (minimal ? "yes" : "no") << "\n";
  }
  json report = base_report("relators", opt);
  report["count"] = count;
  report["all_zero_and_minimal"] = ok;
  emit_json(opt, report, timer.seconds());
  persist_cache(engine);
  return ok ? kExitOk : kExitVerdict;
}

int run_identity(const Options& opt, const std::string& lhs,
                 const std::string& rhs) {
  Timer timer;
  RecursionSystem sys = load_system(opt.system);
  LevelExpander expander(sys);
  const NcPolynomial l = parse_poly_expr(lhs);
  const NcPolynomial r = parse_poly_expr(rhs);
  const IdentityVerdict verdict = expander.check_identity(l, r, opt.levels);
  json report = base_report("identity", opt);
  report["lhs"] = lhs;
  report["rhs"] = rhs;
  report["levels"] = opt.levels;
  report["holds"] = verdict.holds;
  if (verdict.holds) {
    std::cout << "holds at all levels <= " << opt.levels
              << " (truncation certificate)\n";
  } else {
    std::cout << "fails at level " << verdict.fail_level << " entry ("
              << verdict.row << "," << verdict.col
              << ") difference " << verdict.difference.get_str() << "\n";
    report["fail_level"] = verdict.fail_level;
  }
  emit_json(opt, report, timer.seconds());
  return verdict.holds ? kExitOk : kExitVerdict;
}

int run_level(const Options& opt, const std::string& expr, int n) {
  RecursionSystem sys = load_system(opt.system);
  LevelExpander expander(sys);
  const SparseMatrix m = expander.level_matrix(parse_poly_expr(expr), n);
  std::cout << "level " << n << " (" << m.rows() << "x" << m.cols() << ", "
            << m.nnz() << " nonzero)\n";
  if (m.rows() <= 16) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::cout << (c ? " " : "") << m.at(r, c).get_str();
      std::cout << "\n";
    }
  } else {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r))
        std::cout << r << " " << c << " " << v.get_str() << "\n";
  }
  return kExitOk;
}

void print_block_tree(const BlockFormTree& node, const std::string& indent) {
  std::cout << indent << "phi = " << node.phi.get_str() << "\n";
  for (std::size_t i = 0; i < node.entries.size(); ++i)
    for (std::size_t j = 0; j < node.entries[i].size(); ++j) {
      std::cout << indent << "(" << i << "," << j << ") "
                << poly_word_string(node.entries[i][j]) << "\n";
      if (!node.children.empty() && node.children[i][j])
        print_block_tree(*node.children[i][j], indent + "  ");
    }
}

int run_blockform(const Options& opt, const std::string& expr, int depth) {
  RecursionSystem sys = load_system(opt.system);
  LevelExpander expander(sys);
  print_block_tree(expander.block_form(parse_poly_expr(expr), depth), "");
  return kExitOk;
}

int run_states(const Options& opt, char gen) {
  Timer timer;
  RecursionSystem sys = load_system(opt.system);
  LevelExpander expander(sys);
  const StateSet states = expander.state_set(gen, opt.cap_states);
  for (const auto& p : states.states) std::cout << poly_word_string(p) << "\n";
  std::cout << (states.capped
                    ? "state closure capped at " + std::to_string(opt.cap_states)
                    : "finite-state: " + std::to_string(states.exact_count) +
                          " states")
            << ", span rank " << states.span_rank << "\n";
  json report = base_report("states", opt);
  report["generator"] = std::string(1, gen);
  report["capped"] = states.capped;
  report["count"] = states.states.size();
  report["span_rank"] = states.span_rank;
  emit_json(opt, report, timer.seconds());
  return kExitOk;
}

int run_rankratio(const Options& opt, const std::string& expr, int n) {
  RecursionSystem sys = load_system(opt.system);
  LevelExpander expander(sys);
  const auto ratios =
      expander.rank_ratio_sequence(parse_poly_expr(expr), n);
  for (int i = 0; i < n; ++i)
    std::cout << (i + 1) << " " << ratios[i].get_str() << "\n";
  return kExitOk;
}

int run_growthprofile(const Options& opt, const std::string& expr, int n) {
  RecursionSystem sys = load_system(opt.system);
  LevelExpander expander(sys);
  const auto profile = expander.growth_profile(parse_poly_expr(expr), n);
  for (int i = 0; i < n; ++i)
    std::cout << (i + 1) << " " << profile[i] << "\n";
  return kExitOk;
}

int run_zero(const Options& opt, const Word& word) {
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  std::cout << (engine.is_zero(word) ? "zero" : "nonzero") << "\n";
  persist_cache(engine);
  return kExitOk;
}

int run_classify(const Options& opt, const Word& word) {
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  std::cout << to_string(engine.classify(word)) << "\n";
  return kExitOk;
}

int run_nildegree(const Options& opt, const std::string& expr, unsigned cap) {
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  const NcPolynomial p = parse_poly_expr(expr);
  std::optional<unsigned> degree;
  if (p.terms().size() == 1 && p.terms().begin()->second == 1) {
    degree = engine.nil_degree(p.terms().begin()->first, cap);
  } else {
    FormalSum sum;
    for (const auto& [w, c] : p.terms()) {
      if (c.get_den() != 1)
        throw DomainError("formal sums take integer coefficients");
      sum.add(w, c.get_num());
    }
    degree = engine.nil_degree(sum, cap);
  }
  if (degree)
    std::cout << "delta = " << *degree << "\n";
  else
    std::cout << "exceeds cap " << cap << "\n";
  persist_cache(engine);
  return kExitOk;
}

int run_annihilator(const Options& opt, const Word& word, unsigned level) {
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  const AnnihilatorVerdict verdict = engine.annihilator_level(word, level);
  std::cout << word << (verdict.in_level ? " in " : " not in ") << "L_"
            << level << "\n";
  if (verdict.in_level && verdict.strict) {
    std::cout << "strict: not in L_" << (level - 1);
    if (verdict.witness) std::cout << " (witness " << *verdict.witness << ")";
    std::cout << "\n";
  }
  persist_cache(engine);
  return kExitOk;
}

int run_powersets(const Options& opt, unsigned cap_len) {
  Timer timer;
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  const PowerSetReport report = engine.verify_power_sets(cap_len);
  for (unsigned k = 1; k <= 4; ++k) {
    std::cout << "M(" << k << ") =";
    if (report.m_sets[k - 1].empty()) std::cout << " {0}";
    for (const Word& w : report.m_sets[k - 1]) std::cout << " " << w;
    std::cout << "\n";
  }
  const bool ok = report.m4_zero && report.m3_in_levels && report.s_w4_zero;
  std::cout << "M(4) = {0}: " << (report.m4_zero ? "yes" : "no") << "\n"
            << "M(3) inside L_i (i<=4): "
            << (report.m3_in_levels ? "yes" : "no") << "\n"
            << "S(w,4) = {0} for |w| <= " << cap_len << ": "
            << (report.s_w4_zero ? "yes" : "no") << " (" << report.words_checked
            << " words)\n";
  json jreport = base_report("powersets", opt);
  jreport["cap_len"] = cap_len;
  jreport["ok"] = ok;
  emit_json(opt, jreport, timer.seconds());
  persist_cache(engine);
  return ok ? kExitOk : kExitVerdict;
}

int run_boundary(const Options& opt, unsigned n, bool generate, bool check) {
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  GrowthLab lab(engine);
  if (check) {
    const auto buckets = lab.boundary_generate(n);
    for (unsigned len = 1; len <= n; ++len) {
      const auto filtered = lab.boundary_set(len);
      auto it = buckets.find(len);
      const std::vector<Word> generated =
          it == buckets.end() ? std::vector<Word>{} : it->second;
      if (filtered != generated) {
        std::cout << "mismatch at length " << len << "\n";
        return kExitVerdict;
      }
    }
    std::cout << "operator-generated W matches filtered W up to " << n << "\n";
    persist_cache(engine);
    return kExitOk;
  }
  if (generate) {
    for (const auto& [len, words] : lab.boundary_generate(n))
      for (const Word& w : words) std::cout << len << " " << w << "\n";
  } else {
    for (const Word& w : lab.boundary_set(n)) std::cout << w << "\n";
  }
  persist_cache(engine);
  return kExitOk;
}

int run_avoid(const Options& opt, const Word& factor, unsigned n) {
  Timer timer;
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  GrowthLab lab(engine);
  const AvoidReport report = lab.avoid_factor_count(factor, n);
  for (std::size_t i = 0; i < report.counts.size(); ++i)
    std::cout << (i + 1) << " " << report.counts[i].get_str() << "\n";
  if (report.vanish_length)
    std::cout << "all avoiders vanish beyond length " << *report.vanish_length
              << "\n";
  else
    std::cout << "avoiders persist through length " << n << "\n";
  json jreport = base_report("avoid", opt);
  jreport["factor"] = factor;
  jreport["n"] = n;
  if (report.vanish_length) jreport["vanish_length"] = *report.vanish_length;
  emit_json(opt, jreport, timer.seconds());
  persist_cache(engine);
  return kExitOk;
}

int run_gk(const Options& opt, unsigned n, unsigned window) {
  Timer timer;
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  GrowthLab lab(engine);
  const GkReport report = lab.gk_estimate(n, window);
  std::cout << "c = log2/log(alpha) = " << report.c_target << "\n"
            << "target GK dimension = " << report.gk_target << "\n"
            << "fitted exponent of F over [" << report.fit_lo << ","
            << report.fit_hi << "] = " << report.fitted_slope << "\n"
            << "band (1/8) n^c < f(n) < 2 n^c for 3 <= n <= " << n << ": "
            << (report.band_ok ? "holds" : "fails") << "\n";
  if (!report.band_ok)
    std::cout << "first band failure at n = " << report.band_fail_n << "\n";
  json jreport = base_report("gk", opt);
  jreport["n"] = n;
  jreport["window"] = window;
  jreport["c_target"] = report.c_target;
  jreport["gk_target"] = report.gk_target;
  jreport["fitted_slope"] = report.fitted_slope;
  jreport["band_ok"] = report.band_ok;
  emit_json(opt, jreport, timer.seconds());
  persist_cache(engine);
  return report.band_ok ? kExitOk : kExitVerdict;
}

int run_fib(long i) {
  std::cout << fib(i).get_str() << "\n";
  return kExitOk;
}

std::vector<unsigned> parse_partition(const std::string& text) {
  std::vector<unsigned> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    parts.push_back(static_cast<unsigned>(std::stoul(tok)));
  return parts;
}

int run_delta(unsigned n, const std::string& partition_text) {
  const PartitionDelta d = delta(n, parse_partition(partition_text));
  std::cout << "Delta1 = " << d.delta1.get_str() << "\n"
            << "Delta2 = " << d.delta2.get_str() << "\n"
            << "Delta  = " << d.delta.get_str() << "\n";
  return kExitOk;
}

int run_partition(unsigned n, long delta_value) {
  const auto partition = partition_from_delta(n, Int(delta_value));
  for (std::size_t i = 0; i < partition.size(); ++i)
    std::cout << (i ? "," : "") << partition[i];
  std::cout << "\n";
  const PartitionDelta check = delta(n, partition);
  if (check.delta != delta_value) {
    std::cout << "round-trip failed\n";
    return kExitVerdict;
  }
  return kExitOk;
}

int run_rangecount(const Options& opt, unsigned n, bool verify) {
  const Int predicted = count_range(n);
  std::cout << "predicted " << predicted.get_str() << " W-words in ["
            << Int(fib(n + 4) - 2).get_str() << ","
            << Int(fib(n + 5) - 2).get_str()
            << ")\n";
  if (!verify) return kExitOk;
  MonomialEngine engine = make_engine(load_system(opt.system), opt);
  GrowthLab lab(engine);
  const Int lo = fib(n + 4) - 2;
  const Int hi = fib(n + 5) - 2;
  const unsigned n_max = static_cast<unsigned>(hi.get_ui()) - 1;
  Int observed = 0;
  for (const auto& [len, words] : lab.boundary_generate(n_max))
    if (Int(len) >= lo && Int(len) < hi)
      observed += Int(static_cast<unsigned long>(words.size()));
  std::cout << "observed " << observed.get_str() << "\n";
  return observed == predicted ? kExitOk : kExitVerdict;
}

int run_freeness(const Options& opt, unsigned max_len, int level,
                 bool certify) {
  Timer timer;
  FreenessVerifier verifier(opt.threads, opt.seed);
  const FreenessReport report = certify
                                    ? verifier.certify(max_len)
                                    : verifier.independence_rank(max_len, level);
  std::cout << "L=" << report.max_len << " n=" << report.level
            << " words=" << report.word_count << " rank=" << report.rank
            << " verdict=" << report.verdict << "\n";
  json jreport = base_report("freeness", opt);
  jreport["L"] = report.max_len;
  jreport["n"] = report.level;
  jreport["word_count"] = report.word_count;
  jreport["rank"] = report.rank;
  jreport["verdict"] = report.verdict;
  jreport["max_coefficient_bits"] = report.max_coefficient_bits;
  emit_json(opt, jreport, timer.seconds());
  return report.rank == report.word_count ? kExitOk : kExitVerdict;
}

int run_transcendence(const Options& opt, unsigned degree, int level) {
  Timer timer;
  FreenessVerifier verifier(opt.threads, opt.seed);
  const FreenessReport report = verifier.transcendence_check(degree, level);
  std::cout << "degree=" << degree << " n=" << report.level
            << " rank=" << report.rank << "/" << report.word_count
            << " verdict=" << report.verdict << "\n";
  json jreport = base_report("transcendence", opt);
  jreport["degree"] = degree;
  jreport["n"] = report.level;
  jreport["rank"] = report.rank;
  jreport["verdict"] = report.verdict;
  emit_json(opt, jreport, timer.seconds());
  return report.verdict == "independent" ? kExitOk : kExitVerdict;
}

int run_parse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const RecursionSystem sys = parse_system(text.str());
  std::cout << serialize_system(sys);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for functionally recursive matrix rings"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--system", opt.system, "built-in name or definition file");
  app.add_option("--levels", opt.levels, "truncation level bound");
  app.add_option("--cap-states", opt.cap_states, "state closure cap");
  app.add_option("--cap-memos", opt.cap_memos, "memo table entry cap");
  app.add_option("--cap-bytes", opt.cap_bytes, "word storage cap in bytes");
  app.add_option("--seed", opt.seed, "seed for randomized sampling");
  app.add_option("--threads", opt.threads, "worker threads");
  app.add_option("--csv", opt.csv_path, "write CSV output here");
  app.add_option("--json", opt.json_path, "write a JSON report here");

  unsigned growth_n = 60;
  bool growth_fast = false;
  auto* growth = app.add_subcommand("growth", "growth table f, g, F");
  growth->add_option("--n", growth_n, "maximum length");
  growth->add_flag("--fast", growth_fast, "use the W-operator generation");

  unsigned relator_count = 12;
  auto* relators = app.add_subcommand("relators", "relator family u_i");
  relators->add_option("--count", relator_count, "how many relators");

  std::string lhs, rhs;
  auto* identity = app.add_subcommand("identity", "truncation identity check");
  identity->add_option("--lhs", lhs, "left expression")->required();
  identity->add_option("--rhs", rhs, "right expression")->required();

  std::string expr = "s";
  int level_n = 3;
  auto* level = app.add_subcommand("level", "print a level matrix");
  level->add_option("--expr", expr, "expression");
  level->add_option("--level", level_n, "level");

  std::string bf_expr = "s";
  int bf_depth = 1;
  auto* blockform = app.add_subcommand("blockform", "symbolic block form");
  blockform->add_option("--expr", bf_expr, "expression");
  blockform->add_option("--depth", bf_depth, "expansion depth");

  std::string states_gen = "s";
  auto* states = app.add_subcommand("states", "iterated block-entry states");
  states->add_option("--gen", states_gen, "generator letter");

  std::string rr_expr = "s + t";
  int rr_n = 6;
  auto* rankratio = app.add_subcommand("rankratio", "rank/dimension by level");
  rankratio->add_option("--expr", rr_expr, "expression");
  rankratio->add_option("--n", rr_n, "maximum level");

  std::string gp_expr = "t";
  int gp_n = 6;
  auto* growthprofile =
      app.add_subcommand("growthprofile", "rank growth against embedding");
  growthprofile->add_option("--expr", gp_expr, "expression");
  growthprofile->add_option("--n", gp_n, "maximum level");

  std::string zero_word;
  auto* zero = app.add_subcommand("zero", "exact zero-ness of a word");
  zero->add_option("--word", zero_word, "word over the generators")->required();

  std::string classify_word;
  auto* classify = app.add_subcommand("classify", "five-type classification");
  classify->add_option("--word", classify_word, "word")->required();

  std::string nd_expr;
  unsigned nd_cap = 16;
  auto* nildegree = app.add_subcommand("nildegree", "nilpotency degree");
  nildegree->add_option("--expr", nd_expr, "word or formal sum")->required();
  nildegree->add_option("--cap", nd_cap, "search cap");

  std::string ann_word;
  unsigned ann_level = 1;
  auto* annihilator =
      app.add_subcommand("annihilator", "annihilator series membership");
  annihilator->add_option("--word", ann_word, "word")->required();
  annihilator->add_option("--level", ann_level, "series level i");

  unsigned ps_cap = 6;
  auto* powersets = app.add_subcommand("powersets", "M(k) and S(w,k) checks");
  powersets->add_option("--cap-len", ps_cap, "maximum |w| for S(w,4)");

  unsigned boundary_n = 10;
  bool boundary_gen = false, boundary_check = false;
  auto* boundary = app.add_subcommand("boundary", "the boundary set W");
  boundary->add_option("--n", boundary_n, "length (bound)");
  boundary->add_flag("--generate", boundary_gen, "operator generation");
  boundary->add_flag("--check", boundary_check,
                     "compare generation against filtering");

  std::string avoid_factor;
  unsigned avoid_n = 40;
  auto* avoid = app.add_subcommand("avoid", "factor-avoidance counts");
  avoid->add_option("--factor", avoid_factor, "forbidden factor")->required();
  avoid->add_option("--n", avoid_n, "maximum length");

  unsigned gk_n = 500, gk_window = 401;
  auto* gk = app.add_subcommand("gk", "growth exponent estimate");
  gk->add_option("--n", gk_n, "maximum length");
  gk->add_option("--window", gk_window, "trailing fit window");

  long fib_i = 0;
  auto* fib_cmd = app.add_subcommand("fib", "extended Fibonacci number");
  fib_cmd->add_option("--i", fib_i, "index (any integer)")->required();

  unsigned delta_n = 0;
  std::string delta_partition;
  auto* delta_cmd = app.add_subcommand("delta", "Delta of a partition");
  delta_cmd->add_option("--n", delta_n, "n")->required();
  delta_cmd->add_option("--partition", delta_partition, "comma-separated")
      ->required();

  unsigned part_n = 0;
  long part_delta = 0;
  auto* partition_cmd =
      app.add_subcommand("partition", "partition from a Delta value");
  partition_cmd->add_option("--n", part_n, "n")->required();
  partition_cmd->add_option("--delta", part_delta, "Delta")->required();

  unsigned rc_n = 1;
  bool rc_verify = false;
  auto* rangecount = app.add_subcommand("rangecount", "2^{n+1} range count");
  rangecount->add_option("--n", rc_n, "n")->required();
  rangecount->add_flag("--verify", rc_verify, "compare with enumeration");

  unsigned free_len = 4;
  int free_level = 6;
  bool free_certify = false;
  auto* freeness = app.add_subcommand("freeness", "independence certification");
  freeness->add_option("--max-len", free_len, "longest word length");
  freeness->add_option("--level", free_level, "truncation level");
  freeness->add_flag("--certify", free_certify, "escalate the level");

  unsigned tr_degree = 8;
  int tr_level = 9;
  auto* transcendence =
      app.add_subcommand("transcendence", "powers of s independence");
  transcendence->add_option("--degree", tr_degree, "highest power");
  transcendence->add_option("--level", tr_level, "truncation level");

  std::string parse_path;
  auto* parse = app.add_subcommand("parse", "parse and normalize a definition");
  parse->add_option("--file", parse_path, "definition file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (growth->parsed()) return run_growth(opt, growth_n, growth_fast);
    if (relators->parsed()) return run_relators(opt, relator_count);
    if (identity->parsed()) return run_identity(opt, lhs, rhs);
    if (level->parsed()) return run_level(opt, expr, level_n);
    if (blockform->parsed()) return run_blockform(opt, bf_expr, bf_depth);
    if (states->parsed()) {
      if (states_gen.size() != 1)
        throw DomainError("--gen takes a single letter");
      return run_states(opt, states_gen[0]);
    }
    if (rankratio->parsed()) return run_rankratio(opt, rr_expr, rr_n);
    if (growthprofile->parsed())
      return run_growthprofile(opt, gp_expr, gp_n);
    if (zero->parsed()) return run_zero(opt, zero_word);
    if (classify->parsed()) return run_classify(opt, classify_word);
    if (nildegree->parsed()) return run_nildegree(opt, nd_expr, nd_cap);
    if (annihilator->parsed()) return run_annihilator(opt, ann_word, ann_level);
    if (powersets->parsed()) return run_powersets(opt, ps_cap);
    if (boundary->parsed())
      return run_boundary(opt, boundary_n, boundary_gen, boundary_check);
    if (avoid->parsed()) return run_avoid(opt, avoid_factor, avoid_n);
    if (gk->parsed()) return run_gk(opt, gk_n, gk_window);
    if (fib_cmd->parsed()) return run_fib(fib_i);
    if (delta_cmd->parsed()) return run_delta(delta_n, delta_partition);
    if (partition_cmd->parsed()) return run_partition(part_n, part_delta);
    if (rangecount->parsed()) return run_rangecount(opt, rc_n, rc_verify);
    if (freeness->parsed())
      return run_freeness(opt, free_len, free_level, free_certify);
    if (transcendence->parsed())
      return run_transcendence(opt, tr_degree, tr_level);
    if (parse->parsed()) return run_parse(parse_path);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
