#include "recring/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace recring {

namespace {

// Recursive-descent expression parser over a single line fragment.
class ExprParser {
 public:
  ExprParser(const std::string& src, int line, int col_base)
      : src_(src), line_(line), col_base_(col_base) {}

  NcPolynomial parse() {
    NcPolynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_;
  int col_base_;

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(line_, col_base_ + static_cast<int>(pos_) + 1, message);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(
                                     static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  NcPolynomial expr() {
    bool negate = false;
    skip_ws();
    if (eat('-'))
      negate = true;
    else
      eat('+');
    NcPolynomial p = term();
    if (negate) p = -p;
    while (true) {
      skip_ws();
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '(';
  }

  NcPolynomial term() {
    NcPolynomial p = factor();
    while (true) {
      skip_ws();
      if (eat('*'))
        p = p * factor();
      else if (starts_factor())
        p = p * factor();  // juxtaposition
      else
        break;
    }
    return p;
  }

  NcPolynomial factor() {
    NcPolynomial p = primary();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail("expected an integer exponent after '^'");
      unsigned long e = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        e = e * 10 + static_cast<unsigned long>(src_[pos_++] - '0');
      p = p.pow(static_cast<unsigned>(e));
    }
    return p;
  }

  NcPolynomial primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected an expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NcPolynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return NcPolynomial::word(Word(1, c));
    }
    fail("expected a number, generator letter, or '('");
  }

  NcPolynomial rational() {
    std::string digits;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    Int num(digits);
    if (eat('/')) {
      skip_ws();
      std::string den_digits;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        den_digits += src_[pos_++];
      if (den_digits.empty()) fail("expected a denominator after '/'");
      Int den(den_digits);
      if (den == 0) fail("zero denominator");
      Rat q(num, den);
      q.canonicalize();
      return NcPolynomial::constant(q);
    }
    return NcPolynomial::constant(Rat(num));
  }
};

struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    out.push_back({number, raw});
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Rat parse_rational(const std::string& text, int line) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw ParseError(line, 1, "malformed rational '" + text + "'");
  if (q.get_den() == 0)
    throw ParseError(line, 1, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// Splits "[[a,b],[c,d]]" into rows of entry strings, tracking bracket
// and parenthesis depth so entry expressions may contain parentheses.
std::vector<std::vector<std::string>> split_block(const std::string& text,
                                                  int line, int col_base) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  auto fail = [&](const std::string& message) -> void {
    throw ParseError(line, col_base + static_cast<int>(pos) + 1, message);
  };
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected a row '['");
    ++pos;
    std::vector<std::string> row;
    std::string entry;
    int depth = 0;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      if (depth == 0 && (c == ',' || c == ']')) {
        row.push_back(entry);
        entry.clear();
        ++pos;
        if (c == ']') break;
        continue;
      }
      entry += c;
      ++pos;
    }
    if (depth != 0) fail("unbalanced parentheses in block entry");
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  skip_ws();
  if (pos >= text.size() || text[pos] != ']') fail("expected closing ']'");
  ++pos;
  skip_ws();
  if (pos != text.size()) fail("unexpected trailing input after block");
  return rows;
}

}  // namespace

NcPolynomial parse_poly_expr(const std::string& text) {
  return ExprParser(text, 1, 0).parse();
}

RecursionSystem parse_system(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty system definition");

  const auto header = tokens_of(lines[0].text);
  if (header.size() != 4 || header[0] != "system" || header[2] != "arity")
    throw ParseError(lines[0].number, 1,
                     "expected 'system <name> arity <m>'");
  const std::string name = header[1];
  int arity = 0;
  try {
    arity = std::stoi(header[3]);
  } catch (const std::exception&) {
    arity = 0;
  }
  if (arity < 1)
    throw ParseError(lines[0].number, 1, "arity must be a positive integer");

  struct RawGen {
    int line;
    char letter;
    Rat phi;
    std::vector<std::vector<std::string>> entries;
  };
  std::vector<RawGen> raw;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = lines[i].number;
    const std::string& body = lines[i].text;
    auto toks = tokens_of(body);
    if (toks.empty() || toks[0] != "gen")
      throw ParseError(line, 1, "expected a 'gen' line");
    // gen <letter> : phi <rational> : <block>
    if (toks.size() < 7 || toks[2] != ":" || toks[3] != "phi" || toks[5] != ":")
      throw ParseError(line, 1,
                       "expected 'gen <letter> : phi <rational> : [[...]]'");
    if (toks[1].size() != 1 ||
        !std::isalpha(static_cast<unsigned char>(toks[1][0])))
      throw ParseError(line, 1, "generator name must be a single letter");
    RawGen g;
    g.line = line;
    g.letter = toks[1][0];
    g.phi = parse_rational(toks[4], line);
    const std::size_t block_pos = body.find(':', body.find(':') + 1) + 1;
    g.entries = split_block(body.substr(block_pos), line,
                            static_cast<int>(block_pos));
    raw.push_back(std::move(g));
  }
  if (raw.empty())
    throw ParseError(lines[0].number, 1, "system declares no generators");

  std::string letters;
  for (const RawGen& g : raw) {
    if (letters.find(g.letter) != std::string::npos)
      throw ParseError(g.line, 1,
                       std::string("duplicate generator '") + g.letter + "'");
    letters += g.letter;
  }

  std::vector<GeneratorDef> gens;
  for (const RawGen& g : raw) {
    if (static_cast<int>(g.entries.size()) != arity)
      throw ParseError(g.line, 1,
                       "block has " + std::to_string(g.entries.size()) +
                           " rows, expected " + std::to_string(arity));
    GeneratorDef def;
    def.name = g.letter;
    def.phi = g.phi;
    for (const auto& row : g.entries) {
      if (static_cast<int>(row.size()) != arity)
        throw ParseError(g.line, 1,
                         "block row has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(arity));
      std::vector<NcPolynomial> entries;
      for (const std::string& src : row) {
        NcPolynomial p = ExprParser(src, g.line, 0).parse();
        for (const auto& [w, c] : p.terms())
          for (char letter : w)
            if (letters.find(letter) == std::string::npos)
              throw ParseError(g.line, 1,
                               std::string("undeclared generator '") + letter +
                                   "'");
        entries.push_back(std::move(p));
      }
      def.blocks.push_back(std::move(entries));
    }
    gens.push_back(std::move(def));
  }

  try {
    return RecursionSystem(name, arity, std::move(gens));
  } catch (const DomainError& e) {
    throw ParseError(lines[0].number, 1, e.what());
  }
}

std::string serialize_system(const RecursionSystem& sys) {
  std::ostringstream out;
  out << "system " << sys.name() << " arity " << sys.arity() << "\n";
  for (const auto& gen : sys.generators()) {
    out << "gen " << gen.name << " : phi " << gen.phi.get_str() << " : [";
    for (int i = 0; i < sys.arity(); ++i) {
      if (i > 0) out << ",";
      out << "[";
      for (int j = 0; j < sys.arity(); ++j) {
        if (j > 0) out << ",";
        out << gen.blocks[i][j].to_string();
      }
      out << "]";
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace recring
