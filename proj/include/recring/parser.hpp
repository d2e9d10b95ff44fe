#pragma once

#include <string>

#include "recring/nc_polynomial.hpp"
#include "recring/recursion_system.hpp"
#include "recring/types.hpp"

namespace recring {

struct ParseError : DomainError {
  ParseError(int line, int col, const std::string& message)
      : DomainError("line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + message),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Line-oriented system definition:
//   system <name> arity <m>
//   gen <letter> : phi <rational> : [[<poly>,...],...]
// with '#' comments and free whitespace within lines.
RecursionSystem parse_system(const std::string& text);

// Normalized source text; parse(serialize(sys)) == sys.
std::string serialize_system(const RecursionSystem& sys);

// Expression grammar over generator letters: rationals, letters,
// '+', '-', '*', '^', parentheses, and juxtaposition as product,
// e.g. "(s t)^6" or "1 - 2*s*t".
NcPolynomial parse_poly_expr(const std::string& text);

}  // namespace recring
