#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace recring {

// Exact arithmetic everywhere; floating point is confined to the final
// logarithmic fit in growth_lab.
using Int = mpz_class;
using Rat = mpq_class;

// A word over generator letters. The empty word is the identity.
using Word = std::string;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource exhaustion (level/memory caps), not a mathematical failure.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownGeneratorError : DomainError {
  explicit UnknownGeneratorError(char letter)
      : DomainError(std::string("unknown generator '") + letter + "'"),
        letter(letter) {}
  char letter;
};

struct LevelCapExceeded : ResourceError {
  LevelCapExceeded(int level, std::size_t dim, std::size_t cap)
      : ResourceError("level " + std::to_string(level) + " needs dimension " +
                      std::to_string(dim) + " > cap " + std::to_string(cap)),
        level(level) {}
  int level;
};

}  // namespace recring
