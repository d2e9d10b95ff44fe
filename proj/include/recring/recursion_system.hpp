#pragma once

#include <string>
#include <vector>

#include "recring/nc_polynomial.hpp"
#include "recring/types.hpp"

namespace recring {

enum class BaseRing { Integers, Rationals };

// One generator of a functionally recursive system: a root scalar plus an
// m x m block of polynomial entries in the system's own generators.
struct GeneratorDef {
  char name = '?';
  Rat phi;  // root scalar, the value at the empty tree word
  std::vector<std::vector<NcPolynomial>> blocks;  // m rows of m entries
};

class RecursionSystem {
 public:
  RecursionSystem(std::string name, int arity, std::vector<GeneratorDef> gens,
                  BaseRing base_ring = BaseRing::Integers);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  BaseRing base_ring() const { return base_ring_; }
  const std::vector<GeneratorDef>& generators() const { return gens_; }
  const GeneratorDef& generator(char letter) const {
    return gens_[index_of(letter)];
  }

  bool has_generator(char letter) const;
  // Throws UnknownGeneratorError.
  int index_of(char letter) const;

  std::string letters() const;
  // Throws UnknownGeneratorError if the polynomial mentions an undeclared
  // generator.
  void validate_polynomial(const NcPolynomial& p) const;

  bool operator==(const RecursionSystem& other) const;

 private:
  std::string name_;
  int arity_;
  std::vector<GeneratorDef> gens_;
  BaseRing base_ring_;
};

// Built-in systems addressable by name: R1, R2, SIGMA, BR.
RecursionSystem builtin_system(const std::string& name);
bool is_builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();

}  // namespace recring
