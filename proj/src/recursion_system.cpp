#include "recring/recursion_system.hpp"

#include <algorithm>
#include <set>

namespace recring {

RecursionSystem::RecursionSystem(std::string name, int arity,
                                 std::vector<GeneratorDef> gens,
                                 BaseRing base_ring)
    : name_(std::move(name)),
      arity_(arity),
      gens_(std::move(gens)),
      base_ring_(base_ring) {
  if (arity_ < 2) throw DomainError("arity must be at least 2");
  if (gens_.empty()) throw DomainError("a system needs at least one generator");
  std::set<char> seen;
  for (const auto& g : gens_) {
    if (!seen.insert(g.name).second)
      throw DomainError(std::string("duplicate generator '") + g.name + "'");
    if (g.blocks.size() != static_cast<std::size_t>(arity_))
      throw DomainError(std::string("generator '") + g.name + "' needs " +
                        std::to_string(arity_) + " block rows");
    for (const auto& row : g.blocks)
      if (row.size() != static_cast<std::size_t>(arity_))
        throw DomainError(std::string("generator '") + g.name + "' needs " +
                          std::to_string(arity_) + " entries per block row");
  }
  for (const auto& g : gens_)
    for (const auto& row : g.blocks)
      for (const auto& p : row) validate_polynomial(p);
}

bool RecursionSystem::has_generator(char letter) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const GeneratorDef& g) { return g.name == letter; });
}

int RecursionSystem::index_of(char letter) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == letter) return static_cast<int>(i);
  throw UnknownGeneratorError(letter);
}

std::string RecursionSystem::letters() const {
  std::string out;
  for (const auto& g : gens_) out.push_back(g.name);
  return out;
}

void RecursionSystem::validate_polynomial(const NcPolynomial& p) const {
  for (const auto& [w, c] : p.terms())
    for (char letter : w)
      if (!has_generator(letter)) throw UnknownGeneratorError(letter);
}

bool RecursionSystem::operator==(const RecursionSystem& other) const {
  if (name_ != other.name_ || arity_ != other.arity_ ||
      base_ring_ != other.base_ring_ || gens_.size() != other.gens_.size())
    return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name != other.gens_[i].name) return false;
    if (gens_[i].phi != other.gens_[i].phi) return false;
    if (gens_[i].blocks != other.gens_[i].blocks) return false;
  }
  return true;
}

namespace {

NcPolynomial W(const char* w) { return NcPolynomial::word(w); }
NcPolynomial C(long c) { return NcPolynomial::constant(Rat(c)); }

RecursionSystem make_r1() {
  GeneratorDef s{'s', Rat(1), {{C(1), C(0)}, {C(0), W("s").scaled(2)}}};
  GeneratorDef t{'t', Rat(0), {{C(0), W("s").scaled(2)}, {C(0), W("t").scaled(2)}}};
  return RecursionSystem("R1", 2, {s, t}, BaseRing::Integers);
}

RecursionSystem make_r2() {
  GeneratorDef s{'s', Rat(0), {{C(0), C(0)}, {C(1), C(0)}}};
  GeneratorDef t{'t', Rat(0), {{C(0), W("t")}, {C(0), W("s")}}};
  return RecursionSystem("R2", 2, {s, t}, BaseRing::Integers);
}

RecursionSystem make_sigma() {
  GeneratorDef g{'g', Rat(1), {{C(0), C(1)}, {C(1), C(0)}}};
  return RecursionSystem("SIGMA", 2, {g}, BaseRing::Integers);
}

RecursionSystem make_br() {
  GeneratorDef s{'s', Rat(1), {{C(0), C(1)}, {C(1), C(0)}}};
  GeneratorDef t{'t', Rat(1), {{W("s"), C(0)}, {W("t"), C(0)}}};
  return RecursionSystem("BR", 2, {s, t}, BaseRing::Integers);
}

}  // namespace

RecursionSystem builtin_system(const std::string& name) {
  if (name == "R1") return make_r1();
  if (name == "R2") return make_r2();
  if (name == "SIGMA") return make_sigma();
  if (name == "BR") return make_br();
  throw DomainError("unknown built-in system '" + name + "'");
}

bool is_builtin_system(const std::string& name) {
  return name == "R1" || name == "R2" || name == "SIGMA" || name == "BR";
}

std::vector<std::string> builtin_system_names() {
  return {"R1", "R2", "SIGMA", "BR"};
}

}  // namespace recring
