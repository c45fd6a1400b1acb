#ifndef EMCS_ATOM_HPP
#define EMCS_ATOM_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace emcs {

// A predicate applied to constant symbols. The zero-argument case doubles
// as a propositional atom.
struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  auto operator<=>(const GroundAtom&) const = default;
};

// One argument position of a schematic atom. In the concrete syntax a
// variable is a single lowercase letter; everything else is a constant.
struct Term {
  enum class Kind { constant, variable };

  Kind kind = Kind::constant;
  std::string text;

  auto operator<=>(const Term&) const = default;

  static Term make_constant(std::string text) {
    return Term{Kind::constant, std::move(text)};
  }
  static Term make_variable(std::string text) {
    return Term{Kind::variable, std::move(text)};
  }
  bool is_variable() const { return kind == Kind::variable; }
};

// An atom whose arguments may still contain variables.
struct SchematicAtom {
  std::string predicate;
  std::vector<Term> args;

  auto operator<=>(const SchematicAtom&) const = default;

  bool is_ground() const;
  // Precondition: is_ground().
  GroundAtom to_ground() const;
  static SchematicAtom lift(const GroundAtom& atom);
};

// The finite constant signature a system is grounded against.
struct ConstantPool {
  std::set<std::string> constants;

  auto operator<=>(const ConstantPool&) const = default;

  bool empty() const { return constants.empty(); }
  std::size_t size() const { return constants.size(); }
  void add(std::string c) { constants.insert(std::move(c)); }
  void absorb(const GroundAtom& atom);
  void absorb(const SchematicAtom& atom);  // constants only
  void merge(const ConstantPool& other);
};

std::string to_string(const GroundAtom& atom);
std::string to_string(const Term& term);
std::string to_string(const SchematicAtom& atom);

// True when the symbol needs quoting to survive a round trip through the
// concrete syntax (non-identifier characters, or the single-lowercase-letter
// shape reserved for variables).
bool constant_needs_quoting(const std::string& symbol);

}  // namespace emcs

#endif
