#include "emcs/atom.hpp"

#include <cctype>

#include "emcs/errors.hpp"

namespace emcs {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void append_symbol(std::string& out, const std::string& symbol) {
  if (constant_needs_quoting(symbol)) {
    out += '\'';
    out += symbol;
    out += '\'';
  } else {
    out += symbol;
  }
}

}  // namespace

bool constant_needs_quoting(const std::string& symbol) {
  if (!is_identifier(symbol)) return true;
  // Single lowercase letters parse as variables.
  return symbol.size() == 1 && std::islower(static_cast<unsigned char>(symbol[0]));
}

std::string to_string(const GroundAtom& atom) {
  std::string out = atom.predicate;
  if (!atom.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (i > 0) out += ',';
      append_symbol(out, atom.args[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Term& term) {
  if (term.is_variable()) return term.text;
  std::string out;
  append_symbol(out, term.text);
  return out;
}

std::string to_string(const SchematicAtom& atom) {
  std::string out = atom.predicate;
  if (!atom.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(atom.args[i]);
    }
    out += ')';
  }
  return out;
}

bool SchematicAtom::is_ground() const {
  for (const Term& t : args) {
    if (t.is_variable()) return false;
  }
  return true;
}

GroundAtom SchematicAtom::to_ground() const {
  GroundAtom out;
  out.predicate = predicate;
  out.args.reserve(args.size());
  for (const Term& t : args) {
    if (t.is_variable())
      throw IntegrityError("to_ground on schematic atom " + to_string(*this));
    out.args.push_back(t.text);
  }
  return out;
}

SchematicAtom SchematicAtom::lift(const GroundAtom& atom) {
  SchematicAtom out;
  out.predicate = atom.predicate;
  out.args.reserve(atom.args.size());
  for (const std::string& a : atom.args) out.args.push_back(Term::make_constant(a));
  return out;
}

void ConstantPool::absorb(const GroundAtom& atom) {
  for (const std::string& a : atom.args) constants.insert(a);
}

void ConstantPool::absorb(const SchematicAtom& atom) {
  for (const Term& t : atom.args) {
    if (!t.is_variable()) constants.insert(t.text);
  }
}

void ConstantPool::merge(const ConstantPool& other) {
  constants.insert(other.constants.begin(), other.constants.end());
}

}  // namespace emcs
