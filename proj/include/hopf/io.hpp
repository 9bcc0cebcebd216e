#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/catalog.hpp"

namespace hopf {

/// Malformed text. line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// A declaration or map refers to a name that does not exist, or to one of
/// the wrong kind or shape.
class ReferenceError : public Error {
 public:
  ReferenceError(std::string name, const std::string& what);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A map between tensor products of named spaces. An empty factor list
/// stands for the ground field.
struct NamedMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  LinMap map;
};

/// Typed binding; every field value is the name of a space, a map, another
/// declaration, or a keyword.
struct Declaration {
  std::string type;
  std::map<std::string, std::string> fields;

  const std::string& at(const std::string& key) const;
  bool has(const std::string& key) const { return fields.count(key) != 0; }
};

struct StructureFile {
  Field field;
  std::map<std::string, BasedSpace> spaces;
  std::map<std::string, NamedMap> maps;
  std::map<std::string, Declaration> declarations;
  /// Fully qualified check names ("decl.check") that are known to fail.
  std::vector<ExpectedDiscrepancy> expected;
  std::map<std::string, std::string> meta;

  /// Tensor product of the named spaces; ground for an empty list.
  BasedSpace product(const std::vector<std::string>& factors) const;
  const NamedMap& map(const std::string& name) const;
  const Declaration& declaration(const std::string& name) const;
  /// Adds or replaces a space or map; the map's source and target must match
  /// the named factors.
  void put_space(const std::string& name, const BasedSpace& space);
  void put_map(const std::string& name, std::vector<std::string> source, std::vector<std::string> target,
               const LinMap& map);
  /// Checks that every declaration has exactly the keys of its type and that
  /// referenced names exist with the expected kind.
  void validate() const;
};

/// Declaration types and their required (and optional) keys.
struct DeclarationSchema {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};
const std::map<std::string, DeclarationSchema>& declaration_schemas();

/// Strict parse: unknown keys, duplicate keys, duplicate (target, source)
/// entries and malformed scalars are rejected.
StructureFile parse_structure(std::string_view text);
/// Canonical text: sorted names, entries in basis order, lowest-terms
/// scalars, zero entries dropped.
std::string serialize(const StructureFile& sf);

}  // namespace hopf
