#ifndef FOQ_SIGNATURE_HPP
#define FOQ_SIGNATURE_HPP

#include <map>
#include <string>
#include <vector>

#include "foq/error.hpp"

namespace foq {

enum class SymbolKind { Function, Predicate, Constant, Relation, None };

// A finite vocabulary. Either unary-functional (constants, monadic
// predicates, unary function symbols interpreted as permutations) or
// relational (relation symbols with arities >= 1). Symbol names are unique
// across all categories.
class Signature {
 public:
  enum class Kind { UnaryFunctional, Relational };

  explicit Signature(Kind kind = Kind::UnaryFunctional) : kind_(kind) {}

  Kind kind() const { return kind_; }
  bool relational() const { return kind_ == Kind::Relational; }

  int add_function(const std::string& name) {
    require_unary("function", name);
    claim(name, SymbolKind::Function, static_cast<int>(functions_.size()));
    functions_.push_back(name);
    return static_cast<int>(functions_.size()) - 1;
  }
  int add_predicate(const std::string& name) {
    require_unary("predicate", name);
    claim(name, SymbolKind::Predicate, static_cast<int>(predicates_.size()));
    predicates_.push_back(name);
    return static_cast<int>(predicates_.size()) - 1;
  }
  int add_constant(const std::string& name) {
    require_unary("constant", name);
    claim(name, SymbolKind::Constant, static_cast<int>(constants_.size()));
    constants_.push_back(name);
    return static_cast<int>(constants_.size()) - 1;
  }
  int add_relation(const std::string& name, int arity) {
    if (kind_ != Kind::Relational)
      throw InputError("relation symbol '" + name +
                       "' requires a relational signature");
    if (arity < 1)
      throw InputError("relation '" + name + "' must have arity >= 1");
    claim(name, SymbolKind::Relation, static_cast<int>(relations_.size()));
    relations_.push_back({name, arity});
    return static_cast<int>(relations_.size()) - 1;
  }

  SymbolKind lookup(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? SymbolKind::None : it->second.first;
  }
  // Index of the symbol within its own category; -1 when absent.
  int id(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second.second;
  }

  const std::vector<std::string>& functions() const { return functions_; }
  const std::vector<std::string>& predicates() const { return predicates_; }
  const std::vector<std::string>& constants() const { return constants_; }

  struct Relation {
    std::string name;
    int arity;
  };
  const std::vector<Relation>& relations() const { return relations_; }
  int relation_arity(const std::string& name) const {
    int i = id(name);
    if (i < 0 || lookup(name) != SymbolKind::Relation)
      throw InputError("unknown relation '" + name + "'");
    return relations_[static_cast<size_t>(i)].arity;
  }

 private:
  void require_unary(const char* what, const std::string& name) {
    if (kind_ != Kind::UnaryFunctional)
      throw InputError(std::string(what) + " symbol '" + name +
                       "' requires a unary-functional signature");
  }
  void claim(const std::string& name, SymbolKind kind, int id) {
    if (name.empty()) throw InputError("empty symbol name");
    if (!index_.emplace(name, std::make_pair(kind, id)).second)
      throw InputError("duplicate symbol name '" + name + "'");
  }

  Kind kind_;
  std::vector<std::string> functions_;
  std::vector<std::string> predicates_;
  std::vector<std::string> constants_;
  std::vector<Relation> relations_;
  std::map<std::string, std::pair<SymbolKind, int>> index_;
};

}  // namespace foq

#endif
