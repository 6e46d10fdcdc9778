#ifndef FOQ_FORMULA_HPP
#define FOQ_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "foq/term.hpp"

namespace foq {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

inline constexpr std::uint64_t kMaxCardinalityBound = ~std::uint64_t{0};

// An atomic formula. Equalities are kept as one variant; a term whose base
// is a constant symbol covers the term-equals-constant form.
struct Atom {
  enum class Kind { True, False, Eq, Monadic, Cardinality, Relational };

  Kind kind = Kind::True;
  BijTerm lhs, rhs;                  // Eq
  std::string pred;                  // Monadic, applied to lhs
  std::uint64_t card_bound = 0;      // Cardinality: "at least card_bound"
  std::string card_var;              // Cardinality bound variable
  FormulaPtr card_body;              // one-variable body over card_var
  std::string rel;                   // Relational
  std::vector<std::string> rel_vars;

  static Atom truth(bool b) {
    Atom a;
    a.kind = b ? Kind::True : Kind::False;
    return a;
  }
  static Atom eq(BijTerm l, BijTerm r) {
    Atom a;
    a.kind = Kind::Eq;
    a.lhs = std::move(l);
    a.rhs = std::move(r);
    return a;
  }
  static Atom monadic(std::string p, BijTerm t) {
    Atom a;
    a.kind = Kind::Monadic;
    a.pred = std::move(p);
    a.lhs = std::move(t);
    return a;
  }
  static Atom cardinality(std::uint64_t k, std::string v, FormulaPtr body);
  static Atom relational(std::string r, std::vector<std::string> vars) {
    Atom a;
    a.kind = Kind::Relational;
    a.rel = std::move(r);
    a.rel_vars = std::move(vars);
    return a;
  }
};

// Immutable AST node. Values are safe to share between readers; every
// operation below is a pure function.
struct Formula {
  enum class Kind { Atomic, Not, And, Or, Exists, Forall };

  Kind kind = Kind::Atomic;
  Atom atom;                        // Atomic
  std::vector<FormulaPtr> kids;     // Not: 1, And/Or: >= 1, quantifier: 1
  std::string var;                  // quantified variable

  static FormulaPtr make(Atom a);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(std::vector<FormulaPtr> kids);
  static FormulaPtr disj(std::vector<FormulaPtr> kids);
  static FormulaPtr exists(std::string v, FormulaPtr body);
  static FormulaPtr forall(std::string v, FormulaPtr body);
};

FormulaPtr make_true();
FormulaPtr make_false();

// Folding constructors used by the rewriting passes: they absorb boolean
// constants and collapse trivial equalities (t = t becomes true). The
// parser does not use them, so parsed formulas stay as written.
FormulaPtr fold_not(FormulaPtr f);
FormulaPtr fold_and(std::vector<FormulaPtr> kids);
FormulaPtr fold_or(std::vector<FormulaPtr> kids);
FormulaPtr fold_eq(BijTerm l, BijTerm r);

bool equal(const Atom& a, const Atom& b);
bool equal(const Formula& a, const Formula& b);

bool is_quantifier_free(const Formula& f);
bool mentions_var(const Atom& a, const std::string& v);
bool mentions_var(const Formula& f, const std::string& v);

// Free variables in first-occurrence order.
std::vector<std::string> free_vars(const Formula& f);

// Number of AST nodes (formula nodes plus atoms), reported in diagnostics.
size_t ast_size(const Formula& f);

// Replaces every free occurrence of v by term t and re-canonicalizes.
// Bound variables never collide with v after parse-time renaming.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v,
                      const BijTerm& t);

// Renames all bound variables (quantifiers and cardinality binders) to
// v0, v1, ... skipping names that occur free. Raises on a variable that is
// both free and bound or on reused binders only insofar as it repairs
// them; the result always satisfies the binder invariants.
FormulaPtr rename_bound(const FormulaPtr& f);

// Rewrites a two-variable equality so that the right-hand side is a bare
// variable: f(x) = g(y) becomes g^-1(f(x)) = y. Atoms that are not
// two-distinct-variable equalities are returned unchanged.
Atom orient_equality(const Atom& a);

std::string print_atom(const Atom& a);
std::string print_formula(const Formula& f);
inline std::string print_formula(const FormulaPtr& f) {
  return print_formula(*f);
}

}  // namespace foq

#endif
