#ifndef FOQ_PARSER_HPP
#define FOQ_PARSER_HPP

#include <string>

#include "foq/formula.hpp"
#include "foq/signature.hpp"

namespace foq {

// Parses a formula against a declared signature. The result has
// canonically renamed bound variables and canonicalized terms.
//
// Grammar (ASCII, whitespace-insensitive):
//   formula := 'E' var '.' formula | 'A' var '.' formula | disj
//   disj    := conj ('|' conj)*
//   conj    := neg ('&' neg)*
//   neg     := '!' neg | '(' formula ')' | atom
//   atom    := term '=' term | term '!=' term | pred '(' term ')'
//            | rel '(' var (',' var)* ')' | '#>=' int var '.' formula
//            | 'true' | 'false'
//   term    := var | const | func '(' term ')' | func '^-1' '(' term ')'
// Quantifiers bind to the end of the enclosing scope; '!' > '&' > '|'.
FormulaPtr parse_formula(const std::string& text, const Signature& sig);

// Parses a formula while inferring its signature from usage: nested
// applications are functions, atom-position unary applications are monadic
// predicates, atom-position applications over two or more bare variables
// are relations, and every bare identifier is a variable.
struct InferredFormula {
  FormulaPtr formula;
  Signature sig;
};
InferredFormula parse_formula_infer(const std::string& text);

}  // namespace foq

#endif
