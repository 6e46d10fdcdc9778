#include "foq/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "foq/error.hpp"

namespace foq {

namespace {

struct Token {
  enum Kind {
    Ident,
    Int,
    LParen,
    RParen,
    Comma,
    Dot,
    Eq,
    Ne,
    Bang,
    Amp,
    Pipe,
    CardGe,  // '#>='
    Inv,     // '^-1'
    End
  };
  Kind kind;
  std::string text;
  std::uint64_t value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      Token t;
      t.line = line_;
      t.col = col_;
      if (eof()) {
        t.kind = Token::End;
        out.push_back(t);
        return out;
      }
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '_'))
          t.text += get();
        t.kind = Token::Ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Int;
        std::uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
          char d = get();
          std::uint64_t nv = v * 10 + static_cast<std::uint64_t>(d - '0');
          if (nv / 10 != v)
            throw ParseError("integer literal overflows 64 bits", t.line,
                             t.col);
          v = nv;
          t.text += d;
        }
        t.value = v;
      } else {
        switch (c) {
          case '(': t.kind = Token::LParen; get(); break;
          case ')': t.kind = Token::RParen; get(); break;
          case ',': t.kind = Token::Comma; get(); break;
          case '.': t.kind = Token::Dot; get(); break;
          case '=': t.kind = Token::Eq; get(); break;
          case '&': t.kind = Token::Amp; get(); break;
          case '|': t.kind = Token::Pipe; get(); break;
          case '!':
            get();
            if (!eof() && peek() == '=') {
              get();
              t.kind = Token::Ne;
            } else {
              t.kind = Token::Bang;
            }
            break;
          case '#':
            get();
            if (eof() || get() != '>' || eof() || get() != '=')
              throw ParseError("expected '#>='", t.line, t.col);
            t.kind = Token::CardGe;
            break;
          case '^':
            get();
            if (eof() || get() != '-' || eof() || get() != '1')
              throw ParseError("expected '^-1'", t.line, t.col);
            t.kind = Token::Inv;
            break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'",
                             t.line, t.col);
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// Usage-inferred symbol table for parse_formula_infer.
struct InferTable {
  std::map<std::string, std::pair<SymbolKind, int>> symbols;  // kind, arity
  std::map<std::string, bool> bare_use;

  void use_applied(const std::string& name, SymbolKind kind, int arity,
                   const Token& at) {
    if (bare_use.count(name))
      throw ParseError("symbol '" + name + "' used both bare and applied",
                       at.line, at.col);
    auto [it, fresh] = symbols.emplace(name, std::make_pair(kind, arity));
    if (!fresh && (it->second.first != kind || it->second.second != arity))
      throw ParseError("ambiguous use of symbol '" + name + "'", at.line,
                       at.col);
  }
  void use_bare(const std::string& name, const Token& at) {
    if (symbols.count(name))
      throw ParseError("symbol '" + name + "' used both bare and applied",
                       at.line, at.col);
    bare_use[name] = true;
  }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature* sig, InferTable* infer)
      : toks_(std::move(toks)), sig_(sig), infer_(infer) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    expect(Token::End, "end of input");
    return rename_bound(f);
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& la(size_t k) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  Token advance() { return toks_[pos_++]; }
  bool at(Token::Kind k) const { return cur().kind == k; }
  Token expect(Token::Kind k, const char* what) {
    if (!at(k))
      throw ParseError(std::string("expected ") + what, cur().line, cur().col);
    return advance();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }

  SymbolKind lookup(const std::string& name) const {
    if (sig_) return sig_->lookup(name);
    auto it = infer_->symbols.find(name);
    return it == infer_->symbols.end() ? SymbolKind::None : it->second.first;
  }

  bool at_quantifier() const {
    return at(Token::Ident) && (cur().text == "E" || cur().text == "A") &&
           la(1).kind == Token::Ident && la(2).kind == Token::Dot;
  }

  std::string binder_var() {
    Token t = expect(Token::Ident, "variable");
    if (lookup(t.text) != SymbolKind::None)
      throw ParseError("'" + t.text + "' is a declared symbol, not a variable",
                       t.line, t.col);
    if (infer_) infer_->use_bare(t.text, t);
    return t.text;
  }

  FormulaPtr formula() {
    if (at_quantifier()) {
      bool ex = cur().text == "E";
      advance();
      std::string v = binder_var();
      expect(Token::Dot, "'.'");
      FormulaPtr body = formula();
      return ex ? Formula::exists(v, std::move(body))
                : Formula::forall(v, std::move(body));
    }
    return disj();
  }

  FormulaPtr disj() {
    std::vector<FormulaPtr> kids{conj()};
    while (at(Token::Pipe)) {
      advance();
      kids.push_back(conj());
    }
    return kids.size() == 1 ? kids.front() : Formula::disj(std::move(kids));
  }

  FormulaPtr conj() {
    std::vector<FormulaPtr> kids{neg()};
    while (at(Token::Amp)) {
      advance();
      kids.push_back(neg());
    }
    return kids.size() == 1 ? kids.front() : Formula::conj(std::move(kids));
  }

  FormulaPtr neg() {
    if (at(Token::Bang)) {
      advance();
      return Formula::negate(neg());
    }
    if (at(Token::LParen)) {
      advance();
      FormulaPtr f = formula();
      expect(Token::RParen, "')'");
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    if (at(Token::Ident) && cur().text == "true" &&
        lookup("true") == SymbolKind::None) {
      advance();
      return make_true();
    }
    if (at(Token::Ident) && cur().text == "false" &&
        lookup("false") == SymbolKind::None) {
      advance();
      return make_false();
    }
    if (at(Token::CardGe)) {
      Token t0 = advance();
      if (sig_ && sig_->relational())
        throw ParseError("cardinality atoms require a unary-functional signature",
                         t0.line, t0.col);
      Token kt = expect(Token::Int, "positive integer");
      std::string v = binder_var();
      expect(Token::Dot, "'.'");
      FormulaPtr body = formula();
      try {
        return Formula::make(Atom::cardinality(kt.value, v, std::move(body)));
      } catch (const InputError& e) {
        throw ParseError(e.what(), t0.line, t0.col);
      }
    }
    if (at(Token::Ident)) {
      // Predicate / relation application, or the left term of an equality.
      Token head = cur();
      SymbolKind k = lookup(head.text);
      if (k == SymbolKind::Predicate && la(1).kind == Token::LParen) {
        advance();
        advance();
        BijTerm t = term();
        expect(Token::RParen, "')'");
        return Formula::make(Atom::monadic(head.text, canonical_term(t)));
      }
      if (k == SymbolKind::Relation && la(1).kind == Token::LParen) {
        advance();
        advance();
        std::vector<std::string> vars;
        vars.push_back(rel_arg());
        while (at(Token::Comma)) {
          advance();
          vars.push_back(rel_arg());
        }
        expect(Token::RParen, "')'");
        int arity = sig_ ? sig_->relation_arity(head.text)
                         : infer_->symbols[head.text].second;
        if (static_cast<int>(vars.size()) != arity)
          throw ParseError("relation '" + head.text + "' expects " +
                               std::to_string(arity) + " arguments",
                           head.line, head.col);
        return Formula::make(Atom::relational(head.text, std::move(vars)));
      }
      if (infer_ && k == SymbolKind::None && la(1).kind == Token::LParen)
        return infer_application();
    }
    return equality();
  }

  std::string rel_arg() {
    Token t = expect(Token::Ident, "variable");
    if (lookup(t.text) != SymbolKind::None)
      throw ParseError("relation argument '" + t.text + "' must be a variable",
                       t.line, t.col);
    if (infer_) infer_->use_bare(t.text, t);
    return t.text;
  }

  FormulaPtr equality() {
    BijTerm l = term();
    if (at(Token::Eq)) {
      advance();
      BijTerm r = term();
      return Formula::make(
          Atom::eq(canonical_term(std::move(l)), canonical_term(std::move(r))));
    }
    if (at(Token::Ne)) {
      advance();
      BijTerm r = term();
      return Formula::negate(Formula::make(
          Atom::eq(canonical_term(std::move(l)), canonical_term(std::move(r)))));
    }
    fail("expected '=' or '!='");
  }

  BijTerm term() {
    Token t = expect(Token::Ident, "term");
    SymbolKind k = lookup(t.text);
    if (k == SymbolKind::Function ||
        (infer_ && k == SymbolKind::None &&
         (la(0).kind == Token::LParen || la(0).kind == Token::Inv))) {
      if (infer_) infer_->use_applied(t.text, SymbolKind::Function, 1, t);
      int sign = 1;
      if (at(Token::Inv)) {
        advance();
        sign = -1;
      }
      expect(Token::LParen, "'('");
      BijTerm inner = term();
      expect(Token::RParen, "')'");
      inner.word.insert(inner.word.begin(), FuncStep{t.text, sign});
      if (inner.word.size() > kMaxTermLength)
        throw ParseError("term exceeds the length limit", t.line, t.col);
      return inner;
    }
    if (k == SymbolKind::Constant) return BijTerm::constant(t.text);
    if (k != SymbolKind::None)
      throw ParseError("'" + t.text + "' cannot appear in a term", t.line,
                       t.col);
    if (at(Token::LParen) || at(Token::Inv))
      throw ParseError("undeclared symbol '" + t.text + "'", t.line, t.col);
    if (infer_) infer_->use_bare(t.text, t);
    return BijTerm::var(t.text);
  }

  // Inference mode: an undeclared applied identifier at atom position. It is
  // a predicate, a relation, or the head of an equality's left term.
  FormulaPtr infer_application() {
    size_t save = pos_;
    Token head = advance();
    advance();  // '('
    // Try the relation shape first: two or more bare arguments.
    std::vector<std::string> args;
    bool rel_shape = true;
    for (;;) {
      if (!at(Token::Ident) || lookup(cur().text) != SymbolKind::None ||
          la(1).kind == Token::LParen || la(1).kind == Token::Inv) {
        rel_shape = false;
        break;
      }
      args.push_back(cur().text);
      advance();
      if (at(Token::Comma)) {
        advance();
        continue;
      }
      break;
    }
    if (rel_shape && at(Token::RParen) && args.size() >= 2 &&
        la(1).kind != Token::Eq && la(1).kind != Token::Ne) {
      advance();
      infer_->use_applied(head.text, SymbolKind::Relation,
                          static_cast<int>(args.size()), head);
      for (const auto& a : args) {
        Token t = head;
        t.text = a;
        infer_->use_bare(a, t);
      }
      return Formula::make(Atom::relational(head.text, std::move(args)));
    }
    // Otherwise parse it as a unary application over a term.
    pos_ = save;
    head = advance();
    advance();  // '('
    BijTerm inner = term();
    expect(Token::RParen, "')'");
    if (at(Token::Eq) || at(Token::Ne)) {
      // The head was a function after all; fold it into the term and let the
      // equality parser finish.
      infer_->use_applied(head.text, SymbolKind::Function, 1, head);
      inner.word.insert(inner.word.begin(), FuncStep{head.text, 1});
      bool ne = at(Token::Ne);
      advance();
      BijTerm r = term();
      FormulaPtr eq = Formula::make(Atom::eq(canonical_term(std::move(inner)),
                                             canonical_term(std::move(r))));
      return ne ? Formula::negate(std::move(eq)) : eq;
    }
    infer_->use_applied(head.text, SymbolKind::Predicate, 1, head);
    return Formula::make(Atom::monadic(head.text, canonical_term(inner)));
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const Signature* sig_;
  InferTable* infer_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  Parser p(Lexer(text).run(), &sig, nullptr);
  return p.parse();
}

InferredFormula parse_formula_infer(const std::string& text) {
  InferTable table;
  {
    // First pass discovers the vocabulary; its AST is discarded.
    Parser p(Lexer(text).run(), nullptr, &table);
    p.parse();
  }
  bool relational = false;
  for (const auto& [name, ka] : table.symbols)
    if (ka.first == SymbolKind::Relation) relational = true;
  Signature sig(relational ? Signature::Kind::Relational
                           : Signature::Kind::UnaryFunctional);
  for (const auto& [name, ka] : table.symbols) {
    switch (ka.first) {
      case SymbolKind::Function:
        if (relational)
          throw InputError("formula mixes relation and function symbols");
        sig.add_function(name);
        break;
      case SymbolKind::Predicate:
        if (relational)
          throw InputError("formula mixes relation and predicate symbols");
        sig.add_predicate(name);
        break;
      case SymbolKind::Relation:
        sig.add_relation(name, ka.second);
        break;
      default:
        break;
    }
  }
  InferredFormula out;
  out.sig = sig;
  out.formula = parse_formula(text, out.sig);
  return out;
}

}  // namespace foq
