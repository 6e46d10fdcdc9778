#include "foq/formula.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "foq/error.hpp"

namespace foq {

static void check_cardinality_body(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw InputError("cardinality body must be quantifier-free");
    case Formula::Kind::Atomic:
      if (f.atom.kind == Atom::Kind::Cardinality)
        throw InputError("cardinality body must not nest cardinality atoms");
      if (f.atom.kind == Atom::Kind::Relational)
        throw InputError("cardinality body must not contain relational atoms");
      return;
    default:
      for (const auto& k : f.kids) check_cardinality_body(*k);
  }
}

Atom Atom::cardinality(std::uint64_t k, std::string v, FormulaPtr body) {
  if (k == 0) throw InputError("cardinality bound must be positive");
  Atom a;
  a.kind = Kind::Cardinality;
  a.card_bound = k;
  a.card_var = std::move(v);
  a.card_body = std::move(body);
  check_cardinality_body(*a.card_body);
  auto fv = free_vars(*a.card_body);
  for (const auto& v2 : fv)
    if (v2 != a.card_var)
      throw InputError("cardinality body mentions a second variable '" + v2 +
                       "'");
  return a;
}

FormulaPtr Formula::make(Atom a) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atomic;
  f->atom = std::move(a);
  return f;
}

FormulaPtr Formula::negate(FormulaPtr f) {
  auto r = std::make_shared<Formula>();
  r->kind = Kind::Not;
  r->kids.push_back(std::move(f));
  return r;
}

static FormulaPtr nary(Formula::Kind k, std::vector<FormulaPtr> kids) {
  FOQ_ASSERT(!kids.empty(), "empty connective");
  if (kids.size() == 1) return kids.front();
  auto r = std::make_shared<Formula>();
  r->kind = k;
  // Flatten nested connectives of the same kind.
  for (auto& c : kids) {
    if (c->kind == k)
      r->kids.insert(r->kids.end(), c->kids.begin(), c->kids.end());
    else
      r->kids.push_back(std::move(c));
  }
  return r;
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> kids) {
  return nary(Kind::And, std::move(kids));
}
FormulaPtr Formula::disj(std::vector<FormulaPtr> kids) {
  return nary(Kind::Or, std::move(kids));
}

FormulaPtr Formula::exists(std::string v, FormulaPtr body) {
  auto r = std::make_shared<Formula>();
  r->kind = Kind::Exists;
  r->var = std::move(v);
  r->kids.push_back(std::move(body));
  return r;
}

FormulaPtr Formula::forall(std::string v, FormulaPtr body) {
  auto r = std::make_shared<Formula>();
  r->kind = Kind::Forall;
  r->var = std::move(v);
  r->kids.push_back(std::move(body));
  return r;
}

FormulaPtr make_true() { return Formula::make(Atom::truth(true)); }
FormulaPtr make_false() { return Formula::make(Atom::truth(false)); }

static bool is_const(const Formula& f, bool value) {
  return f.kind == Formula::Kind::Atomic &&
         f.atom.kind == (value ? Atom::Kind::True : Atom::Kind::False);
}

FormulaPtr fold_not(FormulaPtr f) {
  if (is_const(*f, true)) return make_false();
  if (is_const(*f, false)) return make_true();
  if (f->kind == Formula::Kind::Not) return f->kids.front();
  return Formula::negate(std::move(f));
}

FormulaPtr fold_and(std::vector<FormulaPtr> kids) {
  std::vector<FormulaPtr> keep;
  for (auto& k : kids) {
    if (is_const(*k, false)) return make_false();
    if (is_const(*k, true)) continue;
    keep.push_back(std::move(k));
  }
  if (keep.empty()) return make_true();
  return Formula::conj(std::move(keep));
}

FormulaPtr fold_or(std::vector<FormulaPtr> kids) {
  std::vector<FormulaPtr> keep;
  for (auto& k : kids) {
    if (is_const(*k, true)) return make_true();
    if (is_const(*k, false)) continue;
    keep.push_back(std::move(k));
  }
  if (keep.empty()) return make_false();
  return Formula::disj(std::move(keep));
}

FormulaPtr fold_eq(BijTerm l, BijTerm r) {
  l = canonical_term(std::move(l));
  r = canonical_term(std::move(r));
  if (l == r) return make_true();
  return Formula::make(Atom::eq(std::move(l), std::move(r)));
}

bool equal(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Atom::Kind::True:
    case Atom::Kind::False:
      return true;
    case Atom::Kind::Eq:
      return a.lhs == b.lhs && a.rhs == b.rhs;
    case Atom::Kind::Monadic:
      return a.pred == b.pred && a.lhs == b.lhs;
    case Atom::Kind::Cardinality:
      return a.card_bound == b.card_bound && a.card_var == b.card_var &&
             equal(*a.card_body, *b.card_body);
    case Atom::Kind::Relational:
      return a.rel == b.rel && a.rel_vars == b.rel_vars;
  }
  return false;
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Formula::Kind::Atomic) return equal(a.atom, b.atom);
  if (a.var != b.var) return false;
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!equal(*a.kids[i], *b.kids[i])) return false;
  return true;
}

bool is_quantifier_free(const Formula& f) {
  if (f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall)
    return false;
  for (const auto& k : f.kids)
    if (!is_quantifier_free(*k)) return false;
  return true;
}

bool mentions_var(const Atom& a, const std::string& v) {
  switch (a.kind) {
    case Atom::Kind::Eq:
      return a.lhs.is_var(v) || a.rhs.is_var(v);
    case Atom::Kind::Monadic:
      return a.lhs.is_var(v);
    case Atom::Kind::Relational:
      return std::find(a.rel_vars.begin(), a.rel_vars.end(), v) !=
             a.rel_vars.end();
    case Atom::Kind::Cardinality:
      // Bodies are one-variable over the binder; a cardinality atom is a
      // closed, structure-level fact.
      return false;
    default:
      return false;
  }
}

bool mentions_var(const Formula& f, const std::string& v) {
  if (f.kind == Formula::Kind::Atomic) return mentions_var(f.atom, v);
  if ((f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall) &&
      f.var == v)
    return false;  // shadowed; cannot happen after renaming
  for (const auto& k : f.kids)
    if (mentions_var(*k, v)) return true;
  return false;
}

static void collect_free(const Formula& f, std::set<std::string>& bound,
                         std::vector<std::string>& out,
                         std::set<std::string>& seen) {
  auto add = [&](const std::string& v) {
    if (bound.count(v) || seen.count(v)) return;
    seen.insert(v);
    out.push_back(v);
  };
  auto add_term = [&](const BijTerm& t) {
    if (t.base == BijTerm::Base::Var) add(t.name);
  };
  switch (f.kind) {
    case Formula::Kind::Atomic: {
      const Atom& a = f.atom;
      switch (a.kind) {
        case Atom::Kind::Eq:
          add_term(a.lhs);
          add_term(a.rhs);
          break;
        case Atom::Kind::Monadic:
          add_term(a.lhs);
          break;
        case Atom::Kind::Relational:
          for (const auto& v : a.rel_vars) add(v);
          break;
        case Atom::Kind::Cardinality: {
          bool was_bound = bound.count(a.card_var) > 0;
          bound.insert(a.card_var);
          collect_free(*a.card_body, bound, out, seen);
          if (!was_bound) bound.erase(a.card_var);
          break;
        }
        default:
          break;
      }
      break;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool was_bound = bound.count(f.var) > 0;
      bound.insert(f.var);
      collect_free(*f.kids.front(), bound, out, seen);
      if (!was_bound) bound.erase(f.var);
      break;
    }
    default:
      for (const auto& k : f.kids) collect_free(*k, bound, out, seen);
  }
}

std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, seen;
  std::vector<std::string> out;
  collect_free(f, bound, out, seen);
  return out;
}

size_t ast_size(const Formula& f) {
  size_t n = 1;
  if (f.kind == Formula::Kind::Atomic &&
      f.atom.kind == Atom::Kind::Cardinality)
    n += ast_size(*f.atom.card_body);
  for (const auto& k : f.kids) n += ast_size(*k);
  return n;
}

static BijTerm subst_term(const BijTerm& u, const std::string& v,
                          const BijTerm& t) {
  if (!u.is_var(v)) return u;
  return apply_word(u.word, t);
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& v,
                      const BijTerm& t) {
  switch (f->kind) {
    case Formula::Kind::Atomic: {
      const Atom& a = f->atom;
      switch (a.kind) {
        case Atom::Kind::Eq:
          if (!mentions_var(a, v)) return f;
          return Formula::make(
              Atom::eq(subst_term(a.lhs, v, t), subst_term(a.rhs, v, t)));
        case Atom::Kind::Monadic:
          if (!mentions_var(a, v)) return f;
          return Formula::make(Atom::monadic(a.pred, subst_term(a.lhs, v, t)));
        case Atom::Kind::Relational: {
          if (!mentions_var(a, v)) return f;
          if (!t.bare() || t.base == BijTerm::Base::Const)
            throw InternalError(
                "cannot substitute a composite term into a relational atom");
          // Only a bare variable can stand in a relation argument list.
          if (t.base == BijTerm::Base::Elem)
            throw InternalError(
                "cannot substitute a domain element into a relational atom");
          std::vector<std::string> vars = a.rel_vars;
          for (auto& x : vars)
            if (x == v) x = t.name;
          return Formula::make(Atom::relational(a.rel, std::move(vars)));
        }
        default:
          return f;
      }
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      if (f->var == v)
        throw InternalError("substitution hit a binder for '" + v + "'");
      if (t.base == BijTerm::Base::Var && t.name == f->var)
        throw InternalError("substitution would capture '" + t.name + "'");
      [[fallthrough]];
    default: {
      bool changed = false;
      std::vector<FormulaPtr> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) {
        kids.push_back(substitute(k, v, t));
        changed = changed || kids.back() != k;
      }
      if (!changed) return f;
      auto r = std::make_shared<Formula>(*f);
      r->kids = std::move(kids);
      return r;
    }
  }
}

namespace {

struct Renamer {
  std::set<std::string> reserved;  // free names, never reused
  int next = 0;

  std::string fresh() {
    for (;;) {
      std::string name = "v" + std::to_string(next++);
      if (!reserved.count(name)) return name;
    }
  }

  FormulaPtr walk(const FormulaPtr& f,
                  const std::map<std::string, std::string>& env) {
    switch (f->kind) {
      case Formula::Kind::Atomic: {
        const Atom& a = f->atom;
        if (a.kind == Atom::Kind::Cardinality) {
          auto env2 = env;
          std::string nv = fresh();
          env2[a.card_var] = nv;
          return Formula::make(Atom::cardinality(
              a.card_bound, nv, walk(a.card_body, env2)));
        }
        auto rename_term = [&](BijTerm t) {
          if (t.base == BijTerm::Base::Var) {
            auto it = env.find(t.name);
            if (it != env.end()) t.name = it->second;
          }
          return t;
        };
        switch (a.kind) {
          case Atom::Kind::Eq:
            return Formula::make(
                Atom::eq(rename_term(a.lhs), rename_term(a.rhs)));
          case Atom::Kind::Monadic:
            return Formula::make(Atom::monadic(a.pred, rename_term(a.lhs)));
          case Atom::Kind::Relational: {
            std::vector<std::string> vars = a.rel_vars;
            for (auto& v : vars) {
              auto it = env.find(v);
              if (it != env.end()) v = it->second;
            }
            return Formula::make(Atom::relational(a.rel, std::move(vars)));
          }
          default:
            return f;
        }
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        auto env2 = env;
        std::string nv = fresh();
        env2[f->var] = nv;
        FormulaPtr body = walk(f->kids.front(), env2);
        return f->kind == Formula::Kind::Exists
                   ? Formula::exists(nv, std::move(body))
                   : Formula::forall(nv, std::move(body));
      }
      default: {
        std::vector<FormulaPtr> kids;
        kids.reserve(f->kids.size());
        for (const auto& k : f->kids) kids.push_back(walk(k, env));
        auto r = std::make_shared<Formula>(*f);
        r->kids = std::move(kids);
        return r;
      }
    }
  }
};

}  // namespace

FormulaPtr rename_bound(const FormulaPtr& f) {
  Renamer rn;
  for (const auto& v : free_vars(*f)) rn.reserved.insert(v);
  return rn.walk(f, {});
}

Atom orient_equality(const Atom& a) {
  if (a.kind != Atom::Kind::Eq) return a;
  if (a.lhs.base != BijTerm::Base::Var || a.rhs.base != BijTerm::Base::Var)
    return a;
  if (a.lhs.name == a.rhs.name) return a;  // one-variable atom
  if (a.rhs.bare()) return a;              // already oriented
  BijTerm lhs = apply_word(inverse_word(a.rhs.word),
                           canonical_term(a.lhs));
  return Atom::eq(std::move(lhs), BijTerm::var(a.rhs.name));
}

namespace {

// Precedence: atoms/negation > and > or > quantifier body.
enum Prec { kOr = 0, kAnd = 1, kNeg = 2 };

std::string print_rec(const Formula& f, int parent);

std::string print_kids(const Formula& f, const char* sep, int prec) {
  std::string s;
  for (size_t i = 0; i < f.kids.size(); ++i) {
    if (i) s += sep;
    s += print_rec(*f.kids[i], prec);
  }
  return s;
}

std::string print_rec(const Formula& f, int parent) {
  switch (f.kind) {
    case Formula::Kind::Atomic:
      // A cardinality body runs to the end of its scope, so the atom needs
      // parentheses in any tighter context.
      if (f.atom.kind == Atom::Kind::Cardinality && parent > kOr)
        return "(" + print_atom(f.atom) + ")";
      return print_atom(f.atom);
    case Formula::Kind::Not: {
      const Formula& c = *f.kids.front();
      if (c.kind == Formula::Kind::Atomic && c.atom.kind == Atom::Kind::Eq)
        return print_term(c.atom.lhs) + " != " + print_term(c.atom.rhs);
      // Children above atom precedence parenthesize themselves at kNeg.
      return "!" + print_rec(c, kNeg);
    }
    case Formula::Kind::And: {
      std::string s = print_kids(f, " & ", kAnd);
      return parent > kAnd ? "(" + s + ")" : s;
    }
    case Formula::Kind::Or: {
      std::string s = print_kids(f, " | ", kOr);
      return parent > kOr ? "(" + s + ")" : s;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::string s = (f.kind == Formula::Kind::Exists ? "E " : "A ") + f.var +
                      ". " + print_rec(*f.kids.front(), kOr);
      // A quantifier extends to the end of its scope; parenthesize unless
      // it is already the tail of the enclosing formula.
      return parent > kOr ? "(" + s + ")" : s;
    }
  }
  return "";
}

}  // namespace

std::string print_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::True:
      return "true";
    case Atom::Kind::False:
      return "false";
    case Atom::Kind::Eq:
      return print_term(a.lhs) + " = " + print_term(a.rhs);
    case Atom::Kind::Monadic:
      return a.pred + "(" + print_term(a.lhs) + ")";
    case Atom::Kind::Cardinality:
      return "#>= " + std::to_string(a.card_bound) + " " + a.card_var + ". " +
             print_rec(*a.card_body, kOr);
    case Atom::Kind::Relational: {
      std::string s = a.rel + "(";
      for (size_t i = 0; i < a.rel_vars.size(); ++i) {
        if (i) s += ", ";
        s += a.rel_vars[i];
      }
      return s + ")";
    }
  }
  return "";
}

std::string print_formula(const Formula& f) { return print_rec(f, kOr); }

}  // namespace foq
