#ifndef FOQ_TERM_HPP
#define FOQ_TERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace foq {

// One application of a unary function symbol, forward (+1) or inverse (-1).
struct FuncStep {
  std::string func;
  int sign;  // +1 or -1
  bool operator==(const FuncStep&) const = default;
};

// A word of signed unary-function symbols applied to a base. word.front()
// is the outermost application: {f+, g-} over x denotes f(g^-1(x)).
struct BijTerm {
  enum class Base { Var, Const, Elem };

  Base base = Base::Var;
  std::string name;    // variable or constant symbol name
  int elem = -1;       // injected domain element (Base::Elem)
  std::vector<FuncStep> word;

  static BijTerm var(std::string v) {
    BijTerm t;
    t.base = Base::Var;
    t.name = std::move(v);
    return t;
  }
  static BijTerm constant(std::string c) {
    BijTerm t;
    t.base = Base::Const;
    t.name = std::move(c);
    return t;
  }
  static BijTerm element(int e) {
    BijTerm t;
    t.base = Base::Elem;
    t.elem = e;
    return t;
  }

  bool is_var(const std::string& v) const {
    return base == Base::Var && name == v;
  }
  bool bare() const { return word.empty(); }

  bool operator==(const BijTerm&) const = default;
};

inline constexpr size_t kMaxTermLength = 1u << 16;

// Cancels every adjacent f+ f- / f- f+ pair; idempotent and
// length-non-increasing.
BijTerm canonical_term(BijTerm t);

// Word of the reciprocal: reversed with flipped signs.
std::vector<FuncStep> inverse_word(const std::vector<FuncStep>& w);

// outer applied on top of inner, canonicalized.
BijTerm apply_word(const std::vector<FuncStep>& outer, BijTerm inner);

std::string print_term(const BijTerm& t);

}  // namespace foq

#endif
