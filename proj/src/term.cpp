#include "foq/term.hpp"

#include "foq/error.hpp"

namespace foq {

BijTerm canonical_term(BijTerm t) {
  if (t.word.size() > kMaxTermLength)
    throw ResourceError("term longer than " + std::to_string(kMaxTermLength));
  std::vector<FuncStep> out;
  out.reserve(t.word.size());
  // Scan innermost-first; a stack reduction cancels adjacent inverse pairs.
  for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
    if (!out.empty() && out.back().func == it->func &&
        out.back().sign == -it->sign) {
      out.pop_back();
    } else {
      out.push_back(*it);
    }
  }
  t.word.assign(out.rbegin(), out.rend());
  return t;
}

std::vector<FuncStep> inverse_word(const std::vector<FuncStep>& w) {
  std::vector<FuncStep> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back({it->func, -it->sign});
  return r;
}

BijTerm apply_word(const std::vector<FuncStep>& outer, BijTerm inner) {
  std::vector<FuncStep> w;
  w.reserve(outer.size() + inner.word.size());
  w.insert(w.end(), outer.begin(), outer.end());
  w.insert(w.end(), inner.word.begin(), inner.word.end());
  inner.word = std::move(w);
  return canonical_term(std::move(inner));
}

std::string print_term(const BijTerm& t) {
  std::string s;
  for (const FuncStep& f : t.word) {
    s += f.func;
    if (f.sign < 0) s += "^-1";
    s += "(";
  }
  switch (t.base) {
    case BijTerm::Base::Var:
    case BijTerm::Base::Const:
      s += t.name;
      break;
    case BijTerm::Base::Elem:
      s += "$" + std::to_string(t.elem);
      break;
  }
  s.append(t.word.size(), ')');
  return s;
}

}  // namespace foq
