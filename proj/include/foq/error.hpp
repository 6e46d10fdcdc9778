#ifndef FOQ_ERROR_HPP
#define FOQ_ERROR_HPP

#include <cassert>
#include <stdexcept>
#include <string>

namespace foq {

// Malformed input text (formula or structure file). Carries a 1-based
// position when one is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0, int col = 0)
      : std::runtime_error(line > 0 ? std::to_string(line) + ":" +
                                          std::to_string(col) + ": " + msg
                                    : msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Semantically invalid input: undeclared symbol, arity mismatch,
// non-permutation table, out-of-range element.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource bound was hit (elimination fan-out, oracle budget,
// normal-form size cap). The computation was refused, not truncated.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant; never caused by user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

#define FOQ_ASSERT(cond, msg)                                     \
  do {                                                            \
    if (!(cond)) throw ::foq::InternalError(std::string("assertion failed: ") + msg); \
  } while (0)

}  // namespace foq

#endif
