#pragma once

// Text syntax shared by the CLI and the tests.
//
//   image-tuple form:  [2,3,4,1]
//   cycle form:        (1,3)(2,4)      (needs an explicit degree)
//   partial perm form: {1:3, 2:1, 4:2}
//
// Whitespace-insensitive; parse errors carry a 0-based character position.

#include <string>
#include <string_view>

#include "evenres/transf.hpp"

namespace evenres {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses either form; cycle form needs n, tuple form checks it when n > 0.
Transformation parse_transformation(std::string_view text, int n = 0);

PartialPerm parse_partial_perm(std::string_view text, int n);

CycleExpr parse_cycles(std::string_view text);

/// Cycle-form rendering of a permutation, e.g. "(1,3)(2,4)"; "()" for the
/// identity.
std::string format_cycles(const Transformation& p);

}  // namespace evenres
