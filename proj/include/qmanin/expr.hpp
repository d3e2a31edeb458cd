#pragma once
#include <stdexcept>
#include <string>

#include "qmanin/ncpoly.hpp"

namespace qm {

struct ExprError : std::invalid_argument {
  ExprError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

// Grammar: sums of products with explicit '*'; '^' binds tighter than '*' and applies
// to scalars and single generators only; '/' divides by a scalar; unary minus.
// The identifier q denotes the parameter unless the alphabet defines it.
NCPoly parse_expr(const std::string& text, const Alphabet* alphabet);
RatQ parse_scalar(const std::string& text);

}  // namespace qm
