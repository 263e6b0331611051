#pragma once

#include <string>

#include "qqg/greenring.hpp"

namespace qqg {

// Positioned syntax error for green-ring expressions.
struct ParseError : std::invalid_argument {
    size_t pos;
    ParseError(const std::string& what, size_t pos_)
        : std::invalid_argument(what + " at position " + std::to_string(pos_)), pos(pos_) {}
};

// Grammar: expr := term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := atom ('^' uint)?
//          atom := uint | ident | '(' expr ')' | '-' factor
// Identifiers: y, x1..x{n-1}, e1..e{n-1}, z+, z-, w{s},{eta}.
// The result is returned raw (unreduced); callers reduce.
GreenElem parse_green_expr(const GreenRing& ring, const std::string& input);

}  // namespace qqg
