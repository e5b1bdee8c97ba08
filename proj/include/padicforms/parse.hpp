#pragma once

#include "padicforms/h10.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace padicforms {

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error("ParseError", "offset " + std::to_string(offset) + ": expected " + expected), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/* poly     := sign? term (('+'|'-') term)*
 * term     := rational ('*'? 't' ('^' uint)?)? | 't' ('^' uint)?
 * rational := int ('/' uint)?
 * Blanks are allowed between tokens. */
QPoly parse_poly(std::string_view text);

// a polynomial that must be constant
Rational parse_constant(std::string_view text);

/* ratfunc := poly | group '/' group,  group := '(' poly ')' | term
 * e.g. "1/t", "(t + 1)/(t^2 - 3)", "3*t^2". */
RatFunc parse_ratfunc(std::string_view text);

}  // namespace padicforms
