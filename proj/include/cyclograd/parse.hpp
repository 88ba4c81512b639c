#pragma once

#include "cyclograd/polynomial.hpp"
#include "cyclograd/vector_field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclograd {

// Syntax error carrying the byte offset into the input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what_arg)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + what_arg),
          position(pos) {}
};

// Grammar (ASCII, whitespace between tokens ignored):
//   poly  := term (('+'|'-') term)*          a leading '-' on the first term is accepted too
//   term  := coeff ('*' word)? | word
//   coeff := rat | rat 'i' | '(' rat (('+'|'-') rat 'i')? ')'
//   rat   := integer ('/' positive-integer)?
//   word  := '1' | gen ('.' gen)*
//   gen   := 'x' positive-integer
// With n = 0 the generator count is inferred as the largest index seen;
// otherwise indices above n are rejected.
Polynomial parse_polynomial(const std::string& text, unsigned n = 0);
Word parse_word(const std::string& text, unsigned n = 0);

// Components separated by ';'.  With n = 0 the component count fixes the
// generator count; otherwise both must match.
VectorField parse_vector_field(const std::string& text, unsigned n = 0);

// Canonical printers; parse(print(x)) == x.
std::string print_polynomial(const Polynomial& p);
std::string print_vector_field(const VectorField& v);
std::string print_word(const Word& w);
std::string print_tensor(const TensorPoly& t); // summands "u (x) v", print-only

} // namespace cyclograd
