#pragma once

// Text formats for `distinctseq run`.
//
//   sequence:  "n: v1 v2 ... vn"       (whitespace separated, may span lines)
//   matrix:    "n" on the first line, then n lines of n integers
//
// In both formats a ';' acts as a line break, so a matrix can be given
// inline as "2; 1 2; 2 1". Text after '#' up to the end of a line is ignored.

#include "distinctseq/algorithms.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace distinctseq::input {

/// Malformed text. what() reads "line L, column C: message".
class ParseError : public InvalidInput {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

Sequence parse_sequence(std::string_view text);
SquareMatrix parse_matrix(std::string_view text);

/// Reads a whole file; throws ParseError (line 0) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace distinctseq::input
