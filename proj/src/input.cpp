#include "distinctseq/input.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace distinctseq::input {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) +
                   ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum Kind { Number, Colon, Newline, End } kind;
    std::size_t line;
    std::size_t column;
    std::string_view text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == '\n' || c == ';') {
                Token t{Token::Newline, line_, column_, text_.substr(pos_, 1)};
                advance();
                return t;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
        if (pos_ >= text_.size()) return {Token::End, line_, column_, {}};
        const std::size_t line = line_, column = column_, start = pos_;
        if (text_[pos_] == ':') {
            advance();
            return {Token::Colon, line, column, text_.substr(start, 1)};
        }
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == ';' || c == '#') {
                break;
            }
            advance();
        }
        return {Token::Number, line, column, text_.substr(start, pos_ - start)};
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::uint64_t to_integer(const Token& t) {
    std::uint64_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (!t.text.empty() && t.text.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ptr != last || (!t.text.empty() && t.text.front() == '-')) {
        throw ParseError(t.line, t.column, "expected a non-negative integer, got '" +
                                               std::string(t.text) + "'");
    }
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(t.line, t.column, "integer '" + std::string(t.text) + "' is too large");
    }
    return value;
}

std::size_t read_size(const Token& t) {
    const std::uint64_t n = to_integer(t);
    if (n == 0) throw ParseError(t.line, t.column, "n must be positive");
    if (n > std::numeric_limits<Value>::max()) {
        throw ParseError(t.line, t.column, "n is too large");
    }
    return static_cast<std::size_t>(n);
}

Value read_value(const Token& t, std::size_t n) {
    const std::uint64_t v = to_integer(t);
    if (v < 1 || v > n) {
        throw ParseError(t.line, t.column, "value " + std::string(t.text) +
                                               " is outside [1," + std::to_string(n) + "]");
    }
    return static_cast<Value>(v);
}

Token skip_newlines(Lexer& lex) {
    Token t = lex.next();
    while (t.kind == Token::Newline) t = lex.next();
    return t;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Token::Number: return "'" + std::string(t.text) + "'";
        case Token::Colon: return "':'";
        case Token::Newline: return "end of line";
        case Token::End: return "end of input";
    }
    return "?";
}

}  // namespace

Sequence parse_sequence(std::string_view text) {
    Lexer lex(text);
    const Token head = skip_newlines(lex);
    if (head.kind != Token::Number) {
        throw ParseError(head.line, head.column, "expected 'n:' header, got " + describe(head));
    }
    const std::size_t n = read_size(head);
    const Token colon = lex.next();
    if (colon.kind != Token::Colon) {
        throw ParseError(colon.line, colon.column, "expected ':' after n, got " + describe(colon));
    }
    std::vector<Value> values;
    values.reserve(n);
    for (Token t = skip_newlines(lex); t.kind != Token::End; t = skip_newlines(lex)) {
        if (t.kind == Token::Colon) throw ParseError(t.line, t.column, "unexpected ':'");
        if (values.size() == n) {
            throw ParseError(t.line, t.column,
                             "too many values: expected " + std::to_string(n));
        }
        values.push_back(read_value(t, n));
    }
    if (values.size() != n) {
        const Token end = lex.next();
        throw ParseError(end.line, end.column,
                         "expected " + std::to_string(n) + " values, got " +
                             std::to_string(values.size()));
    }
    return Sequence(n, std::move(values));
}

SquareMatrix parse_matrix(std::string_view text) {
    Lexer lex(text);
    const Token head = skip_newlines(lex);
    if (head.kind != Token::Number) {
        throw ParseError(head.line, head.column, "expected matrix order n, got " + describe(head));
    }
    const std::size_t n = read_size(head);
    Token t = lex.next();
    if (t.kind == Token::Colon) t = lex.next();
    if (t.kind != Token::Newline) {
        throw ParseError(t.line, t.column, "expected end of line after n, got " + describe(t));
    }
    std::vector<Value> cells;
    cells.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
        t = skip_newlines(lex);
        if (t.kind == Token::End) {
            throw ParseError(t.line, t.column, "expected " + std::to_string(n) +
                                                   " rows, got " + std::to_string(row));
        }
        std::size_t count = 0;
        for (; t.kind == Token::Number; t = lex.next(), ++count) {
            if (count == n) {
                throw ParseError(t.line, t.column, "row " + std::to_string(row + 1) +
                                                       " has more than " + std::to_string(n) +
                                                       " values");
            }
            cells.push_back(read_value(t, n));
        }
        if (t.kind == Token::Colon) throw ParseError(t.line, t.column, "unexpected ':'");
        if (count != n) {
            throw ParseError(t.line, t.column, "row " + std::to_string(row + 1) + " has " +
                                                   std::to_string(count) + " values, expected " +
                                                   std::to_string(n));
        }
    }
    t = skip_newlines(lex);
    if (t.kind != Token::End) {
        throw ParseError(t.line, t.column, "unexpected " + describe(t) + " after last row");
    }
    return SquareMatrix(n, std::move(cells));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace distinctseq::input
