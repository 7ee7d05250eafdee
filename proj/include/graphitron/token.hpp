#ifndef GRAPHITRON_TOKEN_HPP
#define GRAPHITRON_TOKEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphitron/diagnostics.hpp"

namespace graphitron {

enum class TokenKind {
    Keyword,
    Identifier,
    IntegerLiteral,
    FloatLiteral,
    StringLiteral,
    Operator,
    Punctuation,
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;            // exact source slice
    std::string leading_trivia;  // whitespace/comments between previous token and this one
    SourceSpan span;

    bool is(TokenKind k, const std::string& t) const { return kind == k && text == t; }
};

struct LexResult {
    std::vector<Token> tokens;  // ends with an EndOfFile token on success
    std::optional<Diagnostic> error;

    bool ok() const { return !error.has_value(); }
};

// Scans Graphitron source into a token stream. On a lexical error the result
// carries the first diagnostic and tokens up to the error point.
LexResult tokenize(const std::string& source);

// Concatenation of leading trivia + token texts; equals the input source when
// lexing succeeded.
std::string reconstruct_source(const std::vector<Token>& tokens);

bool is_keyword(const std::string& word);

} // namespace graphitron

#endif
