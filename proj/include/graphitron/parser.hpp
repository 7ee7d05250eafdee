#ifndef GRAPHITRON_PARSER_HPP
#define GRAPHITRON_PARSER_HPP

#include <optional>

#include "graphitron/fir.hpp"
#include "graphitron/token.hpp"

namespace graphitron {

struct ParseResult {
    fir::Program program;
    std::optional<Diagnostic> error;

    bool ok() const { return !error.has_value(); }
};

// Parses a token stream (as produced by tokenize) into a FIR program.
// Stops at the first syntax error.
ParseResult parse(const std::vector<Token>& tokens);

// Convenience: tokenize + parse.
ParseResult parse_source(const std::string& source);

} // namespace graphitron

#endif
