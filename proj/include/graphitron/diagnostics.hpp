#ifndef GRAPHITRON_DIAGNOSTICS_HPP
#define GRAPHITRON_DIAGNOSTICS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace graphitron {

// Location of a token or node in the original source text. line/column are
// 1-based; offset is the byte offset into the file, kept so that lossless
// reconstruction and precise error underlining are possible.
struct SourceSpan {
    uint32_t line = 1;
    uint32_t column = 1;
    uint32_t length = 1;
    size_t offset = 0;

    bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    SourceSpan span;

    // Renders "file:line:col: severity: message".
    std::string format(const std::string& file) const;
};

} // namespace graphitron

#endif
