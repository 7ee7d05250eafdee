#ifndef GRAPHITRON_PRINTER_HPP
#define GRAPHITRON_PRINTER_HPP

#include <string>

#include "graphitron/fir.hpp"

namespace graphitron {

// Canonical source text for a FIR program: 4-space indents, one statement per
// line, minimal parentheses. Reparsing the result yields a structurally equal
// tree.
std::string pretty_print(const fir::Program& program);
std::string pretty_print(const fir::Expr& expr);

} // namespace graphitron

#endif
