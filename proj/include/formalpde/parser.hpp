#pragma once

#include "formalpde/system.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace formalpde {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct SystemDocument {
  unsigned n = 0;
  unsigned m = 1;
  std::vector<std::string> equation_sources;
  LinearSystem system;
};

// Grammar:
//   document := stmt*
//   stmt     := ("vars" "=" int | "unknowns" "=" int | "eq" ":" expr ["=" "0"]) [";"]
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := [rational "*"] jet
//   jet      := name "[" [int ("," int)*] "]"
// Jet brackets list differentiation variables (y[1,3] is y_13). A name
// ending in digits selects that unknown (z2 is unknown 2); otherwise unknown 1.
// '#' starts a comment running to the end of the line.
SystemDocument parse(std::string_view text);

// Text in the same grammar; parse(render(s)) gives back s.
std::string render(const LinearSystem& sys);

// "y[1,3]", or "y2[]" for m > 1.
std::string render_jet(const Jet& j, unsigned m);

// "y_{13} - 1/2*y_{2}" style expression of an equation's left side.
template <class F>
std::string render_expression(const BasicEquation<F>& eq, unsigned m, unsigned first_variable = 1);

}  // namespace formalpde
