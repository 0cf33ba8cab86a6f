#include "formalpde/inverse.hpp"

#include <sstream>

namespace formalpde {

namespace {

// Returns the magnitude text (empty for 1) and whether the sign is negative.
std::pair<std::string, bool> coefficient_text(const Rational& c) {
  bool neg = sgn(c) < 0;
  Rational a = abs(c);
  if (a == 1) return {"", neg};
  if (a.get_den() == 1) return {a.get_str() + "*", neg};
  return {"(" + a.get_str() + ")*", neg};
}

std::pair<std::string, bool> coefficient_text(const ParamScalar& c) {
  if (c.is_polynomial() && c.numerator().is_constant()) return coefficient_text(c.numerator().constant_value());
  if (c == ParamScalar(-1)) return {"", true};
  // A single negative term reads better with the sign pulled out.
  if (c.is_polynomial() && c.numerator().terms().size() == 1 && sgn(c.numerator().leading_coefficient()) < 0)
    return {"(" + (-c).to_string() + ")*", true};
  return {"(" + c.to_string() + ")*", false};
}

}  // namespace

template <class F>
std::string render(const BasicModularEquation<F>& e, unsigned m, const RenderOptions& opts) {
  std::ostringstream out;
  out << opts.name << " ≡ ";
  bool first = true;
  // Lowest order first.
  for (auto it = e.section.coefficients.rbegin(); it != e.section.coefficients.rend(); ++it) {
    const auto& [jet, c] = *it;
    auto [text, neg] = coefficient_text(c);
    if (first) out << (neg ? "- " : "");
    else out << (neg ? " - " : " + ");
    first = false;
    out << text << "a^{" << jet.index.label(opts.first_variable) << "}";
    if (m > 1) out << "_" << (jet.unknown + 1);
  }
  if (first) out << "0";
  if (e.truncated) out << " + ...";
  out << " = 0";
  return out.str();
}

template std::string render(const BasicModularEquation<Rational>&, unsigned, const RenderOptions&);
template std::string render(const BasicModularEquation<ParamScalar>&, unsigned, const RenderOptions&);

}  // namespace formalpde
