#pragma once

#include "formalpde/inverse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace formalpde {

using LocalizedEquation = BasicEquation<ParamScalar>;
using ParamSystem = BasicSystem<ParamScalar>;

// The first n - r derivations replaced by parameters χ_1..χ_{n-r}; what is
// left is a system in the last r variables over Q(χ).
struct LocalizedSystem {
  unsigned original_n = 0;
  unsigned parameters = 0;
  ParamSystem system;

  // y^k_μ  ->  χ^{μ_1..μ_s} · y^k_{μ_{s+1}..μ_n}
  std::pair<Polynomial, Jet> map(const Jet& j) const;
};

// Throws when the input is not completed.
LocalizedSystem localize(const LinearSystem& completed, unsigned r);

ParamSystem localize_equations(const LinearSystem& sys, unsigned r);

BasicFiniteInverseSystem<ParamScalar> localized_inverse(const LocalizedSystem& loc);
std::size_t localized_dimension(const LocalizedSystem& loc);

struct TorsionElement {
  std::vector<std::pair<Jet, Rational>> combination;  // Σ c ȳ_μ
  std::optional<unsigned> companion_unknown;          // 1-based z index when a single jet
};

// Residues of jets of order < q (k-linear combinations) that vanish after
// localization and are not already zero in the module.
std::vector<TorsionElement> torsion_generators(const LinearSystem& completed, unsigned r);

struct PurityReport {
  unsigned n = 0;
  unsigned codimension = 0;
  std::optional<std::size_t> localized_dimension;
  std::vector<Jet> localized_parametric;  // indices in the last r variables
  std::vector<TorsionElement> torsion;
  bool pure = false;
  std::optional<std::size_t> alpha;  // α^{n-r} of the involutive form, when r < n
  CoordinateChange frame;
  unsigned involutive_order = 0;
  std::vector<std::string> notes;
};

PurityReport is_pure(const LinearSystem& sys, const InvolutionOptions& opts = {});

// "ȳ_{3}" or "2*ȳ_{1} - ȳ_{2}"
std::string render(const TorsionElement& t, unsigned m);

}  // namespace formalpde
