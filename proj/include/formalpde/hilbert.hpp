#pragma once

#include "formalpde/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace formalpde {

struct PowerSeries {
  std::vector<std::int64_t> coefficients;  // degrees 0..truncation
  unsigned truncation() const { return coefficients.empty() ? 0 : static_cast<unsigned>(coefficients.size() - 1); }
  std::int64_t sum() const;
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

// Π(1 - x^{l_i}) · (1 - x)^{-n} truncated at degree T.
PowerSeries principal_class_series(const std::vector<unsigned>& degrees, unsigned n, unsigned T);

// Coefficient t = dim R_t - dim R_{t-1}; the system should be completed.
PowerSeries hilbert_function(const LinearSystem& completed, unsigned T);

struct SeriesComparison {
  bool agree = true;
  std::optional<unsigned> first_mismatch;
};

SeriesComparison compare(const PowerSeries& a, const PowerSeries& b);

}  // namespace formalpde
