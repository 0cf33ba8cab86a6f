#include "formalpde/hilbert.hpp"

#include <numeric>
#include <stdexcept>

namespace formalpde {

namespace {
std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}
}  // namespace

std::int64_t PowerSeries::sum() const {
  std::int64_t s = 0;
  for (auto c : coefficients) s = checked_add(s, c);
  return s;
}

PowerSeries principal_class_series(const std::vector<unsigned>& degrees, unsigned n, unsigned T) {
  if (degrees.size() > n) throw std::invalid_argument("rank exceeds variable count");
  std::vector<std::int64_t> c(T + 1, 0);
  c[0] = 1;
  for (unsigned l : degrees) {
    if (l < 1) throw std::invalid_argument("generator degree must be positive");
    for (unsigned t = T + 1; t-- > l;) c[t] = checked_add(c[t], -c[t - l]);
  }
  // Dividing by (1 - x) is a running sum.
  for (unsigned k = 0; k < n; ++k)
    for (unsigned t = 1; t <= T; ++t) c[t] = checked_add(c[t], c[t - 1]);
  return PowerSeries{std::move(c)};
}

PowerSeries hilbert_function(const LinearSystem& completed, unsigned T) {
  PowerSeries s;
  std::size_t prev = 0;
  for (unsigned t = 0; t <= T; ++t) {
    std::size_t d = slice(completed, t).dimension;
    s.coefficients.push_back(static_cast<std::int64_t>(d) - static_cast<std::int64_t>(prev));
    prev = d;
  }
  return s;
}

SeriesComparison compare(const PowerSeries& a, const PowerSeries& b) {
  if (a.coefficients.size() != b.coefficients.size()) throw std::invalid_argument("series truncations differ");
  SeriesComparison r;
  for (std::size_t t = 0; t < a.coefficients.size(); ++t)
    if (a.coefficients[t] != b.coefficients[t]) {
      r.agree = false;
      r.first_mismatch = static_cast<unsigned>(t);
      break;
    }
  return r;
}

}  // namespace formalpde
