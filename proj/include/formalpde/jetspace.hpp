#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace formalpde {

// Multi-index μ = (μ_1, ..., μ_n).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}

  std::size_t size() const { return e_.size(); }
  unsigned order() const;
  unsigned operator[](std::size_t i) const { return e_[i]; }
  const std::vector<unsigned>& entries() const { return e_; }

  MultiIndex raised(std::size_t i) const;   // μ + 1_i (0-based i)
  std::optional<MultiIndex> lowered(std::size_t i) const;  // μ - 1_i if μ_i > 0
  MultiIndex operator+(const MultiIndex& o) const;

  // Digit string "233" for n <= 9 (1-based variable labels repeated μ_i
  // times), comma separated otherwise; "0" for the empty index.
  std::string label(unsigned first_variable = 1) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> e_;
};

// 1-based class: smallest i with μ_i != 0. Throws for the zero index.
unsigned class_of(const MultiIndex& mu);

// Number of multi-indices of length exactly q in n variables.
std::uint64_t monomial_count(unsigned n, unsigned q);
// Number of those with class i (1-based).
std::uint64_t class_count(unsigned n, unsigned q, unsigned i);
std::uint64_t binomial(unsigned a, unsigned b);

// Within a fixed order, jets are listed class-descending; among equal class
// the lexicographically smaller index comes first. This is lexicographic
// ascending order on μ. Earlier means higher rank.
struct JetOrdering {
  static bool precedes(const MultiIndex& a, const MultiIndex& b) { return a < b; }
};

// All multi-indices of length exactly q, in JetOrdering sequence.
std::vector<MultiIndex> enumerate(unsigned n, unsigned q, JetOrdering ordering = {});

// y^k_μ with k 0-based internally.
struct Jet {
  unsigned unknown = 0;
  MultiIndex index;

  unsigned order() const { return index.order(); }
  Jet raised(std::size_t i) const { return {unknown, index.raised(i)}; }
  friend bool operator==(const Jet&, const Jet&) = default;
};

// Total ranking used for elimination: a jet ranks higher when its order is
// larger, then when it comes earlier in JetOrdering, then when its unknown
// index is smaller. RankGreater(a, b) is true when a ranks strictly above b,
// so a std::map keyed with it iterates from the leading jet downwards.
struct RankGreater {
  bool operator()(const Jet& a, const Jet& b) const;
};

// Jets of orders lo..hi for m unknowns in n variables, sorted from highest
// to lowest rank. These are the column layouts for all eliminations.
class JetIndex {
 public:
  JetIndex() = default;
  JetIndex(unsigned n, unsigned m, unsigned lo, unsigned hi);

  std::size_t size() const { return jets_.size(); }
  const Jet& operator[](std::size_t i) const { return jets_[i]; }
  const std::vector<Jet>& jets() const { return jets_; }
  std::optional<std::size_t> find(const Jet& j) const;
  std::size_t at(const Jet& j) const;
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned low() const { return lo_; }
  unsigned high() const { return hi_; }

 private:
  unsigned n_ = 0, m_ = 0, lo_ = 0, hi_ = 0;
  std::vector<Jet> jets_;
  std::map<std::pair<unsigned, std::vector<unsigned>>, std::size_t> lookup_;
};

// "y", "y_{13}", "y2_{13}" style name with 1-based labels.
// first_variable relabels the variables (localized systems start after the parameters).
std::string jet_name(const Jet& j, unsigned m, unsigned first_variable = 1);

}  // namespace formalpde
