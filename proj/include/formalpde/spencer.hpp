#pragma once

#include "formalpde/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace formalpde {

// Solutions of the top-order parts at a given order. Basis column f has a 1
// at free_columns[f] and 0 at every other free column, so the coordinates
// of a symbol vector are simply its entries at the free columns.
template <class F>
struct BasicSymbolSpace {
  unsigned order = 0;
  JetIndex index;  // jets of exactly this order
  Matrix<F> basis;
  std::vector<std::size_t> free_columns;

  std::size_t dimension() const { return free_columns.size(); }
  std::size_t ambient() const { return index.size(); }
};
using SymbolSpace = BasicSymbolSpace<Rational>;

template <class F>
BasicSymbolSpace<F> symbol(const BasicSystem<F>& sys, unsigned t) {
  const RowSpace<F>& s = sys.symbol_space(t);
  BasicSymbolSpace<F> out;
  out.order = t;
  out.index = s.index;
  RrefResult<F> rr{s.rows, s.pivots};
  out.basis = kernel_from_rref(rr, s.index.size());
  std::vector<bool> pivot(s.index.size(), false);
  for (auto p : s.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < s.index.size(); ++c)
    if (!pivot[c]) out.free_columns.push_back(c);
  return out;
}

template <class F>
std::size_t symbol_dimension(const BasicSystem<F>& sys, unsigned t) {
  const auto& s = sys.symbol_space(t);
  return s.index.size() - s.rank();
}

// Increasing subsets of {0..n-1} of size s, lexicographic.
std::vector<std::vector<unsigned>> exterior_basis(unsigned n, unsigned s);

// Matrix of δ: Λ^s ⊗ g_t -> Λ^{s+1} ⊗ g_{t-1}, columns indexed by
// (subset, symbol coordinate) with subsets outermost.
template <class F>
Matrix<F> delta_matrix(const BasicSystem<F>& sys, unsigned s, unsigned t) {
  const unsigned n = sys.n();
  if (s >= n) throw std::invalid_argument("top exterior degree");
  const auto dom_sets = exterior_basis(n, s);
  const auto cod_sets = exterior_basis(n, s + 1);
  const auto gt = symbol(sys, t);
  const std::size_t dt = gt.dimension();
  if (t == 0) return Matrix<F>(0, dom_sets.size() * dt);
  const auto gl = symbol(sys, t - 1);
  const std::size_t dl = gl.dimension();
  Matrix<F> d(cod_sets.size() * dl, dom_sets.size() * dt);

  auto set_pos = [&](const std::vector<unsigned>& set) {
    return static_cast<std::size_t>(std::lower_bound(cod_sets.begin(), cod_sets.end(), set) - cod_sets.begin());
  };

  for (std::size_t a = 0; a < dom_sets.size(); ++a) {
    const auto& set = dom_sets[a];
    for (unsigned i = 0; i < n; ++i) {
      if (std::find(set.begin(), set.end(), i) != set.end()) continue;
      std::size_t before = 0;
      for (unsigned j : set)
        if (j < i) ++before;
      const bool negative = before % 2 == 1;
      std::vector<unsigned> joined = set;
      joined.insert(std::upper_bound(joined.begin(), joined.end(), i), i);
      const std::size_t row_block = set_pos(joined) * dl;
      for (std::size_t f = 0; f < dl; ++f) {
        const Jet& target = gl.index[gl.free_columns[f]];
        const std::size_t src = gt.index.at(target.raised(i));
        for (std::size_t b = 0; b < dt; ++b) {
          const F& v = gt.basis(src, b);
          if (is_zero(v)) continue;
          d(row_block + f, a * dt + b) = negative ? F(-v) : v;
        }
      }
    }
  }
  return d;
}

struct DeltaReport {
  unsigned s = 0;
  unsigned order = 0;
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::size_t rank = 0;          // rank of the outgoing δ
  std::size_t cocycles = 0;      // dim Z
  std::size_t coboundaries = 0;  // dim B (image of the incoming δ)
  std::size_t cohomology = 0;    // dim H = Z - B
};

// Cohomology at Λ^s ⊗ g_t.
template <class F>
DeltaReport cohomology(const BasicSystem<F>& sys, unsigned s, unsigned t) {
  const unsigned n = sys.n();
  if (s > n) throw std::invalid_argument("exterior degree exceeds variable count");
  DeltaReport r;
  r.s = s;
  r.order = t;
  r.domain = binomial(n, s) * symbol_dimension(sys, t);
  r.codomain = s < n && t > 0 ? binomial(n, s + 1) * symbol_dimension(sys, t - 1) : 0;
  r.rank = s < n && r.domain > 0 && r.codomain > 0 ? rank(delta_matrix(sys, s, t)) : 0;
  r.cocycles = r.domain - r.rank;
  r.coboundaries = s >= 1 && r.domain > 0 ? rank(delta_matrix(sys, s - 1, t + 1)) : 0;
  if (r.coboundaries > r.cocycles) throw std::logic_error("δ-complex is not a complex");
  r.cohomology = r.cocycles - r.coboundaries;
  return r;
}

// The sequence 0 -> g_top -> T*⊗g_{top-1} -> ... -> Λ^n⊗g_{top-n} -> 0.
// Entry s reports the cohomology at Λ^s ⊗ g_{top-s}.
template <class F>
std::vector<DeltaReport> delta_sequence(const BasicSystem<F>& sys, unsigned top) {
  std::vector<DeltaReport> out;
  for (unsigned s = 0; s <= sys.n() && s <= top; ++s) out.push_back(cohomology(sys, s, top - s));
  return out;
}

struct AcyclicityCheck {
  bool acyclic = true;
  bool exact = false;  // the symbol vanished inside the window, so the verdict is final
  unsigned first_order = 0;
  unsigned last_order = 0;
  std::vector<DeltaReport> reports;
  std::optional<DeltaReport> failure;
};

// Checks H^1..H^max_s at Λ^s ⊗ g_{t'} for t' = t .. t + window.
template <class F>
AcyclicityCheck check_acyclic(const BasicSystem<F>& sys, unsigned max_s, unsigned t, unsigned window) {
  AcyclicityCheck c;
  c.first_order = t;
  max_s = std::min(max_s, sys.n());
  for (unsigned u = t; u <= t + window; ++u) {
    c.last_order = u;
    if (symbol_dimension(sys, u) == 0) {
      c.exact = true;
      break;
    }
    for (unsigned s = 1; s <= max_s; ++s) {
      auto r = cohomology(sys, s, u);
      c.reports.push_back(r);
      if (r.cohomology != 0) {
        c.acyclic = false;
        c.failure = r;
        return c;
      }
    }
  }
  return c;
}

inline unsigned default_window(unsigned q, unsigned n) { return 2 * q + n; }

struct JanetTableau {
  unsigned order = 0;
  std::vector<std::size_t> beta;   // beta[i-1] = solved equations of class i
  std::vector<std::size_t> alpha;  // characters
  CoordinateChange frame;
};

JanetTableau janet_tableau(const LinearSystem& sys, unsigned t, const CoordinateChange& frame);
JanetTableau janet_tableau(const LinearSystem& sys, unsigned t);

struct InvolutionOptions {
  std::uint64_t seed = 0;
  unsigned frames = 25;
  std::optional<unsigned> window;
};

struct InvolutionResult {
  bool involutive = false;
  bool cartan_passed = false;
  int witness_trial = -1;  // 0 = the given frame, k = k-th trial frame, -1 = none
  std::size_t next_symbol_dimension = 0;
  JanetTableau tableau;  // in the witness frame, or the given frame when none passed
  AcyclicityCheck certificate;
};

// Random unimodular integer matrices with entries in [-3, 3].
std::vector<CoordinateChange> random_frames(unsigned n, unsigned count, std::uint64_t seed);

InvolutionResult is_involutive_symbol(const LinearSystem& sys, unsigned t, const InvolutionOptions& opts = {},
                                      const CoordinateChange* frame = nullptr);

}  // namespace formalpde
