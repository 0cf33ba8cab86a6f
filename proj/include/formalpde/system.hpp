#pragma once

#include "formalpde/jetspace.hpp"
#include "formalpde/matrix.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace formalpde {

template <class F>
using JetTerms = std::map<Jet, F, RankGreater>;

// One linear equation Σ a^μ_k y^k_μ = 0. Iteration starts at the leading jet.
template <class F>
class BasicEquation {
 public:
  BasicEquation() = default;
  explicit BasicEquation(JetTerms<F> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }

  const JetTerms<F>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  unsigned order() const { return terms_.empty() ? 0 : terms_.begin()->first.order(); }
  const Jet& leading_jet() const { return terms_.begin()->first; }
  bool is_homogeneous() const {
    return terms_.empty() || terms_.rbegin()->first.order() == terms_.begin()->first.order();
  }

  // Formal derivative d_i (0-based i): every jet index is raised by 1_i.
  BasicEquation prolonged(std::size_t i) const {
    JetTerms<F> t;
    for (const auto& [j, c] : terms_) t.emplace(j.raised(i), c);
    return BasicEquation(std::move(t));
  }

  BasicEquation top_part() const {
    JetTerms<F> t;
    const unsigned q = order();
    for (const auto& [j, c] : terms_)
      if (j.order() == q) t.emplace(j, c);
    return BasicEquation(std::move(t));
  }

  friend bool operator==(const BasicEquation& a, const BasicEquation& b) { return a.terms_ == b.terms_; }

 private:
  JetTerms<F> terms_;
};

// Reduced row space of a set of equations over a fixed jet layout.
template <class F>
struct RowSpace {
  JetIndex index;
  Matrix<F> rows;                   // rank x index.size(), in reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row

  std::size_t rank() const { return pivots.size(); }
};

template <class F>
RowSpace<F> reduce_rows(JetIndex index, const std::vector<std::vector<F>>& rows) {
  Matrix<F> m(rows.size(), index.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j)
      if (!is_zero(rows[i][j])) m(i, j) = rows[i][j];
  auto rr = rref(std::move(m));
  RowSpace<F> out;
  out.index = std::move(index);
  out.pivots = rr.pivots;
  out.rows = Matrix<F>(rr.pivots.size(), out.index.size());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < out.index.size(); ++j) out.rows(i, j) = rr.matrix(i, j);
  return out;
}

template <class F>
std::vector<F> equation_row(const JetIndex& index, const BasicEquation<F>& eq) {
  std::vector<F> row(index.size());
  for (const auto& [j, c] : eq.terms()) row[index.at(j)] = c;
  return row;
}

template <class F>
BasicEquation<F> row_equation(const JetIndex& index, const F* row) {
  JetTerms<F> t;
  for (std::size_t j = 0; j < index.size(); ++j)
    if (!is_zero(row[j])) t.emplace(index[j], row[j]);
  return BasicEquation<F>(std::move(t));
}

// True when `row` lies in the span of the reduced rows.
template <class F>
bool in_span(const RowSpace<F>& space, std::vector<F> row) {
  for (std::size_t i = 0; i < space.rank(); ++i) {
    const std::size_t p = space.pivots[i];
    if (is_zero(row[p])) continue;
    F factor = row[p];
    for (std::size_t j = p; j < space.index.size(); ++j)
      if (!is_zero(space.rows(i, j))) row[j] -= factor * space.rows(i, j);
  }
  for (const auto& x : row)
    if (!is_zero(x)) return false;
  return true;
}

template <class F>
class BasicSystem;

namespace detail {

// Incrementally built spaces W_t (all consequences of order <= t) and S_t
// (their top-order parts). Shared between copies of a system, guarded by a
// mutex; callers only ever see immutable results.
template <class F>
class Towers {
 public:
  Towers(unsigned n, unsigned m, std::vector<BasicEquation<F>> gens)
      : n_(n), m_(m), gens_(std::move(gens)) {}

  const RowSpace<F>& equations(unsigned t) {
    std::lock_guard lock(mu_);
    while (w_.size() <= t) extend_w();
    return w_[t];
  }

  const RowSpace<F>& symbol(unsigned t) {
    std::lock_guard lock(mu_);
    while (s_.size() <= t) extend_s();
    return s_[t];
  }

 private:
  std::vector<std::size_t> raise_table(const JetIndex& from, const JetIndex& to, std::size_t i) const {
    std::vector<std::size_t> out(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) out[j] = to.at(from[j].raised(i));
    return out;
  }

  void extend_w() {
    const unsigned t = static_cast<unsigned>(w_.size());
    JetIndex index(n_, m_, 0, t);
    std::vector<std::vector<F>> rows;
    if (t > 0) {
      const RowSpace<F>& prev = w_[t - 1];
      std::vector<std::size_t> same(prev.index.size());
      for (std::size_t j = 0; j < prev.index.size(); ++j) same[j] = index.at(prev.index[j]);
      std::vector<std::vector<std::size_t>> maps;
      maps.push_back(same);
      for (std::size_t i = 0; i < n_; ++i) maps.push_back(raise_table(prev.index, index, i));
      for (const auto& map : maps)
        for (std::size_t r = 0; r < prev.rank(); ++r) {
          std::vector<F> row(index.size());
          for (std::size_t j = 0; j < prev.index.size(); ++j)
            if (!is_zero(prev.rows(r, j))) row[map[j]] = prev.rows(r, j);
          rows.push_back(std::move(row));
        }
    }
    for (const auto& g : gens_)
      if (g.order() == t) rows.push_back(equation_row(index, g));
    w_.push_back(reduce_rows(std::move(index), rows));
  }

  void extend_s() {
    const unsigned t = static_cast<unsigned>(s_.size());
    JetIndex index(n_, m_, t, t);
    std::vector<std::vector<F>> rows;
    if (t > 0) {
      const RowSpace<F>& prev = s_[t - 1];
      for (std::size_t i = 0; i < n_; ++i) {
        auto map = raise_table(prev.index, index, i);
        for (std::size_t r = 0; r < prev.rank(); ++r) {
          std::vector<F> row(index.size());
          for (std::size_t j = 0; j < prev.index.size(); ++j)
            if (!is_zero(prev.rows(r, j))) row[map[j]] = prev.rows(r, j);
          rows.push_back(std::move(row));
        }
      }
    }
    for (const auto& g : gens_)
      if (g.order() == t) rows.push_back(equation_row(index, g.top_part()));
    s_.push_back(reduce_rows(std::move(index), rows));
  }

  unsigned n_, m_;
  std::vector<BasicEquation<F>> gens_;
  std::mutex mu_;
  std::deque<RowSpace<F>> w_, s_;
};

}  // namespace detail

// A linear constant-coefficient system of order q in n variables and m unknowns.
template <class F>
class BasicSystem {
 public:
  BasicSystem() : BasicSystem(0, 0, {}) {}
  BasicSystem(unsigned n, unsigned m, std::vector<BasicEquation<F>> equations,
              std::optional<unsigned> order = std::nullopt)
      : n_(n), m_(m), equations_(std::move(equations)) {
    unsigned q = 0;
    for (const auto& e : equations_) {
      if (e.empty()) throw std::invalid_argument("equation without nonzero coefficients");
      for (const auto& [j, c] : e.terms()) {
        if (j.index.size() != n) throw std::invalid_argument("jet index length differs from variable count");
        if (j.unknown >= m) throw std::invalid_argument("unknown index out of range");
      }
      q = std::max(q, e.order());
    }
    if (order && *order < q) throw std::invalid_argument("declared order below equation order");
    order_ = order.value_or(q);
    towers_ = std::make_shared<detail::Towers<F>>(n_, m_, equations_);
  }

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned order() const { return order_; }
  const std::vector<BasicEquation<F>>& equations() const { return equations_; }

  unsigned max_equation_order() const {
    unsigned q = 0;
    for (const auto& e : equations_) q = std::max(q, e.order());
    return q;
  }

  bool is_homogeneous() const {
    for (const auto& e : equations_)
      if (!e.is_homogeneous()) return false;
    return true;
  }

  // Same equations, regarded as a system of order q.
  BasicSystem with_order(unsigned q) const {
    BasicSystem s = *this;
    if (q < max_equation_order()) throw std::invalid_argument("declared order below equation order");
    s.order_ = q;
    return s;
  }

  // All consequences of order <= t, reduced.
  const RowSpace<F>& equation_space(unsigned t) const { return towers_->equations(t); }
  // Top-order parts of all consequences of order exactly t, reduced.
  const RowSpace<F>& symbol_space(unsigned t) const { return towers_->symbol(t); }

 private:
  unsigned n_, m_, order_ = 0;
  std::vector<BasicEquation<F>> equations_;
  std::shared_ptr<detail::Towers<F>> towers_;
};

using Equation = BasicEquation<Rational>;
using LinearSystem = BasicSystem<Rational>;

template <class F>
struct BasicJetSpaceSlice {
  unsigned order = 0;
  std::size_t dimension = 0;
  std::vector<Jet> parametric;  // order ascending; within an order lowest rank first
};
using JetSpaceSlice = BasicJetSpaceSlice<Rational>;

template <class F>
std::vector<Jet> parametric_jets(const RowSpace<F>& space) {
  std::vector<bool> pivot(space.index.size(), false);
  for (auto p : space.pivots) pivot[p] = true;
  std::vector<Jet> out;
  for (std::size_t j = space.index.size(); j-- > 0;)
    if (!pivot[j]) out.push_back(space.index[j]);
  return out;
}

template <class F>
BasicJetSpaceSlice<F> slice(const BasicSystem<F>& sys, unsigned r) {
  const auto& w = sys.equation_space(r);
  BasicJetSpaceSlice<F> s;
  s.order = r;
  s.parametric = parametric_jets(w);
  s.dimension = s.parametric.size();
  return s;
}

// Equations of the reduced space whose support has order <= q.
template <class F>
std::vector<BasicEquation<F>> rows_up_to_order(const RowSpace<F>& space, unsigned q) {
  std::vector<BasicEquation<F>> out;
  for (std::size_t i = 0; i < space.rank(); ++i)
    if (space.index[space.pivots[i]].order() <= q) out.push_back(row_equation(space.index, space.rows.row_data(i)));
  return out;
}

template <class F>
std::vector<std::vector<F>> prolongation_rows(const JetIndex& index, const BasicEquation<F>& eq, unsigned q,
                                              unsigned n) {
  std::vector<std::vector<F>> rows;
  std::vector<BasicEquation<F>> layer{eq};
  for (unsigned t = eq.order(); t <= q; ++t) {
    std::vector<BasicEquation<F>> next;
    for (const auto& e : layer) {
      rows.push_back(equation_row(index, e));
      if (t < q)
        for (std::size_t i = 0; i < n; ++i) next.push_back(e.prolonged(i));
    }
    // Deduplicate the next layer syntactically; d_i d_j = d_j d_i produces repeats.
    std::vector<BasicEquation<F>> uniq;
    for (auto& e : next) {
      bool seen = false;
      for (const auto& u : uniq)
        if (u == e) {
          seen = true;
          break;
        }
      if (!seen) uniq.push_back(std::move(e));
    }
    layer = std::move(uniq);
  }
  return rows;
}

// Greedy canonical generating set: walk the candidates from lowest to
// highest order (lowest rank first) and keep those not already implied by
// prolongations of the kept ones up to order q.
template <class F>
std::vector<BasicEquation<F>> minimal_generators(unsigned n, unsigned m, unsigned q,
                                                 std::vector<BasicEquation<F>> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return RankGreater{}(b.leading_jet(), a.leading_jet());
  });
  JetIndex index(n, m, 0, q);
  std::vector<std::vector<F>> closure_rows;
  RowSpace<F> closure = reduce_rows(index, closure_rows);
  std::vector<BasicEquation<F>> kept;
  for (auto& c : candidates) {
    if (in_span(closure, equation_row(index, c))) continue;
    auto more = prolongation_rows(index, c, q, n);
    closure_rows.insert(closure_rows.end(), more.begin(), more.end());
    closure = reduce_rows(index, closure_rows);
    kept.push_back(std::move(c));
  }
  return kept;
}

// Every equation differentiated by all words of length <= r. Derivatives
// already in the span of the kept ones are dropped; the kept ones are not
// recombined, so no lower-order consequence appears as a new generator.
template <class F>
BasicSystem<F> prolong(const BasicSystem<F>& sys, unsigned r) {
  const unsigned t = sys.order() + r;
  JetIndex index(sys.n(), sys.m(), 0, t);
  std::vector<std::vector<F>> kept_rows;
  RowSpace<F> span = reduce_rows(index, kept_rows);
  std::vector<BasicEquation<F>> kept;
  std::vector<BasicEquation<F>> layer = sys.equations();
  for (unsigned len = 0; len <= r && !layer.empty(); ++len) {
    std::vector<BasicEquation<F>> next;
    for (auto& e : layer) {
      auto row = equation_row(index, e);
      if (in_span(span, row)) continue;
      kept_rows.push_back(std::move(row));
      span = reduce_rows(index, kept_rows);
      if (len < r)
        for (std::size_t i = 0; i < sys.n(); ++i) next.push_back(e.prolonged(i));
      kept.push_back(std::move(e));
    }
    layer = std::move(next);
  }
  return BasicSystem<F>(sys.n(), sys.m(), std::move(kept), t);
}

// System of order q whose order-q solutions are the projection of R_{q+s}.
template <class F>
BasicSystem<F> projected_system(const BasicSystem<F>& sys, unsigned s) {
  if (s < 1) throw std::invalid_argument("projection needs s >= 1");
  const unsigned q = sys.order();
  auto rows = rows_up_to_order(sys.equation_space(q + s), q);
  return BasicSystem<F>(sys.n(), sys.m(), minimal_generators(sys.n(), sys.m(), q, std::move(rows)), q);
}

// Rank of W_{t+1} ∩ J_t equals rank of W_t.
template <class F>
bool projection_surjective(const BasicSystem<F>& sys, unsigned t) {
  const auto& next = sys.equation_space(t + 1);
  std::size_t low = 0;
  for (auto p : next.pivots)
    if (next.index[p].order() <= t) ++low;
  return low == sys.equation_space(t).rank();
}

using CoordinateChange = Matrix<Rational>;

// Substitutes d_i -> Σ_j A_ij d_j in every equation.
LinearSystem change_coordinates(const LinearSystem& sys, const CoordinateChange& a);

// Unknowns of the first-order companion: one per jet of order <= q-1,
// listed by order, then unknown, then index (lexicographically descending).
std::vector<Jet> companion_unknowns(const LinearSystem& sys);

// First-order system in the companion unknowns.
LinearSystem first_order_companion(const LinearSystem& sys);

}  // namespace formalpde
