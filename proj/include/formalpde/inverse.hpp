#pragma once

#include "formalpde/completion.hpp"

#include <string>
#include <vector>

namespace formalpde {

// Dual jets f^k_μ for |μ| <= order, listed from the leading jet down.
template <class F>
struct BasicSection {
  unsigned order = 0;
  JetTerms<F> coefficients;  // nonzero entries only

  F at(const Jet& j) const {
    auto it = coefficients.find(j);
    return it == coefficients.end() ? F(0) : it->second;
  }
  bool is_zero() const { return coefficients.empty(); }
  friend bool operator==(const BasicSection& a, const BasicSection& b) {
    return a.order == b.order && a.coefficients == b.coefficients;
  }
};
using Section = BasicSection<Rational>;

// Kernel of all equations through `order`, one section per parametric jet
// (in slice order): 1 at its own parametric jet, 0 at the others.
template <class F>
std::vector<BasicSection<F>> section_basis(const BasicSystem<F>& sys, unsigned order) {
  const RowSpace<F>& w = sys.equation_space(order);
  RrefResult<F> rr{w.rows, w.pivots};
  Matrix<F> k = kernel_from_rref(rr, w.index.size());
  std::vector<BasicSection<F>> out(k.cols());
  for (std::size_t c = 0; c < k.cols(); ++c) {
    out[c].order = order;
    for (std::size_t r = 0; r < k.rows(); ++r)
      if (!is_zero(k(r, c))) out[c].coefficients.emplace(w.index[r], k(r, c));
  }
  // Kernel columns follow free columns left to right; slices list them right to left.
  std::reverse(out.begin(), out.end());
  return out;
}

// True when every consequence of order <= f.order annihilates f.
template <class F>
bool satisfies(const BasicSystem<F>& sys, const BasicSection<F>& f) {
  const RowSpace<F>& w = sys.equation_space(f.order);
  for (std::size_t i = 0; i < w.rank(); ++i) {
    F sum(0);
    for (std::size_t j = 0; j < w.index.size(); ++j)
      if (!is_zero(w.rows(i, j))) sum += w.rows(i, j) * f.at(w.index[j]);
    if (!is_zero(sum)) return false;
  }
  return true;
}

// (d_i f)^k_μ = f^k_{μ+1_i}, with Macaulay's sign.
template <class F>
BasicSection<F> spencer_apply(std::size_t i, const BasicSection<F>& f) {
  if (f.order == 0) throw std::invalid_argument("cannot differentiate an order-0 section");
  BasicSection<F> out;
  out.order = f.order - 1;
  for (const auto& [jet, c] : f.coefficients) {
    if (jet.order() == 0) continue;
    auto lower = jet.index.lowered(i);
    if (!lower) continue;
    out.coefficients.emplace(Jet{jet.unknown, *lower}, c);
  }
  return out;
}

template <class F>
struct BasicModularEquation {
  BasicSection<F> section;
  bool truncated = false;  // coefficients continue beyond the displayed order
};
using ModularEquation = BasicModularEquation<Rational>;

struct RenderOptions {
  unsigned first_variable = 1;  // label of the first variable (localized systems start later)
  std::string name = "E";
};

// "E ≡ a^{233} + (χ_1)*a^{2223} + ... = 0"
template <class F>
std::string render(const BasicModularEquation<F>& e, unsigned m, const RenderOptions& opts = {});

// Finite-dimensional inverse system of a finite-type system: coordinates are
// the values at the parametric jets, which all have order <= top_order.
template <class F>
struct BasicFiniteInverseSystem {
  BasicSystem<F> system;  // completed
  unsigned top_order = 0;
  std::vector<Jet> parametric;
  std::vector<BasicSection<F>> sections;  // at order top_order + 1, aligned with `parametric`
  std::vector<Matrix<F>> derivations;     // D_i: coordinates of d_i applied to each basis section

  std::size_t dimension() const { return parametric.size(); }
};
using FiniteInverseSystem = BasicFiniteInverseSystem<Rational>;

template <class F>
BasicFiniteInverseSystem<F> finite_inverse_system(const BasicSystem<F>& sys, unsigned search = 24) {
  auto rep = complete(sys);
  if (rep.verdict == Verdict::WindowInconclusive) throw std::runtime_error("completion inconclusive");
  BasicFiniteInverseSystem<F> inv;
  inv.system = rep.final_system;
  const unsigned q = inv.system.order();
  unsigned t = q;
  while (symbol_dimension(inv.system, t + 1) != 0) {
    if (t >= q + search) throw std::runtime_error("apply relative localization first");
    ++t;
  }
  inv.top_order = t;
  inv.parametric = slice(inv.system, t).parametric;
  inv.sections = section_basis(inv.system, t + 1);
  if (inv.sections.size() != inv.parametric.size()) throw std::logic_error("section count differs from dimension");
  const std::size_t N = inv.dimension();
  for (std::size_t i = 0; i < inv.system.n(); ++i) {
    Matrix<F> d(N, N);
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t p = 0; p < N; ++p) d(p, b) = inv.sections[b].at(inv.parametric[p].raised(i));
    inv.derivations.push_back(std::move(d));
  }
  return inv;
}

// Dimension of the smallest d_i-stable subspace containing the given coordinate vectors.
template <class F>
std::size_t generated_dimension(const BasicFiniteInverseSystem<F>& inv, const std::vector<std::size_t>& gens) {
  const std::size_t N = inv.dimension();
  std::vector<std::vector<F>> all, frontier;
  for (auto b : gens) {
    std::vector<F> e(N);
    e[b] = F(1);
    frontier.push_back(e);
  }
  auto rank_of = [&](const std::vector<std::vector<F>>& rs) {
    Matrix<F> m(rs.size(), N);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = rs[i][j];
    return rank(m);
  };
  std::size_t current = 0;
  while (!frontier.empty()) {
    std::vector<std::vector<F>> next;
    for (auto& v : frontier) {
      all.push_back(v);
      std::size_t r = rank_of(all);
      if (r == current) {
        all.pop_back();
        continue;
      }
      current = r;
      for (const auto& d : inv.derivations) {
        std::vector<F> w(N);
        for (std::size_t p = 0; p < N; ++p)
          for (std::size_t b = 0; b < N; ++b)
            if (!is_zero(d(p, b)) && !is_zero(v[b])) w[p] += d(p, b) * v[b];
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return current;
}

// Indices (into `parametric`) of the basis sections chosen as generators.
template <class F>
std::vector<std::size_t> top_generator_indices(const BasicFiniteInverseSystem<F>& inv) {
  const std::size_t N = inv.dimension();
  std::vector<std::vector<F>> rows;
  for (const auto& d : inv.derivations)
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<F> col(N);
      for (std::size_t p = 0; p < N; ++p) col[p] = d(p, b);
      rows.push_back(std::move(col));
    }
  std::vector<std::size_t> order(N);
  for (std::size_t b = 0; b < N; ++b) order[b] = b;
  // Fewest nonzero coefficients first, then the higher-ranked parametric jet.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ca = inv.sections[a].coefficients.size(), cb = inv.sections[b].coefficients.size();
    if (ca != cb) return ca < cb;
    return RankGreater{}(inv.parametric[a], inv.parametric[b]);
  });
  std::vector<std::size_t> chosen;
  auto span_rank = [&](const std::vector<std::vector<F>>& rs) {
    Matrix<F> m(rs.size(), N);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = rs[i][j];
    return rank(m);
  };
  std::size_t current = span_rank(rows);
  for (std::size_t b : order) {
    std::vector<F> e(N);
    e[b] = F(1);
    rows.push_back(e);
    std::size_t r = span_rank(rows);
    if (r > current) {
      current = r;
      chosen.push_back(b);
    } else {
      rows.pop_back();
    }
  }
  // Nakayama's lemma only applies when R is local at the origin. Otherwise
  // (derivations acting invertibly on some component) extend greedily until
  // the generated submodule is all of R, then drop redundant generators.
  if (generated_dimension(inv, chosen) != N) {
    for (std::size_t b : order) {
      if (std::find(chosen.begin(), chosen.end(), b) != chosen.end()) continue;
      std::size_t before = generated_dimension(inv, chosen);
      chosen.push_back(b);
      if (generated_dimension(inv, chosen) == before) chosen.pop_back();
      if (before != N && generated_dimension(inv, chosen) == N) break;
    }
    for (std::size_t k = chosen.size(); k-- > 0;) {
      auto without = chosen;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
      if (generated_dimension(inv, without) == N) chosen = std::move(without);
    }
  }
  std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
    return RankGreater{}(inv.parametric[b], inv.parametric[a]);
  });
  return chosen;
}

// Nakayama generators of R, each a section of order top+1+extra.
template <class F>
std::vector<BasicModularEquation<F>> top_generators(const BasicSystem<F>& sys, unsigned extra = 0) {
  auto inv = finite_inverse_system(sys);
  std::vector<BasicModularEquation<F>> out;
  const unsigned order = inv.top_order + 1 + extra;
  std::vector<BasicSection<F>> wide = extra ? section_basis(inv.system, order) : inv.sections;
  // The unique extension one order further shows whether the display cuts off nonzero terms.
  std::vector<BasicSection<F>> beyond = section_basis(inv.system, order + 1);
  for (std::size_t b : top_generator_indices(inv)) {
    BasicModularEquation<F> e;
    e.section = wide[b];
    for (const auto& [jet, c] : beyond[b].coefficients)
      if (jet.order() == order + 1) e.truncated = true;
    out.push_back(std::move(e));
  }
  return out;
}

// Basis of {x in M : d_i x = 0 for all i}, each as coefficients on the
// residues of the parametric jets.
template <class F>
std::vector<std::vector<F>> socle(const BasicFiniteInverseSystem<F>& inv) {
  const std::size_t N = inv.dimension();
  // Multiplication by d_i on residues is the transpose of D_i.
  Matrix<F> stack(N * inv.derivations.size(), N);
  for (std::size_t i = 0; i < inv.derivations.size(); ++i)
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) stack(i * N + r, c) = inv.derivations[i](c, r);
  Matrix<F> k = kernel_basis(stack);
  std::vector<std::vector<F>> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<F> v(N);
    for (std::size_t r = 0; r < N; ++r) v[r] = k(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
std::vector<std::vector<F>> socle(const BasicSystem<F>& sys) {
  return socle(finite_inverse_system(sys));
}

}  // namespace formalpde
