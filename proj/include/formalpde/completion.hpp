#pragma once

#include "formalpde/spencer.hpp"

#include <string>
#include <vector>

namespace formalpde {

enum class Verdict { FormallyIntegrable, Completed, WindowInconclusive };
std::string to_string(Verdict v);

struct CompletionOptions {
  unsigned max_steps = 10;
  std::optional<unsigned> window;  // δ-cohomology window, default 2q + n
};

template <class F>
struct BasicTraceStep {
  enum class Kind { Projection, RaiseOrder };
  unsigned step = 0;
  Kind kind = Kind::Projection;
  unsigned order = 0;  // order of the system before the step
  std::size_t dim_before = 0;  // dim R_order
  std::size_t dim_after = 0;
  std::vector<BasicEquation<F>> gained;
};

template <class F>
struct BasicIntegrabilityReport {
  Verdict verdict = Verdict::WindowInconclusive;
  unsigned steps = 0;
  std::size_t gained_equations = 0;
  std::vector<BasicTraceStep<F>> trace;
  BasicSystem<F> final_system;
  bool homogeneous = false;  // certified directly: a graded system never loses rank under projection
  AcyclicityCheck h2;        // 2-acyclicity of the final symbol
  std::vector<std::pair<unsigned, bool>> surjective;  // (t, R_{t+1} -> R_t onto)
};
using IntegrabilityReport = BasicIntegrabilityReport<Rational>;
using TraceStep = BasicTraceStep<Rational>;

template <class F>
BasicIntegrabilityReport<F> complete(const BasicSystem<F>& sys, const CompletionOptions& opts = {}) {
  if (opts.max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  BasicIntegrabilityReport<F> rep;
  BasicSystem<F> cur = sys;
  const unsigned start_order = sys.order();

  auto finish = [&](Verdict v) {
    rep.verdict = v;
    rep.final_system = cur;
    for (unsigned t = std::min(start_order, cur.order()); t <= cur.order(); ++t)
      rep.surjective.emplace_back(t, projection_surjective(cur, t));
    return rep;
  };

  while (true) {
    const unsigned q = cur.order();
    if (cur.is_homogeneous()) {
      rep.homogeneous = true;
      return finish(rep.gained_equations ? Verdict::Completed : Verdict::FormallyIntegrable);
    }
    const auto& before = cur.equation_space(q);
    BasicSystem<F> proj = projected_system(cur, 1);
    const auto& after = proj.equation_space(q);
    if (after.rank() > before.rank()) {
      if (rep.steps == opts.max_steps) return finish(Verdict::WindowInconclusive);
      BasicTraceStep<F> st;
      st.step = ++rep.steps;
      st.kind = BasicTraceStep<F>::Kind::Projection;
      st.order = q;
      st.dim_before = before.index.size() - before.rank();
      st.dim_after = after.index.size() - after.rank();
      // New relative to the consequences of the same order, so a lower-order
      // equation hidden in R_q still counts.
      for (const auto& g : proj.equations()) {
        const auto& own = cur.equation_space(g.order());
        if (!in_span(own, equation_row(own.index, g))) st.gained.push_back(g);
      }
      rep.gained_equations += st.gained.size();
      rep.trace.push_back(std::move(st));
      cur = proj.with_order(proj.max_equation_order());
      continue;
    }
    rep.h2 = check_acyclic(cur, 2, q, opts.window.value_or(default_window(q, cur.n())));
    if (rep.h2.acyclic) return finish(rep.gained_equations ? Verdict::Completed : Verdict::FormallyIntegrable);
    if (rep.steps == opts.max_steps) return finish(Verdict::WindowInconclusive);
    BasicTraceStep<F> st;
    st.step = ++rep.steps;
    st.kind = BasicTraceStep<F>::Kind::RaiseOrder;
    st.order = q;
    st.dim_before = st.dim_after = before.index.size() - before.rank();
    rep.trace.push_back(std::move(st));
    cur = cur.with_order(q + 1);
  }
}

// Smallest order >= the system order at which the symbol is involutive, the
// system rewritten in a frame where the Cartan test passes there, and its tableau.
struct InvolutiveForm {
  LinearSystem system;  // in the witness frame, order = involutive order
  CoordinateChange frame;
  JanetTableau tableau;
  InvolutionResult involution;
};

// Requires a formally integrable input (use complete first).
InvolutiveForm involutive_form(const LinearSystem& completed, const InvolutionOptions& opts = {},
                               unsigned max_raise = 10);

// n - (largest class with a nonzero character), n when all vanish.
unsigned codimension(const JanetTableau& tab);
// Checks completion, finds the involutive form and reads off the codimension.
unsigned codimension(const LinearSystem& sys, const InvolutionOptions& opts = {});

struct CharacteristicMatrix {
  Matrix<Polynomial> matrix;  // rows: prolonged top-order parts, columns: unknowns
  std::vector<Polynomial> minors;
};

CharacteristicMatrix characteristic_matrix(const LinearSystem& sys);

}  // namespace formalpde
