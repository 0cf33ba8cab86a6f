#include "formalpde/completion.hpp"

#include <algorithm>

namespace formalpde {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FormallyIntegrable: return "formally integrable";
    case Verdict::Completed: return "completed";
    case Verdict::WindowInconclusive: return "window-inconclusive";
  }
  return "?";
}

InvolutiveForm involutive_form(const LinearSystem& completed, const InvolutionOptions& opts, unsigned max_raise) {
  const unsigned q = completed.order();
  for (unsigned t = q; t <= q + max_raise; ++t) {
    const LinearSystem at_t = completed.with_order(std::max(t, completed.max_equation_order()));
    if (t == 0) {
      // Order-0 systems: the symbol vanishes from order 1 on.
      continue;
    }
    InvolutionResult res = is_involutive_symbol(at_t, t, opts);
    if (!res.involutive) continue;
    // Generic frames are δ-regular; widen the search if the first batch missed.
    for (unsigned batch = 1; !res.cartan_passed && batch < 8; ++batch) {
      InvolutionOptions more = opts;
      more.seed = opts.seed + batch;
      more.frames = opts.frames * 4;
      res = is_involutive_symbol(at_t, t, more);
    }
    if (!res.cartan_passed) throw std::runtime_error("no δ-regular frame found");
    InvolutiveForm form;
    form.frame = res.tableau.frame;
    form.system = res.witness_trial == 0 && form.frame == CoordinateChange::identity(completed.n())
                      ? at_t
                      : change_coordinates(at_t, form.frame);
    form.tableau = res.tableau;
    form.involution = std::move(res);
    return form;
  }
  throw std::runtime_error("symbol not involutive within the order bound");
}

unsigned codimension(const JanetTableau& tab) {
  const unsigned n = static_cast<unsigned>(tab.alpha.size());
  for (unsigned i = n; i >= 1; --i)
    if (tab.alpha[i - 1] != 0) return n - i;
  return n;
}

unsigned codimension(const LinearSystem& sys, const InvolutionOptions& opts) {
  auto rep = complete(sys);
  if (rep.gained_equations != 0 || rep.verdict == Verdict::WindowInconclusive)
    throw std::invalid_argument("system is not completed");
  return codimension(involutive_form(rep.final_system, opts).tableau);
}

CharacteristicMatrix characteristic_matrix(const LinearSystem& sys) {
  const unsigned n = sys.n(), m = sys.m(), q = sys.order();
  std::vector<Equation> tops;
  for (const auto& eq : sys.equations()) {
    std::vector<Equation> layer{eq.top_part()};
    for (unsigned t = eq.order(); t < q; ++t) {
      std::vector<Equation> next;
      for (const auto& e : layer)
        for (unsigned i = 0; i < n; ++i) {
          Equation p = e.prolonged(i);
          if (std::find(next.begin(), next.end(), p) == next.end()) next.push_back(std::move(p));
        }
      layer = std::move(next);
    }
    for (auto& e : layer)
      if (std::find(tops.begin(), tops.end(), e) == tops.end()) tops.push_back(std::move(e));
  }
  CharacteristicMatrix cm;
  cm.matrix = Matrix<Polynomial>(tops.size(), m);
  for (std::size_t r = 0; r < tops.size(); ++r)
    for (const auto& [jet, c] : tops[r].terms())
      cm.matrix(r, jet.unknown) += Polynomial::monomial(jet.index.entries(), c);

  if (tops.size() < m) return cm;
  std::vector<std::size_t> pick(m);
  for (unsigned i = 0; i < m; ++i) pick[i] = i;
  const std::size_t rows = tops.size();
  while (true) {
    Matrix<Polynomial> sub(m, m);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) sub(i, j) = cm.matrix(pick[i], j);
    Polynomial d = determinant(sub);
    if (!d.is_zero()) {
      if (sgn(d.leading_coefficient()) < 0) d = -d;
      if (std::find(cm.minors.begin(), cm.minors.end(), d) == cm.minors.end()) cm.minors.push_back(std::move(d));
    }
    int k = static_cast<int>(m) - 1;
    while (k >= 0 && pick[k] == rows - m + static_cast<std::size_t>(k)) --k;
    if (k < 0) break;
    ++pick[k];
    for (unsigned j = static_cast<unsigned>(k) + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return cm;
}

}  // namespace formalpde
