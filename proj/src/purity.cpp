#include "formalpde/purity.hpp"

#include <sstream>

namespace formalpde {

std::pair<Polynomial, Jet> LocalizedSystem::map(const Jet& j) const {
  std::vector<unsigned> head(j.index.entries().begin(), j.index.entries().begin() + parameters);
  std::vector<unsigned> tail(j.index.entries().begin() + parameters, j.index.entries().end());
  return {Polynomial::monomial(head), Jet{j.unknown, MultiIndex(tail)}};
}

ParamSystem localize_equations(const LinearSystem& sys, unsigned r) {
  const unsigned n = sys.n();
  if (r > n) throw std::invalid_argument("codimension exceeds variable count");
  LocalizedSystem helper;
  helper.original_n = n;
  helper.parameters = n - r;
  std::vector<LocalizedEquation> eqs;
  for (const auto& eq : sys.equations()) {
    JetTerms<ParamScalar> t;
    for (const auto& [jet, c] : eq.terms()) {
      auto [factor, local] = helper.map(jet);
      ParamScalar v(factor * c);
      auto [it, inserted] = t.emplace(local, v);
      if (!inserted) it->second += v;
    }
    LocalizedEquation e(std::move(t));
    if (!e.empty()) eqs.push_back(std::move(e));
  }
  return ParamSystem(r, sys.m(), std::move(eqs));
}

LocalizedSystem localize(const LinearSystem& completed, unsigned r) {
  auto rep = complete(completed);
  if (rep.gained_equations != 0 || rep.verdict == Verdict::WindowInconclusive)
    throw std::invalid_argument("localization needs a completed system");
  LocalizedSystem loc;
  loc.original_n = completed.n();
  loc.parameters = completed.n() - r;
  loc.system = localize_equations(completed, r);
  return loc;
}

BasicFiniteInverseSystem<ParamScalar> localized_inverse(const LocalizedSystem& loc) {
  try {
    return finite_inverse_system(loc.system);
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()) == "apply relative localization first")
      throw std::runtime_error("wrong codimension for localization");
    throw;
  }
}

std::size_t localized_dimension(const LocalizedSystem& loc) { return localized_inverse(loc).dimension(); }

namespace {

// Coordinates of the residue of a localized jet on the localized parametric
// jets, read off the reduced equations.
std::vector<ParamScalar> normal_form(const RowSpace<ParamScalar>& w, const std::vector<Jet>& parametric,
                                     const Jet& j) {
  std::vector<ParamScalar> out(parametric.size());
  for (std::size_t p = 0; p < parametric.size(); ++p)
    if (parametric[p] == j) {
      out[p] = ParamScalar(1);
      return out;
    }
  const std::size_t col = w.index.at(j);
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w.pivots[i] != col) continue;
    for (std::size_t p = 0; p < parametric.size(); ++p) {
      const auto& x = w.rows(i, w.index.at(parametric[p]));
      if (!is_zero(x)) out[p] = -x;
    }
    return out;
  }
  throw std::logic_error("jet is neither parametric nor principal");
}

}  // namespace

std::vector<TorsionElement> torsion_generators(const LinearSystem& completed, unsigned r) {
  const LocalizedSystem loc = localize(completed, r);
  if (r == completed.n()) return {};
  const unsigned q = completed.order();
  const unsigned low = q == 0 ? 0 : q - 1;
  auto inv = localized_inverse(loc);
  const RowSpace<ParamScalar>& w = inv.system.equation_space(std::max(inv.top_order + 1, q));

  JetIndex vidx(completed.n(), completed.m(), 0, low);
  const std::size_t V = vidx.size();
  const std::size_t N = inv.dimension();

  // Localized images, then one common denominator so that every entry is a polynomial.
  std::vector<std::vector<ParamScalar>> images(V);
  for (std::size_t v = 0; v < V; ++v) {
    auto [factor, local] = loc.map(vidx[v]);
    images[v] = normal_form(w, inv.parametric, local);
    for (auto& x : images[v]) x *= ParamScalar(factor);
  }
  std::vector<Polynomial> dens;
  Polynomial common(1);
  for (const auto& img : images)
    for (const auto& x : img) {
      if (x.is_zero() || x.is_polynomial()) continue;
      if (std::find(dens.begin(), dens.end(), x.denominator()) != dens.end()) continue;
      dens.push_back(x.denominator());
      common *= x.denominator();
    }
  // Expand each polynomial coordinate into (parametric jet, monomial) rows over Q.
  std::map<std::pair<std::size_t, Polynomial::Exponent>, std::size_t> rowid;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(V);
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t p = 0; p < N; ++p) {
      const auto& x = images[v][p];
      if (x.is_zero()) continue;
      Polynomial poly = divide_exact(x.numerator() * common, x.denominator());
      for (const auto& [e, c] : poly.terms()) {
        auto key = std::make_pair(p, e);
        auto it = rowid.emplace(key, rowid.size()).first;
        cols[v].emplace_back(it->second, c);
      }
    }
  Matrix<Rational> lmat(rowid.size(), V);
  for (std::size_t v = 0; v < V; ++v)
    for (const auto& [row, c] : cols[v]) lmat(row, v) = c;
  Matrix<Rational> kernel = kernel_basis(lmat);

  // Combinations already zero in the module.
  const RowSpace<Rational>& wl = completed.equation_space(low);
  std::vector<std::vector<Rational>> zero_rows;
  for (std::size_t i = 0; i < wl.rank(); ++i) {
    std::vector<Rational> row(V);
    for (std::size_t j = 0; j < wl.index.size(); ++j) row[vidx.at(wl.index[j])] = wl.rows(i, j);
    zero_rows.push_back(std::move(row));
  }
  auto rank_of = [&](const std::vector<std::vector<Rational>>& rs) {
    Matrix<Rational> m(rs.size(), V);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < V; ++j) m(i, j) = rs[i][j];
    return rank(m);
  };
  std::vector<std::vector<Rational>> kernel_rows;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    std::vector<Rational> row(V);
    for (std::size_t j = 0; j < V; ++j) row[j] = kernel(j, c);
    kernel_rows.push_back(std::move(row));
  }
  const std::size_t k_rank = kernel_rows.size();
  const std::size_t z_rank = rank_of(zero_rows);
  const std::size_t wanted = k_rank - z_rank;

  // Candidates: single jets (lowest rank first), then the kernel basis.
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t v = V; v-- > 0;) {
    std::vector<Rational> e(V);
    e[v] = 1;
    candidates.push_back(std::move(e));
  }
  candidates.insert(candidates.end(), kernel_rows.begin(), kernel_rows.end());

  const auto zs = companion_unknowns(completed);
  std::vector<TorsionElement> out;
  std::vector<std::vector<Rational>> chosen = zero_rows;
  std::size_t chosen_rank = z_rank;
  for (const auto& cand : candidates) {
    if (out.size() == wanted) break;
    auto with_kernel = kernel_rows;
    with_kernel.push_back(cand);
    if (rank_of(with_kernel) != k_rank) continue;
    chosen.push_back(cand);
    std::size_t nr = rank_of(chosen);
    if (nr == chosen_rank) {
      chosen.pop_back();
      continue;
    }
    chosen_rank = nr;
    TorsionElement t;
    for (std::size_t v = V; v-- > 0;)
      if (!is_zero(cand[v])) t.combination.emplace_back(vidx[v], cand[v]);
    if (t.combination.size() == 1 && t.combination[0].second == 1)
      for (std::size_t z = 0; z < zs.size(); ++z)
        if (zs[z] == t.combination[0].first) t.companion_unknown = static_cast<unsigned>(z + 1);
    out.push_back(std::move(t));
  }
  return out;
}

PurityReport is_pure(const LinearSystem& sys, const InvolutionOptions& opts) {
  PurityReport rep;
  rep.n = sys.n();
  auto comp = complete(sys);
  if (comp.verdict == Verdict::WindowInconclusive) throw std::runtime_error("completion inconclusive");
  InvolutiveForm form = involutive_form(comp.final_system, opts);
  rep.frame = form.frame;
  rep.involutive_order = form.tableau.order;
  rep.codimension = codimension(form.tableau);
  const unsigned r = rep.codimension;
  if (r > 0 && r < rep.n) rep.alpha = form.tableau.alpha[rep.n - r - 1];
  if (r == 0) {
    rep.notes.push_back("codimension 0: no localization needed, the inverse system is infinite-dimensional");
    rep.pure = true;
    return rep;
  }
  LocalizedSystem loc;
  loc.original_n = rep.n;
  loc.parameters = rep.n - r;
  loc.system = localize_equations(form.system, r);
  try {
    auto inv = localized_inverse(loc);
    rep.localized_dimension = inv.dimension();
    rep.localized_parametric = inv.parametric;
  } catch (const std::runtime_error& e) {
    rep.notes.push_back(e.what());
  }
  rep.torsion = torsion_generators(form.system, r);
  rep.pure = rep.torsion.empty();
  if (rep.alpha && rep.localized_dimension && *rep.alpha != *rep.localized_dimension)
    rep.notes.push_back("localized dimension differs from the character α^{n-r}");
  return rep;
}

std::string render(const TorsionElement& t, unsigned m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [jet, c] : t.combination) {
    Rational a = abs(c);
    if (first) out << (sgn(c) < 0 ? "-" : "");
    else out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (a != 1) out << a.get_str() << "*";
    std::string name = jet_name(jet, m);
    out << "ȳ" << name.substr(name.find_first_of("_") == std::string::npos ? name.size() : name.find('_'));
    if (m > 1) out << "^" << (jet.unknown + 1);
  }
  if (t.companion_unknown) out << " (z" << *t.companion_unknown << ")";
  return out.str();
}

}  // namespace formalpde
