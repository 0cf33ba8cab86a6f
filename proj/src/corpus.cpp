#include "formalpde/corpus.hpp"

#include "formalpde/hilbert.hpp"
#include "formalpde/parser.hpp"
#include "formalpde/purity.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace formalpde {

std::string to_string(Source s) {
  switch (s) {
    case Source::Published: return "published";
    case Source::Oracle: return "oracle";
    case Source::Identity: return "identity";
  }
  return "?";
}

bool CorpusRun::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

LinearSystem load(const std::string& text) { return parse(text).system; }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string csv(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(std::to_string(x));
  return join(parts, ",");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string jets(const std::vector<Jet>& js, unsigned m, unsigned first_variable = 1) {
  std::vector<std::string> parts;
  for (const auto& j : js) parts.push_back(jet_name(j, m, first_variable));
  return join(parts);
}

std::string alpha_text(const JanetTableau& tab) { return "(" + csv(tab.alpha) + ")"; }

std::string series_text(const PowerSeries& s) { return csv(s.coefficients); }

std::vector<std::size_t> slice_dims(const LinearSystem& sys, unsigned lo, unsigned hi) {
  std::vector<std::size_t> out;
  for (unsigned t = lo; t <= hi; ++t) out.push_back(slice(sys, t).dimension);
  return out;
}

std::vector<std::size_t> symbol_dims(const LinearSystem& sys, unsigned lo, unsigned hi) {
  std::vector<std::size_t> out;
  for (unsigned t = lo; t <= hi; ++t) out.push_back(symbol_dimension(sys, t));
  return out;
}

std::string equations_text(const LinearSystem& sys) {
  std::vector<std::string> parts;
  for (const auto& e : sys.equations()) parts.push_back(render_expression(e, sys.m()));
  std::sort(parts.begin(), parts.end());
  return join(parts, "; ");
}

std::string equations_text(const ParamSystem& sys, unsigned first_variable) {
  std::vector<std::string> parts;
  for (const auto& e : sys.equations()) parts.push_back(render_expression(e, sys.m(), first_variable));
  std::sort(parts.begin(), parts.end());
  return join(parts, "; ");
}

std::string torsion_text(const std::vector<TorsionElement>& ts, unsigned m) {
  std::vector<std::string> parts;
  for (const auto& t : ts) {
    parts.push_back(render(t, m));
  }
  return parts.empty() ? "none" : join(parts, "; ");
}

std::string generators_text(const std::vector<ModularEquation>& gens, unsigned m, const std::string& name) {
  std::vector<std::string> parts;
  for (const auto& g : gens) {
    RenderOptions ro;
    ro.name = name;
    parts.push_back(render(g, m, ro));
  }
  return join(parts, "; ");
}

std::string socle_text(const FiniteInverseSystem& inv) {
  std::vector<std::string> parts;
  for (const auto& v : socle(inv)) {
    TorsionElement t;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) t.combination.emplace_back(inv.parametric[i], v[i]);
    parts.push_back(render(t, inv.system.m()));
  }
  return join(parts, "; ");
}

CoordinateChange shear(unsigned n, unsigned i, unsigned j, long c) {
  CoordinateChange a = CoordinateChange::identity(n);
  a(i, j) = c;
  return a;
}

CoordinateChange reversal(unsigned n) {
  CoordinateChange a(n, n);
  for (unsigned i = 0; i < n; ++i) a(i, n - 1 - i) = 1;
  return a;
}

// Leading terms "a^{..} + c*a^{..}" of a rendered modular equation.
std::string leading_terms(const std::string& rendered, std::size_t count) {
  const std::string mark = "≡ ";
  auto start = rendered.find(mark);
  if (start == std::string::npos) return rendered;
  start += mark.size();
  std::size_t pos = start;
  for (std::size_t k = 0; k < count; ++k) {
    auto next = rendered.find(" + ", pos);
    auto minus = rendered.find(" - ", pos);
    next = std::min(next, minus);
    if (next == std::string::npos) {
      auto end = rendered.find(" = 0");
      return rendered.substr(start, end - start);
    }
    if (k + 1 == count) return rendered.substr(start, next - start);
    pos = next + 3;
  }
  return rendered.substr(start);
}

class Checker {
 public:
  Checker(CorpusRun& run, std::uint64_t seed) : run_(run) { opts.seed = seed; }

  void check(const std::string& key, const std::string& expected, Source source,
             const std::function<std::string()>& actual) {
    CheckResult c;
    c.key = key;
    c.expected = expected;
    c.source = source;
    try {
      c.actual = actual();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.pass = c.actual == c.expected;
    run_.checks.push_back(std::move(c));
  }

  void note(std::string text) { run_.notes.push_back(std::move(text)); }

  InvolutionOptions opts;

 private:
  CorpusRun& run_;
};

// Common checks for a homogeneous system of finite type: dimension,
// parametric jets and the counted Hilbert function against its oracle.
void finite_checks(Checker& c, const LinearSystem& sys, const std::string& dim, const std::string& par,
                   const std::string& hilbert) {
  c.check("dim M", dim, Source::Published,
          [&] { return std::to_string(finite_inverse_system(complete(sys).final_system).dimension()); });
  if (!par.empty())
    c.check("parametric jets", par, Source::Published, [&] {
      auto inv = finite_inverse_system(complete(sys).final_system);
      return jets(inv.parametric, sys.m());
    });
  c.check("hilbert function T=8", hilbert, Source::Oracle,
          [&] { return series_text(hilbert_function(complete(sys).final_system, 8)); });
}

void principal_check(Checker& c, const LinearSystem& sys, const std::vector<unsigned>& degrees, unsigned T) {
  c.check("hilbert function = principal class series (" + csv(degrees) + ") to T=" + std::to_string(T), "agree",
          Source::Identity, [&] {
            auto cmp = compare(hilbert_function(complete(sys).final_system, T),
                               principal_class_series(degrees, sys.n(), T));
            return cmp.agree ? std::string("agree") : "mismatch at degree " + std::to_string(*cmp.first_mismatch);
          });
}

const char* kAbstract1 = "vars=1; eq: y[1,1]";
const char* kAbstract2 = "vars=2; eq: y[2,2]; eq: y[1,2] - y[1,1]";
const char* kAbstract2p = "vars=2; eq: y[2,2,2]; eq: y[1,2] - y[1,1]";
const char* kAbstract3 = "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,1]; eq: y[2,2]";
const char* kExample1 = "vars=2; eq: y[2,2,2]; eq: y[1,2,2]; eq: y[1,1,2]; eq: y[1,1,1]; eq: y[2,2]; eq: y[1,2]";
const char* kExample2 = "vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]";
const char* kExample3 = "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]";
const char* kExample4 = "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,3]; eq: y[2,2] - y[1,2]";
const char* kExample5R = "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]; eq: y[1,3]; eq: y[1,2]";
const char* kExample5R1 = "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]";
const char* kExample5R2 = "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3,3]; eq: y[2,2] - y[1,1]";
const char* kTwisted = "vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]";
const char* kThird = "vars=3; eq: y[3,3,3] - y[1,1]; eq: y[2,2] - y[1,3]";
const char* kExample7 = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]";
const char* kExample7p = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2] - y[1]; eq: y[3,3]; eq: y[2,4] - y[1,1] - y[3]";
const char* kExample8 = "vars=3; eq: y[1,3]; eq: y[2,3]";

void run_abstract1(Checker& c) {
  const auto sys = load(kAbstract1);
  finite_checks(c, sys, "2", "y, y_{1}", "1,1,0,0,0,0,0,0,0");
  principal_check(c, sys, {2}, 5);
}

void run_abstract2(Checker& c) {
  const auto sys = load(kAbstract2);
  finite_checks(c, sys, "4", "y, y_{1}, y_{2}, y_{11}", "1,2,1,0,0,0,0,0,0");
  principal_check(c, sys, {2, 2}, 6);
}

void run_abstract2prime(Checker& c) {
  const auto sys = load(kAbstract2p);
  finite_checks(c, sys, "6", "", "1,2,2,1,0,0,0,0,0");
  c.check("par_3", "y, y_{1}, y_{2}, y_{11}, y_{22}, y_{111}", Source::Published,
          [&] { return jets(slice(complete(sys).final_system, 3).parametric, 1); });
  principal_check(c, sys, {3, 2}, 7);
}

void run_abstract3(Checker& c) {
  const auto sys = load(kAbstract3);
  finite_checks(c, sys, "8", "y, y_{1}, y_{2}, y_{3}, y_{11}, y_{12}, y_{13}, y_{111}", "1,3,3,1,0,0,0,0,0");
  principal_check(c, sys, {2, 2, 2}, 6);
}

void run_example1(Checker& c) {
  const auto sys = load(kExample1);
  c.check("verdict", "formally integrable", Source::Published, [&] { return to_string(complete(sys).verdict); });
  c.check("involutive", "yes", Source::Published,
          [&] { return yes_no(is_involutive_symbol(sys, sys.order(), c.opts).involutive); });
  c.check("dim R", "4", Source::Published, [&] { return std::to_string(finite_inverse_system(sys).dimension()); });
  c.check("basis of R dual to", "y, y_{1}, y_{2}, y_{11}", Source::Published,
          [&] { return jets(finite_inverse_system(sys).parametric, 1); });
  c.check("generator count", "2", Source::Published, [&] { return std::to_string(top_generators(sys).size()); });
  c.check("generators", "E ≡ a^{2} = 0; E ≡ a^{11} = 0", Source::Published,
          [&] { return generators_text(top_generators(sys), 1, "E"); });
  c.check("socle", "ȳ_{2}; ȳ_{11}", Source::Published, [&] { return socle_text(finite_inverse_system(sys)); });
  c.check("dim socle = dim top", "yes", Source::Identity,
          [&] { return yes_no(socle(sys).size() == top_generators(sys).size()); });
  c.check("hilbert function T=8", "1,2,1,0,0,0,0,0,0", Source::Oracle,
          [&] { return series_text(hilbert_function(sys, 8)); });
}

void run_example2(Checker& c) {
  const auto sys = load(kExample2);
  const auto frame = shear(3, 0, 1, -1);  // d_1 -> d_1 - d_2
  c.check("involutive in the given coordinates", "no", Source::Published,
          [&] { return yes_no(is_involutive_symbol(sys, 2, c.opts).witness_trial == 0); });
  c.check("equations after d_1 -> d_1 - d_2", "y_{13}; y_{22} - y_{12}; y_{23}; y_{33}", Source::Published,
          [&] {
    auto moved = change_coordinates(sys, frame);
    return equations_text(LinearSystem(3, 1, rows_up_to_order(moved.equation_space(2), 2)));
  });
  c.check("involutive after d_1 -> d_1 - d_2", "yes", Source::Published, [&] {
    return yes_no(is_involutive_symbol(sys, 2, c.opts, &frame).witness_trial == 0);
  });
  c.check("classes 3,2,1 solved counts after frame change", "(1,2,1)", Source::Published,
          [&] { return "(" + csv(janet_tableau(sys, 2, frame).beta) + ")"; });
  c.check("codimension", "2", Source::Published, [&] { return std::to_string(codimension(sys, c.opts)); });
  // χ_1 y_3 = 0 over ℚ(χ_1), which the reduced form divides by χ_1.
  c.check("localized consequences of order <= 1", "y_{3}", Source::Published, [&] {
    auto loc = localize(complete(change_coordinates(sys, frame)).final_system, 2);
    std::vector<std::string> low;
    for (const auto& e : rows_up_to_order(loc.system.equation_space(2), 1)) low.push_back(render_expression(e, 1, 2));
    return low.empty() ? std::string("none") : join(low, "; ");
  });
  c.check("torsion", "ȳ_{3} (z4)", Source::Published, [&] { return torsion_text(is_pure(sys, c.opts).torsion, 1); });
  c.check("2-pure", "no", Source::Published, [&] { return yes_no(is_pure(sys, c.opts).pure); });
  c.check("hilbert function T=8", "1,3,2,2,2,2,2,2,2", Source::Oracle,
          [&] { return series_text(hilbert_function(sys, 8)); });
}

void run_example3(Checker& c) {
  const auto sys = load(kExample3);
  c.check("verdict", "completed", Source::Published, [&] { return to_string(complete(sys).verdict); });
  c.check("gained equations by step", "y_{12} | y_{22}", Source::Published, [&] {
    std::vector<std::string> steps;
    for (const auto& st : complete(sys).trace) {
      std::vector<std::string> g;
      for (const auto& e : st.gained) g.push_back(render_expression(e, 1));
      if (!g.empty()) steps.push_back(join(g, ", "));
    }
    return join(steps, " | ");
  });
  const auto frame = reversal(3);
  c.check("involutive after (1,2,3) -> (3,2,1)", "yes", Source::Published, [&] {
    auto fin = complete(sys).final_system;
    return yes_no(is_involutive_symbol(fin, fin.order(), c.opts, &frame).witness_trial == 0);
  });
  c.check("characters after (1,2,3) -> (3,2,1)", "(2,0,0)", Source::Published, [&] {
    auto fin = complete(sys).final_system;
    return alpha_text(janet_tableau(fin, fin.order(), frame));
  });
  c.check("codimension", "2", Source::Published,
          [&] { return std::to_string(codimension(complete(sys).final_system, c.opts)); });
  c.check("2-pure", "yes", Source::Published, [&] { return yes_no(is_pure(sys, c.opts).pure); });
  c.check("first-order companion torsion", "none", Source::Published, [&] {
    auto comp = first_order_companion(complete(sys).final_system);
    return torsion_text(is_pure(comp, c.opts).torsion, comp.m());
  });
  c.check("first-order companion 2-pure", "yes", Source::Published, [&] {
    auto comp = first_order_companion(complete(sys).final_system);
    auto rep = is_pure(comp, c.opts);
    return yes_no(rep.pure && rep.codimension == 2);
  });
  c.check("counted vs (2,2) series", "mismatch at degree 2", Source::Oracle, [&] {
    auto cmp = compare(hilbert_function(complete(sys).final_system, 6), principal_class_series({2, 2}, 3, 6));
    return cmp.agree ? std::string("agree") : "mismatch at degree " + std::to_string(*cmp.first_mismatch);
  });
  c.check("hilbert function T=8", "1,3,2,2,2,2,2,2,2", Source::Oracle,
          [&] { return series_text(hilbert_function(complete(sys).final_system, 8)); });
}

void run_example4(Checker& c) {
  const auto sys = load(kExample4);
  c.check("involutive in the given coordinates", "yes", Source::Published,
          [&] { return yes_no(is_involutive_symbol(sys, 2, c.opts).witness_trial == 0); });
  c.check("codimension", "2", Source::Published, [&] { return std::to_string(codimension(sys, c.opts)); });
  c.check("localized system", "y_{22} - (χ_1)*y_{2}; y_{23} - (χ_1)*y_{3}; y_{33}", Source::Published,
          [&] { return equations_text(localize(sys, 2).system, 2); });
  c.check("localized parametric jets", "y, y_{2}, y_{3}", Source::Published,
          [&] { return jets(is_pure(sys, c.opts).localized_parametric, 1, 2); });
  c.check("localized dimension", "3", Source::Published,
          [&] { return std::to_string(localized_dimension(localize(sys, 2))); });
  c.check("alpha", "3", Source::Published, [&] { return std::to_string(is_pure(sys, c.opts).alpha.value_or(0)); });
  c.check("2-pure", "yes", Source::Published, [&] { return yes_no(is_pure(sys, c.opts).pure); });
  c.check("hilbert function T=8", "1,3,3,3,3,3,3,3,3", Source::Oracle,
          [&] { return series_text(hilbert_function(sys, 8)); });
}

void run_example5(Checker& c) {
  const auto r = load(kExample5R);
  const auto r1 = load(kExample5R1);
  const auto r2 = load(kExample5R2);
  c.check("dim R", "5", Source::Published, [&] { return std::to_string(finite_inverse_system(r).dimension()); });
  c.check("dim R'", "8", Source::Published, [&] { return std::to_string(finite_inverse_system(r1).dimension()); });
  c.check("dim R''", "12", Source::Published, [&] { return std::to_string(finite_inverse_system(r2).dimension()); });
  c.check("hilbert function R' (1+x)^3", "1,3,3,1,0,0", Source::Published,
          [&] { return series_text(hilbert_function(r1, 5)); });
  c.check("hilbert function R'' (1+x+x^2)(1+x)^2", "1,3,4,3,1,0", Source::Published,
          [&] { return series_text(hilbert_function(complete(r2).final_system, 5)); });
  principal_check(c, r1, {2, 2, 2}, 6);
  principal_check(c, r2, {2, 3, 2}, 7);
  c.check("generator of R", "E ≡ a^{11} + a^{22} + a^{33} = 0", Source::Published,
          [&] { return generators_text(top_generators(r), 1, "E"); });
  c.check("generator of R'", "E' ≡ a^{111} + a^{122} + a^{133} = 0", Source::Published,
          [&] { return generators_text(top_generators(r1), 1, "E'"); });
  c.check("generator of R''", "E'' ≡ a^{1113} + a^{1223} + a^{1333} = 0", Source::Published,
          [&] { return generators_text(top_generators(complete(r2).final_system), 1, "E''"); });
  c.check("d_1 E'", "d_1E' ≡ a^{11} + a^{22} + a^{33} = 0", Source::Published, [&] {
    auto gens = top_generators(r1);
    if (gens.size() != 1) throw std::runtime_error("expected a single generator");
    ModularEquation d;
    d.section = spencer_apply(0, gens[0].section);
    RenderOptions ro;
    ro.name = "d_1E'";
    return render(d, 1, ro);
  });
  c.check("dim socle R = dim top R", "yes", Source::Identity,
          [&] { return yes_no(socle(r).size() == top_generators(r).size()); });
  c.check("hilbert function R T=8", "1,3,1,0,0,0,0,0,0", Source::Oracle,
          [&] { return series_text(hilbert_function(r, 8)); });
  c.check("hilbert function R'' T=8", "1,3,4,3,1,0,0,0,0", Source::Oracle,
          [&] { return series_text(hilbert_function(complete(r2).final_system, 8)); });
}

void run_example6(Checker& c) {
  const auto tw = load(kTwisted);
  c.check("twisted cubic: verdict", "completed", Source::Published, [&] { return to_string(complete(tw).verdict); });
  c.check("twisted cubic: completed system", "y_{22} - y_{13}; y_{23} - y_{1}; y_{33} - y_{2}", Source::Published,
          [&] { auto fin = complete(tw).final_system;
            return equations_text(LinearSystem(3, 1, rows_up_to_order(fin.equation_space(2), 2))); });
  c.check("twisted cubic: involutive at order 2", "yes", Source::Published, [&] {
    auto fin = complete(tw).final_system;
    return yes_no(is_involutive_symbol(fin, 2, c.opts).involutive);
  });
  c.check("twisted cubic: characters", "(3,0,0)", Source::Published, [&] {
    auto fin = complete(tw).final_system;
    return alpha_text(involutive_form(fin, c.opts).tableau);
  });
  c.check("twisted cubic: par_2", "y, y_{1}, y_{2}, y_{3}, y_{11}, y_{12}, y_{13}", Source::Published,
          [&] { return jets(slice(complete(tw).final_system, 2).parametric, 1); });
  c.check("twisted cubic: dim g_1..g_6", "3,3,3,3,3,3", Source::Published,
          [&] { return csv(symbol_dims(complete(tw).final_system, 1, 6)); });
  c.check("twisted cubic: 2-pure", "yes", Source::Published, [&] { return yes_no(is_pure(tw, c.opts).pure); });
  c.check("twisted cubic: counted vs (3,2) series", "mismatch at degree 2", Source::Oracle, [&] {
    auto cmp = compare(hilbert_function(complete(tw).final_system, 6), principal_class_series({3, 2}, 3, 6));
    return cmp.agree ? std::string("agree") : "mismatch at degree " + std::to_string(*cmp.first_mismatch);
  });
  c.check("twisted cubic: hilbert function T=8", "1,3,3,3,3,3,3,3,3", Source::Oracle,
          [&] { return series_text(hilbert_function(complete(tw).final_system, 8)); });

  const auto th = load(kThird);
  c.check("third curve: verdict", "formally integrable", Source::Published,
          [&] { return to_string(complete(th).verdict); });
  c.check("third curve: dim g_0..g_8", "1,3,5,6,6,6,6,6,6", Source::Published,
          [&] { return csv(symbol_dims(complete(th).final_system, 0, 8)); });
  c.check("third curve: par_5 count", "27", Source::Published,
          [&] { return std::to_string(slice(complete(th).final_system, 5).dimension); });
  c.check("third curve: par_5",
          "y, y_{1}, y_{2}, y_{3}, y_{11}, y_{12}, y_{13}, y_{23}, y_{33}, y_{111}, y_{112}, y_{113}, y_{123}, "
          "y_{133}, y_{233}, y_{1111}, y_{1112}, y_{1113}, y_{1123}, y_{1133}, y_{1233}, y_{11111}, y_{11112}, "
          "y_{11113}, y_{11123}, y_{11133}, y_{11233}",
          Source::Published, [&] { return jets(slice(complete(th).final_system, 5).parametric, 1); });
  c.check("third curve: hilbert function T=5", "1,3,5,6,6,6", Source::Published,
          [&] { return series_text(hilbert_function(complete(th).final_system, 5)); });
  principal_check(c, th, {3, 2}, 8);
  c.check("third curve: characters at order 4", "(6,0,0)", Source::Published,
          [&] { return alpha_text(involutive_form(complete(th).final_system, c.opts).tableau); });
  c.check("third curve: delta sequence g_6 -> ... -> g_3 dims", "6,18,18,6", Source::Published, [&] {
    std::vector<std::size_t> d;
    for (const auto& r : delta_sequence(complete(th).final_system, 6)) d.push_back(r.domain);
    return csv(d);
  });
  c.check("third curve: delta sequence g_6 -> ... -> g_3 exact", "yes", Source::Published, [&] {
    bool exact = true;
    for (const auto& r : delta_sequence(complete(th).final_system, 6)) exact = exact && r.cohomology == 0;
    return yes_no(exact);
  });
  c.check("third curve: delta sequence g_5 -> ... -> g_2 dims", "6,18,18,5", Source::Published, [&] {
    std::vector<std::size_t> d;
    for (const auto& r : delta_sequence(complete(th).final_system, 5)) d.push_back(r.domain);
    return csv(d);
  });
  c.check("third curve: image into Λ^2⊗g_3", "12", Source::Published,
          [&] { return std::to_string(cohomology(complete(th).final_system, 2, 3).coboundaries); });
  c.check("third curve: kernel at Λ^2⊗g_3 >= 13", "yes", Source::Published,
          [&] { return yes_no(cohomology(complete(th).final_system, 2, 3).cocycles >= 13); });
  c.check("third curve: H^2 at g_3 nonzero", "yes", Source::Published,
          [&] { return yes_no(cohomology(complete(th).final_system, 2, 3).cohomology != 0); });
  c.check("third curve: localized parametric jets", "y, y_{2}, y_{3}, y_{23}, y_{33}, y_{233}", Source::Published,
          [&] {
            auto inv = localized_inverse(localize(complete(th).final_system, 2));
            return jets(inv.parametric, 1, 2);
          });
  c.check("third curve: localized dimension", "6", Source::Published,
          [&] { return std::to_string(localized_dimension(localize(complete(th).final_system, 2))); });
  c.check("third curve: localized generator leading terms", "a^{233} + (χ_1)*a^{2223}", Source::Published, [&] {
    auto loc = localize(complete(th).final_system, 2);
    auto gens = top_generators(loc.system, 1);
    if (gens.size() != 1) throw std::runtime_error(std::to_string(gens.size()) + " generators");
    RenderOptions ro;
    ro.first_variable = 2;
    return leading_terms(render(gens[0], 1, ro), 2);
  });
  c.check("third curve: hilbert function T=8", "1,3,5,6,6,6,6,6,6", Source::Oracle,
          [&] { return series_text(hilbert_function(complete(th).final_system, 8)); });
}

void run_example7(Checker& c) {
  const auto sys = load(kExample7);
  c.check("verdict", "formally integrable", Source::Published, [&] { return to_string(complete(sys).verdict); });
  c.check("dim R_1..R_6", "5,11,15,16,16,16", Source::Published, [&] { return csv(slice_dims(sys, 1, 6)); });
  c.check("dim g_2..g_5", "6,4,1,0", Source::Published, [&] { return csv(symbol_dims(sys, 2, 5)); });
  c.check("parametric jets of order 3", "y_{111}, y_{113}, y_{122}, y_{123}", Source::Published, [&] {
    std::vector<Jet> top;
    for (const auto& j : slice(sys, 3).parametric)
      if (j.order() == 3) top.push_back(j);
    std::sort(top.begin(), top.end(), [](const Jet& a, const Jet& b) { return a.index > b.index; });
    return jets(top, 1);
  });
  c.check("H^1..H^4 at g_4", "0,0,0,1", Source::Published, [&] {
    std::vector<std::size_t> h;
    for (unsigned s = 1; s <= 4; ++s) h.push_back(cohomology(sys, s, 4).cohomology);
    return csv(h);
  });
  c.check("g_4 involutive", "no", Source::Published,
          [&] { return yes_no(is_involutive_symbol(sys, 4, c.opts).involutive); });
  c.check("Λ^2⊗g_4 -> Λ^3⊗g_3 -> Λ^4⊗g_2 dims", "6,16,6", Source::Published, [&] {
    auto seq = delta_sequence(sys, 6);
    return csv(std::vector<std::size_t>{seq[2].domain, seq[3].domain, seq[4].domain});
  });
  c.check("T*⊗g_4 -> Λ^2⊗g_3 -> Λ^3⊗g_2 -> Λ^4⊗g_1 dims", "4,24,24,4", Source::Published, [&] {
    auto seq = delta_sequence(sys, 5);
    return csv(std::vector<std::size_t>{seq[1].domain, seq[2].domain, seq[3].domain, seq[4].domain});
  });
  c.check("that sequence exact", "yes", Source::Published, [&] {
    bool exact = true;
    for (const auto& r : delta_sequence(sys, 5)) exact = exact && r.cohomology == 0;
    return yes_no(exact);
  });
  c.check("H^2 at g_3", "0", Source::Published, [&] { return std::to_string(cohomology(sys, 2, 3).cohomology); });
  c.check("dim R", "16", Source::Published, [&] { return std::to_string(finite_inverse_system(sys).dimension()); });
  c.check("generator count", "1", Source::Identity, [&] { return std::to_string(top_generators(sys).size()); });
  c.check("codimension", "4", Source::Published, [&] { return std::to_string(codimension(sys, c.opts)); });
  c.check("4-pure", "yes", Source::Published, [&] { return yes_no(is_pure(sys, c.opts).pure); });
  principal_check(c, sys, {2, 2, 2, 2}, 8);
  c.check("hilbert function T=8", "1,4,6,4,1,0,0,0,0", Source::Oracle,
          [&] { return series_text(hilbert_function(sys, 8)); });
}

void run_example7prime(Checker& c) {
  const auto sys = load(kExample7p);
  c.check("verdict", "formally integrable", Source::Published, [&] { return to_string(complete(sys).verdict); });
  c.check("gained equations", "0", Source::Published,
          [&] { return std::to_string(complete(sys).gained_equations); });
  c.check("2-acyclic symbol certificate", "yes", Source::Published, [&] { return yes_no(complete(sys).h2.acyclic); });
  c.check("dim R_1..R_6", "5,11,15,16,16,16", Source::Published, [&] { return csv(slice_dims(sys, 1, 6)); });
  c.check("dim R", "16", Source::Identity, [&] { return std::to_string(finite_inverse_system(sys).dimension()); });
  c.check("hilbert function T=8", "1,4,6,4,1,0,0,0,0", Source::Oracle,
          [&] { return series_text(hilbert_function(sys, 8)); });
}

void run_example8(Checker& c) {
  const auto sys = load(kExample8);
  const auto frame = shear(3, 0, 2, -1);  // d_1 -> d_1 - d_3
  c.check("involutive in the given coordinates", "no", Source::Published,
          [&] { return yes_no(is_involutive_symbol(sys, 2, c.opts).witness_trial == 0); });
  c.check("involutive after d_1 -> d_1 - d_3", "yes", Source::Published, [&] {
    return yes_no(is_involutive_symbol(sys, 2, c.opts, &frame).witness_trial == 0);
  });
  c.check("characters after d_1 -> d_1 - d_3", "(3,1,0)", Source::Published,
          [&] { return alpha_text(janet_tableau(sys, 2, frame)); });
  c.check("codimension", "1", Source::Published, [&] { return std::to_string(codimension(sys, c.opts)); });
  c.check("localized dimension", "1", Source::Published,
          [&] { return std::to_string(is_pure(sys, c.opts).localized_dimension.value_or(0)); });
  c.check("torsion", "ȳ_{3} (z4)", Source::Published, [&] { return torsion_text(is_pure(sys, c.opts).torsion, 1); });
  c.check("1-pure", "no", Source::Published, [&] { return yes_no(is_pure(sys, c.opts).pure); });
  c.check("hilbert function T=8", "1,3,4,5,6,7,8,9,10", Source::Oracle,
          [&] { return series_text(hilbert_function(sys, 8)); });
}

struct Entry {
  const char* name;
  const char* description;
  const char* source;
  void (*run)(Checker&);
  const char* note = nullptr;
};

const char* kExample7Note =
    "published text gives dim R = 8 for this system, while its own count 1+4+6+4+1 gives 16; 16 is asserted";

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"abstract1", "n=1 ideal (χ²)", kAbstract1, run_abstract1},
      {"abstract2", "n=2 ideal (χ₂², χ₁χ₂ − χ₁²)", kAbstract2, run_abstract2},
      {"abstract2prime", "n=2 ideal (χ₂³, χ₁χ₂ − χ₁²)", kAbstract2p, run_abstract2prime},
      {"abstract3", "n=3 ideal (χ₃², χ₂χ₃ − χ₁², χ₂²)", kAbstract3, run_abstract3},
      {"example1", "third order homogeneous system with two generators", kExample1, run_example1},
      {"example2", "mixed ideal, torsion after a frame change", kExample2, run_example2},
      {"example3", "primary ideal (χ₁², χ₁χ₃ − χ₂)", kExample3, run_example3},
      {"example4", "homogeneous ideal localized over ℚ(χ₁)", kExample4, run_example4},
      {"example5", "systems R, R′, R″ and their modular equations", kExample5R, run_example5},
      {"example6", "twisted cubic and the curve (u⁶, u⁵, u⁴)", kTwisted, run_example6},
      {"example7", "finite type system with 2,3-acyclic but not involutive g₄", kExample7, run_example7, kExample7Note},
      {"example7prime", "inhomogeneous variant of example7", kExample7p, run_example7prime, kExample7Note},
      {"example8", "mixed ideal (χ₁χ₃, χ₂χ₃), not pure", kExample8, run_example8},
  };
  return all;
}

}  // namespace

std::vector<CorpusEntryInfo> corpus_entries() {
  std::vector<CorpusEntryInfo> out;
  for (const auto& e : entries()) out.push_back({e.name, e.description, e.source});
  return out;
}

std::vector<std::string> corpus_notes(const LinearSystem& sys) {
  std::vector<std::string> out;
  const std::string text = render(sys);
  for (const auto& e : entries())
    if (e.note && render(load(e.source)) == text) out.push_back(e.note);
  return out;
}

CorpusRun run_corpus_entry(const std::string& name, unsigned long long seed) {
  for (const auto& e : entries()) {
    if (name != e.name) continue;
    CorpusRun run;
    run.name = e.name;
    run.description = e.description;
    Checker c(run, seed);
    e.run(c);
    if (e.note) run.notes.push_back(e.note);
    return run;
  }
  throw std::out_of_range("unknown corpus entry: " + name);
}

}  // namespace formalpde
