#include "formalpde/report.hpp"

#include "formalpde/corpus.hpp"
#include "formalpde/purity.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace formalpde {

using nlohmann::json;

namespace {

json jet_list(const std::vector<Jet>& js, unsigned m, unsigned first_variable = 1) {
  json out = json::array();
  for (const auto& j : js) out.push_back(jet_name(j, m, first_variable));
  return out;
}

template <class F>
json equation_list(const BasicSystem<F>& sys, unsigned first_variable = 1) {
  json out = json::array();
  for (const auto& e : sys.equations()) out.push_back(render_expression(e, sys.m(), first_variable));
  return out;
}

json frame_json(const CoordinateChange& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json tableau_json(const JanetTableau& tab) {
  return json{{"order", tab.order}, {"beta", tab.beta}, {"alpha", tab.alpha}, {"frame", frame_json(tab.frame)}};
}

json delta_json(const DeltaReport& r) {
  return json{{"s", r.s},
              {"order", r.order},
              {"domain", r.domain},
              {"codomain", r.codomain},
              {"cocycles", r.cocycles},
              {"coboundaries", r.coboundaries},
              {"cohomology", r.cohomology}};
}

// Runs a section builder, turning a failure into an "error" entry.
template <class Fn>
json guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return json{{"error", e.what()}};
  }
}

bool all_primitive(const json& v) {
  return std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// One line for flat records and numeric rows, nested blocks otherwise.
std::string inline_form(const json& v) {
  std::string out;
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      out += (out.empty() ? "" : " ") + it.key() + "=" + scalar(it.value());
  } else {
    for (const auto& x : v) out += (out.empty() ? "" : " ") + scalar(x);
  }
  return out;
}

void render_node(const json& node, const std::string& indent, std::ostringstream& out) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string key = node.is_object() ? it.key() : "-";
    const json& v = it.value();
    if (v.is_primitive()) {
      out << indent << key << ": " << scalar(v) << "\n";
    } else if (v.empty()) {
      out << indent << key << ": (none)\n";
    } else if (v.is_array() && all_primitive(v)) {
      if (v.front().is_string()) {
        out << indent << key << ":\n";
        for (const auto& x : v) out << indent << "  " << x.get<std::string>() << "\n";
      } else {
        out << indent << key << ": " << inline_form(v) << "\n";
      }
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return all_primitive(x); })) {
      out << indent << key << ":\n";
      for (const auto& x : v) out << indent << "  " << inline_form(x) << "\n";
    } else {
      out << indent << key << ":\n";
      render_node(v, indent + "  ", out);
    }
  }
}

}  // namespace

std::string digest(const LinearSystem& sys) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : render(sys)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json input_section(const SystemDocument& doc) {
  return json{{"n", doc.n},
              {"m", doc.m},
              {"order", doc.system.order()},
              {"equations", equation_list(doc.system)},
              {"digest", digest(doc.system)}};
}

json completion_section(const IntegrabilityReport& rep) {
  json trace = json::array();
  for (const auto& st : rep.trace) {
    json gained = json::array();
    for (const auto& e : st.gained) gained.push_back(render_expression(e, rep.final_system.m()));
    trace.push_back({{"step", st.step},
                     {"kind", st.kind == TraceStep::Kind::Projection ? "projection" : "raise order"},
                     {"order", st.order},
                     {"dim_before", st.dim_before},
                     {"dim_after", st.dim_after},
                     {"gained", gained}});
  }
  json surj = json::array();
  for (const auto& [t, onto] : rep.surjective) surj.push_back({{"order", t}, {"onto", onto}});
  json out{{"verdict", to_string(rep.verdict)},
           {"steps", rep.steps},
           {"gained_equations", rep.gained_equations},
           {"trace", trace},
           {"final_order", rep.final_system.order()},
           {"final_system", equation_list(rep.final_system)},
           {"homogeneous", rep.homogeneous},
           {"projections_onto", surj}};
  if (!rep.homogeneous && rep.verdict != Verdict::WindowInconclusive)
    out["h2_certificate"] = json{{"acyclic", rep.h2.acyclic},
                                 {"exact", rep.h2.exact},
                                 {"orders", {rep.h2.first_order, rep.h2.last_order}}};
  return out;
}

json involution_section(const LinearSystem& completed, const InvolutionOptions& opts) {
  const auto form = involutive_form(completed, opts);
  const auto& inv = form.involution;
  return json{{"involutive_order", form.tableau.order},
              {"given_order_involutive", form.tableau.order == completed.order()},
              {"witness_trial", inv.witness_trial},
              {"cartan_passed", inv.cartan_passed},
              {"next_symbol_dimension", inv.next_symbol_dimension},
              {"tableau", tableau_json(form.tableau)},
              {"codimension", codimension(form.tableau)},
              {"system_in_frame", equation_list(form.system)}};
}

json acyclicity_section(const LinearSystem& completed, unsigned extra_orders) {
  json rows = json::array();
  const unsigned q = completed.order();
  for (unsigned t = q; t <= q + extra_orders; ++t) {
    if (symbol_dimension(completed, t) == 0) break;
    for (unsigned s = 1; s <= completed.n(); ++s) rows.push_back(delta_json(cohomology(completed, s, t)));
  }
  json dims = json::array();
  for (unsigned t = 0; t <= q + extra_orders; ++t) dims.push_back(symbol_dimension(completed, t));
  return json{{"symbol_dimensions", dims}, {"table", rows}};
}

json hilbert_section(const LinearSystem& completed, unsigned truncation) {
  json out{{"truncation", truncation}, {"function", hilbert_function(completed, truncation).coefficients}};
  json slices = json::array();
  for (unsigned t = 0; t <= truncation; ++t) slices.push_back(slice(completed, t).dimension);
  out["slice_dimensions"] = slices;
  return out;
}

json inverse_section(const LinearSystem& completed) {
  const auto inv = finite_inverse_system(completed);
  json gens = json::array();
  for (const auto& g : top_generators(completed)) gens.push_back(render(g, completed.m()));
  json soc = json::array();
  for (const auto& v : socle(inv)) {
    TorsionElement t;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) t.combination.emplace_back(inv.parametric[i], v[i]);
    soc.push_back(render(t, completed.m()));
  }
  return json{{"finite", true},
              {"dimension", inv.dimension()},
              {"top_order", inv.top_order},
              {"parametric", jet_list(inv.parametric, completed.m())},
              {"generators", gens},
              {"socle", soc}};
}

json purity_section(const LinearSystem& sys, const InvolutionOptions& opts) {
  const auto rep = is_pure(sys, opts);
  json torsion = json::array();
  for (const auto& t : rep.torsion) torsion.push_back(render(t, sys.m()));
  json out{{"codimension", rep.codimension},
           {"pure", rep.pure},
           {"torsion", torsion},
           {"involutive_order", rep.involutive_order},
           {"frame", frame_json(rep.frame)},
           {"notes", rep.notes}};
  const unsigned params = rep.n - rep.codimension;
  if (rep.localized_dimension) out["localized_dimension"] = *rep.localized_dimension;
  if (!rep.localized_parametric.empty())
    out["localized_parametric"] = jet_list(rep.localized_parametric, sys.m(), params + 1);
  if (rep.alpha) out["alpha"] = *rep.alpha;
  return out;
}

json analyze(const SystemDocument& doc, const AnalysisOptions& opts) {
  InvolutionOptions io;
  io.seed = opts.seed;
  io.window = opts.completion.window;

  json report;
  report["input"] = input_section(doc);
  json notes = json::array({"Spencer operator uses Macaulay's sign: (d_i f)^k_μ = f^k_{μ+1_i}",
                            "characteristic minors are listed as computed, without taking radicals"});
  for (const auto& n : corpus_notes(doc.system)) notes.push_back(n);

  const auto rep = complete(doc.system, opts.completion);
  report["completion"] = completion_section(rep);
  if (rep.verdict == Verdict::WindowInconclusive) {
    notes.push_back("completion did not settle inside the window; later sections are omitted");
    report["notes"] = notes;
    return report;
  }
  const LinearSystem& fin = rep.final_system;

  report["involution"] = guarded([&] { return involution_section(fin, io); });
  report["acyclicity"] = guarded([&] { return acyclicity_section(fin, fin.n()); });
  report["characteristic_minors"] = guarded([&] {
    json minors = json::array();
    for (const auto& p : characteristic_matrix(fin).minors) minors.push_back(p.to_string());
    return minors;
  });

  json hilbert = guarded([&] { return hilbert_section(fin, opts.hilbert_truncation); });
  // A principal class claim: as many generators as the codimension.
  if (doc.system.m() == 1 && !doc.system.equations().empty() && report["involution"].contains("codimension") &&
      report["involution"]["codimension"].get<std::size_t>() == doc.system.equations().size()) {
    std::vector<unsigned> degrees;
    for (const auto& e : doc.system.equations()) degrees.push_back(e.order());
    const auto series = principal_class_series(degrees, doc.system.n(), opts.hilbert_truncation);
    const auto cmp = compare(hilbert_function(fin, opts.hilbert_truncation), series);
    hilbert["principal_class"] = json{{"degrees", degrees}, {"series", series.coefficients}, {"agree", cmp.agree}};
    if (cmp.first_mismatch) hilbert["principal_class"]["first_mismatch"] = *cmp.first_mismatch;
  }
  report["hilbert"] = hilbert;

  const bool finite = report["involution"].contains("codimension") &&
                      report["involution"]["codimension"].get<unsigned>() == doc.system.n();
  if (finite)
    report["inverse"] = guarded([&] { return inverse_section(fin); });
  else
    report["inverse"] = json{{"finite", false}, {"note", "inverse system is infinite-dimensional"}};

  report["purity"] = guarded([&] { return purity_section(fin, io); });
  report["notes"] = notes;
  return report;
}

bool inconclusive(const json& report) {
  return report.contains("completion") && report["completion"].value("verdict", "") == to_string(Verdict::WindowInconclusive);
}

std::string render_text(const json& report) {
  std::ostringstream out;
  render_node(report, "", out);
  return out.str();
}

}  // namespace formalpde
