#include "formalpde/corpus.hpp"
#include "formalpde/purity.hpp"
#include "formalpde/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using namespace formalpde;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInconclusive = 1, kMismatch = 2, kParseError = 3, kFailure = 4 };

struct Common {
  std::string report = "text";
  std::uint64_t seed = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const json& j, const Common& c) {
  if (c.report == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << render_text(j);
}

json corpus_json(const CorpusRun& run) {
  json checks = json::array();
  for (const auto& c : run.checks)
    checks.push_back({{"key", c.key},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"source", to_string(c.source)},
                      {"pass", c.pass}});
  return json{{"name", run.name},
              {"description", run.description},
              {"pass", run.pass()},
              {"checks", checks},
              {"notes", run.notes}};
}

void print_corpus_text(const CorpusRun& run) {
  std::size_t failed = 0;
  for (const auto& c : run.checks) failed += !c.pass;
  std::cout << (run.pass() ? "PASS " : "FAIL ") << run.name << " (" << run.checks.size() - failed << "/"
            << run.checks.size() << " values)\n";
  for (const auto& c : run.checks)
    if (!c.pass)
      std::cout << "  " << c.key << " [" << to_string(c.source) << "]\n    expected: " << c.expected
                << "\n    actual:   " << c.actual << "\n";
  for (const auto& n : run.notes) std::cout << "  note: " << n << "\n";
}

int run_examples(const std::string& name, const Common& c) {
  std::vector<std::string> names;
  if (name == "all")
    for (const auto& e : corpus_entries()) names.push_back(e.name);
  else
    names.push_back(name);

  std::vector<std::future<CorpusRun>> jobs;
  for (const auto& n : names)
    jobs.push_back(std::async(std::launch::async, [n, &c] { return run_corpus_entry(n, c.seed); }));

  bool ok = true;
  json all = json::array();
  for (auto& j : jobs) {
    CorpusRun run = j.get();
    ok = ok && run.pass();
    if (c.report == "json")
      all.push_back(corpus_json(run));
    else
      print_corpus_text(run);
  }
  if (c.report == "json") std::cout << all.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal integrability, involution and inverse systems of linear constant-coefficient PDE systems"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--report", common.report, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", common.seed, "Seed for the random frame search")->capture_default_str();

  std::string path;
  unsigned trunc = 8;
  unsigned window = 0;
  unsigned max_steps = 10;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: completion, involution, Hilbert, inverse, purity");
  analyze_cmd->add_option("file", path, "System file ('-' for stdin)")->required();
  analyze_cmd->add_option("--trunc", trunc, "Hilbert function truncation")->capture_default_str();
  analyze_cmd->add_option("--window", window, "δ-cohomology window (0 = 2q + n)");
  analyze_cmd->add_option("--max-steps", max_steps, "Completion step budget")->capture_default_str();

  auto* involution_cmd = app.add_subcommand("involution", "Completion, involutive form and δ-acyclicity table");
  involution_cmd->add_option("file", path, "System file ('-' for stdin)")->required();

  unsigned vars = 0;
  std::vector<unsigned> degrees;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a system or principal class series");
  hilbert_cmd->add_option("file", path, "System file ('-' for stdin)");
  hilbert_cmd->add_option("--vars", vars, "Number of variables for a principal class series");
  hilbert_cmd->add_option("--degrees", degrees, "Generator degrees")->delimiter(',');
  hilbert_cmd->add_option("--trunc", trunc, "Truncation degree")->capture_default_str();

  auto* inverse_cmd = app.add_subcommand("inverse", "Finite inverse system, generators and socle");
  inverse_cmd->add_option("file", path, "System file ('-' for stdin)")->required();

  auto* purity_cmd = app.add_subcommand("purity", "Codimension, localization and torsion");
  purity_cmd->add_option("file", path, "System file ('-' for stdin)")->required();

  auto* examples_cmd = app.add_subcommand("examples", "Built-in example corpus");
  examples_cmd->require_subcommand(1);
  examples_cmd->add_subcommand("list", "List corpus entries");
  std::string example = "all";
  auto* run_cmd = examples_cmd->add_subcommand("run", "Run corpus entries and diff against stored values");
  run_cmd->add_option("name", example, "Entry name or 'all'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  InvolutionOptions io;
  io.seed = common.seed;

  auto load = [&]() { return parse(read_input(path)); };

  try {
    if (*analyze_cmd) {
      AnalysisOptions opts;
      opts.seed = common.seed;
      opts.hilbert_truncation = trunc;
      opts.completion.max_steps = max_steps;
      if (window) opts.completion.window = window;
      const json report = analyze(load(), opts);
      emit(report, common);
      return inconclusive(report) ? kInconclusive : kOk;
    }
    if (*involution_cmd) {
      const auto doc = load();
      const auto rep = complete(doc.system);
      json out{{"input", input_section(doc)}, {"completion", completion_section(rep)}};
      if (rep.verdict == Verdict::WindowInconclusive) {
        emit(out, common);
        return kInconclusive;
      }
      out["involution"] = involution_section(rep.final_system, io);
      out["acyclicity"] = acyclicity_section(rep.final_system, rep.final_system.n());
      emit(out, common);
      return kOk;
    }
    if (*hilbert_cmd) {
      json out;
      if (!degrees.empty()) {
        if (vars == 0) throw CLI::ValidationError("--vars", "required with --degrees");
        const auto s = principal_class_series(degrees, vars, trunc);
        out = json{{"vars", vars}, {"degrees", degrees}, {"series", s.coefficients}, {"sum", s.sum()}};
      } else {
        if (path.empty()) throw CLI::ValidationError("file", "a system file or --degrees is required");
        const auto doc = load();
        const auto rep = complete(doc.system);
        if (rep.verdict == Verdict::WindowInconclusive) {
          emit(json{{"completion", completion_section(rep)}}, common);
          return kInconclusive;
        }
        out = hilbert_section(rep.final_system, trunc);
      }
      if (common.report == "json") {
        std::cout << out.dump(2) << "\n";
      } else {
        const auto& coeffs = out.contains("series") ? out["series"] : out["function"];
        std::string line;
        for (const auto& x : coeffs) line += (line.empty() ? "" : ",") + x.dump();
        std::cout << line << "\n";
      }
      return kOk;
    }
    if (*inverse_cmd) {
      const auto doc = load();
      const auto rep = complete(doc.system);
      if (rep.verdict == Verdict::WindowInconclusive) {
        emit(json{{"completion", completion_section(rep)}}, common);
        return kInconclusive;
      }
      emit(inverse_section(rep.final_system), common);
      return kOk;
    }
    if (*purity_cmd) {
      emit(purity_section(load().system, io), common);
      return kOk;
    }
    if (*examples_cmd) {
      if (examples_cmd->got_subcommand("list")) {
        for (const auto& e : corpus_entries()) std::cout << e.name << "  " << e.description << "\n";
        return kOk;
      }
      return run_examples(example, common);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
