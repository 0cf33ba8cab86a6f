#include "formalpde/completion.hpp"
#include "formalpde/parser.hpp"

#include <doctest.h>

#include <algorithm>

using namespace formalpde;

namespace {

LinearSystem load(const char* text) { return parse(text).system; }

std::vector<std::string> gained(const IntegrabilityReport& rep) {
  std::vector<std::string> out;
  for (const auto& st : rep.trace)
    for (const auto& e : st.gained) out.push_back(render_expression(e, 1));
  return out;
}

std::vector<std::string> reduced(const LinearSystem& sys) {
  std::vector<std::string> out;
  for (const auto& e : rows_up_to_order(sys.equation_space(sys.order()), sys.order()))
    out.push_back(render_expression(e, sys.m()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> minors(const LinearSystem& sys) {
  std::vector<std::string> out;
  for (const auto& p : characteristic_matrix(sys).minors) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

const char* kExample3 = "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]";
const char* kTwisted = "vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]";
const char* kThird = "vars=3; eq: y[3,3,3] - y[1,1]; eq: y[2,2] - y[1,3]";
const char* kExample7 = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]";
const char* kExample7p = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2] - y[1]; eq: y[3,3]; eq: y[2,4] - y[1,1] - y[3]";

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::FormallyIntegrable) == "formally integrable");
  CHECK(to_string(Verdict::Completed) == "completed");
  CHECK(to_string(Verdict::WindowInconclusive) == "window-inconclusive");
}

TEST_CASE("example 3 gains y_12 then y_22") {
  auto rep = complete(load(kExample3));
  CHECK(rep.verdict == Verdict::Completed);
  CHECK(rep.steps == 2);
  CHECK(gained(rep) == std::vector<std::string>{"y_{12}", "y_{22}"});
  CHECK(rep.trace[0].dim_after < rep.trace[0].dim_before);
  CHECK(rep.final_system.order() == 2);
}

TEST_CASE("twisted cubic completes to three second-order equations") {
  auto rep = complete(load(kTwisted));
  CHECK(rep.verdict == Verdict::Completed);
  CHECK(rep.gained_equations == 2);
  CHECK(reduced(rep.final_system) == std::vector<std::string>{"y_{22} - y_{13}", "y_{23} - y_{1}", "y_{33} - y_{2}"});
  for (unsigned q = 1; q <= 6; ++q) CHECK(symbol_dimension(rep.final_system, q) == 3);
  CHECK(minors(rep.final_system) == std::vector<std::string>{"χ_1*χ_3 - χ_2^2", "χ_2*χ_3", "χ_3^2"});
}

TEST_CASE("third curve is formally integrable at order 4") {
  auto rep = complete(load(kThird));
  CHECK(rep.verdict == Verdict::FormallyIntegrable);
  CHECK(rep.gained_equations == 0);
  REQUIRE(rep.trace.size() == 1);
  CHECK(rep.trace[0].kind == TraceStep::Kind::RaiseOrder);
  CHECK(rep.final_system.order() == 4);
  CHECK(rep.h2.acyclic);
  auto form = involutive_form(rep.final_system);
  CHECK(form.tableau.order == 4);
  CHECK(form.tableau.alpha == std::vector<std::size_t>{6, 0, 0});
  CHECK(codimension(form.tableau) == 2);
}

TEST_CASE("inhomogeneous example 7 variant is formally integrable without new equations") {
  auto rep = complete(load(kExample7p));
  CHECK(rep.verdict == Verdict::FormallyIntegrable);
  CHECK(rep.gained_equations == 0);
  CHECK_FALSE(rep.homogeneous);
  CHECK(rep.h2.acyclic);
  for (const auto& [t, onto] : rep.surjective) CHECK(onto);
}

TEST_CASE("homogeneous systems are certified directly") {
  auto rep = complete(load(kExample7));
  CHECK(rep.homogeneous);
  CHECK(rep.verdict == Verdict::FormallyIntegrable);
  CHECK(rep.steps == 0);
}

TEST_CASE("step budget") {
  CompletionOptions opts;
  opts.max_steps = 1;
  CHECK(complete(load(kExample3), opts).verdict == Verdict::WindowInconclusive);
  opts.max_steps = 0;
  CHECK_THROWS_AS(complete(load(kExample3), opts), std::invalid_argument);
}

TEST_CASE("property: completion is idempotent") {
  for (const char* text : {kExample3, kTwisted, kThird, kExample7p}) {
    auto once = complete(load(text));
    auto twice = complete(once.final_system);
    CHECK(twice.verdict == Verdict::FormallyIntegrable);
    CHECK(twice.gained_equations == 0);
    CHECK(reduced(twice.final_system) == reduced(once.final_system));
  }
}

TEST_CASE("involutive form and codimension") {
  auto ex7 = load(kExample7);
  auto form = involutive_form(ex7);
  CHECK(form.tableau.order == 5);
  CHECK(codimension(form.tableau) == 4);
  CHECK(codimension(ex7) == 4);
  CHECK_THROWS_WITH(codimension(load(kExample3)), "system is not completed");
  CHECK(codimension(load("vars=3;")) == 0);
}

TEST_CASE("property: codimension is invariant under 20 random frames") {
  const char* systems[] = {"vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]",
                           "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,3]; eq: y[2,2] - y[1,2]",
                           "vars=3; eq: y[1,3]; eq: y[2,3]", "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]"};
  for (const char* text : systems) {
    auto sys = complete(load(text)).final_system;
    const unsigned cd = codimension(sys);
    for (const auto& frame : random_frames(3, 20, 17)) CHECK(codimension(change_coordinates(sys, frame)) == cd);
  }
}

TEST_CASE("example 7 characteristic minors") {
  CHECK(minors(load(kExample7)) ==
        std::vector<std::string>{"χ_1^2 - χ_2*χ_4", "χ_2^2 - χ_3*χ_4", "χ_3^2", "χ_4^2"});
}
