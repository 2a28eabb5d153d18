#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "triqec/serialize.hpp"

using namespace triqec;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("phase chart rendering") {
  std::string md = phase_chart_markdown();
  CHECK(contains(md, "| 1 | Z1 | w^2 | 1 | q0, q4 |"));
  CHECK(contains(md, "| 4 | Z1 | 1 | w | q3 |"));
  CHECK(contains(md, "| 8 | Z2 | 1 | w^2 | q3 |"));

  Json j = phase_chart_json();
  CHECK(j["schema"] == "triqec.phase_chart/1");
  REQUIRE(j["rows"].size() == 8);
  CHECK(j["rows"][0]["s1_exp"] == 2);
  CHECK(j["rows"][0]["qutrits"] == Json::array({0, 4}));
}

TEST_CASE("bit chart rendering marks the conjugate cells") {
  Code code = build_proposed_code();
  std::string md = bit_chart_markdown(code);
  // q0 row matches the unit-exponent chart; q1 deviates at S3.
  CHECK(contains(md, "| X1@q0 | w | 1 | 1 | 1 | - |"));
  CHECK(contains(md, "| X1@q1 | w^2 | 1 | w | 1 | S3 |"));
  CHECK(contains(md, "| X1@q3 | w^2 | w | w | w^2 | S3, S6 |"));

  Json j = bit_chart_json(code);
  CHECK(j["schema"] == "triqec.bit_chart/1");
  int discrepant = 0;
  for (const auto& row : j["rows"]) discrepant += static_cast<int>(row["differs"].size());
  CHECK(discrepant == 8);
}

TEST_CASE("sweep reports carry the counts and the records") {
  Code code = build_proposed_code();
  SingleErrorSweep sweep = sweep_single_errors(code);
  std::string md = single_sweep_markdown(code, sweep);
  CHECK(contains(md, "| corrected | 26 |"));
  CHECK(contains(md, "| degenerate-corrected | 12 |"));
  CHECK(contains(md, "| logical-fault | 18 |"));
  Json j = single_sweep_json(code, sweep);
  CHECK(j["schema"] == "triqec.single_sweep/1");
  CHECK(j["counts"]["total"] == 56);
  CHECK(j["records"].size() == 56);
}

TEST_CASE("stabilizer-set report embeds words, trace, and verdict") {
  GenResult res = generate_greedy({1, 4});
  ValidationReport v = validate(res.zset, {1, 4});
  std::string md = gen_result_markdown(res, v);
  CHECK(contains(md, "S3 = Z2 Z1 Z2 Z1 I I I"));
  CHECK(contains(md, "| seed | q1, q4 | (0,1,0,0,1,0,0) |"));
  CHECK(contains(md, "- overall: PASS"));
  Json j = gen_result_json(res, v);
  CHECK(j["schema"] == "triqec.stabgen/1");
  CHECK(j["validation"]["pass"] == true);
  CHECK(j["words"][0] == "Z2 Z1 Z2 Z1 I I I");
}

TEST_CASE("circuit exports: gate list and wire diagram") {
  Code code = build_proposed_code();
  Circuit c = build_syndrome_circuit(code);
  Json j = circuit_json(c);
  CHECK(j["schema"] == "triqec.circuit/1");
  CHECK(j["gates"].size() == 48);
  CHECK(j["data_wires"] == 7);
  CHECK(j["ancilla_wires"] == 6);
  CHECK(j["gates"][0]["gate"] == "cplus");
  CHECK(j["gates"][0]["control"] == 0);
  CHECK(j["gates"][0]["target"] == 9);

  std::string art = wire_diagram(c);
  std::istringstream lines(art);
  std::string line;
  int wire_lines = 0;
  bool saw_q3 = false, saw_a5 = false;
  while (std::getline(lines, line)) {
    if (line.rfind("q", 0) == 0 || line.rfind("a", 0) == 0) {
      ++wire_lines;
      CHECK(line.size() == 4 + 48);  // label plus one column per gate
      if (line.rfind("q3", 0) == 0) saw_q3 = true;
      if (line.rfind("a5", 0) == 0) saw_a5 = true;
    }
  }
  CHECK(wire_lines == 13);
  CHECK(saw_q3);
  CHECK(saw_a5);
}

TEST_CASE("cost rendering") {
  Code code = build_proposed_code();
  CostReport r = cost(build_syndrome_circuit(code));
  std::string md = cost_markdown("full", r);
  CHECK(contains(md, "- total gates: 48"));
  CHECK(contains(md, "- depth (max wire load): 10"));
  Json j = cost_json("full", r);
  CHECK(j["schema"] == "triqec.cost/1");
  CHECK(j["total_gates"] == 48);

  std::string cmp = comparison_markdown(comparison_table());
  CHECK(contains(cmp, "| 7-qutrit proposed | 24 | 24 | 48 | 10 | computed |"));
  CHECK(contains(cmp, "| 9-qutrit | 52 | 210 | 262 | 26 | reference |"));
}

TEST_CASE("collision and pair reports") {
  Code code = build_proposed_code();
  PairCollisionReport rep = find_pair_collisions(code, {1, 3});
  std::string md = collisions_markdown(rep);
  CHECK(contains(md, "(q1, q3) vs q5"));
  CHECK(contains(md, "impossible"));
  Json j = collisions_json(rep);
  CHECK(j["schema"] == "triqec.collisions/1");
  CHECK(j["witnesses"].size() == 2);

  PairCheckReport pc = pair_error_check(code);
  std::string pmd = pair_check_markdown(pc);
  CHECK(contains(pmd, "(q0, q6)"));
  CHECK(contains(pmd, "decode round-trip corrected all four: yes"));
}

TEST_CASE("phase-sweep and degeneracy rendering") {
  Code code = build_proposed_code();
  PhasePatternSweep sweep = sweep_phase_patterns(code);
  Json j = phase_sweep_json(code, sweep);
  CHECK(j["schema"] == "triqec.phase_sweep/1");
  CHECK(j["outcomes"].size() == 2187);
  std::string md = phase_sweep_markdown(code, sweep);
  CHECK(contains(md, "| corrected | 9 |"));
  CHECK(contains(md, "| undetected | 162 |"));

  std::vector<PauliWord> errs = {
      PauliWord::single(7, 0, op_from_name("Z1")),
      PauliWord::single(7, 2, op_from_name("Z2")),
  };
  auto classes = degeneracy_classes(code, errs);
  std::string dmd = degeneracy_markdown(errs, classes);
  CHECK(contains(dmd, "class 0"));
  Json dj = degeneracy_json(errs, classes);
  CHECK(dj["schema"] == "triqec.degeneracy/1");
}
