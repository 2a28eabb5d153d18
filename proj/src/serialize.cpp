#include "triqec/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "triqec/reference_tables.hpp"

namespace triqec {

namespace {

std::string fmt_cx(Cx z) {
  char buf[96];
  // Flush tiny residue to a clean zero so reports do not show "-0.000000".
  double re = z.real(), im = z.imag();
  if (re > -5e-7 && re < 5e-7) re = 0.0;
  if (im > -5e-7 && im < 5e-7) im = 0.0;
  std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", re, im);
  return buf;
}

Json counts_json(const SweepCounts& c) {
  return Json{{"corrected", c.corrected},
              {"degenerate_corrected", c.degenerate_corrected},
              {"logical_fault", c.logical_fault},
              {"undetected", c.undetected},
              {"unrecognized", c.unrecognized},
              {"total", c.total()}};
}

void counts_markdown(std::ostringstream& out, const SweepCounts& c) {
  out << "| outcome | count |\n|---|---|\n";
  out << "| corrected | " << c.corrected << " |\n";
  out << "| degenerate-corrected | " << c.degenerate_corrected << " |\n";
  out << "| logical-fault | " << c.logical_fault << " |\n";
  out << "| undetected | " << c.undetected << " |\n";
  out << "| unrecognized | " << c.unrecognized << " |\n";
  out << "| total | " << c.total() << " |\n";
}

// Derived bit-chart exponent: the eigenvalue exponent S_z reads for X1 on q.
Mod3 derived_bit_exp(const Code& code, int zrow, int q) {
  PauliWord e = PauliWord::single(code.n, q, QutritOp{Mod3(1), Mod3(0)});
  return commutation_phase(code.stabilizers[code.z_stab_indices[zrow]], e);
}

}  // namespace

std::string omega_cell(Mod3 e) {
  switch (e.value()) {
    case 1: return "w";
    case 2: return "w^2";
    default: return "1";
  }
}

Json word_json(const PauliWord& w) { return Json(word_to_string(w)); }

Json syndrome_json(const Syndrome& s) {
  Json arr = Json::array();
  for (auto e : s.exps) arr.push_back(e.value());
  return arr;
}

std::string phase_chart_markdown() {
  std::ostringstream out;
  out << "## Phase-error readout chart\n\n";
  out << "| # | error | S1 | S2 | candidate qutrits |\n|---|---|---|---|---|\n";
  int rowno = 1;
  for (const auto& row : phase_chart()) {
    out << "| " << rowno++ << " | Z" << row.z_subscript << " | " << omega_cell(row.s1_exp)
        << " | " << omega_cell(row.s2_exp) << " | ";
    for (size_t i = 0; i < row.qutrits.size(); ++i)
      out << (i ? ", " : "") << "q" << row.qutrits[i];
    out << " |\n";
  }
  return out.str();
}

Json phase_chart_json() {
  Json rows = Json::array();
  for (const auto& row : phase_chart())
    rows.push_back(Json{{"error", std::string("Z") + std::to_string(row.z_subscript)},
                        {"s1_exp", row.s1_exp.value()},
                        {"s2_exp", row.s2_exp.value()},
                        {"qutrits", row.qutrits}});
  return Json{{"schema", "triqec.phase_chart/1"}, {"rows", rows}};
}

std::string bit_chart_markdown(const Code& proposed) {
  std::ostringstream out;
  out << "## Bit-error readout chart (X1 rows; X2 rows are the conjugates)\n\n";
  out << "| error | S3 | S4 | S5 | S6 | differs from unit-exponent chart |\n";
  out << "|---|---|---|---|---|---|\n";
  const auto& ref = bit_chart_reference();
  for (int q = 0; q < 7; ++q) {
    out << "| X1@q" << q << " |";
    std::string differs;
    for (int s = 0; s < 4; ++s) {
      Mod3 d = derived_bit_exp(proposed, s, q);
      out << " " << omega_cell(d) << " |";
      if (d != ref[q][s]) {
        if (!differs.empty()) differs += ", ";
        differs += "S" + std::to_string(s + 3);
      }
    }
    out << " " << (differs.empty() ? "-" : differs) << " |\n";
  }
  return out.str();
}

Json bit_chart_json(const Code& proposed) {
  const auto& ref = bit_chart_reference();
  Json rows = Json::array();
  for (int q = 0; q < 7; ++q) {
    Json exps = Json::array(), diff = Json::array();
    for (int s = 0; s < 4; ++s) {
      Mod3 d = derived_bit_exp(proposed, s, q);
      exps.push_back(d.value());
      if (d != ref[q][s]) diff.push_back("S" + std::to_string(s + 3));
    }
    rows.push_back(Json{{"error", "X1@q" + std::to_string(q)},
                        {"exponents", exps},
                        {"differs", diff}});
  }
  return Json{{"schema", "triqec.bit_chart/1"}, {"rows", rows}};
}

std::string single_sweep_markdown(const Code& c, const SingleErrorSweep& s) {
  std::ostringstream out;
  out << "## Single-error sweep (" << c.id << ")\n\n";
  counts_markdown(out, s.counts);
  out << "\n| error | outcome |\n|---|---|\n";
  for (const auto& rec : s.records)
    out << "| " << word_to_string(rec.error) << " | " << outcome_name(rec.outcome) << " |\n";
  return out.str();
}

Json single_sweep_json(const Code& c, const SingleErrorSweep& s) {
  Json records = Json::array();
  for (const auto& rec : s.records)
    records.push_back(Json{{"error", word_to_string(rec.error)},
                           {"outcome", outcome_name(rec.outcome)}});
  return Json{{"schema", "triqec.single_sweep/1"},
              {"code", c.id},
              {"counts", counts_json(s.counts)},
              {"records", records}};
}

std::string phase_sweep_markdown(const Code& c, const PhasePatternSweep& s) {
  std::ostringstream out;
  out << "## Phase-pattern sweep (" << c.id << ", " << s.outcomes.size()
      << " patterns)\n\n";
  counts_markdown(out, s.counts);
  out << "\nPatterns restored exactly (outcome corrected):\n\n";
  for (size_t i = 0; i < s.outcomes.size(); ++i) {
    if (s.outcomes[i] != Outcome::Corrected) continue;
    auto w = phase_pattern_of(static_cast<int>(i));
    out << "- exponents (";
    for (int q = 0; q < 7; ++q) out << (q ? "," : "") << w[q];
    out << ")\n";
  }
  return out.str();
}

Json phase_sweep_json(const Code& c, const PhasePatternSweep& s) {
  Json outcomes = Json::array();
  for (auto o : s.outcomes) outcomes.push_back(static_cast<int>(o));
  return Json{{"schema", "triqec.phase_sweep/1"},
              {"code", c.id},
              {"counts", counts_json(s.counts)},
              {"outcome_names",
               Json::array({"corrected", "degenerate-corrected", "logical-fault",
                            "undetected", "unrecognized"})},
              {"outcomes", outcomes}};
}

std::string kl_report_markdown(const PauliWord& a, const PauliWord& b, const KLReport& r) {
  std::ostringstream out;
  out << "## Correctability check for pair\n\n";
  out << "- a = " << word_to_string(a) << "\n";
  out << "- b = " << word_to_string(b) << "\n\n";
  out << "Matrix <i_L| a^dag b |j_L>:\n\n";
  for (const auto& row : r.matrix) {
    out << "|";
    for (auto z : row) out << " " << fmt_cx(z) << " |";
    out << "\n";
  }
  out << "\n- off-diagonal zero: " << (r.offdiag_zero ? "yes" : "no") << "\n";
  out << "- diagonal constant: " << (r.diag_constant ? "yes" : "no") << "\n";
  out << "- pass: " << (r.pass() ? "yes" : "no") << "\n";
  return out.str();
}

Json kl_report_json(const PauliWord& a, const PauliWord& b, const KLReport& r) {
  Json matrix = Json::array();
  for (const auto& row : r.matrix) {
    Json jrow = Json::array();
    for (auto z : row) jrow.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    matrix.push_back(jrow);
  }
  return Json{{"schema", "triqec.kl_pair/1"},
              {"a", word_to_string(a)},
              {"b", word_to_string(b)},
              {"matrix", matrix},
              {"offdiag_zero", r.offdiag_zero},
              {"diag_constant", r.diag_constant},
              {"pass", r.pass()}};
}

std::string kl_sweep_markdown(const KLSweep& r, const std::vector<PauliWord>& errors) {
  std::ostringstream out;
  out << "## Correctability sweep over error pairs\n\n";
  out << "- pairs checked: " << r.pairs_checked << "\n";
  out << "- pairs failed: " << r.pairs_failed << "\n";
  out << "- pass: " << (r.pass() ? "yes" : "no") << "\n";
  if (!r.failing_pairs.empty()) {
    out << "\nFailing pairs (capped listing):\n\n";
    for (auto [i, j] : r.failing_pairs)
      out << "- (" << word_to_string(errors[static_cast<size_t>(i)]) << ", "
          << word_to_string(errors[static_cast<size_t>(j)]) << ")\n";
  }
  return out.str();
}

Json kl_sweep_json(const KLSweep& r, const std::vector<PauliWord>& errors) {
  Json failing = Json::array();
  for (auto [i, j] : r.failing_pairs)
    failing.push_back(Json::array({word_to_string(errors[static_cast<size_t>(i)]),
                                   word_to_string(errors[static_cast<size_t>(j)])}));
  return Json{{"schema", "triqec.kl_sweep/1"},
              {"pairs_checked", r.pairs_checked},
              {"pairs_failed", r.pairs_failed},
              {"failing_pairs", failing},
              {"pass", r.pass()}};
}

std::string degeneracy_markdown(const std::vector<PauliWord>& errors,
                                const std::vector<std::vector<int>>& classes) {
  std::ostringstream out;
  out << "## Degeneracy classes (same action on the code space up to phase)\n\n";
  for (size_t k = 0; k < classes.size(); ++k) {
    out << "- class " << k << ": ";
    for (size_t m = 0; m < classes[k].size(); ++m)
      out << (m ? ", " : "") << word_to_string(errors[static_cast<size_t>(classes[k][m])]);
    out << "\n";
  }
  return out.str();
}

Json degeneracy_json(const std::vector<PauliWord>& errors,
                     const std::vector<std::vector<int>>& classes) {
  Json jclasses = Json::array();
  for (const auto& cls : classes) {
    Json members = Json::array();
    for (int idx : cls) members.push_back(word_to_string(errors[static_cast<size_t>(idx)]));
    jclasses.push_back(members);
  }
  return Json{{"schema", "triqec.degeneracy/1"}, {"classes", jclasses}};
}

std::string logicals_markdown(const LogicalSearchReport& r, int max_weight) {
  std::ostringstream out;
  out << "## Low-weight logical search (weight <= " << max_weight << ")\n\n";
  out << "- candidates scanned: " << r.candidates_scanned << "\n";
  out << "- logical words found: " << r.logicals.size() << "\n";
  for (const auto& w : r.logicals) out << "  - " << word_to_string(w) << "\n";
  return out.str();
}

Json logicals_json(const LogicalSearchReport& r, int max_weight) {
  Json words = Json::array();
  for (const auto& w : r.logicals) words.push_back(word_to_string(w));
  return Json{{"schema", "triqec.logicals/1"},
              {"max_weight", max_weight},
              {"candidates_scanned", r.candidates_scanned},
              {"logicals", words}};
}

std::string collisions_markdown(const PairCollisionReport& r) {
  std::ostringstream out;
  out << "## Indistinguishable bit errors for pair (q" << r.pair.first << ", q"
      << r.pair.second << ") vs q" << r.third << "\n\n";
  out << "- identity-acting phase words tried: " << r.valid_word_count << "\n";
  out << "- witnesses: " << r.witnesses.size() << "\n";
  out << "- witness with distinct code-space action: "
      << (r.distinct_action_found ? "found" : "none (impossible: colliding errors "
                                              "differ by a stabilizer-group element)")
      << "\n\n";
  out << "| pair error | single error | quotient | same action |\n|---|---|---|---|\n";
  for (const auto& w : r.witnesses)
    out << "| " << word_to_string(w.pair_error) << " | " << word_to_string(w.single_error)
        << " | " << word_to_string(w.quotient) << " | " << (w.same_action ? "yes" : "no")
        << " |\n";
  return out.str();
}

Json collisions_json(const PairCollisionReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back(Json{{"pair_error", word_to_string(w.pair_error)},
                             {"single_error", word_to_string(w.single_error)},
                             {"quotient", word_to_string(w.quotient)},
                             {"same_action", w.same_action}});
  return Json{{"schema", "triqec.collisions/1"},
              {"pair", Json::array({r.pair.first, r.pair.second})},
              {"third", r.third},
              {"valid_word_count", r.valid_word_count},
              {"witnesses", witnesses},
              {"distinct_action_found", r.distinct_action_found}};
}

std::string pair_check_markdown(const PairCheckReport& r) {
  std::ostringstream out;
  out << "## Registered pair (q" << r.pair.first << ", q" << r.pair.second << ")\n\n";
  out << "Syndromes of the four two-site bit-error events:\n\n";
  for (const auto& s : r.pair_syndromes) {
    out << "- (";
    for (size_t i = 0; i < s.exps.size(); ++i) out << (i ? "," : "") << s.exps[i].value();
    out << ")\n";
  }
  out << "\n- distinct among themselves: " << (r.distinct_within ? "yes" : "no") << "\n";
  out << "- distinct from single-error rows: " << (r.distinct_from_singles ? "yes" : "no")
      << "\n";
  out << "- decode round-trip corrected all four: " << (r.all_corrected ? "yes" : "no")
      << "\n";
  return out.str();
}

Json pair_check_json(const PairCheckReport& r) {
  Json syndromes = Json::array();
  for (const auto& s : r.pair_syndromes) syndromes.push_back(syndrome_json(s));
  return Json{{"schema", "triqec.pair_check/1"},
              {"pair", Json::array({r.pair.first, r.pair.second})},
              {"pair_syndromes", syndromes},
              {"distinct_within", r.distinct_within},
              {"distinct_from_singles", r.distinct_from_singles},
              {"all_corrected", r.all_corrected}};
}

std::string zset_markdown(const ZStabSet& z) {
  std::ostringstream out;
  for (size_t i = 0; i < z.words.size(); ++i)
    out << "- S" << (i + 3) << " = " << word_to_string(z.words[i]) << "\n";
  return out.str();
}

std::string gen_result_markdown(const GenResult& g, const ValidationReport& v) {
  std::ostringstream out;
  out << "## Generated bit-error stabilizer set\n\n";
  out << zset_markdown(g.zset);
  out << "\n- constructed by: " << (g.used_fallback ? "exhaustive fallback" : "greedy walk")
      << "\n\n";
  out << "### Trace\n\n| step | positions | d | note |\n|---|---|---|---|\n";
  for (const auto& step : g.trace.steps) {
    out << "| " << step.label << " | ";
    if (step.positions.empty()) out << "-";
    for (size_t i = 0; i < step.positions.size(); ++i)
      out << (i ? ", " : "") << "q" << step.positions[i];
    out << " | (";
    for (int q = 0; q < 7; ++q) out << (q ? "," : "") << step.d[q];
    out << ") | " << (step.note.empty() ? "-" : step.note) << " |\n";
  }
  out << "\n### Validation\n\n";
  out << "- shape: " << (v.shape_ok ? "ok" : "FAIL") << "\n";
  out << "- commutation: " << (v.commutation_ok ? "ok" : "FAIL") << "\n";
  out << "- codeword stabilization: " << (v.stabilization_ok ? "ok" : "FAIL") << "\n";
  out << "- exclusive triggers at the pair: " << (v.exclusive_trigger_ok ? "ok" : "FAIL")
      << "\n";
  out << "- single-error syndromes: " << (v.singles_ok ? "ok" : "FAIL") << "\n";
  out << "- pair decode round-trip: " << (v.pair_ok ? "ok" : "FAIL") << "\n";
  for (const auto& note : v.notes) out << "- note: " << note << "\n";
  out << "- overall: " << (v.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json gen_result_json(const GenResult& g, const ValidationReport& v) {
  Json words = Json::array();
  for (const auto& w : g.zset.words) words.push_back(word_to_string(w));
  Json steps = Json::array();
  for (const auto& step : g.trace.steps) {
    Json d = Json::array();
    for (int q = 0; q < 7; ++q) d.push_back(step.d[q]);
    steps.push_back(Json{{"label", step.label},
                         {"positions", step.positions},
                         {"d", d},
                         {"note", step.note}});
  }
  return Json{{"schema", "triqec.stabgen/1"},
              {"words", words},
              {"used_fallback", g.used_fallback},
              {"trace", steps},
              {"validation",
               Json{{"shape_ok", v.shape_ok},
                    {"commutation_ok", v.commutation_ok},
                    {"stabilization_ok", v.stabilization_ok},
                    {"exclusive_trigger_ok", v.exclusive_trigger_ok},
                    {"singles_ok", v.singles_ok},
                    {"pair_ok", v.pair_ok},
                    {"notes", v.notes},
                    {"pass", v.pass()}}}};
}

std::string wire_diagram(const Circuit& c) {
  // One gate per column in emission order; unambiguous and deterministic.
  const size_t cols = c.gates.size();
  std::vector<std::string> lines(static_cast<size_t>(c.total_wires()),
                                 std::string(cols, '-'));
  for (size_t g = 0; g < cols; ++g) {
    const Gate& gate = c.gates[g];
    switch (gate.kind) {
      case GateKind::CPlus:
        lines[static_cast<size_t>(gate.wire)][g] = 'o';
        lines[static_cast<size_t>(gate.other)][g] = '+';
        break;
      case GateKind::Ch1:
        lines[static_cast<size_t>(gate.wire)][g] = 'H';
        break;
      case GateKind::Ch2:
        lines[static_cast<size_t>(gate.wire)][g] = 'G';
        break;
    }
  }
  std::ostringstream out;
  out << "o control, + target (C+T); H Chrestenson, G inverse Chrestenson\n";
  for (int w = 0; w < c.total_wires(); ++w) {
    if (w < c.data_wires)
      out << "q" << w << "  ";
    else
      out << "a" << (w - c.data_wires) << "  ";
    out << lines[static_cast<size_t>(w)] << "\n";
  }
  return out.str();
}

Json circuit_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::CPlus:
        gates.push_back(Json{{"gate", "cplus"}, {"control", g.wire}, {"target", g.other}});
        break;
      case GateKind::Ch1:
        gates.push_back(Json{{"gate", "ch"}, {"wire", g.wire}});
        break;
      case GateKind::Ch2:
        gates.push_back(Json{{"gate", "ch_inv"}, {"wire", g.wire}});
        break;
    }
  }
  Json stabs = Json::array();
  for (const auto& s : c.stabilizers) stabs.push_back(word_to_string(s));
  return Json{{"schema", "triqec.circuit/1"},
              {"data_wires", c.data_wires},
              {"ancilla_wires", c.ancilla_wires()},
              {"stabilizers", stabs},
              {"gates", gates}};
}

std::string cost_markdown(const std::string& name, const CostReport& r) {
  std::ostringstream out;
  out << "## Gate cost: " << name << "\n\n";
  out << "- C+T gates: " << r.cplus_count << "\n";
  out << "- Chrestenson gates: " << r.chrestenson_count << "\n";
  out << "- total gates: " << r.total_gates << "\n";
  out << "- depth (max wire load): " << r.wire_depth << "\n";
  out << "- scheduled layers: " << r.scheduled_depth << "\n";
  out << "- per-wire loads: (";
  for (size_t i = 0; i < r.per_wire_loads.size(); ++i)
    out << (i ? "," : "") << r.per_wire_loads[i];
  out << ")\n";
  return out.str();
}

Json cost_json(const std::string& name, const CostReport& r) {
  return Json{{"schema", "triqec.cost/1"},
              {"name", name},
              {"cplus_count", r.cplus_count},
              {"chrestenson_count", r.chrestenson_count},
              {"total_gates", r.total_gates},
              {"wire_depth", r.wire_depth},
              {"scheduled_depth", r.scheduled_depth},
              {"per_wire_loads", r.per_wire_loads}};
}

std::string comparison_markdown(const std::vector<CostRow>& rows) {
  std::ostringstream out;
  out << "## Gate-cost comparison\n\n";
  out << "| code | bit cost | phase cost | total | depth | source |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << r.name << " | " << r.bit_cost << " | " << r.phase_cost << " | "
        << r.total << " | " << r.depth << " | " << (r.computed ? "computed" : "reference")
        << " |\n";
  return out.str();
}

Json comparison_json(const std::vector<CostRow>& rows) {
  Json jrows = Json::array();
  for (const auto& r : rows)
    jrows.push_back(Json{{"name", r.name},
                         {"bit_cost", r.bit_cost},
                         {"phase_cost", r.phase_cost},
                         {"total", r.total},
                         {"depth", r.depth},
                         {"computed", r.computed}});
  return Json{{"schema", "triqec.cost_comparison/1"}, {"rows", jrows}};
}

}  // namespace triqec
