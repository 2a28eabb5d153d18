#include "triqec/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triqec {

namespace {

enum class WordType { PureZ, PureX };

WordType word_type(const PauliWord& w) {
  bool has_x = false, has_z = false;
  for (int q = 0; q < w.n(); ++q) {
    if (w.op(q).x != Mod3(0)) has_x = true;
    if (w.op(q).z != Mod3(0)) has_z = true;
  }
  if (has_x && has_z)
    throw std::invalid_argument("stabilizer mixes X and Z parts: " + word_to_string(w));
  if (!has_x && !has_z)
    throw std::invalid_argument("identity word has no extraction circuit");
  return has_x ? WordType::PureX : WordType::PureZ;
}

}  // namespace

Circuit build_syndrome_circuit(const std::vector<PauliWord>& stabilizers, int data_wires) {
  Circuit c;
  c.data_wires = data_wires;
  c.stabilizers = stabilizers;

  std::vector<WordType> types;
  for (const PauliWord& w : stabilizers) {
    if (w.n() != data_wires) throw std::invalid_argument("stabilizer length mismatch");
    types.push_back(word_type(w));
  }

  for (size_t s = 0; s < stabilizers.size(); ++s) {
    if (types[s] != WordType::PureZ) continue;
    const int ancilla = data_wires + static_cast<int>(s);
    for (int q = 0; q < data_wires; ++q)
      for (int k = 0; k < stabilizers[s].op(q).z.value(); ++k)
        c.gates.push_back({GateKind::CPlus, q, ancilla});
  }

  std::vector<bool> touched(static_cast<size_t>(data_wires), false);
  for (size_t s = 0; s < stabilizers.size(); ++s) {
    if (types[s] != WordType::PureX) continue;
    for (int q = 0; q < data_wires; ++q)
      if (stabilizers[s].op(q).x != Mod3(0)) touched[static_cast<size_t>(q)] = true;
  }
  for (int q = 0; q < data_wires; ++q)
    if (touched[static_cast<size_t>(q)]) c.gates.push_back({GateKind::Ch1, q, -1});
  for (size_t s = 0; s < stabilizers.size(); ++s) {
    if (types[s] != WordType::PureX) continue;
    const int ancilla = data_wires + static_cast<int>(s);
    for (int q = 0; q < data_wires; ++q)
      for (int k = 0; k < stabilizers[s].op(q).x.value(); ++k)
        c.gates.push_back({GateKind::CPlus, q, ancilla});
  }
  for (int q = 0; q < data_wires; ++q)
    if (touched[static_cast<size_t>(q)]) c.gates.push_back({GateKind::Ch2, q, -1});

  return c;
}

Circuit build_syndrome_circuit(const Code& code) {
  return build_syndrome_circuit(code.stabilizers, code.n);
}

CostReport cost(const Circuit& c) {
  CostReport r;
  r.per_wire_loads.assign(static_cast<size_t>(c.total_wires()), 0);
  std::vector<int> busy(static_cast<size_t>(c.total_wires()), 0);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CPlus) {
      ++r.cplus_count;
      ++r.per_wire_loads[static_cast<size_t>(g.wire)];
      ++r.per_wire_loads[static_cast<size_t>(g.other)];
      const int slot = std::max(busy[static_cast<size_t>(g.wire)],
                                busy[static_cast<size_t>(g.other)]) + 1;
      busy[static_cast<size_t>(g.wire)] = slot;
      busy[static_cast<size_t>(g.other)] = slot;
    } else {
      ++r.chrestenson_count;
      ++r.per_wire_loads[static_cast<size_t>(g.wire)];
      busy[static_cast<size_t>(g.wire)] += 1;
    }
  }
  r.total_gates = r.cplus_count + r.chrestenson_count;
  r.wire_depth = r.per_wire_loads.empty()
                     ? 0
                     : *std::max_element(r.per_wire_loads.begin(), r.per_wire_loads.end());
  r.scheduled_depth = busy.empty() ? 0 : *std::max_element(busy.begin(), busy.end());
  return r;
}

Syndrome simulate_extraction(const Circuit& c, const StateVec& data) {
  if (data.n() != c.data_wires) throw std::invalid_argument("data state width mismatch");

  // Embed |data> ⊗ |0> with the ancilla as the least significant trit.
  StateVec joint(c.data_wires + 1);
  std::fill(joint.amps().begin(), joint.amps().end(), Cx{0.0, 0.0});
  for (size_t d = 0; d < data.amps().size(); ++d) joint.amps()[d * 3] = data.amps()[d];
  const StateVec joint0 = joint;
  const int anc_wire = c.data_wires;

  Syndrome syn;
  for (size_t s = 0; s < c.stabilizers.size(); ++s) {
    const int anc_global = c.data_wires + static_cast<int>(s);
    StateVec st = joint0;
    for (const Gate& g : c.gates) {
      switch (g.kind) {
        case GateKind::CPlus:
          if (g.other == anc_global) st = apply_cplus(st, g.wire, anc_wire);
          // C+T into another ancilla is control-diagonal here: skip.
          break;
        case GateKind::Ch1:
          st = apply_chrestenson(st, g.wire, 1);
          break;
        case GateKind::Ch2:
          st = apply_chrestenson(st, g.wire, 2);
          break;
      }
    }
    double prob[3] = {0.0, 0.0, 0.0};
    for (size_t idx = 0; idx < st.amps().size(); ++idx)
      prob[idx % 3] += std::norm(st.amps()[idx]);
    int best = 0;
    for (int t = 1; t < 3; ++t)
      if (prob[t] > prob[best]) best = t;
    if (prob[best] < 1.0 - 1e-9)
      throw AncillaNotDefiniteError(static_cast<int>(s), prob[best],
                                    "ancilla " + std::to_string(s) +
                                        " is not definite (max marginal " +
                                        std::to_string(prob[best]) + ")");
    syn.exps.push_back(Mod3(best));
  }
  return syn;
}

std::vector<PauliWord> steane_cost_model_stabilizers() {
  return {
      word_from_string("I I I X1 X1 X1 X1"), word_from_string("I X1 X1 I I X1 X1"),
      word_from_string("X1 I X1 I X1 I X1"), word_from_string("I I I Z1 Z1 Z1 Z1"),
      word_from_string("I Z1 Z1 I I Z1 Z1"), word_from_string("Z1 I Z1 I Z1 I Z1"),
  };
}

std::vector<CostRow> comparison_table() {
  std::vector<CostRow> rows;
  rows.push_back({"9-qutrit", 52, 210, 262, 26, false});
  rows.push_back({"6-qutrit approximate", 18, 20, 38, 8, false});

  const auto split_costs = [](const std::vector<PauliWord>& stabs, const std::string& name) {
    std::vector<PauliWord> zpart, xpart;
    for (const PauliWord& w : stabs) {
      bool has_x = false;
      for (int q = 0; q < w.n(); ++q)
        if (w.op(q).x != Mod3(0)) has_x = true;
      (has_x ? xpart : zpart).push_back(w);
    }
    const CostReport bit = cost(build_syndrome_circuit(zpart, 7));
    const CostReport phase = cost(build_syndrome_circuit(xpart, 7));
    const CostReport full = cost(build_syndrome_circuit(stabs, 7));
    CostRow row;
    row.name = name;
    row.bit_cost = bit.total_gates;
    row.phase_cost = phase.total_gates;
    row.total = full.total_gates;
    row.depth = full.wire_depth;
    row.computed = true;
    return row;
  };

  rows.push_back(split_costs(steane_cost_model_stabilizers(), "ternary Steane (cost model)"));
  rows.push_back(split_costs(build_proposed_code().stabilizers, "7-qutrit proposed"));
  return rows;
}

}  // namespace triqec
