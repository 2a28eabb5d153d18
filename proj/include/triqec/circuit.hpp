#pragma once

#include <string>
#include <vector>

#include "triqec/code.hpp"

namespace triqec {

enum class GateKind { CPlus, Ch1, Ch2 };

// CPlus: wire = control, other = target (|x,y> -> |x, x+y mod 3>).
// Ch1/Ch2: the forward/inverse Chrestenson transform on `wire`; other = -1.
struct Gate {
  GateKind kind;
  int wire;
  int other;
};

// Syndrome-extraction circuit: data wires 0..data_wires-1, then one ancilla
// wire per stabilizer in stabilizer order.
struct Circuit {
  int data_wires = 0;
  std::vector<PauliWord> stabilizers;
  std::vector<Gate> gates;

  int ancilla_wires() const { return static_cast<int>(stabilizers.size()); }
  int total_wires() const { return data_wires + ancilla_wires(); }
};

// Emission layout: every phase-type (pure-Z) stabilizer first — Z1 costs one
// C+T into the ancilla, Z2 two — then one Ch1 per data qutrit touched by any
// bit-type (pure-X) stabilizer, the bit-type C+T blocks (X1 one, X2 two), and
// the closing Ch2 set. Words mixing X and Z parts are rejected.
Circuit build_syndrome_circuit(const std::vector<PauliWord>& stabilizers, int data_wires);
Circuit build_syndrome_circuit(const Code& code);

struct CostReport {
  int cplus_count = 0;
  int chrestenson_count = 0;
  int total_gates = 0;
  int wire_depth = 0;       // max of per_wire_loads
  int scheduled_depth = 0;  // layers under earliest-slot scheduling
  std::vector<int> per_wire_loads;  // data wires first, then ancillas
};

CostReport cost(const Circuit& c);

// Run the circuit on |data> ⊗ |0...0> and read each ancilla. Simulated one
// ancilla at a time on a (data_wires+1)-qutrit register; couplings into the
// other ancillas are control-diagonal and cannot move this ancilla's
// marginal, so the readout matches the full joint circuit. Throws
// AncillaNotDefiniteError unless the ancilla is definite to within 1e-9.
Syndrome simulate_extraction(const Circuit& c, const StateVec& data);

// The printed single-power ternary Steane stabilizer shapes used by the
// published cost comparison (X1/Z1 on the classical Hamming supports). These
// words do not all commute; they exist for gate accounting only, while
// build_steane_ternary() carries the corrected code.
std::vector<PauliWord> steane_cost_model_stabilizers();

struct CostRow {
  std::string name;
  int bit_cost = 0;    // C+T gates in the bit-error section
  int phase_cost = 0;  // C+T plus Chrestenson gates in the phase-error section
  int total = 0;
  int depth = 0;
  bool computed = false;  // false: fixed reference row for comparison
};

// Gate-cost comparison: two fixed reference rows (9-qutrit, 6-qutrit
// approximate) and two rows computed from circuits built here.
std::vector<CostRow> comparison_table();

}  // namespace triqec
