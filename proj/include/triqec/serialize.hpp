#pragma once
// Renderers for every report the toolkit produces, in two forms: markdown for
// terminals and schema-versioned JSON ("schema": "triqec.<kind>/1") for
// machine consumption. All output is deterministic.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "triqec/circuit.hpp"
#include "triqec/code.hpp"
#include "triqec/oracle.hpp"
#include "triqec/stabgen.hpp"

namespace triqec {

using Json = nlohmann::json;

// Shared fragments.
std::string omega_cell(Mod3 e);  // "1", "w", "w^2"
Json word_json(const PauliWord& w);
Json syndrome_json(const Syndrome& s);

// Readout charts for the 7-qutrit code. The bit chart derives its exponents
// from the code's Z stabilizers on the spot and diffs them against the
// simplified unit-exponent reference chart.
std::string phase_chart_markdown();
Json phase_chart_json();
std::string bit_chart_markdown(const Code& proposed);
Json bit_chart_json(const Code& proposed);

// Error sweeps.
std::string single_sweep_markdown(const Code& c, const SingleErrorSweep& s);
Json single_sweep_json(const Code& c, const SingleErrorSweep& s);
std::string phase_sweep_markdown(const Code& c, const PhasePatternSweep& s);
Json phase_sweep_json(const Code& c, const PhasePatternSweep& s);

// Correctability condition and degeneracy structure.
std::string kl_report_markdown(const PauliWord& a, const PauliWord& b, const KLReport& r);
Json kl_report_json(const PauliWord& a, const PauliWord& b, const KLReport& r);
std::string kl_sweep_markdown(const KLSweep& r, const std::vector<PauliWord>& errors);
Json kl_sweep_json(const KLSweep& r, const std::vector<PauliWord>& errors);
std::string degeneracy_markdown(const std::vector<PauliWord>& errors,
                                const std::vector<std::vector<int>>& classes);
Json degeneracy_json(const std::vector<PauliWord>& errors,
                     const std::vector<std::vector<int>>& classes);

// Low-weight logical-operator search.
std::string logicals_markdown(const LogicalSearchReport& r, int max_weight);
Json logicals_json(const LogicalSearchReport& r, int max_weight);

// Indistinguishable-pair witnesses and registered-pair syndromes.
std::string collisions_markdown(const PairCollisionReport& r);
Json collisions_json(const PairCollisionReport& r);
std::string pair_check_markdown(const PairCheckReport& r);
Json pair_check_json(const PairCheckReport& r);

// Stabilizer-set generation.
std::string zset_markdown(const ZStabSet& z);
std::string gen_result_markdown(const GenResult& g, const ValidationReport& v);
Json gen_result_json(const GenResult& g, const ValidationReport& v);

// Circuits and gate costs.
std::string wire_diagram(const Circuit& c);
Json circuit_json(const Circuit& c);
std::string cost_markdown(const std::string& name, const CostReport& r);
Json cost_json(const std::string& name, const CostReport& r);
std::string comparison_markdown(const std::vector<CostRow>& rows);
Json comparison_json(const std::vector<CostRow>& rows);

}  // namespace triqec
