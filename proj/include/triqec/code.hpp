#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triqec/errors.hpp"
#include "triqec/gpauli.hpp"
#include "triqec/statevec.hpp"

namespace triqec {

// Stabilizer eigenvalue exponents in stabilizer order: eigenvalue omega^exps[i].
struct Syndrome {
  std::vector<Mod3> exps;

  bool is_zero() const {
    for (auto e : exps)
      if (e != Mod3(0)) return false;
    return true;
  }
  bool operator==(const Syndrome&) const = default;
};

using SyndromeKey = std::vector<int>;

SyndromeKey syndrome_key(const Syndrome& s);

// A CSS qutrit code: stabilizer list, logical basis states, decode tables.
// Immutable after construction by convention; builders fill everything.
struct Code {
  std::string id;
  int n = 0;
  std::vector<PauliWord> stabilizers;
  std::vector<int> x_stab_indices;  // X-type rows (phase-error readers)
  std::vector<int> z_stab_indices;  // Z-type rows (bit-error readers)
  std::vector<StateVec> logical;    // |0_L>, |1_L>, |2_L>

  // Bit table: exponents at z_stab_indices -> X-type correction.
  // Phase table: exponents at x_stab_indices -> Z-type correction.
  std::map<SyndromeKey, PauliWord> bit_table;
  std::map<SyndromeKey, PauliWord> phase_table;

  // Bit-error pair registered into bit_table (if any), e.g. {0, 6}.
  std::optional<std::pair<int, int>> registered_pair;

  SyndromeKey bit_key(const Syndrome& s) const;
  SyndromeKey phase_key(const Syndrome& s) const;
};

// g1 = even positions {0,2,4,6}, g2 = odd positions {1,3,5} for n = 7.
const std::vector<int>& proposed_g1();
const std::vector<int>& proposed_g2();

// The degenerate 7-qutrit code: phase stabilizers S1/S2 with alternating
// X1/X2 over even/odd positions, bit stabilizers the default Z set, logical
// states the three 9-ket superpositions. Bit pair (0,6) is registered.
Code build_proposed_code();

// Same phase stabilizers and logical states, bit stabilizers replaced by the
// given four Z words; registers `pair` syndromes into the bit table.
Code build_proposed_code_with_zset(const std::vector<PauliWord>& zwords,
                                   std::pair<int, int> pair);

// Ternary Steane code on the classic supports: X-stabilizers all X1, and
// Z-stabilizers carrying the Z1 Z2 Z2 Z1 subscript pattern across each
// support, the assignment that makes all nine X/Z pairs commute over qutrits.
// Logical |0_L> symmetrizes |0000000> over the X-stabilizer group and
// |j_L> = (X1^x7)^j |0_L>.
Code build_steane_ternary();

// Alternating-pattern phase stabilizers for any n >= 3: S1 places X1,X2,...
// across even positions, S2 across odd positions.
std::pair<PauliWord, PauliWord> partition_stabilizers(int n);

// exps[i] from the reordering rule: S_i e = omega^c e S_i.
Syndrome syndrome_symplectic(const Code& c, const PauliWord& e);

// exps[i] read off S_i|s> = omega^k |s>; throws NotAnEigenstateError.
Syndrome syndrome_statevector(const Code& c, const StateVec& s, double tol = 1e-8);

// Table lookups composed into one correction word; throws UnrecognizedSyndromeError.
PauliWord decode(const Code& c, const Syndrome& syn);

StateVec correct(const Code& c, const StateVec& s);

struct KLReport {
  // A[i][j] = <i_L| a^dag b |j_L> for the checked pair (a, b).
  std::vector<std::vector<Cx>> matrix;
  bool offdiag_zero = false;
  bool diag_constant = false;
  bool pass() const { return offdiag_zero && diag_constant; }
};

KLReport kl_check_pair(const Code& c, const PauliWord& a, const PauliWord& b,
                       double tol = 1e-9);

struct KLSweep {
  int pairs_checked = 0;
  int pairs_failed = 0;
  // Failures as (index a, index b) into the error list, capped for reporting.
  std::vector<std::pair<int, int>> failing_pairs;
  bool pass() const { return pairs_failed == 0; }
};

KLSweep kl_check(const Code& c, const std::vector<PauliWord>& errors, double tol = 1e-9,
                 bool parallel = true);

// Indices into `errors`, grouped so that two errors share a class iff their
// actions on all three logical states agree up to one common global phase.
std::vector<std::vector<int>> degeneracy_classes(const Code& c,
                                                 const std::vector<PauliWord>& errors,
                                                 double tol = 1e-9);

// All 56 non-identity single-qutrit words in a fixed order:
// qutrit-major, then X1,X2,Z1,Z2,Y11,Y12,Y21,Y22.
std::vector<PauliWord> single_qutrit_errors(int n);

}  // namespace triqec
