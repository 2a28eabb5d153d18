#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "triqec/code.hpp"

namespace triqec {

// How one injected error fares after syndrome decoding and correction:
//   Corrected            residual word is the identity on every qutrit
//   DegenerateCorrected  residual word is nontrivial but fixes the code
//                        space up to one common phase
//   LogicalFault         the syndrome was recognized, yet the corrected
//                        state differs from the input by a logical operation
//   Undetected           zero syndrome with a nontrivial logical action
//   Unrecognized         the decoder has no entry for the syndrome
enum class Outcome {
  Corrected,
  DegenerateCorrected,
  LogicalFault,
  Undetected,
  Unrecognized,
};

const char* outcome_name(Outcome o);

enum class ExecMode { Serial, Parallel };

struct SweepCounts {
  long long corrected = 0;
  long long degenerate_corrected = 0;
  long long logical_fault = 0;
  long long undetected = 0;
  long long unrecognized = 0;

  long long total() const {
    return corrected + degenerate_corrected + logical_fault + undetected + unrecognized;
  }
  bool operator==(const SweepCounts&) const = default;
};

void count_outcome(SweepCounts& counts, Outcome o);

// Classify one error word against a code's decoder (see Outcome).
Outcome classify_error(const Code& c, const PauliWord& e, double tol = 1e-9);

struct SingleErrorRecord {
  PauliWord error;
  Outcome outcome;
};

struct SingleErrorSweep {
  SweepCounts counts;
  std::vector<SingleErrorRecord> records;  // qutrit-major enumeration order
};

// All 8n single-qutrit error words through classify_error.
SingleErrorSweep sweep_single_errors(const Code& c, ExecMode mode = ExecMode::Parallel);

struct PhasePatternSweep {
  SweepCounts counts;
  // outcome per pattern; pattern index encodes exponents big-endian base 3
  // (qutrit 0 is the most significant digit).
  std::vector<Outcome> outcomes;
};

// Every n-qutrit phase pattern Z^w (3^n words) through classify_error.
PhasePatternSweep sweep_phase_patterns(const Code& c, ExecMode mode = ExecMode::Parallel);

std::array<int, 7> phase_pattern_of(int index);

struct LogicalSearchReport {
  long long candidates_scanned = 0;
  std::vector<PauliWord> logicals;  // zero syndrome, nontrivial logical action
};

// Exhaustive scan of nonidentity words up to the given weight.
LogicalSearchReport find_low_weight_logicals(const Code& c, int max_weight,
                                             ExecMode mode = ExecMode::Parallel);

bool contains_word(const std::vector<PauliWord>& words, const PauliWord& w);

// Pure-phase words that commute with both bit-type stabilizers and act as the
// exact identity on every codeword ket: the candidate pool any alternative
// phase-stabilizer set must be drawn from.
std::vector<PauliWord> valid_phase_words(const Code& c);

struct CollisionWitness {
  PauliWord pair_error;    // bit-type error on both qutrits of the pair
  PauliWord single_error;  // bit-type error on the remaining partition qutrit
  PauliWord quotient;      // inverse(single_error) * pair_error
  bool same_action;        // identical action on the code space (common phase)
};

struct PairCollisionReport {
  std::pair<int, int> pair;
  int third = -1;
  int valid_word_count = 0;
  std::vector<CollisionWitness> witnesses;
  bool distinct_action_found = false;
};

// For a pair inside the 3-qutrit partition class: find bit-type errors on the
// pair that no valid phase word can tell apart from a single error on the
// remaining class qutrit. Throws NoWitnessError if nothing collides.
PairCollisionReport find_pair_collisions(const Code& proposed, std::pair<int, int> g2_pair);

struct PairCheckReport {
  std::pair<int, int> pair;
  std::vector<Syndrome> pair_syndromes;  // the four two-site bit-error events
  bool distinct_within = false;          // pairwise distinct among themselves
  bool distinct_from_singles = false;    // distinct from all single-error rows
  bool all_corrected = false;            // full decode round-trip on a random state
};

// Validate the registered two-qutrit error table of a code.
PairCheckReport pair_error_check(const Code& c);

// Deterministic pseudo-random unit combination of the three logical states.
StateVec random_logical_state(const Code& c, std::uint64_t seed);

constexpr std::uint64_t kDefaultSeed = 0x51AB1731ull;

}  // namespace triqec
