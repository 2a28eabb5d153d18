#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "triqec/code.hpp"

namespace triqec {

// The four bit-error stabilizer words, ordered S3..S6. A valid set draws
// every word from {I, Z1, Z2}^7 with four non-identity entries: two on the
// 4-qutrit partition class and two on the 3-qutrit class, and exactly two Z1
// and two Z2 overall.
struct ZStabSet {
  std::vector<PauliWord> words;
};

struct GenStep {
  std::string label;
  std::vector<int> positions;  // qutrit positions chosen in this step
  std::array<int, 7> d{};      // per-qutrit non-identity counts after the step
  std::string note;
};

struct GenTrace {
  std::vector<GenStep> steps;
};

struct GenResult {
  ZStabSet zset;
  GenTrace trace;
  bool used_fallback = false;
};

struct ValidationReport {
  bool shape_ok = false;              // alphabet and support shape per ZStabSet
  bool commutation_ok = false;        // commutes with both partition stabilizers
  bool stabilization_ok = false;      // fixes all three logical states
  bool exclusive_trigger_ok = false;  // S3 alone touches i, S4 alone touches j
  bool singles_ok = false;            // 14 single bit-error syndromes nonzero, distinct
  bool pair_ok = false;               // registered-pair decode round-trip passes
  std::vector<std::string> notes;

  bool pass() const {
    return shape_ok && commutation_ok && stabilization_ok && exclusive_trigger_ok &&
           singles_ok && pair_ok;
  }
};

// A pair is eligible unless both qutrits sit in the 3-qutrit partition class.
bool pair_eligible(std::pair<int, int> pair);
std::vector<std::pair<int, int>> eligible_pairs();

// Greedy set construction for the pair (seed S3 at i and S4 at j, fill the
// rest by minimum-d selection). Throws PairUnsupportedError for an ineligible
// pair and GenerationFailedError when the greedy walk gets stuck or produces
// a set the validator rejects.
GenResult generate_greedy(std::pair<int, int> pair);

// generate_greedy, falling back to the exhaustive search when the greedy walk
// fails. The result always passes validate().
GenResult generate(std::pair<int, int> pair);

// First validator-passing 4-tuple of candidate words in canonical order
// (candidate words sorted by their exponent vectors; S3, S4, S5, S6 slots
// iterated nested in that order). Throws GenerationFailedError if none exists.
ZStabSet exhaustive_fallback(std::pair<int, int> pair);

// Evaluate all six validity predicates independently; never throws.
ValidationReport validate(const ZStabSet& zset, std::pair<int, int> pair);

// The built-in bit-error stabilizer set (registered pair (0,6)).
ZStabSet default_zset();

// The worked reference set for pair (1,4).
ZStabSet reference_zset_1_4();

}  // namespace triqec
