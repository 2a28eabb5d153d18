#pragma once

#include <stdexcept>
#include <string>

namespace triqec {

// Syndrome has no entry in the decode table.
class UnrecognizedSyndromeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State is not a simultaneous eigenstate of the stabilizer being read.
class NotAnEigenstateError : public std::runtime_error {
 public:
  NotAnEigenstateError(int stabilizer_index, double residual, const std::string& what)
      : std::runtime_error(what), stabilizer_index(stabilizer_index), residual(residual) {}
  int stabilizer_index;
  double residual;
};

// Extraction left an ancilla away from a computational basis state.
class AncillaNotDefiniteError : public std::runtime_error {
 public:
  AncillaNotDefiniteError(int ancilla_index, double max_prob, const std::string& what)
      : std::runtime_error(what), ancilla_index(ancilla_index), max_prob(max_prob) {}
  int ancilla_index;
  double max_prob;
};

// Requested correction pair falls in the refused class (both qutrits odd-positioned).
class PairUnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Greedy generation produced a set that fails validation (callers fall back to
// the exhaustive search).
class GenerationFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Impossibility search found no syndrome-identical error pair; reported loudly
// because it would contradict the refusal rule.
class NoWitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triqec
