#pragma once

#include <string>
#include <vector>

#include "triqec/gpauli.hpp"
#include "triqec/mod3.hpp"

namespace triqec {

// Dense n-qutrit state, 3^n amplitudes, n <= 8. Qutrit 0 is the most
// significant trit, so |1020102> reads left to right as qutrits 0..6.
class StateVec {
 public:
  explicit StateVec(int n);

  // |t0 t1 ... t{n-1}> from a trit string such as "1020102".
  static StateVec basis(int n, std::string_view trits);
  static StateVec basis_index(int n, size_t index);

  int n() const { return n_; }
  size_t dim() const { return amps_.size(); }
  const std::vector<Cx>& amps() const { return amps_; }
  std::vector<Cx>& amps() { return amps_; }
  Cx amp(size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  size_t index_of(std::string_view trits) const;
  std::string trits_of(size_t index) const;

 private:
  int n_;
  std::vector<Cx> amps_;
};

// omega^phase * prod_k X^xk Z^zk applied in place semantics (returns new state).
StateVec apply_word(const StateVec& s, const PauliWord& w);

// which = 1 applies Ch1 = (1/sqrt3)[[1,1,1],[1,w,w2],[1,w2,w]] to one qutrit;
// which = 2 its inverse Ch2. Ch1 X1 Ch2 = Z1.
StateVec apply_chrestenson(const StateVec& s, int qutrit, int which);

// |x,y> -> |x, x+y mod 3> with control c and target t.
StateVec apply_cplus(const StateVec& s, int control, int target);

Cx inner_product(const StateVec& a, const StateVec& b);

struct PhaseMatch {
  bool equal = false;
  Cx phase{1.0, 0.0};  // b ~ phase * a when equal
};

// True when |<a|b>| >= 1 - tol for unit vectors; reports the recovered phase.
PhaseMatch equal_up_to_global_phase(const StateVec& a, const StateVec& b, double tol = 1e-10);

// max_i |a_i - b_i| for exact amplitude-wise comparison.
double max_amp_diff(const StateVec& a, const StateVec& b);

}  // namespace triqec
