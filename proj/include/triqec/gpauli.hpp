#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triqec/mod3.hpp"

namespace triqec {

// One generalized-Pauli factor in normal form X^x Z^z.
// X^1|j> = |j+1 mod 3>, Z^1|j> = omega^j |j>, Y_ij = X_i Z_j.
struct QutritOp {
  Mod3 x;
  Mod3 z;

  constexpr bool is_identity() const { return x == Mod3(0) && z == Mod3(0); }
  constexpr bool operator==(const QutritOp&) const = default;
};

// n-qutrit operator omega^phase * (X^x0 Z^z0 ⊗ ... ⊗ X^x{n-1} Z^z{n-1}).
// Qutrit 0 is the leftmost tensor factor and the most significant trit.
class PauliWord {
 public:
  explicit PauliWord(int n) : ops_(static_cast<size_t>(n)) {}
  PauliWord(Mod3 phase, std::vector<QutritOp> ops) : phase_(phase), ops_(std::move(ops)) {}

  static PauliWord identity(int n) { return PauliWord(n); }
  static PauliWord single(int n, int qutrit, QutritOp op);

  int n() const { return static_cast<int>(ops_.size()); }
  Mod3 phase() const { return phase_; }
  void set_phase(Mod3 p) { phase_ = p; }
  const QutritOp& op(int q) const { return ops_[static_cast<size_t>(q)]; }
  void set_op(int q, QutritOp o) { ops_[static_cast<size_t>(q)] = o; }
  const std::vector<QutritOp>& ops() const { return ops_; }

  // Number of non-identity tensor factors.
  int weight() const;
  bool is_identity_word() const { return weight() == 0; }

  bool operator==(const PauliWord&) const = default;

 private:
  Mod3 phase_;
  std::vector<QutritOp> ops_;
};

// Name table: I, X1, X2, Z1, Z2, Y11, Y12, Y21, Y22 (Yij = Xi Zj).
QutritOp op_from_name(std::string_view name);
std::string op_name(QutritOp op);

// a*b in normal form. Reordering a's Z part past b's X part contributes
// omega^(sum_k z_k(a) * x_k(b)).
PauliWord multiply(const PauliWord& a, const PauliWord& b);

PauliWord inverse(const PauliWord& w);

// c with s*e = omega^c * e*s: c = sum_k (z_k(s) x_k(e) - z_k(e) x_k(s)) mod 3.
Mod3 commutation_phase(const PauliWord& s, const PauliWord& e);

inline bool commutes(const PauliWord& s, const PauliWord& e) {
  return commutation_phase(s, e) == Mod3(0);
}

// Dense 3^n x 3^n matrix, row-major; restricted to n <= 3 by contract.
std::vector<std::vector<Cx>> to_matrix(const PauliWord& w);

// Canonical text form "Z2 Z1 Z2 Z1 I I I" (qutrit 0 first); a nonzero word
// phase is written as a leading "w1"/"w2" token and accepted back by parsing.
std::string word_to_string(const PauliWord& w);
PauliWord word_from_string(std::string_view text);

}  // namespace triqec
