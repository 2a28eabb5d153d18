#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "triqec/gpauli.hpp"
#include "triqec/statevec.hpp"

using namespace triqec;

namespace {

// Apply a word through its dense matrix: the oracle for apply_word.
StateVec apply_by_matrix(const StateVec& s, const PauliWord& w) {
  auto m = to_matrix(w);
  StateVec out(s.n());
  for (size_t i = 0; i < s.dim(); ++i) {
    Cx acc{0, 0};
    for (size_t j = 0; j < s.dim(); ++j) acc += m[i][j] * s.amp(j);
    out.amps()[i] = acc;
  }
  return out;
}

StateVec ramp_state(int n) {
  StateVec s(n);
  for (size_t i = 0; i < s.dim(); ++i)
    s.amps()[i] = Cx{1.0 + static_cast<double>(i), 0.5 - 0.25 * static_cast<double>(i % 5)};
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("basis indexing is big-endian in the qutrit order") {
  StateVec s = StateVec::basis(7, "1000000");
  CHECK(std::abs(s.amp(729) - Cx{1, 0}) < 1e-15);  // 3^6
  CHECK(s.index_of("0000001") == 1);
  CHECK(s.index_of("1020102") == 729 + 2 * 81 + 9 + 2);
  CHECK(s.trits_of(729) == "1000000");
  CHECK(StateVec::basis_index(2, 5).trits_of(5) == "12");
}

TEST_CASE("apply_word on basis states: shifts, phases, word phase") {
  StateVec s = StateVec::basis(2, "01");
  PauliWord x1 = PauliWord::single(2, 0, op_from_name("X1"));
  StateVec shifted = apply_word(s, x1);
  CHECK(std::abs(shifted.amp(shifted.index_of("11")) - Cx{1, 0}) < 1e-15);

  PauliWord z1 = PauliWord::single(2, 1, op_from_name("Z1"));
  StateVec phased = apply_word(s, z1);
  CHECK(std::abs(phased.amp(phased.index_of("01")) - omega_pow(Mod3(1))) < 1e-15);

  PauliWord w = PauliWord::identity(2);
  w.set_phase(Mod3(2));
  StateVec global = apply_word(s, w);
  CHECK(std::abs(global.amp(global.index_of("01")) - omega_pow(Mod3(2))) < 1e-15);
}

TEST_CASE("apply_word matches the dense-matrix oracle") {
  StateVec s = ramp_state(2);
  const char* names[] = {"X1", "X2", "Z1", "Z2", "Y11", "Y12", "Y21", "Y22"};
  for (const char* n0 : names)
    for (const char* n1 : {"I", "Y21", "Z2"}) {
      PauliWord w = PauliWord::identity(2);
      w.set_op(0, op_from_name(n0));
      w.set_op(1, op_from_name(n1));
      w.set_phase(Mod3(1));
      CHECK(max_amp_diff(apply_word(s, w), apply_by_matrix(s, w)) < 1e-12);
    }
}

TEST_CASE("C+T truth table") {
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      std::string in = std::to_string(x) + std::to_string(y);
      std::string expect = std::to_string(x) + std::to_string((x + y) % 3);
      StateVec s = apply_cplus(StateVec::basis(2, in), 0, 1);
      CHECK(std::abs(s.amp(s.index_of(expect)) - Cx{1, 0}) < 1e-15);
    }
}

TEST_CASE("Chrestenson pair composes to the identity and is unitary") {
  StateVec s = ramp_state(3);
  StateVec round = apply_chrestenson(apply_chrestenson(s, 1, 1), 1, 2);
  CHECK(max_amp_diff(round, s) < 1e-12);
  CHECK(std::abs(apply_chrestenson(s, 2, 1).norm() - 1.0) < 1e-12);
}

TEST_CASE("Chrestenson conjugation swaps shift and clock actions") {
  StateVec s = ramp_state(2);
  PauliWord x1 = PauliWord::single(2, 0, op_from_name("X1"));
  PauliWord z1 = PauliWord::single(2, 0, op_from_name("Z1"));
  // Ch1 X1 Ch2 acts as Z1.
  StateVec lhs = apply_chrestenson(apply_word(apply_chrestenson(s, 0, 2), x1), 0, 1);
  StateVec rhs = apply_word(s, z1);
  CHECK(max_amp_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("inner product conjugates its first argument") {
  StateVec a = ramp_state(2), b(2);
  for (size_t i = 0; i < b.dim(); ++i) b.amps()[i] = Cx{0.1, 0.3 * static_cast<double>(i)};
  b.normalize();
  Cx ab = inner_product(a, b), ba = inner_product(b, a);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
  CHECK(std::abs(inner_product(a, a) - Cx{1, 0}) < 1e-12);
}

TEST_CASE("global-phase comparison recovers the phase") {
  StateVec a = ramp_state(3);
  StateVec b = a;
  for (auto& v : b.amps()) v *= omega_pow(Mod3(2));
  PhaseMatch m = equal_up_to_global_phase(a, b);
  CHECK(m.equal);
  CHECK(std::abs(m.phase - omega_pow(Mod3(2))) < 1e-9);
  CHECK(max_amp_diff(a, b) > 0.1);  // amplitude-wise they differ

  StateVec c = StateVec::basis(3, "000");
  CHECK_FALSE(equal_up_to_global_phase(a, c).equal);
}
