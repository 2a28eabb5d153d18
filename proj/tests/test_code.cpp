#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "triqec/code.hpp"
#include "triqec/reference_tables.hpp"

using namespace triqec;

namespace {

const std::vector<std::vector<std::string>>& logical_kets() {
  static const std::vector<std::vector<std::string>> kets = {
      {"0000000", "1020102", "2010201", "0102010", "1122112", "2112211", "0201020",
       "1221122", "2211221"},
      {"1111111", "2101210", "0121012", "1210121", "2200220", "0220022", "1012101",
       "2002200", "0022002"},
      {"2222222", "0212021", "1202120", "2021202", "0011001", "1001100", "2120212",
       "0110011", "1100110"},
  };
  return kets;
}

}  // namespace

TEST_CASE("partition stabilizers alternate subscripts over even/odd positions") {
  auto [s1, s2] = partition_stabilizers(7);
  // S1 = X1 I X2 I X1 I X2, S2 = I X1 I X2 I X1 I.
  const int x1[7] = {1, 0, 2, 0, 1, 0, 2};
  const int x2[7] = {0, 1, 0, 2, 0, 1, 0};
  for (int q = 0; q < 7; ++q) {
    CHECK(s1.op(q).x == Mod3(x1[q]));
    CHECK(s1.op(q).z == Mod3(0));
    CHECK(s2.op(q).x == Mod3(x2[q]));
  }
  CHECK(commutes(s1, s2));
}

TEST_CASE("logical states are the frozen nine-ket superpositions") {
  Code code = build_proposed_code();
  for (int l = 0; l < 3; ++l) {
    const StateVec& s = code.logical[static_cast<size_t>(l)];
    double listed = 0;
    for (const auto& ket : logical_kets()[static_cast<size_t>(l)]) {
      Cx a = s.amp(s.index_of(ket));
      CHECK(std::abs(a - Cx{1.0 / 3.0, 0}) < 1e-12);
      listed += std::norm(a);
    }
    CHECK(std::abs(listed - 1.0) < 1e-12);  // nothing outside the nine kets
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
  }
  // Orthogonality across the logical basis.
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      CHECK(std::abs(inner_product(code.logical[static_cast<size_t>(a)],
                                   code.logical[static_cast<size_t>(b)])) < 1e-12);
}

TEST_CASE("every stabilizer fixes every logical state exactly") {
  for (const Code& code : {build_proposed_code(), build_steane_ternary()}) {
    REQUIRE(code.stabilizers.size() == 6);
    for (const auto& stab : code.stabilizers)
      for (const auto& logical : code.logical)
        CHECK(max_amp_diff(apply_word(logical, stab), logical) < 1e-10);
  }
}

TEST_CASE("pairwise commuting stabilizer sets") {
  for (const Code& code : {build_proposed_code(), build_steane_ternary()})
    for (size_t a = 0; a < code.stabilizers.size(); ++a)
      for (size_t b = a + 1; b < code.stabilizers.size(); ++b)
        CHECK(commutes(code.stabilizers[a], code.stabilizers[b]));
}

TEST_CASE("symplectic syndromes match the statevector reader on all singles") {
  for (const Code& code : {build_proposed_code(), build_steane_ternary()}) {
    for (const auto& err : single_qutrit_errors(code.n)) {
      Syndrome sym = syndrome_symplectic(code, err);
      Syndrome sv = syndrome_statevector(code, apply_word(code.logical[0], err));
      CHECK(sym == sv);
    }
  }
}

TEST_CASE("phase chart rows derive from the commutation rule") {
  Code code = build_proposed_code();
  for (const auto& row : phase_chart()) {
    for (int q : row.qutrits) {
      PauliWord e = PauliWord::single(7, q, QutritOp{Mod3(0), Mod3(row.z_subscript)});
      Syndrome s = syndrome_symplectic(code, e);
      CHECK(s.exps[0] == row.s1_exp);
      CHECK(s.exps[1] == row.s2_exp);
    }
  }
  // Completeness: the charted qutrit sets are exactly the equal-signature sets.
  for (const auto& row : phase_chart()) {
    std::set<int> charted(row.qutrits.begin(), row.qutrits.end());
    std::set<int> derived;
    for (int q = 0; q < 7; ++q) {
      PauliWord e = PauliWord::single(7, q, QutritOp{Mod3(0), Mod3(row.z_subscript)});
      Syndrome s = syndrome_symplectic(code, e);
      if (s.exps[0] == row.s1_exp && s.exps[1] == row.s2_exp) derived.insert(q);
    }
    CHECK(charted == derived);
  }
}

TEST_CASE("bit chart: frozen exact exponents, conjugate X2 rows, discrepancies") {
  Code code = build_proposed_code();
  const auto& exact = bit_chart_exact();
  const auto& ref = bit_chart_reference();
  for (int q = 0; q < 7; ++q) {
    PauliWord e1 = PauliWord::single(7, q, QutritOp{Mod3(1), Mod3(0)});
    PauliWord e2 = PauliWord::single(7, q, QutritOp{Mod3(2), Mod3(0)});
    Syndrome s1 = syndrome_symplectic(code, e1);
    Syndrome s2 = syndrome_symplectic(code, e2);
    for (int k = 0; k < 4; ++k) {
      Mod3 derived = s1.exps[static_cast<size_t>(2 + k)];
      CHECK(derived == exact[static_cast<size_t>(q)][static_cast<size_t>(k)]);
      // X2 row is the conjugate of the X1 row.
      CHECK(s2.exps[static_cast<size_t>(2 + k)] == -derived);
      // Support (which cells trigger) agrees with the simplified chart.
      CHECK((derived != Mod3(0)) ==
            (ref[static_cast<size_t>(q)][static_cast<size_t>(k)] != Mod3(0)));
    }
  }
  // Exactly eight cells differ, at the frozen positions.
  std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 3}, {1, 4}, {1, 6},
                                               {2, 2}, {2, 4}, {3, 3}, {3, 5}};
  CHECK(bit_chart_discrepancies() == expected);
}

TEST_CASE("decode handles singles and rejects unseen syndromes") {
  Code code = build_proposed_code();

  PauliWord x_err = PauliWord::single(7, 0, QutritOp{Mod3(1), Mod3(0)});
  PauliWord corr = decode(code, syndrome_symplectic(code, x_err));
  CHECK(multiply(corr, x_err).is_identity_word());

  // Phase correction lands on q0/q1 by convention.
  PauliWord z_err = PauliWord::single(7, 0, QutritOp{Mod3(0), Mod3(1)});
  PauliWord z_corr = decode(code, syndrome_symplectic(code, z_err));
  CHECK(multiply(z_corr, z_err).weight() == 0);

  // Two bit errors on an unregistered pair fall outside the table.
  PauliWord unseen = PauliWord::identity(7);
  unseen.set_op(0, QutritOp{Mod3(1), Mod3(0)});
  unseen.set_op(1, QutritOp{Mod3(1), Mod3(0)});
  CHECK_THROWS_AS(decode(code, syndrome_symplectic(code, unseen)),
                  UnrecognizedSyndromeError);
}

TEST_CASE("statevector reader refuses a non-eigenstate") {
  Code code = build_proposed_code();
  StateVec mixed = code.logical[0];
  StateVec shifted = apply_word(code.logical[0],
                                PauliWord::single(7, 2, QutritOp{Mod3(0), Mod3(1)}));
  for (size_t i = 0; i < mixed.dim(); ++i)
    mixed.amps()[i] = (mixed.amp(i) + shifted.amp(i)) / std::sqrt(2.0);
  mixed.normalize();
  CHECK_THROWS_AS(syndrome_statevector(code, mixed), NotAnEigenstateError);
}

TEST_CASE("correctability matrix for the colliding phase pair") {
  Code code = build_proposed_code();
  PauliWord a = PauliWord::single(7, 0, QutritOp{Mod3(0), Mod3(1)});  // Z1 on q0
  PauliWord b = PauliWord::single(7, 2, QutritOp{Mod3(0), Mod3(2)});  // Z2 on q2
  KLReport rep = kl_check_pair(code, a, b);
  CHECK(rep.offdiag_zero);
  CHECK_FALSE(rep.diag_constant);
  // The diagonal walks through the cube roots of unity.
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(rep.matrix[static_cast<size_t>(i)][static_cast<size_t>(i)] -
                   omega_pow(Mod3(i))) < 1e-9);
}

TEST_CASE("degeneracy classes pair up the partner phase errors") {
  Code code = build_proposed_code();
  std::vector<PauliWord> errors;
  const int qs[] = {0, 4, 2, 6};
  for (int sub = 1; sub <= 2; ++sub)
    for (int q : qs)
      errors.push_back(PauliWord::single(7, q, QutritOp{Mod3(0), Mod3(sub)}));
  // Order: Z1@0 Z1@4 Z1@2 Z1@6 Z2@0 Z2@4 Z2@2 Z2@6.
  auto classes = degeneracy_classes(code, errors);
  std::vector<std::vector<int>> expected = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  CHECK(classes == expected);
}

TEST_CASE("ternary Steane structure") {
  Code code = build_steane_ternary();
  REQUIRE(code.n == 7);
  const int zvec[3][7] = {{0, 0, 0, 1, 2, 2, 1}, {0, 1, 2, 0, 0, 2, 1}, {1, 0, 2, 0, 2, 0, 1}};
  REQUIRE(code.x_stab_indices.size() == 3);
  REQUIRE(code.z_stab_indices.size() == 3);
  const int supports[3][4] = {{3, 4, 5, 6}, {1, 2, 5, 6}, {0, 2, 4, 6}};
  for (int r = 0; r < 3; ++r) {
    const PauliWord& xw = code.stabilizers[static_cast<size_t>(
        code.x_stab_indices[static_cast<size_t>(r)])];
    std::set<int> support;
    for (int q = 0; q < 7; ++q)
      if (!xw.op(q).is_identity()) {
        CHECK(xw.op(q).x == Mod3(1));
        CHECK(xw.op(q).z == Mod3(0));
        support.insert(q);
      }
    CHECK(support == std::set<int>(supports[r], supports[r] + 4));

    const PauliWord& zw = code.stabilizers[static_cast<size_t>(
        code.z_stab_indices[static_cast<size_t>(r)])];
    for (int q = 0; q < 7; ++q) {
      CHECK(zw.op(q).x == Mod3(0));
      CHECK(zw.op(q).z == Mod3(zvec[r][q]));
    }
  }
  // Logical ladder |j_L> = (X1 on every qutrit)^j |0_L>.
  PauliWord shift = PauliWord::identity(7);
  for (int q = 0; q < 7; ++q) shift.set_op(q, QutritOp{Mod3(1), Mod3(0)});
  CHECK(max_amp_diff(apply_word(code.logical[0], shift), code.logical[1]) < 1e-12);
  CHECK(max_amp_diff(apply_word(code.logical[1], shift), code.logical[2]) < 1e-12);
}

TEST_CASE("single-qutrit error enumeration order") {
  auto errors = single_qutrit_errors(7);
  REQUIRE(errors.size() == 56);
  CHECK(errors[0] == PauliWord::single(7, 0, op_from_name("X1")));
  CHECK(errors[1] == PauliWord::single(7, 0, op_from_name("X2")));
  CHECK(errors[2] == PauliWord::single(7, 0, op_from_name("Z1")));
  CHECK(errors[7] == PauliWord::single(7, 0, op_from_name("Y22")));
  CHECK(errors[8] == PauliWord::single(7, 1, op_from_name("X1")));
}
