#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "triqec/oracle.hpp"

using namespace triqec;

namespace {

PauliWord z_at(int q, int sub) { return PauliWord::single(7, q, QutritOp{Mod3(0), Mod3(sub)}); }
PauliWord x_at(int q, int sub) { return PauliWord::single(7, q, QutritOp{Mod3(sub), Mod3(0)}); }

}  // namespace

TEST_CASE("classification of representative single errors") {
  Code code = build_proposed_code();
  CHECK(classify_error(code, x_at(0, 1)) == Outcome::Corrected);
  CHECK(classify_error(code, x_at(5, 2)) == Outcome::Corrected);
  CHECK(classify_error(code, z_at(0, 1)) == Outcome::Corrected);
  CHECK(classify_error(code, PauliWord::single(7, 1, op_from_name("Y11"))) ==
        Outcome::Corrected);
  CHECK(classify_error(code, z_at(4, 1)) == Outcome::DegenerateCorrected);
  CHECK(classify_error(code, PauliWord::single(7, 5, op_from_name("Y12"))) ==
        Outcome::DegenerateCorrected);
  CHECK(classify_error(code, z_at(2, 1)) == Outcome::LogicalFault);
  CHECK(classify_error(code, PauliWord::single(7, 6, op_from_name("Y21"))) ==
        Outcome::LogicalFault);

  // Two bit errors on an unregistered pair: no decoder entry.
  PauliWord unseen = PauliWord::identity(7);
  unseen.set_op(0, QutritOp{Mod3(1), Mod3(0)});
  unseen.set_op(1, QutritOp{Mod3(1), Mod3(0)});
  CHECK(classify_error(code, unseen) == Outcome::Unrecognized);

  // A zero-syndrome word with nontrivial action slips through undetected.
  PauliWord logical_word = PauliWord::identity(7);
  logical_word.set_op(0, QutritOp{Mod3(0), Mod3(1)});
  logical_word.set_op(2, QutritOp{Mod3(0), Mod3(1)});
  CHECK(classify_error(code, logical_word) == Outcome::Undetected);
}

TEST_CASE("single-error sweep: frozen aggregate and per-qutrit pattern") {
  Code code = build_proposed_code();
  SingleErrorSweep sweep = sweep_single_errors(code);
  CHECK(sweep.counts.corrected == 26);
  CHECK(sweep.counts.degenerate_corrected == 12);
  CHECK(sweep.counts.logical_fault == 18);
  CHECK(sweep.counts.undetected == 0);
  CHECK(sweep.counts.unrecognized == 0);
  REQUIRE(sweep.records.size() == 56);
  for (size_t i = 0; i < sweep.records.size(); ++i) {
    int q = static_cast<int>(i) / 8;
    int op = static_cast<int>(i) % 8;
    Outcome expect;
    if (op < 2)  // pure bit errors are always pinpointed
      expect = Outcome::Corrected;
    else if (q == 0 || q == 1)
      expect = Outcome::Corrected;
    else if (q == 4 || q == 5)
      expect = Outcome::DegenerateCorrected;
    else
      expect = Outcome::LogicalFault;
    CHECK(sweep.records[i].outcome == expect);
  }
}

TEST_CASE("ternary Steane corrects every single error") {
  SingleErrorSweep sweep = sweep_single_errors(build_steane_ternary());
  CHECK(sweep.counts.corrected == 56);
  CHECK(sweep.counts.total() == 56);
}

TEST_CASE("serial and parallel sweeps agree") {
  Code code = build_proposed_code();
  SingleErrorSweep a = sweep_single_errors(code, ExecMode::Serial);
  SingleErrorSweep b = sweep_single_errors(code, ExecMode::Parallel);
  CHECK(a.counts == b.counts);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i)
    CHECK(a.records[i].outcome == b.records[i].outcome);

  PhasePatternSweep pa = sweep_phase_patterns(code, ExecMode::Serial);
  PhasePatternSweep pb = sweep_phase_patterns(code, ExecMode::Parallel);
  CHECK(pa.counts == pb.counts);
  CHECK(pa.outcomes == pb.outcomes);
}

TEST_CASE("phase-pattern sweep: frozen aggregate and corrected supports") {
  Code code = build_proposed_code();
  PhasePatternSweep sweep = sweep_phase_patterns(code);
  REQUIRE(sweep.outcomes.size() == 2187);
  CHECK(sweep.counts.corrected == 9);
  CHECK(sweep.counts.degenerate_corrected == 720);
  CHECK(sweep.counts.logical_fault == 1296);
  CHECK(sweep.counts.undetected == 162);
  CHECK(sweep.counts.unrecognized == 0);
  CHECK(sweep.counts.total() == 2187);

  // The identity pattern and the q0 phase error restore exactly.
  CHECK(sweep.outcomes[0] == Outcome::Corrected);
  CHECK(sweep.outcomes[729] == Outcome::Corrected);  // Z1 on q0 only
  // Every exactly-restored pattern lives on the two correction qutrits.
  int corrected_seen = 0;
  for (size_t i = 0; i < sweep.outcomes.size(); ++i) {
    if (sweep.outcomes[i] != Outcome::Corrected) continue;
    ++corrected_seen;
    auto w = phase_pattern_of(static_cast<int>(i));
    for (int q = 2; q < 7; ++q) CHECK(w[static_cast<size_t>(q)] == 0);
  }
  CHECK(corrected_seen == 9);
}

TEST_CASE("identity-acting phase words form the expected group") {
  Code code = build_proposed_code();
  auto words = valid_phase_words(code);
  CHECK(words.size() == 81);
  const int x1[7] = {1, 0, 2, 0, 1, 0, 2};
  const int x2[7] = {0, 1, 0, 2, 0, 1, 0};
  for (const auto& w : words) {
    int d1 = 0, d2 = 0, ones = 0;
    for (int q = 0; q < 7; ++q) {
      CHECK(w.op(q).x == Mod3(0));
      d1 += w.op(q).z.value() * x1[q];
      d2 += w.op(q).z.value() * x2[q];
      ones += w.op(q).z.value();
    }
    CHECK(d1 % 3 == 0);
    CHECK(d2 % 3 == 0);
    CHECK(ones % 3 == 0);
  }
}

TEST_CASE("weight-1 scan proves distance exceeds one") {
  Code code = build_proposed_code();
  LogicalSearchReport rep = find_low_weight_logicals(code, 1);
  CHECK(rep.candidates_scanned == 56);
  CHECK(rep.logicals.empty());
  for (const auto& e : single_qutrit_errors(7))
    CHECK_FALSE(syndrome_symplectic(code, e).is_zero());
}

TEST_CASE("weight-2 logical words: exactly the twelve partner-pair phase words") {
  Code code = build_proposed_code();
  LogicalSearchReport rep = find_low_weight_logicals(code, 2);
  CHECK(rep.candidates_scanned == 1400);
  REQUIRE(rep.logicals.size() == 12);

  std::set<std::string> found;
  for (const auto& w : rep.logicals) found.insert(word_to_string(w));
  const std::pair<int, int> pairs[] = {{0, 2}, {0, 6}, {2, 4}, {4, 6}, {1, 3}, {3, 5}};
  std::set<std::string> expected;
  for (auto [a, b] : pairs)
    for (int p = 1; p <= 2; ++p) {
      PauliWord w = PauliWord::identity(7);
      w.set_op(a, QutritOp{Mod3(0), Mod3(p)});
      w.set_op(b, QutritOp{Mod3(0), Mod3(p)});
      expected.insert(word_to_string(w));
    }
  CHECK(found == expected);
  CHECK(contains_word(rep.logicals, word_from_string("Z1 I Z1 I I I I")));
}

TEST_CASE("weight-3 scan keeps the twelve and picks up bit-type words") {
  Code code = build_proposed_code();
  LogicalSearchReport rep = find_low_weight_logicals(code, 3);
  CHECK(rep.candidates_scanned == 19320);
  PauliWord bitword = PauliWord::identity(7);
  bitword.set_op(2, QutritOp{Mod3(2), Mod3(0)});
  bitword.set_op(3, QutritOp{Mod3(2), Mod3(0)});
  bitword.set_op(6, QutritOp{Mod3(2), Mod3(0)});
  CHECK(contains_word(rep.logicals, bitword));
  CHECK(contains_word(rep.logicals, word_from_string("Z1 I Z1 I I I I")));
}

TEST_CASE("ternary Steane has no logical word up to weight two") {
  LogicalSearchReport rep = find_low_weight_logicals(build_steane_ternary(), 2);
  CHECK(rep.candidates_scanned == 1400);
  CHECK(rep.logicals.empty());
}

TEST_CASE("collision witnesses for the refused pairs") {
  Code code = build_proposed_code();
  const std::pair<int, int> refused[] = {{1, 3}, {1, 5}, {3, 5}};
  const int thirds[] = {5, 3, 1};
  for (int k = 0; k < 3; ++k) {
    PairCollisionReport rep = find_pair_collisions(code, refused[k]);
    CHECK(rep.third == thirds[k]);
    CHECK(rep.valid_word_count == 81);
    CHECK(rep.witnesses.size() == 2);
    CHECK_FALSE(rep.distinct_action_found);
    for (const auto& wit : rep.witnesses) {
      CHECK(wit.same_action);
      // The quotient is an undetectable word that fixes the code space: a
      // stabilizer-group element, which is what makes the events inseparable.
      CHECK(syndrome_symplectic(code, wit.quotient).is_zero());
      for (const auto& logical : code.logical) {
        PhaseMatch m = equal_up_to_global_phase(apply_word(logical, wit.quotient), logical);
        CHECK(m.equal);
      }
    }
  }
  CHECK_THROWS_AS(find_pair_collisions(code, {0, 2}), std::invalid_argument);
}

TEST_CASE("registered-pair syndromes: frozen rows, fully separated") {
  Code code = build_proposed_code();
  PairCheckReport rep = pair_error_check(code);
  CHECK(rep.pair == std::pair<int, int>{0, 6});
  REQUIRE(rep.pair_syndromes.size() == 4);
  const int zrows[4][4] = {{1, 2, 0, 0}, {1, 1, 0, 0}, {2, 2, 0, 0}, {2, 1, 0, 0}};
  std::set<std::vector<int>> seen;
  for (const auto& s : rep.pair_syndromes) {
    REQUIRE(s.exps.size() == 6);
    CHECK(s.exps[0] == Mod3(0));  // phase stabilizers stay silent on bit errors
    CHECK(s.exps[1] == Mod3(0));
    std::vector<int> z;
    for (int k = 2; k < 6; ++k) z.push_back(s.exps[static_cast<size_t>(k)].value());
    seen.insert(z);
  }
  std::set<std::vector<int>> expected;
  for (const auto& row : zrows) expected.insert({row[0], row[1], row[2], row[3]});
  CHECK(seen == expected);
  CHECK(rep.distinct_within);
  CHECK(rep.distinct_from_singles);
  CHECK(rep.all_corrected);
}

TEST_CASE("random logical states are deterministic, normalized, stabilized") {
  Code code = build_proposed_code();
  StateVec a = random_logical_state(code, kDefaultSeed);
  StateVec b = random_logical_state(code, kDefaultSeed);
  CHECK(max_amp_diff(a, b) == 0.0);
  CHECK(std::abs(a.norm() - 1.0) < 1e-12);
  for (const auto& stab : code.stabilizers)
    CHECK(max_amp_diff(apply_word(a, stab), a) < 1e-10);
  StateVec c = random_logical_state(code, kDefaultSeed + 1);
  CHECK(max_amp_diff(a, c) > 1e-3);
}
