#include "triqec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace triqec {

namespace {

// True when w maps every logical basis state to itself times one shared phase.
bool acts_common_phase_identity(const Code& c, const PauliWord& w, double tol) {
  Cx first;
  for (size_t i = 0; i < c.logical.size(); ++i) {
    const StateVec mapped = apply_word(c.logical[i], w);
    const Cx ov = inner_product(c.logical[i], mapped);
    if (std::abs(std::abs(ov) - 1.0) > tol) return false;
    if (i == 0)
      first = ov;
    else if (std::abs(ov - first) > tol)
      return false;
  }
  return true;
}

int pow3(int k) {
  int v = 1;
  for (int i = 0; i < k; ++i) v *= 3;
  return v;
}

template <typename Fn>
void run_indexed(long long count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) fn(i);
  } else {
    for (long long i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Corrected: return "corrected";
    case Outcome::DegenerateCorrected: return "degenerate-corrected";
    case Outcome::LogicalFault: return "logical-fault";
    case Outcome::Undetected: return "undetected";
    case Outcome::Unrecognized: return "unrecognized";
  }
  return "?";
}

void count_outcome(SweepCounts& counts, Outcome o) {
  switch (o) {
    case Outcome::Corrected: ++counts.corrected; break;
    case Outcome::DegenerateCorrected: ++counts.degenerate_corrected; break;
    case Outcome::LogicalFault: ++counts.logical_fault; break;
    case Outcome::Undetected: ++counts.undetected; break;
    case Outcome::Unrecognized: ++counts.unrecognized; break;
  }
}

Outcome classify_error(const Code& c, const PauliWord& e, double tol) {
  const Syndrome syn = syndrome_symplectic(c, e);
  PauliWord corr(c.n);
  try {
    corr = decode(c, syn);
  } catch (const UnrecognizedSyndromeError&) {
    return Outcome::Unrecognized;
  }
  const PauliWord residual = multiply(corr, e);
  if (residual.is_identity_word()) return Outcome::Corrected;
  if (acts_common_phase_identity(c, residual, tol)) return Outcome::DegenerateCorrected;
  return syn.is_zero() ? Outcome::Undetected : Outcome::LogicalFault;
}

SingleErrorSweep sweep_single_errors(const Code& c, ExecMode mode) {
  const std::vector<PauliWord> errors = single_qutrit_errors(c.n);
  std::vector<Outcome> outcomes(errors.size(), Outcome::Unrecognized);
  run_indexed(static_cast<long long>(errors.size()), mode, [&](long long i) {
    outcomes[static_cast<size_t>(i)] = classify_error(c, errors[static_cast<size_t>(i)]);
  });
  SingleErrorSweep out;
  for (size_t i = 0; i < errors.size(); ++i) {
    count_outcome(out.counts, outcomes[i]);
    out.records.push_back({errors[i], outcomes[i]});
  }
  return out;
}

std::array<int, 7> phase_pattern_of(int index) {
  std::array<int, 7> w{};
  for (int q = 6; q >= 0; --q) {
    w[static_cast<size_t>(q)] = index % 3;
    index /= 3;
  }
  return w;
}

PhasePatternSweep sweep_phase_patterns(const Code& c, ExecMode mode) {
  const int total = pow3(c.n);
  PhasePatternSweep out;
  out.outcomes.assign(static_cast<size_t>(total), Outcome::Unrecognized);
  run_indexed(total, mode, [&](long long idx) {
    int rem = static_cast<int>(idx);
    PauliWord e(c.n);
    for (int q = c.n - 1; q >= 0; --q) {
      e.set_op(q, {Mod3(0), Mod3(rem % 3)});
      rem /= 3;
    }
    out.outcomes[static_cast<size_t>(idx)] = classify_error(c, e);
  });
  for (Outcome o : out.outcomes) count_outcome(out.counts, o);
  return out;
}

LogicalSearchReport find_low_weight_logicals(const Code& c, int max_weight, ExecMode mode) {
  if (max_weight < 1 || max_weight > c.n)
    throw std::invalid_argument("max weight out of range");

  // Materialize candidates first (nonidentity assignments over each support),
  // then classify them in a deterministic indexed loop.
  std::vector<PauliWord> candidates;
  std::vector<int> support;
  const auto assign_ops = [&](const std::vector<int>& supp) {
    const int k = static_cast<int>(supp.size());
    std::vector<int> digits(static_cast<size_t>(k), 1);  // 1..8 per position
    while (true) {
      PauliWord w(c.n);
      for (int p = 0; p < k; ++p) {
        const int d = digits[static_cast<size_t>(p)];
        w.set_op(supp[static_cast<size_t>(p)], {Mod3(d / 3), Mod3(d % 3)});
      }
      candidates.push_back(std::move(w));
      int pos = k - 1;
      while (pos >= 0 && digits[static_cast<size_t>(pos)] == 8) {
        digits[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<size_t>(pos)];
    }
  };
  const auto walk_supports = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      assign_ops(support);
      return;
    }
    for (int q = next; q <= c.n - remaining; ++q) {
      support.push_back(q);
      self(self, q + 1, remaining - 1);
      support.pop_back();
    }
  };
  for (int wgt = 1; wgt <= max_weight; ++wgt) walk_supports(walk_supports, 0, wgt);

  std::vector<char> is_logical(candidates.size(), 0);
  run_indexed(static_cast<long long>(candidates.size()), mode, [&](long long i) {
    const PauliWord& w = candidates[static_cast<size_t>(i)];
    if (!syndrome_symplectic(c, w).is_zero()) return;
    if (!acts_common_phase_identity(c, w, 1e-9)) is_logical[static_cast<size_t>(i)] = 1;
  });

  LogicalSearchReport out;
  out.candidates_scanned = static_cast<long long>(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i)
    if (is_logical[i]) out.logicals.push_back(candidates[i]);
  return out;
}

bool contains_word(const std::vector<PauliWord>& words, const PauliWord& w) {
  return std::any_of(words.begin(), words.end(), [&](const PauliWord& x) {
    return x.ops() == w.ops();
  });
}

std::vector<PauliWord> valid_phase_words(const Code& c) {
  std::vector<PauliWord> out;
  const int total = pow3(c.n);
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx;
    PauliWord w(c.n);
    for (int q = c.n - 1; q >= 0; --q) {
      w.set_op(q, {Mod3(0), Mod3(rem % 3)});
      rem /= 3;
    }
    bool ok = true;
    for (int i : c.x_stab_indices)
      if (!commutes(c.stabilizers[static_cast<size_t>(i)], w)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const StateVec& l : c.logical) {
      if (max_amp_diff(apply_word(l, w), l) > 1e-12) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

PairCollisionReport find_pair_collisions(const Code& proposed, std::pair<int, int> g2_pair) {
  if (g2_pair.first > g2_pair.second) std::swap(g2_pair.first, g2_pair.second);
  const std::vector<int>& g2 = proposed_g2();
  const bool in_class =
      std::count(g2.begin(), g2.end(), g2_pair.first) == 1 &&
      std::count(g2.begin(), g2.end(), g2_pair.second) == 1 &&
      g2_pair.first != g2_pair.second;
  if (!in_class)
    throw std::invalid_argument("pair must be two distinct qutrits of the 3-qutrit class");
  int third = -1;
  for (int q : g2)
    if (q != g2_pair.first && q != g2_pair.second) third = q;

  const std::vector<PauliWord> valid = valid_phase_words(proposed);

  PairCollisionReport out;
  out.pair = g2_pair;
  out.third = third;
  out.valid_word_count = static_cast<int>(valid.size());

  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      PauliWord pair_err(proposed.n);
      pair_err.set_op(g2_pair.first, {Mod3(a), Mod3(0)});
      pair_err.set_op(g2_pair.second, {Mod3(b), Mod3(0)});
      for (int s = 1; s <= 2; ++s) {
        const PauliWord single_err =
            PauliWord::single(proposed.n, third, {Mod3(s), Mod3(0)});
        bool collide = true;
        for (const PauliWord& w : valid) {
          if (commutation_phase(w, pair_err) != commutation_phase(w, single_err)) {
            collide = false;
            break;
          }
        }
        if (!collide) continue;
        PauliWord quotient = multiply(inverse(single_err), pair_err);
        const bool same = acts_common_phase_identity(proposed, quotient, 1e-9);
        if (!same) out.distinct_action_found = true;
        out.witnesses.push_back({pair_err, single_err, std::move(quotient), same});
      }
    }
  }
  if (out.witnesses.empty())
    throw NoWitnessError("no colliding error events for the requested pair");
  return out;
}

PairCheckReport pair_error_check(const Code& c) {
  if (!c.registered_pair)
    throw std::invalid_argument("code has no registered two-qutrit error table");
  const auto [qa, qb] = *c.registered_pair;

  PairCheckReport out;
  out.pair = *c.registered_pair;

  std::vector<SyndromeKey> pair_keys;
  std::vector<PauliWord> events;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      PauliWord e(c.n);
      e.set_op(qa, {Mod3(a), Mod3(0)});
      e.set_op(qb, {Mod3(b), Mod3(0)});
      const Syndrome syn = syndrome_symplectic(c, e);
      out.pair_syndromes.push_back(syn);
      pair_keys.push_back(syndrome_key(syn));
      events.push_back(std::move(e));
    }
  }

  out.distinct_within = true;
  for (size_t i = 0; i < pair_keys.size(); ++i)
    for (size_t j = i + 1; j < pair_keys.size(); ++j)
      if (pair_keys[i] == pair_keys[j]) out.distinct_within = false;

  out.distinct_from_singles = true;
  for (const PauliWord& s : single_qutrit_errors(c.n)) {
    const SyndromeKey k = syndrome_key(syndrome_symplectic(c, s));
    for (const auto& pk : pair_keys)
      if (k == pk) out.distinct_from_singles = false;
  }

  out.all_corrected = true;
  for (size_t i = 0; i < events.size(); ++i) {
    const StateVec psi = random_logical_state(c, kDefaultSeed + i);
    const StateVec fixed = correct(c, apply_word(psi, events[i]));
    if (!equal_up_to_global_phase(fixed, psi, 1e-9).equal) out.all_corrected = false;
  }
  return out;
}

StateVec random_logical_state(const Code& c, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  const auto uniform = [&eng]() {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
  };
  // Box-Muller from raw engine draws keeps the state reproducible across
  // standard libraries.
  std::vector<Cx> coef;
  double norm2 = 0.0;
  while (norm2 < 1e-12) {
    coef.clear();
    for (size_t i = 0; i < c.logical.size(); ++i) {
      const double u1 = 1.0 - uniform();
      const double u2 = uniform();
      const double r = std::sqrt(-2.0 * std::log(u1));
      coef.emplace_back(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
      norm2 += std::norm(coef.back());
    }
  }
  const double inv = 1.0 / std::sqrt(norm2);
  StateVec psi(c.logical.front().n());
  for (size_t i = 0; i < c.logical.size(); ++i)
    for (size_t k = 0; k < psi.amps().size(); ++k)
      psi.amps()[k] += coef[i] * inv * c.logical[i].amps()[k];
  return psi;
}

}  // namespace triqec
