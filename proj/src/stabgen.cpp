#include "triqec/stabgen.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "triqec/errors.hpp"
#include "triqec/oracle.hpp"

namespace triqec {

namespace {

constexpr int kN = 7;

bool in_g2(int q) {
  const auto& g2 = proposed_g2();
  return std::find(g2.begin(), g2.end(), q) != g2.end();
}

std::string stab_name(int idx) { return "S" + std::to_string(idx + 3); }

std::string positions_text(const std::vector<int>& ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ps[i]);
  }
  return out;
}

// Shared fixtures: partition stabilizers, logical states, codeword kets, and
// the per-qutrit X-power of the partition stabilizer covering that qutrit.
struct Fixtures {
  PauliWord s1;
  PauliWord s2;
  std::vector<StateVec> logical;
  std::vector<std::array<int, 7>> kets;
  std::array<int, 7> xsub{};
};

const Fixtures& fixtures() {
  static const Fixtures fx = [] {
    auto [s1, s2] = partition_stabilizers(kN);
    Code code = build_proposed_code();
    std::vector<std::array<int, 7>> kets;
    for (const StateVec& l : code.logical) {
      for (size_t idx = 0; idx < l.amps().size(); ++idx) {
        if (std::abs(l.amps()[idx]) < 1e-9) continue;
        const std::string t = l.trits_of(idx);
        std::array<int, 7> ket{};
        for (int q = 0; q < kN; ++q) ket[static_cast<size_t>(q)] = t[static_cast<size_t>(q)] - '0';
        kets.push_back(ket);
      }
    }
    std::array<int, 7> xsub{};
    for (int q = 0; q < kN; ++q) {
      const PauliWord& part = (q % 2 == 0) ? s1 : s2;
      xsub[static_cast<size_t>(q)] = part.op(q).x.value();
    }
    return Fixtures{std::move(s1), std::move(s2), std::move(code.logical), std::move(kets), xsub};
  }();
  return fx;
}

bool fixes_all_kets(const std::array<int, 7>& z) {
  for (const auto& ket : fixtures().kets) {
    int phase = 0;
    for (int q = 0; q < kN; ++q) phase += z[static_cast<size_t>(q)] * ket[static_cast<size_t>(q)];
    if (phase % 3 != 0) return false;
  }
  return true;
}

PauliWord word_of_zvec(const std::array<int, 7>& z) {
  PauliWord w(kN);
  for (int q = 0; q < kN; ++q) w.set_op(q, {Mod3(0), Mod3(z[static_cast<size_t>(q)])});
  return w;
}

int gf3_rank(std::vector<std::array<int, 7>> rows) {
  int rank = 0;
  for (int col = 0; col < kN && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] % 3 != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    const int inv = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)] == 1 ? 1 : 2;
    for (auto& v : rows[static_cast<size_t>(rank)]) v = v * inv % 3;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      const int f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] % 3;
      if (f == 0) continue;
      for (int cc = 0; cc < kN; ++cc)
        rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
            ((rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
              f * rows[static_cast<size_t>(rank)][static_cast<size_t>(cc)]) % 3 + 3) % 3;
    }
    ++rank;
  }
  return rank;
}

std::array<int, 7> zvec_of(const PauliWord& w) {
  std::array<int, 7> z{};
  for (int q = 0; q < kN; ++q) z[static_cast<size_t>(q)] = w.op(q).z.value();
  return z;
}

std::pair<int, int> normalize_pair(std::pair<int, int> pair) {
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  if (pair.first < 0 || pair.second > 6 || pair.first == pair.second)
    throw std::invalid_argument("pair must be two distinct qutrits in 0..6");
  return pair;
}

// ---- greedy construction ------------------------------------------------

struct Slot {
  bool forced_identity = false;
  bool selected = false;
  int zexp = 0;  // meaningful once the word's operators are resolved
};

struct GreedyState {
  std::array<std::array<Slot, 7>, 4> slots{};
  std::array<int, 7> d{};

  std::vector<int> class_positions(int stab, const std::vector<int>& cls) const {
    std::vector<int> out;
    for (int q : cls)
      if (slots[static_cast<size_t>(stab)][static_cast<size_t>(q)].selected) out.push_back(q);
    return out;
  }
};

// Minimum-d choice of the remaining class positions for one word.  Ties
// prefer positions whose partition-stabilizer operators differ, then the
// lowest index.  The last word re-picks its second position while its column
// pattern over the prior words duplicates the first position's column.
std::optional<std::string> select_positions(GreedyState& st, int stab,
                                            const std::vector<int>& cls,
                                            std::vector<int>& chosen) {
  chosen.clear();
  const auto& row = st.slots[static_cast<size_t>(stab)];
  std::vector<int> occupied = st.class_positions(stab, cls);
  std::vector<int> cands;
  for (int q : cls)
    if (!row[static_cast<size_t>(q)].selected && !row[static_cast<size_t>(q)].forced_identity)
      cands.push_back(q);
  const int need = 2 - static_cast<int>(occupied.size());
  if (need <= 0) return std::nullopt;
  if (static_cast<int>(cands.size()) < need)
    return "not enough free positions in class for " + stab_name(stab);

  const auto& xsub = fixtures().xsub;
  const auto dv = [&](int q) { return st.d[static_cast<size_t>(q)]; };

  if (need == 1) {
    const int anchor = occupied.front();
    int dmin = dv(cands.front());
    for (int q : cands) dmin = std::min(dmin, dv(q));
    int pick = -1;
    for (int q : cands)  // prefer a partition operator unequal to the anchor's
      if (dv(q) == dmin && xsub[static_cast<size_t>(q)] != xsub[static_cast<size_t>(anchor)]) {
        pick = q;
        break;
      }
    if (pick < 0)
      for (int q : cands)
        if (dv(q) == dmin) {
          pick = q;
          break;
        }
    chosen.push_back(pick);
  } else {
    std::vector<int> ds;
    for (int q : cands) ds.push_back(dv(q));
    std::sort(ds.begin(), ds.end());
    const int v1 = ds[0], v2 = ds[1];
    std::vector<std::pair<int, int>> best;
    for (size_t a = 0; a < cands.size(); ++a)
      for (size_t b = a + 1; b < cands.size(); ++b) {
        const int da = dv(cands[a]), db = dv(cands[b]);
        if (std::min(da, db) == v1 && std::max(da, db) == v2)
          best.emplace_back(cands[a], cands[b]);
      }
    auto differs = [&](const std::pair<int, int>& p) {
      return xsub[static_cast<size_t>(p.first)] != xsub[static_cast<size_t>(p.second)];
    };
    std::pair<int, int> picked = best.front();
    for (const auto& p : best)
      if (differs(p)) {
        picked = p;
        break;
      }
    int qk = picked.first, ql = picked.second;
    if (dv(ql) < dv(qk)) std::swap(qk, ql);

    if (stab == 3 && dv(qk) == dv(ql)) {
      // Re-pick while the two columns coincide over all prior words.
      std::vector<int> discarded;
      const auto column_match = [&](int a, int b) {
        for (int s = 0; s < 3; ++s) {
          const bool na = st.slots[static_cast<size_t>(s)][static_cast<size_t>(a)].selected;
          const bool nb = st.slots[static_cast<size_t>(s)][static_cast<size_t>(b)].selected;
          if (na != nb) return false;
        }
        return true;
      };
      while (column_match(qk, ql)) {
        discarded.push_back(ql);
        int next = -1;
        for (int q : cands) {
          if (q == qk) continue;
          if (std::find(discarded.begin(), discarded.end(), q) != discarded.end()) continue;
          if (next < 0 || dv(q) < dv(next) || (dv(q) == dv(next) && q < next)) next = q;
        }
        if (next < 0)
          return "column-collision re-pick exhausted the class candidates for " +
                 stab_name(stab);
        ql = next;
      }
    }
    chosen.push_back(qk);
    chosen.push_back(ql);
  }

  for (int q : chosen) {
    st.slots[static_cast<size_t>(stab)][static_cast<size_t>(q)].selected = true;
    ++st.d[static_cast<size_t>(q)];
  }
  return std::nullopt;
}

// Resolve the Z subscripts of one fully positioned word.  Within a class the
// two operators must commute with the covering partition stabilizer: equal
// X powers force unequal subscripts and vice versa.  Candidate assignments
// are filtered by the two-Z1-two-Z2 budget and by fixing all codeword kets;
// the survivor with the lexicographically smallest exponent vector wins.
std::optional<std::string> resolve_operators(GreedyState& st, int stab,
                                             std::array<int, 7>& out_z) {
  const auto& fx = fixtures();
  struct ClassPick {
    int p1 = -1, p2 = -1;
    int fixed1 = 0, fixed2 = 0;  // seed subscript if pre-assigned
    bool mixed = false;
  };
  std::array<ClassPick, 2> picks;
  const std::vector<int>* classes[2] = {&proposed_g1(), &proposed_g2()};
  for (int ci = 0; ci < 2; ++ci) {
    std::vector<int> ps = st.class_positions(stab, *classes[ci]);
    if (ps.size() != 2)
      return stab_name(stab) + " does not have two operators in each class";
    std::sort(ps.begin(), ps.end());
    ClassPick& cp = picks[static_cast<size_t>(ci)];
    cp.p1 = ps[0];
    cp.p2 = ps[1];
    cp.mixed = fx.xsub[static_cast<size_t>(ps[0])] == fx.xsub[static_cast<size_t>(ps[1])];
    cp.fixed1 = st.slots[static_cast<size_t>(stab)][static_cast<size_t>(ps[0])].zexp;
    cp.fixed2 = st.slots[static_cast<size_t>(stab)][static_cast<size_t>(ps[1])].zexp;
  }

  const auto class_options = [](const ClassPick& cp) {
    std::vector<std::pair<int, int>> opts;
    if (cp.fixed1 != 0)
      opts.emplace_back(cp.fixed1, cp.mixed ? 3 - cp.fixed1 : cp.fixed1);
    else if (cp.fixed2 != 0)
      opts.emplace_back(cp.mixed ? 3 - cp.fixed2 : cp.fixed2, cp.fixed2);
    else if (cp.mixed) {
      opts.emplace_back(1, 2);
      opts.emplace_back(2, 1);
    } else {
      opts.emplace_back(1, 1);
      opts.emplace_back(2, 2);
    }
    return opts;
  };

  bool found = false;
  std::array<int, 7> best{};
  for (const auto& [a1, a2] : class_options(picks[0])) {
    for (const auto& [b1, b2] : class_options(picks[1])) {
      std::array<int, 7> z{};
      z[static_cast<size_t>(picks[0].p1)] = a1;
      z[static_cast<size_t>(picks[0].p2)] = a2;
      z[static_cast<size_t>(picks[1].p1)] = b1;
      z[static_cast<size_t>(picks[1].p2)] = b2;
      int ones = 0, twos = 0;
      for (int v : z) {
        if (v == 1) ++ones;
        if (v == 2) ++twos;
      }
      if (ones != 2 || twos != 2) continue;
      if (!fixes_all_kets(z)) continue;
      const PauliWord w = word_of_zvec(z);
      if (!commutes(fx.s1, w) || !commutes(fx.s2, w)) continue;
      if (!found || z < best) {
        best = z;
        found = true;
      }
    }
  }
  if (!found)
    return "no operator assignment for " + stab_name(stab) +
           " satisfies the commutation, budget, and codeword constraints";
  for (int q = 0; q < kN; ++q)
    st.slots[static_cast<size_t>(stab)][static_cast<size_t>(q)].zexp =
        best[static_cast<size_t>(q)];
  out_z = best;
  return std::nullopt;
}

// nullopt on success; otherwise the failure reason. The partial trace is
// always kept in `result`.
std::optional<std::string> run_greedy(std::pair<int, int> pair, GenResult& result) {
  const int i = pair.first, j = pair.second;
  GreedyState st;

  st.slots[0][static_cast<size_t>(i)] = {false, true, 1};  // S3 seeded with Z1 at i
  st.slots[1][static_cast<size_t>(j)] = {false, true, 1};  // S4 seeded with Z1 at j
  ++st.d[static_cast<size_t>(i)];
  ++st.d[static_cast<size_t>(j)];
  result.trace.steps.push_back({"seed", {i, j}, st.d,
                                "Z1 at " + std::to_string(i) + " in S3 and at " +
                                    std::to_string(j) + " in S4"});

  for (int s = 0; s < 4; ++s) {
    if (s != 0) st.slots[static_cast<size_t>(s)][static_cast<size_t>(i)].forced_identity = true;
    if (s != 1) st.slots[static_cast<size_t>(s)][static_cast<size_t>(j)].forced_identity = true;
  }
  result.trace.steps.push_back({"forced identities", {}, st.d,
                                "every other word holds I at " + std::to_string(i) +
                                    " and " + std::to_string(j)});

  result.zset.words.clear();
  for (int s = 0; s < 4; ++s) {
    for (int ci = 0; ci < 2; ++ci) {
      const std::vector<int>& cls = ci == 0 ? proposed_g1() : proposed_g2();
      std::vector<int> chosen;
      if (auto err = select_positions(st, s, cls, chosen)) return err;
      if (!chosen.empty())
        result.trace.steps.push_back({stab_name(s) + "/g" + std::to_string(ci + 1), chosen,
                                      st.d, "positions " + positions_text(chosen)});
    }
    std::array<int, 7> z{};
    if (auto err = resolve_operators(st, s, z)) return err;
    result.zset.words.push_back(word_of_zvec(z));
    result.trace.steps.push_back({stab_name(s) + " operators", {}, st.d,
                                  word_to_string(result.zset.words.back()) +
                                      " (codeword stabilization verified)"});
  }
  return std::nullopt;
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& n : notes) {
    if (!out.empty()) out += "; ";
    out += n;
  }
  return out.empty() ? "validator rejected the generated set" : out;
}

}  // namespace

bool pair_eligible(std::pair<int, int> pair) {
  pair = normalize_pair(pair);
  return !(in_g2(pair.first) && in_g2(pair.second));
}

std::vector<std::pair<int, int>> eligible_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < kN; ++i)
    for (int j = i + 1; j < kN; ++j)
      if (pair_eligible({i, j})) out.emplace_back(i, j);
  return out;
}

GenResult generate_greedy(std::pair<int, int> pair) {
  pair = normalize_pair(pair);
  if (!pair_eligible(pair))
    throw PairUnsupportedError("simultaneous bit errors on two 3-class qutrits "
                               "cannot be corrected");
  GenResult result;
  if (auto err = run_greedy(pair, result)) throw GenerationFailedError(*err);
  const ValidationReport report = validate(result.zset, pair);
  if (!report.pass()) throw GenerationFailedError(join_notes(report.notes));
  return result;
}

GenResult generate(std::pair<int, int> pair) {
  pair = normalize_pair(pair);
  if (!pair_eligible(pair))
    throw PairUnsupportedError("simultaneous bit errors on two 3-class qutrits "
                               "cannot be corrected");
  GenResult result;
  const std::optional<std::string> greedy_err = [&]() -> std::optional<std::string> {
    if (auto err = run_greedy(pair, result)) return err;
    const ValidationReport report = validate(result.zset, pair);
    if (!report.pass()) return join_notes(report.notes);
    return std::nullopt;
  }();
  if (!greedy_err) return result;

  result.zset = exhaustive_fallback(pair);
  result.used_fallback = true;
  GenStep step;
  step.label = "exhaustive fallback";
  step.note = "greedy walk failed (" + *greedy_err + "); canonical search used instead";
  if (!result.trace.steps.empty()) step.d = result.trace.steps.back().d;
  result.trace.steps.push_back(std::move(step));
  return result;
}

ZStabSet exhaustive_fallback(std::pair<int, int> pair) {
  pair = normalize_pair(pair);
  if (!pair_eligible(pair))
    throw PairUnsupportedError("simultaneous bit errors on two 3-class qutrits "
                               "cannot be corrected");
  const int i = pair.first, j = pair.second;
  const auto& fx = fixtures();

  // Candidate pool in canonical (lexicographic exponent-vector) order.
  std::vector<std::array<int, 7>> pool;
  for (int idx = 0; idx < 2187; ++idx) {
    std::array<int, 7> z{};
    int rem = idx;
    for (int q = kN - 1; q >= 0; --q) {
      z[static_cast<size_t>(q)] = rem % 3;
      rem /= 3;
    }
    int g1c = 0, g2c = 0, ones = 0, twos = 0;
    for (int q = 0; q < kN; ++q) {
      if (z[static_cast<size_t>(q)] == 0) continue;
      (in_g2(q) ? g2c : g1c) += 1;
      (z[static_cast<size_t>(q)] == 1 ? ones : twos) += 1;
    }
    if (g1c != 2 || g2c != 2 || ones != 2 || twos != 2) continue;
    if (!fixes_all_kets(z)) continue;
    const PauliWord w = word_of_zvec(z);
    if (!commutes(fx.s1, w) || !commutes(fx.s2, w)) continue;
    pool.push_back(z);
  }

  std::vector<std::array<int, 7>> slot_a, slot_b, slot_c;
  for (const auto& z : pool) {
    const bool at_i = z[static_cast<size_t>(i)] != 0;
    const bool at_j = z[static_cast<size_t>(j)] != 0;
    if (at_i && !at_j) slot_a.push_back(z);
    if (at_j && !at_i) slot_b.push_back(z);
    if (!at_i && !at_j) slot_c.push_back(z);
  }

  // Integer prescreen of predicate (e) plus pair-event separation and full
  // rank keeps the statevector validator off obviously dead tuples.
  const auto prescreen = [&](const std::array<std::array<int, 7>, 4>& rows) {
    if (gf3_rank({rows.begin(), rows.end()}) != 4) return false;
    std::vector<std::array<int, 4>> seen;
    for (int q = 0; q < kN; ++q) {
      for (int a = 1; a <= 2; ++a) {
        std::array<int, 4> syn{};
        bool zero = true;
        for (int r = 0; r < 4; ++r) {
          syn[static_cast<size_t>(r)] =
              rows[static_cast<size_t>(r)][static_cast<size_t>(q)] * a % 3;
          zero = zero && syn[static_cast<size_t>(r)] == 0;
        }
        if (zero) return false;
        if (std::find(seen.begin(), seen.end(), syn) != seen.end()) return false;
        seen.push_back(syn);
      }
    }
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        std::array<int, 4> syn{};
        bool zero = true;
        for (int r = 0; r < 4; ++r) {
          syn[static_cast<size_t>(r)] =
              (rows[static_cast<size_t>(r)][static_cast<size_t>(i)] * a +
               rows[static_cast<size_t>(r)][static_cast<size_t>(j)] * b) % 3;
          zero = zero && syn[static_cast<size_t>(r)] == 0;
        }
        if (zero) return false;
        if (std::find(seen.begin(), seen.end(), syn) != seen.end()) return false;
        seen.push_back(syn);
      }
    }
    return true;
  };

  for (const auto& a : slot_a) {
    for (const auto& b : slot_b) {
      for (size_t c1 = 0; c1 < slot_c.size(); ++c1) {
        for (size_t c2 = c1 + 1; c2 < slot_c.size(); ++c2) {
          const std::array<std::array<int, 7>, 4> rows = {a, b, slot_c[c1], slot_c[c2]};
          if (!prescreen(rows)) continue;
          ZStabSet zset;
          for (const auto& z : rows) zset.words.push_back(word_of_zvec(z));
          if (validate(zset, pair).pass()) return zset;
        }
      }
    }
  }
  throw GenerationFailedError("exhaustive search found no valid stabilizer set for pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
}

ValidationReport validate(const ZStabSet& zset, std::pair<int, int> pair) {
  ValidationReport rep;
  pair = normalize_pair(pair);
  const auto& fx = fixtures();

  rep.shape_ok = zset.words.size() == 4;
  if (!rep.shape_ok) rep.notes.push_back("expected exactly four words");
  std::vector<std::array<int, 7>> rows;
  for (const PauliWord& w : zset.words) {
    if (w.n() != kN) {
      rep.shape_ok = false;
      rep.notes.push_back("word length mismatch");
      break;
    }
    int g1c = 0, g2c = 0, ones = 0, twos = 0;
    bool pure_z = true;
    for (int q = 0; q < kN; ++q) {
      if (w.op(q).x != Mod3(0)) pure_z = false;
      const int z = w.op(q).z.value();
      if (z == 0) continue;
      (in_g2(q) ? g2c : g1c) += 1;
      (z == 1 ? ones : twos) += 1;
    }
    if (!pure_z || g1c != 2 || g2c != 2 || ones != 2 || twos != 2) {
      rep.shape_ok = false;
      rep.notes.push_back(word_to_string(w) + ": not 2+2 over the classes with two Z1 "
                          "and two Z2");
    }
    rows.push_back(zvec_of(w));
  }
  if (rep.shape_ok) {
    for (size_t x = 0; x < rows.size(); ++x)
      for (size_t y = x + 1; y < rows.size(); ++y)
        if (rows[x] == rows[y]) {
          rep.shape_ok = false;
          rep.notes.push_back("duplicate stabilizer words");
        }
    if (rep.shape_ok && gf3_rank(rows) != 4) {
      rep.shape_ok = false;
      rep.notes.push_back("exponent vectors are linearly dependent");
    }
  }

  rep.commutation_ok = true;
  for (const PauliWord& w : zset.words)
    if (w.n() != kN || !commutes(fx.s1, w) || !commutes(fx.s2, w)) rep.commutation_ok = false;
  if (!rep.commutation_ok) rep.notes.push_back("a word fails to commute with S1 or S2");

  rep.stabilization_ok = true;
  for (const PauliWord& w : zset.words) {
    if (w.n() != kN) {
      rep.stabilization_ok = false;
      break;
    }
    for (const StateVec& l : fx.logical)
      if (max_amp_diff(apply_word(l, w), l) > 1e-10) rep.stabilization_ok = false;
  }
  if (!rep.stabilization_ok) rep.notes.push_back("a word does not fix all logical states");

  rep.exclusive_trigger_ok = zset.words.size() == 4;
  for (size_t s = 0; s < zset.words.size() && rep.exclusive_trigger_ok; ++s) {
    if (zset.words[s].n() != kN) {
      rep.exclusive_trigger_ok = false;
      break;
    }
    const bool at_i = !zset.words[s].op(pair.first).is_identity();
    const bool at_j = !zset.words[s].op(pair.second).is_identity();
    if (at_i != (s == 0) || at_j != (s == 1)) rep.exclusive_trigger_ok = false;
  }
  if (!rep.exclusive_trigger_ok)
    rep.notes.push_back("S3 must be the only word touching i and S4 the only one touching j");

  rep.singles_ok = zset.words.size() == 4;
  if (rep.singles_ok) {
    std::vector<SyndromeKey> seen;
    for (int q = 0; q < kN && rep.singles_ok; ++q) {
      for (int a = 1; a <= 2; ++a) {
        const PauliWord e = PauliWord::single(kN, q, {Mod3(a), Mod3(0)});
        SyndromeKey key;
        for (const PauliWord& w : zset.words)
          key.push_back(commutation_phase(w, e).value());
        const bool zero = std::all_of(key.begin(), key.end(), [](int v) { return v == 0; });
        if (zero || std::find(seen.begin(), seen.end(), key) != seen.end()) {
          rep.singles_ok = false;
          break;
        }
        seen.push_back(key);
      }
    }
  }
  if (!rep.singles_ok)
    rep.notes.push_back("single bit-error syndromes are not all nonzero and distinct");

  rep.pair_ok = false;
  if (zset.words.size() == 4) {
    try {
      const Code code = build_proposed_code_with_zset(zset.words, pair);
      const PairCheckReport pc = pair_error_check(code);
      rep.pair_ok = pc.distinct_within && pc.distinct_from_singles && pc.all_corrected;
      if (!rep.pair_ok) rep.notes.push_back("registered-pair decode round-trip failed");
    } catch (const std::exception& e) {
      rep.notes.push_back(std::string("pair check could not run: ") + e.what());
    }
  }
  return rep;
}

ZStabSet default_zset() {
  return {{word_from_string("Z1 Z2 Z1 Z2 I I I"), word_from_string("I I I Z1 Z2 Z1 Z2"),
           word_from_string("I Z1 Z2 Z1 Z2 I I"), word_from_string("I I Z1 Z2 Z1 Z2 I")}};
}

ZStabSet reference_zset_1_4() {
  return {{word_from_string("Z2 Z1 Z2 Z1 I I I"), word_from_string("I I I Z2 Z1 Z2 Z1"),
           word_from_string("Z1 I Z1 Z2 I Z2 I"), word_from_string("Z1 I I Z2 I Z2 Z1")}};
}

}  // namespace triqec
