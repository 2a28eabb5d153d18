#include "triqec/code.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace triqec {

namespace {

constexpr int kN = 7;

const std::array<const char*, 9> kZeroKets = {
    "0000000", "1020102", "2010201", "0102010", "1122112",
    "2112211", "0201020", "1221122", "2211221"};
const std::array<const char*, 9> kOneKets = {
    "1111111", "2101210", "0121012", "1210121", "2200220",
    "0220022", "1012101", "2002200", "0022002"};
const std::array<const char*, 9> kTwoKets = {
    "2222222", "0212021", "1202120", "2021202", "0011001",
    "1001100", "2120212", "0110011", "1100110"};

StateVec ket_superposition(const std::array<const char*, 9>& kets) {
  StateVec s(kN);
  for (const char* k : kets) s.amps()[s.index_of(k)] = Cx{1.0 / 3.0, 0.0};
  return s;
}

PauliWord word(const char* text) { return word_from_string(text); }

// Enumerated keys for every single-X (or single-Z) error; correction is the
// exact inverse. Throws on key collisions so ambiguous tables cannot be built.
void add_entry(std::map<SyndromeKey, PauliWord>& table, SyndromeKey key, PauliWord corr) {
  auto [it, inserted] = table.emplace(std::move(key), std::move(corr));
  if (!inserted) throw std::logic_error("decode table syndrome collision");
}

void fill_single_error_table(const Code& c, bool bit_part,
                             std::map<SyndromeKey, PauliWord>& table) {
  add_entry(table, SyndromeKey(bit_part ? c.z_stab_indices.size() : c.x_stab_indices.size(), 0),
            PauliWord::identity(c.n));
  for (int q = 0; q < c.n; ++q) {
    for (int p = 1; p <= 2; ++p) {
      const QutritOp op = bit_part ? QutritOp{Mod3(p), Mod3(0)} : QutritOp{Mod3(0), Mod3(p)};
      const PauliWord e = PauliWord::single(c.n, q, op);
      const Syndrome syn = syndrome_symplectic(c, e);
      add_entry(table, bit_part ? c.bit_key(syn) : c.phase_key(syn), inverse(e));
    }
  }
}

void register_pair(Code& c, std::pair<int, int> pair) {
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      PauliWord e(c.n);
      e.set_op(pair.first, {Mod3(a), Mod3(0)});
      e.set_op(pair.second, {Mod3(b), Mod3(0)});
      add_entry(c.bit_table, c.bit_key(syndrome_symplectic(c, e)), inverse(e));
    }
  }
  c.registered_pair = pair;
}

// Phase decode representative: exponent s1 on S1 names the class whose
// lowest-index member sits on qutrit 0, and the matching correction there is
// Z^s1; likewise s2 with qutrit 1. Every other class member differs from the
// representative by a word that fixes each logical basis state.
void fill_proposed_phase_table(Code& c) {
  for (int s1 = 0; s1 < 3; ++s1) {
    for (int s2 = 0; s2 < 3; ++s2) {
      PauliWord corr(c.n);
      corr.set_op(0, {Mod3(0), Mod3(s1)});
      corr.set_op(1, {Mod3(0), Mod3(s2)});
      add_entry(c.phase_table, SyndromeKey{s1, s2}, corr);
    }
  }
}

Code proposed_skeleton() {
  Code c;
  c.id = "proposed";
  c.n = kN;
  auto [s1, s2] = partition_stabilizers(kN);
  c.stabilizers = {s1, s2};
  c.x_stab_indices = {0, 1};
  c.logical = {ket_superposition(kZeroKets), ket_superposition(kOneKets),
               ket_superposition(kTwoKets)};
  return c;
}

}  // namespace

SyndromeKey syndrome_key(const Syndrome& s) {
  SyndromeKey k;
  k.reserve(s.exps.size());
  for (auto e : s.exps) k.push_back(e.value());
  return k;
}

SyndromeKey Code::bit_key(const Syndrome& s) const {
  SyndromeKey k;
  for (int i : z_stab_indices) k.push_back(s.exps[static_cast<size_t>(i)].value());
  return k;
}

SyndromeKey Code::phase_key(const Syndrome& s) const {
  SyndromeKey k;
  for (int i : x_stab_indices) k.push_back(s.exps[static_cast<size_t>(i)].value());
  return k;
}

const std::vector<int>& proposed_g1() {
  static const std::vector<int> g1 = {0, 2, 4, 6};
  return g1;
}

const std::vector<int>& proposed_g2() {
  static const std::vector<int> g2 = {1, 3, 5};
  return g2;
}

std::pair<PauliWord, PauliWord> partition_stabilizers(int n) {
  if (n < 3) throw std::invalid_argument("partition stabilizers require n >= 3");
  PauliWord s1(n), s2(n);
  int even_rank = 0, odd_rank = 0;
  for (int q = 0; q < n; ++q) {
    if (q % 2 == 0) {
      s1.set_op(q, {Mod3(1 + even_rank % 2), Mod3(0)});
      ++even_rank;
    } else {
      s2.set_op(q, {Mod3(1 + odd_rank % 2), Mod3(0)});
      ++odd_rank;
    }
  }
  return {s1, s2};
}

Code build_proposed_code() {
  Code c = proposed_skeleton();
  c.stabilizers.push_back(word("Z1 Z2 Z1 Z2 I I I"));
  c.stabilizers.push_back(word("I I I Z1 Z2 Z1 Z2"));
  c.stabilizers.push_back(word("I Z1 Z2 Z1 Z2 I I"));
  c.stabilizers.push_back(word("I I Z1 Z2 Z1 Z2 I"));
  c.z_stab_indices = {2, 3, 4, 5};
  fill_proposed_phase_table(c);
  fill_single_error_table(c, /*bit_part=*/true, c.bit_table);
  register_pair(c, {0, 6});
  return c;
}

Code build_proposed_code_with_zset(const std::vector<PauliWord>& zwords,
                                   std::pair<int, int> pair) {
  if (zwords.size() != 4) throw std::invalid_argument("expected four Z-stabilizer words");
  Code c = proposed_skeleton();
  c.id = "proposed+zset";
  for (const auto& w : zwords) {
    if (w.n() != kN) throw std::invalid_argument("Z word length mismatch");
    c.stabilizers.push_back(w);
  }
  c.z_stab_indices = {2, 3, 4, 5};
  fill_proposed_phase_table(c);
  fill_single_error_table(c, /*bit_part=*/true, c.bit_table);
  register_pair(c, pair);
  return c;
}

Code build_steane_ternary() {
  Code c;
  c.id = "steane";
  c.n = kN;
  c.stabilizers = {
      word("I I I X1 X1 X1 X1"),
      word("I X1 X1 I I X1 X1"),
      word("X1 I X1 I X1 I X1"),
      word("I I I Z1 Z2 Z2 Z1"),
      word("I Z1 Z2 I I Z2 Z1"),
      word("Z1 I Z2 I Z2 I Z1"),
  };
  c.x_stab_indices = {0, 1, 2};
  c.z_stab_indices = {3, 4, 5};

  // Symmetrize |0000000> over the 27-element X-stabilizer group, then shift
  // by the transversal X1 logical to get the other basis states.
  StateVec zero(kN);
  const double amp = 1.0 / std::sqrt(27.0);
  const std::array<int, kN> r1 = {0, 0, 0, 1, 1, 1, 1};
  const std::array<int, kN> r2 = {0, 1, 1, 0, 0, 1, 1};
  const std::array<int, kN> r3 = {1, 0, 1, 0, 1, 0, 1};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int g = 0; g < 3; ++g) {
        std::string ket(kN, '0');
        for (int q = 0; q < kN; ++q)
          ket[static_cast<size_t>(q)] =
              static_cast<char>('0' + (a * r1[static_cast<size_t>(q)] +
                                       b * r2[static_cast<size_t>(q)] +
                                       g * r3[static_cast<size_t>(q)]) % 3);
        zero.amps()[zero.index_of(ket)] = Cx{amp, 0.0};
      }
    }
  }
  PauliWord xbar(kN);
  for (int q = 0; q < kN; ++q) xbar.set_op(q, {Mod3(1), Mod3(0)});
  c.logical = {zero, apply_word(zero, xbar), apply_word(apply_word(zero, xbar), xbar)};

  fill_single_error_table(c, /*bit_part=*/true, c.bit_table);
  fill_single_error_table(c, /*bit_part=*/false, c.phase_table);
  return c;
}

Syndrome syndrome_symplectic(const Code& c, const PauliWord& e) {
  Syndrome s;
  s.exps.reserve(c.stabilizers.size());
  for (const auto& stab : c.stabilizers) s.exps.push_back(commutation_phase(stab, e));
  return s;
}

Syndrome syndrome_statevector(const Code& c, const StateVec& s, double tol) {
  Syndrome syn;
  const double n2 = s.norm() * s.norm();
  for (size_t i = 0; i < c.stabilizers.size(); ++i) {
    const StateVec t = apply_word(s, c.stabilizers[i]);
    const Cx ov = inner_product(s, t) / n2;
    int best = 0;
    double best_dist = std::abs(ov - kOmegaPow[0]);
    for (int k = 1; k < 3; ++k) {
      const double d = std::abs(ov - kOmegaPow[static_cast<size_t>(k)]);
      if (d < best_dist) {
        best_dist = d;
        best = k;
      }
    }
    // Verify the eigenvalue amplitude-wise, not just via the overlap.
    StateVec expect = s;
    for (auto& a : expect.amps()) a *= kOmegaPow[static_cast<size_t>(best)];
    const double residual = max_amp_diff(t, expect);
    if (residual > tol) {
      std::ostringstream msg;
      msg << "stabilizer " << i << " does not have the state as an eigenstate "
          << "(residual " << residual << ")";
      throw NotAnEigenstateError(static_cast<int>(i), residual, msg.str());
    }
    syn.exps.push_back(Mod3(best));
  }
  return syn;
}

PauliWord decode(const Code& c, const Syndrome& syn) {
  if (syn.exps.size() != c.stabilizers.size())
    throw std::invalid_argument("syndrome length mismatch");
  const SyndromeKey pk = c.phase_key(syn);
  const SyndromeKey bk = c.bit_key(syn);
  const auto pit = c.phase_table.find(pk);
  if (pit == c.phase_table.end()) {
    std::ostringstream msg;
    msg << "no phase-table entry for exponents (";
    for (size_t i = 0; i < pk.size(); ++i) msg << (i ? "," : "") << pk[i];
    msg << ")";
    throw UnrecognizedSyndromeError(msg.str());
  }
  const auto bit = c.bit_table.find(bk);
  if (bit == c.bit_table.end()) {
    std::ostringstream msg;
    msg << "no bit-table entry for exponents (";
    for (size_t i = 0; i < bk.size(); ++i) msg << (i ? "," : "") << bk[i];
    msg << ")";
    throw UnrecognizedSyndromeError(msg.str());
  }
  return multiply(pit->second, bit->second);
}

StateVec correct(const Code& c, const StateVec& s) {
  return apply_word(s, decode(c, syndrome_statevector(c, s)));
}

KLReport kl_check_pair(const Code& c, const PauliWord& a, const PauliWord& b, double tol) {
  std::vector<StateVec> as, bs;
  for (const auto& l : c.logical) {
    as.push_back(apply_word(l, a));
    bs.push_back(apply_word(l, b));
  }
  KLReport r;
  r.matrix.assign(3, std::vector<Cx>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          inner_product(as[static_cast<size_t>(i)], bs[static_cast<size_t>(j)]);
  r.offdiag_zero = true;
  r.diag_constant = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i != j && std::abs(r.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]) > tol)
        r.offdiag_zero = false;
      if (i == j && std::abs(r.matrix[static_cast<size_t>(i)][static_cast<size_t>(i)] -
                             r.matrix[0][0]) > tol)
        r.diag_constant = false;
    }
  return r;
}

KLSweep kl_check(const Code& c, const std::vector<PauliWord>& errors, double tol,
                 bool parallel) {
  const int m = static_cast<int>(errors.size());
  std::vector<StateVec> mapped;
  mapped.reserve(static_cast<size_t>(m) * 3);
  for (const auto& e : errors)
    for (const auto& l : c.logical) mapped.push_back(apply_word(l, e));

  // Unordered pairs including (a,a); KL is conjugate-symmetric in the pair.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) pairs.emplace_back(a, b);

  std::vector<char> failed(pairs.size(), 0);
  const auto check_one = [&](size_t p) {
    const auto [a, b] = pairs[p];
    const StateVec* sa = &mapped[static_cast<size_t>(a) * 3];
    const StateVec* sb = &mapped[static_cast<size_t>(b) * 3];
    Cx diag0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Cx v = inner_product(sa[i], sb[j]);
        if (i != j && std::abs(v) > tol) {
          failed[p] = 1;
          return;
        }
        if (i == j) {
          if (i == 0)
            diag0 = v;
          else if (std::abs(v - diag0) > tol) {
            failed[p] = 1;
            return;
          }
        }
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p)
      check_one(static_cast<size_t>(p));
  } else {
    for (size_t p = 0; p < pairs.size(); ++p) check_one(p);
  }

  KLSweep out;
  out.pairs_checked = static_cast<int>(pairs.size());
  for (size_t p = 0; p < pairs.size(); ++p) {
    if (failed[p]) {
      ++out.pairs_failed;
      if (out.failing_pairs.size() < 32) out.failing_pairs.push_back(pairs[p]);
    }
  }
  return out;
}

std::vector<std::vector<int>> degeneracy_classes(const Code& c,
                                                 const std::vector<PauliWord>& errors,
                                                 double tol) {
  std::vector<std::vector<StateVec>> sig;
  for (const auto& e : errors) {
    std::vector<StateVec> mapped;
    for (const auto& l : c.logical) mapped.push_back(apply_word(l, e));
    sig.push_back(std::move(mapped));
  }
  const auto same_class = [&](size_t a, size_t b) {
    Cx first;
    for (int i = 0; i < 3; ++i) {
      const Cx ov = inner_product(sig[a][static_cast<size_t>(i)], sig[b][static_cast<size_t>(i)]);
      if (std::abs(std::abs(ov) - 1.0) > tol) return false;
      if (i == 0)
        first = ov;
      else if (std::abs(ov - first) > tol)
        return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < errors.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (same_class(static_cast<size_t>(cls.front()), i)) {
        cls.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({static_cast<int>(i)});
  }
  return classes;
}

std::vector<PauliWord> single_qutrit_errors(int n) {
  static const std::array<const char*, 8> names = {"X1", "X2", "Z1", "Z2",
                                                   "Y11", "Y12", "Y21", "Y22"};
  std::vector<PauliWord> out;
  out.reserve(static_cast<size_t>(n) * 8);
  for (int q = 0; q < n; ++q)
    for (const char* nm : names) out.push_back(PauliWord::single(n, q, op_from_name(nm)));
  return out;
}

}  // namespace triqec
