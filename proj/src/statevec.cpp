#include "triqec/statevec.hpp"

#include <cmath>
#include <stdexcept>

namespace triqec {

namespace {

size_t pow3(int n) {
  size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

}  // namespace

StateVec::StateVec(int n) : n_(n) {
  if (n < 1 || n > 8) throw std::invalid_argument("StateVec supports 1 <= n <= 8");
  amps_.assign(pow3(n), Cx{0.0, 0.0});
}

StateVec StateVec::basis(int n, std::string_view trits) {
  StateVec s(n);
  s.amps_[s.index_of(trits)] = Cx{1.0, 0.0};
  return s;
}

StateVec StateVec::basis_index(int n, size_t index) {
  StateVec s(n);
  if (index >= s.dim()) throw std::invalid_argument("basis index out of range");
  s.amps_[index] = Cx{1.0, 0.0};
  return s;
}

double StateVec::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVec::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::runtime_error("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
}

size_t StateVec::index_of(std::string_view trits) const {
  if (static_cast<int>(trits.size()) != n_) throw std::invalid_argument("trit string length mismatch");
  size_t idx = 0;
  for (char c : trits) {
    if (c < '0' || c > '2') throw std::invalid_argument("trit characters must be 0, 1 or 2");
    idx = idx * 3 + static_cast<size_t>(c - '0');
  }
  return idx;
}

std::string StateVec::trits_of(size_t index) const {
  std::string s(static_cast<size_t>(n_), '0');
  for (int q = n_ - 1; q >= 0; --q) {
    s[static_cast<size_t>(q)] = static_cast<char>('0' + index % 3);
    index /= 3;
  }
  return s;
}

StateVec apply_word(const StateVec& s, const PauliWord& w) {
  if (w.n() != s.n()) throw std::invalid_argument("word/state qutrit count mismatch");
  StateVec out(s.n());
  const size_t dim = s.dim();
  for (size_t i = 0; i < dim; ++i) {
    const Cx a = s.amp(i);
    if (a == Cx{0.0, 0.0}) continue;
    Mod3 ph = w.phase();
    size_t j = 0;
    size_t rest = i;
    size_t scale = dim;
    for (int q = 0; q < s.n(); ++q) {
      scale /= 3;
      const int t = static_cast<int>(rest / scale);
      rest %= scale;
      ph += w.op(q).z * Mod3(t);
      j += static_cast<size_t>((t + w.op(q).x.value()) % 3) * scale;
    }
    out.amps()[j] += omega_pow(ph) * a;
  }
  return out;
}

StateVec apply_chrestenson(const StateVec& s, int qutrit, int which) {
  if (qutrit < 0 || qutrit >= s.n()) throw std::invalid_argument("qutrit index out of range");
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  static const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  // Row r, column c entry is omega^(r*c)/sqrt3 for Ch1 and omega^(-r*c) for Ch2.
  const int sign = which == 1 ? 1 : -1;
  StateVec out(s.n());
  const size_t dim = s.dim();
  size_t stride = 1;
  for (int q = s.n() - 1; q > qutrit; --q) stride *= 3;
  for (size_t base = 0; base < dim; ++base) {
    const int t = static_cast<int>(base / stride % 3);
    if (t != 0) continue;  // enumerate each trit-0 anchor once
    const size_t i0 = base, i1 = base + stride, i2 = base + 2 * stride;
    const Cx a0 = s.amp(i0), a1 = s.amp(i1), a2 = s.amp(i2);
    for (int r = 0; r < 3; ++r) {
      const Cx v = a0 + omega_pow(Mod3(sign * r)) * a1 + omega_pow(Mod3(sign * 2 * r)) * a2;
      out.amps()[base + static_cast<size_t>(r) * stride] = v * inv_sqrt3;
    }
  }
  return out;
}

StateVec apply_cplus(const StateVec& s, int control, int target) {
  if (control < 0 || control >= s.n() || target < 0 || target >= s.n() || control == target)
    throw std::invalid_argument("bad control/target");
  StateVec out(s.n());
  const size_t dim = s.dim();
  size_t cstride = 1, tstride = 1;
  for (int q = s.n() - 1; q > control; --q) cstride *= 3;
  for (int q = s.n() - 1; q > target; --q) tstride *= 3;
  for (size_t i = 0; i < dim; ++i) {
    const int x = static_cast<int>(i / cstride % 3);
    const int y = static_cast<int>(i / tstride % 3);
    const size_t j = i + static_cast<size_t>((x + y) % 3 - y) * tstride;
    out.amps()[j] = s.amp(i);
  }
  return out;
}

Cx inner_product(const StateVec& a, const StateVec& b) {
  if (a.n() != b.n()) throw std::invalid_argument("state size mismatch");
  Cx acc{0.0, 0.0};
  for (size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amp(i)) * b.amp(i);
  return acc;
}

PhaseMatch equal_up_to_global_phase(const StateVec& a, const StateVec& b, double tol) {
  const Cx ov = inner_product(a, b);
  const double mag = std::abs(ov);
  PhaseMatch m;
  m.equal = mag >= 1.0 - tol;
  if (mag > 0.0) m.phase = ov / mag;
  return m;
}

double max_amp_diff(const StateVec& a, const StateVec& b) {
  if (a.n() != b.n()) throw std::invalid_argument("state size mismatch");
  double mx = 0.0;
  for (size_t i = 0; i < a.dim(); ++i) mx = std::max(mx, std::abs(a.amp(i) - b.amp(i)));
  return mx;
}

}  // namespace triqec
