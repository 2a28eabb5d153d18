#include "triqec/gpauli.hpp"

#include <sstream>
#include <stdexcept>

namespace triqec {

PauliWord PauliWord::single(int n, int qutrit, QutritOp op) {
  if (qutrit < 0 || qutrit >= n) throw std::invalid_argument("qutrit index out of range");
  PauliWord w(n);
  w.set_op(qutrit, op);
  return w;
}

int PauliWord::weight() const {
  int w = 0;
  for (const auto& o : ops_)
    if (!o.is_identity()) ++w;
  return w;
}

QutritOp op_from_name(std::string_view name) {
  if (name == "I") return {Mod3(0), Mod3(0)};
  if (name == "X1") return {Mod3(1), Mod3(0)};
  if (name == "X2") return {Mod3(2), Mod3(0)};
  if (name == "Z1") return {Mod3(0), Mod3(1)};
  if (name == "Z2") return {Mod3(0), Mod3(2)};
  if (name == "Y11") return {Mod3(1), Mod3(1)};
  if (name == "Y12") return {Mod3(1), Mod3(2)};
  if (name == "Y21") return {Mod3(2), Mod3(1)};
  if (name == "Y22") return {Mod3(2), Mod3(2)};
  throw std::invalid_argument("unrecognized operator name: \"" + std::string(name) + "\"");
}

std::string op_name(QutritOp op) {
  const int x = op.x.value(), z = op.z.value();
  if (x == 0 && z == 0) return "I";
  if (z == 0) return "X" + std::to_string(x);
  if (x == 0) return "Z" + std::to_string(z);
  return "Y" + std::to_string(x) + std::to_string(z);
}

PauliWord multiply(const PauliWord& a, const PauliWord& b) {
  if (a.n() != b.n()) throw std::invalid_argument("word length mismatch");
  PauliWord r(a.n());
  Mod3 phase = a.phase() + b.phase();
  for (int q = 0; q < a.n(); ++q) {
    phase += a.op(q).z * b.op(q).x;
    r.set_op(q, {a.op(q).x + b.op(q).x, a.op(q).z + b.op(q).z});
  }
  r.set_phase(phase);
  return r;
}

PauliWord inverse(const PauliWord& w) {
  PauliWord r(w.n());
  Mod3 phase = -w.phase();
  for (int q = 0; q < w.n(); ++q) {
    // (X^x Z^z)^-1 = omega^(z*x) X^-x Z^-z.
    phase += w.op(q).z * w.op(q).x;
    r.set_op(q, {-w.op(q).x, -w.op(q).z});
  }
  r.set_phase(phase);
  return r;
}

Mod3 commutation_phase(const PauliWord& s, const PauliWord& e) {
  if (s.n() != e.n()) throw std::invalid_argument("word length mismatch");
  Mod3 c;
  for (int q = 0; q < s.n(); ++q) c += s.op(q).z * e.op(q).x - e.op(q).z * s.op(q).x;
  return c;
}

std::vector<std::vector<Cx>> to_matrix(const PauliWord& w) {
  if (w.n() > 3) throw std::invalid_argument("to_matrix is limited to n <= 3");
  size_t dim = 1;
  for (int q = 0; q < w.n(); ++q) dim *= 3;
  std::vector<std::vector<Cx>> m(dim, std::vector<Cx>(dim, Cx{0.0, 0.0}));
  for (size_t col = 0; col < dim; ++col) {
    // Column index spells the input trits, qutrit 0 most significant.
    size_t row = 0;
    Mod3 ph = w.phase();
    size_t rest = col;
    size_t scale = dim;
    for (int q = 0; q < w.n(); ++q) {
      scale /= 3;
      const int t = static_cast<int>(rest / scale);
      rest %= scale;
      ph += w.op(q).z * Mod3(t);
      row += static_cast<size_t>((t + w.op(q).x.value()) % 3) * scale;
    }
    m[row][col] = omega_pow(ph);
  }
  return m;
}

std::string word_to_string(const PauliWord& w) {
  std::string s;
  if (w.phase() != Mod3(0)) s = "w" + std::to_string(w.phase().value()) + " ";
  for (int q = 0; q < w.n(); ++q) {
    if (q) s += ' ';
    s += op_name(w.op(q));
  }
  return s;
}

PauliWord word_from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Mod3 phase;
  std::vector<QutritOp> ops;
  bool first = true;
  while (in >> tok) {
    if (first && (tok == "w1" || tok == "w2")) {
      phase = Mod3(tok[1] - '0');
      first = false;
      continue;
    }
    first = false;
    ops.push_back(op_from_name(tok));
  }
  if (ops.empty()) throw std::invalid_argument("empty operator string");
  return PauliWord(phase, std::move(ops));
}

}  // namespace triqec
