#pragma once

#include <array>
#include <complex>

namespace triqec {

// Exponent arithmetic in Z_3. All phase bookkeeping in the toolkit is done on
// exponents of omega = exp(2*pi*i/3); complex values appear only at the edge.
class Mod3 {
 public:
  constexpr Mod3() = default;
  constexpr explicit Mod3(long long v) : v_(static_cast<int>(((v % 3) + 3) % 3)) {}

  constexpr int value() const { return v_; }

  constexpr Mod3 operator+(Mod3 o) const { return Mod3(v_ + o.v_); }
  constexpr Mod3 operator-(Mod3 o) const { return Mod3(v_ - o.v_); }
  constexpr Mod3 operator*(Mod3 o) const { return Mod3(v_ * o.v_); }
  constexpr Mod3 operator-() const { return Mod3(-v_); }
  constexpr Mod3& operator+=(Mod3 o) { return *this = *this + o; }
  constexpr Mod3& operator-=(Mod3 o) { return *this = *this - o; }
  constexpr bool operator==(const Mod3&) const = default;

 private:
  int v_ = 0;
};

using PhaseExp = Mod3;

using Cx = std::complex<double>;

// omega and omega^2 written out in closed form; 0.5 and sqrt(3)/2 are the
// highest-precision doubles for the exact values, and omega^2 = conj(omega).
inline constexpr double kHalfSqrt3 = 0.86602540378443864676;
inline const std::array<Cx, 3> kOmegaPow = {
    Cx{1.0, 0.0}, Cx{-0.5, kHalfSqrt3}, Cx{-0.5, -kHalfSqrt3}};

inline Cx omega_pow(Mod3 k) { return kOmegaPow[static_cast<size_t>(k.value())]; }

}  // namespace triqec
