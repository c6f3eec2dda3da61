#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace otdf {

// Angular momentum quantum number that is an integer or half integer.
// Stored as twice its value, matching the doubled-integer encoding of the
// species files (J2, S2), so equality and parity checks are exact.
class HalfInt {
public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  constexpr explicit HalfInt(int twice) : twice_(twice) {}

  static HalfInt from_double(double v) {
    const double t = 2.0 * v;
    const long long r = static_cast<long long>(t < 0 ? t - 0.5 : t + 0.5);
    if (std::abs(t - static_cast<double>(r)) > 1e-9)
      throw std::invalid_argument("not an integer or half-integer: " + std::to_string(v));
    return HalfInt(static_cast<int>(r));
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool same_parity(HalfInt o) const { return ((twice_ - o.twice_) % 2) == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  int twice_ = 0;
};

inline constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

} // namespace otdf
