#include "otdf/angular.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "otdf/constants.hpp"
#include "otdf/errors.hpp"

namespace otdf {

namespace {

using int128 = __int128;

// Exact rational on 128-bit integers. The j values used here are tiny
// (factorial arguments stay below 34), so reduced fractions never overflow.
struct Rational {
  int128 num = 0;
  int128 den = 1;

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const int128 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Rational& operator+=(const Rational& o) {
    const int128 g = std::gcd(den, o.den);
    num = num * (o.den / g) + o.num * (den / g);
    den = den * (o.den / g);
    reduce();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    Rational a{num, o.den};
    Rational b{o.num, den};
    a.reduce();
    b.reduce();
    num = a.num * b.num;
    den = a.den * b.den;
    reduce();
    return *this;
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

int128 factorial_i128(int n) {
  if (n < 0) throw NumericError("negative factorial argument in wigner3j");
  if (n > 33) throw NumericError("wigner3j: j too large for the exact-arithmetic path");
  int128 r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// twice-values of the six arguments packed into one key; arguments are far
// below the 10-bit field width.
uint64_t pack_key(int a, int b, int c, int d, int e, int f) {
  auto enc = [](int v) { return static_cast<uint64_t>(v + 512) & 0x3ff; };
  return enc(a) | enc(b) << 10 | enc(c) << 20 | enc(d) << 30 | enc(e) << 40 | enc(f) << 50;
}

double wigner3j_uncached(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if (j1.twice() < 0 || j2.twice() < 0 || j3.twice() < 0)
    throw std::invalid_argument("wigner3j: negative j");
  if (std::abs(m1.twice()) > j1.twice() || std::abs(m2.twice()) > j2.twice() ||
      std::abs(m3.twice()) > j3.twice())
    throw std::invalid_argument("wigner3j: |m| > j");

  if (m1.twice() + m2.twice() + m3.twice() != 0) return 0.0;
  if (!m1.same_parity(j1) || !m2.same_parity(j2) || !m3.same_parity(j3)) return 0.0;
  // j1+j2+j3 must be an integer and satisfy the triangle rule.
  if ((j1.twice() + j2.twice() + j3.twice()) % 2 != 0) return 0.0;
  if (j3.twice() > j1.twice() + j2.twice() || j3.twice() < std::abs(j1.twice() - j2.twice()))
    return 0.0;

  // Everything below is integer-valued; work with twice-values halved.
  auto ihalf = [](int twice) { return twice / 2; };
  const int a1 = ihalf(j1.twice() + j2.twice() - j3.twice());
  const int a2 = ihalf(j1.twice() - j2.twice() + j3.twice());
  const int a3 = ihalf(-j1.twice() + j2.twice() + j3.twice());
  const int b1 = ihalf(j1.twice() + m1.twice());
  const int b2 = ihalf(j1.twice() - m1.twice());
  const int b3 = ihalf(j2.twice() + m2.twice());
  const int b4 = ihalf(j2.twice() - m2.twice());
  const int b5 = ihalf(j3.twice() + m3.twice());
  const int b6 = ihalf(j3.twice() - m3.twice());

  const int tmin = std::max({0, ihalf(j2.twice() - j3.twice() - m1.twice()),
                             ihalf(j1.twice() - j3.twice() + m2.twice())});
  const int tmax = std::min({a1, b2, b3});
  if (tmax < tmin) return 0.0;

  Rational sum;
  for (int t = tmin; t <= tmax; ++t) {
    Rational term{(t % 2 == 0) ? 1 : -1, 1};
    term *= Rational{1, factorial_i128(t)};
    term *= Rational{1, factorial_i128(ihalf(j3.twice() - j2.twice() + m1.twice()) + t)};
    term *= Rational{1, factorial_i128(ihalf(j3.twice() - j1.twice() - m2.twice()) + t)};
    term *= Rational{1, factorial_i128(a1 - t)};
    term *= Rational{1, factorial_i128(b2 - t)};
    term *= Rational{1, factorial_i128(b3 - t)};
    sum += term;
  }
  if (sum.num == 0) return 0.0;

  Rational norm{factorial_i128(a1), factorial_i128(ihalf(j1.twice() + j2.twice() + j3.twice()) + 1)};
  norm *= Rational{factorial_i128(a2), 1};
  norm *= Rational{factorial_i128(a3), 1};
  norm *= Rational{factorial_i128(b1), 1};
  norm *= Rational{factorial_i128(b2), 1};
  norm *= Rational{factorial_i128(b3), 1};
  norm *= Rational{factorial_i128(b4), 1};
  norm *= Rational{factorial_i128(b5), 1};
  norm *= Rational{factorial_i128(b6), 1};

  const int phase_twice = j1.twice() - j2.twice() - m3.twice();
  const double phase = (ihalf(phase_twice) % 2 == 0) ? 1.0 : -1.0;
  return phase * sum.to_double() * std::sqrt(norm.to_double());
}

} // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  static std::shared_mutex mtx;
  static std::unordered_map<uint64_t, double> cache;

  const uint64_t key =
      pack_key(j1.twice(), j2.twice(), j3.twice(), m1.twice(), m2.twice(), m3.twice());
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double value = wigner3j_uncached(j1, j2, j3, m1, m2, m3);
  {
    std::unique_lock lock(mtx);
    cache.emplace(key, value);
  }
  return value;
}

double tensor_element(const SpeciesData& s, const SublevelRef& a, int q, const SublevelRef& b) {
  if (q < -1 || q > 1) throw std::invalid_argument("tensor_element: q must be in {-1,0,+1}");
  const Level& la = s.level(a.level);
  const Level& lb = s.level(b.level);

  const double tj = wigner3j(la.j, half(2), lb.j, -a.m, half(2 * q), b.m);
  if (tj == 0.0) return 0.0;

  // Both phase exponents are integers: J_a - m_a always, and
  // L_a + S + J_b + 1 because S + J_b is an integer for half-integer J.
  const int p1_twice = la.j.twice() - a.m.twice();
  const int p2_twice = 2 * la.l + la.s.twice() + lb.j.twice() + 2;
  const int exponent = p1_twice / 2 + p2_twice / 2;
  return ((exponent % 2 == 0) ? 1.0 : -1.0) * tj;
}

double dipole_moment_sq(const SpeciesData& s, const SublevelRef& k, const SublevelRef& i, int q) {
  if (q < -1 || q > 1) throw std::invalid_argument("dipole_moment_sq: q must be in {-1,0,+1}");
  const double a_rate = s.a_required(k.level, i.level);
  const Level& lk = s.level(k.level);
  const Level& li = s.level(i.level);

  const double w_ki = transition_frequency(s, k.level, i.level);
  const double tj = wigner3j(li.j, half(2), lk.j, i.m, half(2 * q), -k.m);
  if (tj == 0.0) return 0.0;

  using namespace constants;
  const double reduced_sq =
      3.0 * pi * epsilon0 * hbar * (c * c * c) / (w_ki * w_ki * w_ki) * a_rate * (lk.j.twice() + 1);
  return reduced_sq * tj * tj;
}

} // namespace otdf
