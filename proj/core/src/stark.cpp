#include "otdf/stark.hpp"

#include <algorithm>
#include <cmath>

#include "otdf/angular.hpp"
#include "otdf/constants.hpp"

namespace otdf {

using namespace constants;

double Polarization::norm_sq() const {
  double n = 0.0;
  for (const auto& a : amps) n += std::norm(a);
  return n;
}

Polarization Polarization::linear_equal_sigma() {
  Polarization p;
  const double r = 1.0 / std::sqrt(2.0);
  p.amps = {std::complex<double>(r, 0), std::complex<double>(0, 0), std::complex<double>(r, 0)};
  return p;
}

Polarization Polarization::pure(int q_) {
  Polarization p;
  p.amps = {};
  p.amps[static_cast<size_t>(q_ + 1)] = 1.0;
  return p;
}

double LaserField::omega() const { return two_pi * c / wavelength; }

void LaserField::validate() const {
  if (!(wavelength >= 200e-9 && wavelength <= 5e-6))
    throw ConfigError("laser wavelength outside [200 nm, 5 um]");
  if (!(intensity >= 0)) throw ConfigError("laser intensity must be >= 0");
  if (std::abs(pol.norm_sq() - 1.0) > 1e-12)
    throw ConfigError("polarization amplitudes must satisfy sum |eps_q|^2 = 1");
}

namespace {

constexpr double kDipoleGuard = two_pi * 10e9;    // rad/s
constexpr double kQuadrupoleGuard = two_pi * 100e6; // rad/s

struct GuardedLine {
  std::string upper;
  std::string lower;
  double omega;
  double guard;
};

std::vector<GuardedLine> guarded_lines(const SpeciesData& s) {
  std::vector<GuardedLine> lines;
  for (const auto& t : s.dipole_transitions)
    lines.push_back({t.upper, t.lower, transition_frequency(s, t.upper, t.lower), kDipoleGuard});
  // S-D electric-quadrupole lines: present in the level structure but
  // deliberately not computed; enforce a narrow keep-out instead.
  for (const auto& d : s.levels) {
    if (!d.is_d()) continue;
    for (const auto& g : s.levels) {
      if (!g.is_s()) continue;
      lines.push_back({d.label, g.label, transition_frequency(s, d.label, g.label),
                       kQuadrupoleGuard});
    }
  }
  return lines;
}

// A coefficient for an intermediate path, or nullopt when the pair is
// E1-forbidden (in which case the path legitimately contributes nothing).
// Allowed-but-unlisted pairs are an error: silent zeros would corrupt sums.
std::optional<double> path_rate(const SpeciesData& s, const Level& upper, const Level& lower) {
  const bool allowed =
      std::abs(upper.l - lower.l) == 1 && std::abs(upper.j.twice() - lower.j.twice()) <= 2;
  if (!allowed) return std::nullopt;
  return s.a_required(upper.label, lower.label);
}

} // namespace

void check_detuning_guard(const SpeciesData& s, double omega_laser) {
  for (const auto& ln : guarded_lines(s)) {
    if (std::abs(ln.omega - omega_laser) <= ln.guard)
      throw NearResonanceError(s.name + ": laser within guard band of " + ln.upper + " -> " +
                                   ln.lower + " transition",
                               ln.upper, ln.lower);
  }
}

std::vector<std::pair<double, double>> guard_intervals(const SpeciesData& s, double lambda_min,
                                                       double lambda_max) {
  std::vector<std::pair<double, double>> out;
  for (const auto& ln : guarded_lines(s)) {
    if (ln.omega <= ln.guard) continue;
    const double lo = two_pi * c / (ln.omega + ln.guard);
    const double hi = two_pi * c / (ln.omega - ln.guard);
    if (hi < lambda_min || lo > lambda_max) continue;
    out.emplace_back(std::max(lo, lambda_min), std::min(hi, lambda_max));
  }
  std::sort(out.begin(), out.end());
  return out;
}

StarkShift ac_stark_shift(const SpeciesData& s, const SublevelRef& state, const LaserField& f) {
  f.validate();
  validate_sublevel(s, state);
  const double w_l = f.omega();
  check_detuning_guard(s, w_l);

  const Level& li = s.level(state.level);
  double total = 0.0;
  for (const auto& lk : s.levels) {
    if (!lk.is_p()) continue;
    const auto a_rate = path_rate(s, lk, li);
    if (!a_rate) continue;
    const double w_ki = transition_frequency(s, lk.label, state.level);
    // Both rotating and counter-rotating terms, never truncated.
    const double lineshape = 1.0 / (w_ki - w_l) + 1.0 / (w_ki + w_l);
    for (int q = -1; q <= 1; ++q) {
      const double eps_sq = std::norm(f.pol.q(q));
      if (eps_sq == 0.0) continue;
      const int mk2 = state.m.twice() + 2 * q;
      if (std::abs(mk2) > lk.j.twice()) continue;
      const SublevelRef k{lk.label, HalfInt::from_twice(mk2)};
      const double mu_sq = dipole_moment_sq(s, k, state, q);
      total += f.intensity * eps_sq * mu_sq / (2.0 * epsilon0 * hbar * hbar * c) * lineshape;
    }
  }
  return StarkShift{-total};
}

QubitStarkShifts qubit_stark_shifts(const SpeciesData& s, const QubitSpec& qubit,
                                    const LaserField& f) {
  validate_qubit(s, qubit);
  return QubitStarkShifts{ac_stark_shift(s, qubit.up, f), ac_stark_shift(s, qubit.down, f)};
}

StarkShift differential_stark_shift(const SpeciesData& s, const QubitSpec& qubit,
                                    const LaserField& f) {
  return StarkShift{qubit_stark_shifts(s, qubit, f).differential()};
}

std::vector<double> find_magic_wavelengths(const SpeciesData& s, const QubitSpec& qubit,
                                           const LaserField& f_template, double lambda_min,
                                           double lambda_max, double scan_step) {
  if (!(lambda_min < lambda_max)) throw ConfigError("find_magic_wavelengths: empty range");
  if (!(scan_step > 0)) throw ConfigError("find_magic_wavelengths: scan_step must be > 0");

  const auto excluded = guard_intervals(s, lambda_min, lambda_max);
  auto in_guard = [&](double lambda) {
    for (const auto& [lo, hi] : excluded)
      if (lambda >= lo && lambda <= hi) return true;
    return false;
  };
  auto diff_at = [&](double lambda) {
    LaserField f = f_template;
    f.wavelength = lambda;
    return differential_stark_shift(s, qubit, f).rad_per_s;
  };

  std::vector<double> roots;
  double prev_lambda = 0.0, prev_val = 0.0;
  bool have_prev = false;
  const int n = static_cast<int>(std::ceil((lambda_max - lambda_min) / scan_step));
  for (int i = 0; i <= n; ++i) {
    const double lambda = std::min(lambda_min + i * scan_step, lambda_max);
    if (in_guard(lambda)) {
      have_prev = false; // split the scan across the guard band
      continue;
    }
    const double val = diff_at(lambda);
    if (have_prev && prev_val != 0.0 && val != 0.0 && std::signbit(prev_val) != std::signbit(val)) {
      double lo = prev_lambda, hi = lambda, flo = prev_val;
      while ((hi - lo) > 1e-9 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = diff_at(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_lambda = lambda;
    prev_val = val;
    have_prev = true;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace otdf
