#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "otdf/atomic_data.hpp"

namespace otdf {

// Polarization amplitudes (eps_-1, eps_0, eps_+1) on the spherical basis,
// normalized to sum |eps_q|^2 = 1.
struct Polarization {
  std::array<std::complex<double>, 3> amps{}; // index q+1

  std::complex<double> q(int q_) const { return amps[static_cast<size_t>(q_ + 1)]; }
  double norm_sq() const;

  // "linear (equal sigma+ and sigma-)": eps = (1/sqrt2, 0, 1/sqrt2).
  static Polarization linear_equal_sigma();
  static Polarization pure(int q_);
};

struct LaserField {
  double wavelength = 0.0; // m, vacuum
  double intensity = 0.0;  // W/m^2 at the ion
  Polarization pol = Polarization::linear_equal_sigma();

  double omega() const; // rad/s
  void validate() const;
};

// Signed AC Stark shift DeltaE/hbar in rad/s.
struct StarkShift {
  double rad_per_s = 0.0;
};

// Validity guard: the laser must stay > 2pi*10 GHz away from every listed
// dipole transition and > 2pi*100 MHz away from every S-D quadrupole
// transition (whose contribution is neglected rather than computed).
// Throws NearResonanceError naming the offending transition.
void check_detuning_guard(const SpeciesData& s, double omega_laser);

// Wavelength intervals [lo, hi] (m) excluded by the guard within
// [lambda_min, lambda_max]; used by sweeps and root finders to skip or split.
std::vector<std::pair<double, double>> guard_intervals(const SpeciesData& s, double lambda_min,
                                                       double lambda_max);

// Second-order AC Stark shift of |state> from one laser beam, summed over all
// P1/2 and P3/2 Zeeman sublevels, keeping the counter-rotating
// (Bloch-Siegert) term:
//   shift = -sum_{k,q} I |eps_q|^2 mu_ki,q^2 / (2 eps0 hbar^2 c)
//                   * [1/(w_ki - w_L) + 1/(w_ki + w_L)]
// The overall sign is the standard perturbation-theory one: far red of all
// resonances a ground-state shift is negative (attractive).
StarkShift ac_stark_shift(const SpeciesData& s, const SublevelRef& state, const LaserField& f);

struct QubitStarkShifts {
  StarkShift up;
  StarkShift down;
  double differential() const { return up.rad_per_s - down.rad_per_s; } // Delta_Delta
  double common_sum() const { return up.rad_per_s + down.rad_per_s; }   // Delta_Sigma
};

QubitStarkShifts qubit_stark_shifts(const SpeciesData& s, const QubitSpec& qubit,
                                    const LaserField& f);

// Differential qubit shift Delta_up - Delta_down.
StarkShift differential_stark_shift(const SpeciesData& s, const QubitSpec& qubit,
                                    const LaserField& f);

// All zeros of the differential shift vs wavelength inside [lambda_min,
// lambda_max] (m), each bracketed by a sign change on a scan grid and
// refined by bisection to 1e-9 relative tolerance; ascending. Guard bands
// around resonances are split out automatically.
std::vector<double> find_magic_wavelengths(const SpeciesData& s, const QubitSpec& qubit,
                                           const LaserField& f_template, double lambda_min,
                                           double lambda_max, double scan_step = 0.1e-9);

} // namespace otdf
