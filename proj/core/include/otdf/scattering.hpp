#pragma once

#include "otdf/atomic_data.hpp"
#include "otdf/stark.hpp"

namespace otdf {

// Per-ion decoherence rates, all in 1/s. metastable is A_D/2 for the chosen
// D level (spontaneous decay of the metastable half of the superposition).
struct IonDecoherence {
  double elastic = 0.0;
  double inelastic = 0.0;
  double metastable = 0.0;
  double sum() const { return elastic + inelastic + metastable; }
};

struct DecoherenceBudget {
  IonDecoherence ion[2];
  double total_two_ion = 0.0;
  double scattering_only() const {
    return ion[0].elastic + ion[0].inelastic + ion[1].elastic + ion[1].inelastic;
  }
};

// Raman scattering rate i -> f through the P1/2 and P3/2 manifolds,
// integrated over emission solid angle and summed over the scattered-photon
// spherical polarization s. Both difference- and sum-frequency amplitudes
// are kept. The rate is 0 when w_L <= w_fi (no energy for the channel).
double raman_rate(const SpeciesData& s, const SublevelRef& i, const SublevelRef& f,
                  const LaserField& field);

// Total inelastic (state-changing) rate of an equal superposition of the
// qubit states: 1/2 (sum_{f != up} G^{up->f} + sum_{f != down} G^{down->f}),
// f running over all S1/2, D3/2, D5/2 sublevels. Rayleigh channels are
// excluded here and enter only through elastic_rate.
double inelastic_rate(const SpeciesData& s, const QubitSpec& qubit, const LaserField& field);

// Elastic (Rayleigh) dephasing of the superposition: proportional to the
// squared difference of the elastic scattering amplitudes of the two qubit
// states, summed over scattered polarization.
double elastic_rate(const SpeciesData& s, const QubitSpec& qubit, const LaserField& field);

// One ion's species/qubit/field bundle (fields referenced, not owned).
struct IonChannel {
  const SpeciesData& species;
  const QubitSpec& qubit;
  const LaserField& field;
};

// Total intrinsic two-ion decoherence rate:
//   sum_j (Gamma_el,j + Gamma_in,j + A_D,j / 2)
DecoherenceBudget total_decoherence(const IonChannel& ion1, const IonChannel& ion2);

} // namespace otdf
