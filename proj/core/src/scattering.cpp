#include "otdf/scattering.hpp"

#include <cmath>
#include <complex>

#include "otdf/angular.hpp"
#include "otdf/constants.hpp"

namespace otdf {

using namespace constants;
using cplx = std::complex<double>;

namespace {

std::optional<double> path_rate(const SpeciesData& s, const Level& upper, const Level& lower) {
  const bool allowed =
      std::abs(upper.l - lower.l) == 1 && std::abs(upper.j.twice() - lower.j.twice()) <= 2;
  if (!allowed) return std::nullopt;
  return s.a_required(upper.label, lower.label);
}

cplx eps_dot_tensor(const SpeciesData& s, const SublevelRef& a, const SublevelRef& b,
                    const Polarization& pol) {
  cplx sum = 0.0;
  for (int q = -1; q <= 1; ++q) {
    const cplx eps = pol.q(q);
    if (eps == 0.0) continue;
    // <a|T_q|b> needs m_a = m_b + q.
    if (a.m.twice() != b.m.twice() + 2 * q) continue;
    sum += eps * tensor_element(s, a, q, b);
  }
  return sum;
}

} // namespace

double raman_rate(const SpeciesData& s, const SublevelRef& i, const SublevelRef& f,
                  const LaserField& field) {
  field.validate();
  validate_sublevel(s, i);
  validate_sublevel(s, f);
  const double w_l = field.omega();
  check_detuning_guard(s, w_l);

  const double w_fi = transition_frequency(s, f.level, i.level);
  if (w_l <= w_fi) return 0.0; // channel energetically closed

  const Level& li = s.level(i.level);
  const Level& lf = s.level(f.level);

  double pol_sum = 0.0;
  for (int sq = -1; sq <= 1; ++sq) {
    cplx amp = 0.0;
    for (const auto& lk : s.levels) {
      if (!lk.is_p()) continue;
      const auto a_i = path_rate(s, lk, li);
      const auto a_f = path_rate(s, lk, lf);
      if (!a_i || !a_f) continue;
      const double w_ki = transition_frequency(s, lk.label, i.level);
      const double w_kf = transition_frequency(s, lk.label, f.level);
      const double pref =
          (lk.j.twice() + 1) * std::sqrt(*a_i * *a_f / (std::pow(w_ki, 3) * std::pow(w_kf, 3)));
      for (int mk2 = -lk.j.twice(); mk2 <= lk.j.twice(); mk2 += 2) {
        const SublevelRef k{lk.label, HalfInt::from_twice(mk2)};
        // difference-frequency term: laser i->k, emission k->f
        const double em1 =
            (f.m.twice() == mk2 - 2 * sq) ? tensor_element(s, f, sq, k) : 0.0;
        if (em1 != 0.0) amp += pref * em1 * eps_dot_tensor(s, k, i, field.pol) / (w_ki - w_l);
        // sum-frequency term: emission i->k, laser k->f
        const double em2 =
            (mk2 == i.m.twice() - 2 * sq) ? tensor_element(s, k, sq, i) : 0.0;
        if (em2 != 0.0) amp += pref * eps_dot_tensor(s, f, k, field.pol) * em2 / (w_l + w_kf);
      }
    }
    pol_sum += std::norm(amp);
  }
  return 3.0 * pi * c * c * field.intensity / (2.0 * hbar) * std::pow(w_l - w_fi, 3) * pol_sum;
}

namespace {

// Elastic scattering amplitude chi_s^{i->i}.
cplx elastic_amplitude(const SpeciesData& s, const SublevelRef& i, int sq,
                       const LaserField& field) {
  const double w_l = field.omega();
  const Level& li = s.level(i.level);
  cplx amp = 0.0;
  for (const auto& lk : s.levels) {
    if (!lk.is_p()) continue;
    const auto a_i = path_rate(s, lk, li);
    if (!a_i) continue;
    const double w_ki = transition_frequency(s, lk.label, i.level);
    const double pref = (lk.j.twice() + 1) * *a_i * std::sqrt(std::pow(w_l, 3) / std::pow(w_ki, 6));
    for (int mk2 = -lk.j.twice(); mk2 <= lk.j.twice(); mk2 += 2) {
      const SublevelRef k{lk.label, HalfInt::from_twice(mk2)};
      const double em1 = (i.m.twice() == mk2 - 2 * sq) ? tensor_element(s, i, sq, k) : 0.0;
      if (em1 != 0.0) amp += pref * em1 * eps_dot_tensor(s, k, i, field.pol) / (w_ki - w_l);
      const double em2 = (mk2 == i.m.twice() - 2 * sq) ? tensor_element(s, k, sq, i) : 0.0;
      if (em2 != 0.0) amp += pref * eps_dot_tensor(s, i, k, field.pol) * em2 / (w_l + w_ki);
    }
  }
  return amp;
}

} // namespace

double elastic_rate(const SpeciesData& s, const QubitSpec& qubit, const LaserField& field) {
  field.validate();
  validate_qubit(s, qubit);
  check_detuning_guard(s, field.omega());

  double tot = 0.0;
  for (int sq = -1; sq <= 1; ++sq) {
    const cplx diff = elastic_amplitude(s, qubit.up, sq, field) -
                      elastic_amplitude(s, qubit.down, sq, field);
    tot += std::norm(diff);
  }
  return 3.0 * pi * c * c * field.intensity / (4.0 * hbar) * tot;
}

double inelastic_rate(const SpeciesData& s, const QubitSpec& qubit, const LaserField& field) {
  validate_qubit(s, qubit);
  const auto finals = s.sublevels_of_l(0, 2); // all S and D sublevels
  double tot = 0.0;
  for (const SublevelRef* init : {&qubit.up, &qubit.down}) {
    for (const auto& f : finals) {
      if (f.level == init->level && f.m == init->m) continue; // Rayleigh handled elastically
      tot += raman_rate(s, *init, f, field);
    }
  }
  return 0.5 * tot; // equal qubit populations
}

DecoherenceBudget total_decoherence(const IonChannel& ion1, const IonChannel& ion2) {
  DecoherenceBudget b;
  const IonChannel* ions[2] = {&ion1, &ion2};
  for (int j = 0; j < 2; ++j) {
    const IonChannel& ch = *ions[j];
    validate_qubit(ch.species, ch.qubit);
    b.ion[j].elastic = elastic_rate(ch.species, ch.qubit, ch.field);
    b.ion[j].inelastic = inelastic_rate(ch.species, ch.qubit, ch.field);
    b.ion[j].metastable = 0.5 * ch.species.metastable_decay.at(ch.qubit.up.level);
  }
  b.total_two_ion = b.ion[0].sum() + b.ion[1].sum();
  return b;
}

} // namespace otdf
