#pragma once

#include "otdf/atomic_data.hpp"
#include "otdf/half_int.hpp"

namespace otdf {

// Wigner 3j symbol, evaluated from the Racah single-sum closed form with
// exact integer factorial arithmetic; the conversion to double happens only
// at the very end. Returns 0 for m1+m2+m3 != 0, triangle-rule violations,
// and mismatched j/m parity. Results are memoized (concurrent reads,
// single-writer population).
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// Unitless spherical-tensor matrix element <a| T^1_q |b> between
// fine-structure sublevels:
//   (-1)^(J_a - m_a) (-1)^(L_a + S + J_b + 1) * 3j(J_a, 1, J_b; -m_a, q, m_b)
double tensor_element(const SpeciesData& s, const SublevelRef& a, int q, const SublevelRef& b);

// Squared electric-dipole matrix element |<k| mu_q |i>|^2 in (C m)^2 via the
// Wigner-Eckart theorem, with the reduced part fixed by the spontaneous
// emission rate A of the (upper=k, lower=i) transition:
//   (3 pi eps0 hbar c^3 / w_ki^3) * A * (2J_k + 1) * 3j(J_i, 1, J_k; m_i, q, -m_k)^2
// Throws DataError if the transition is not listed: missing atomic data must
// never be silently dropped.
double dipole_moment_sq(const SpeciesData& s, const SublevelRef& k, const SublevelRef& i, int q);

} // namespace otdf
