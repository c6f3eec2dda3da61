#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "otdf/constants.hpp"
#include "otdf/errors.hpp"
#include "otdf/half_int.hpp"

namespace otdf {

// One fine-structure level. Energies are stored in 1/cm above the ground
// level (spectroscopy convention); conversion to angular frequency happens
// at the point of use.
struct Level {
  std::string label; // "S1/2", "P3/2", "D5/2", ...
  int l = 0;         // orbital angular momentum
  HalfInt s;         // electronic spin, 1/2 for every species here
  HalfInt j;         // total electronic angular momentum
  double energy_cm = 0.0;

  bool is_s() const { return l == 0; }
  bool is_p() const { return l == 1; }
  bool is_d() const { return l == 2; }
};

// Electric-dipole transition with its spontaneous emission rate between
// fine-structure levels (Zeeman resolution is generated analytically, never
// stored).
struct Transition {
  std::string upper;
  std::string lower;
  double a_per_s = 0.0;
};

// A specific Zeeman sublevel |level, m_J>.
struct SublevelRef {
  std::string level;
  HalfInt m;
};

struct SpeciesData {
  std::string name;
  double mass_amu = 0.0;
  std::vector<Level> levels;
  std::vector<Transition> dipole_transitions;
  std::map<std::string, double> metastable_decay; // D level label -> total A_D, 1/s

  double mass_kg() const { return mass_amu * constants::amu; }

  const Level& level(const std::string& label) const;
  const Level* find_level(const std::string& label) const;

  // Spontaneous rate for (upper, lower); nullopt when the pair is not a
  // listed transition. Callers that require the rate use a_required().
  std::optional<double> a_coefficient(const std::string& upper, const std::string& lower) const;
  double a_required(const std::string& upper, const std::string& lower) const;

  std::vector<SublevelRef> sublevels_of(const std::string& label) const;
  std::vector<SublevelRef> sublevels_of_l(int l_first, int l_second = -1) const;
};

// Qubit encoding: |down> in the S1/2 ground manifold, |up> in a metastable
// D manifold.
struct QubitSpec {
  SublevelRef down;
  SublevelRef up;
};

// Signed transition angular frequency omega_ab = omega_a - omega_b in rad/s.
double transition_frequency(const SpeciesData& s, const std::string& a, const std::string& b);

// Parse + validate a species JSON document. `origin` names the source in
// error messages (file path or "<builtin:...>").
SpeciesData parse_species_json(const std::string& json_text, const std::string& origin);
SpeciesData load_species(const std::string& path);

// Throws DataError describing the first violated invariant.
void validate_species(const SpeciesData& s, const std::string& origin);
void validate_sublevel(const SpeciesData& s, const SublevelRef& ref);
void validate_qubit(const SpeciesData& s, const QubitSpec& q);

// Species bundled with the library (NIST-derived data files compiled in).
std::vector<std::string> builtin_species_names();
const SpeciesData& builtin_species(const std::string& name);
// Accepts a builtin name or a path to a species JSON file.
SpeciesData resolve_species(const std::string& name_or_path);

// Default qubit choice: |S1/2, m=+1/2> and |D5/2, m=+3/2>.
QubitSpec default_qubit();

} // namespace otdf
