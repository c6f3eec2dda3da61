#include "otdf/atomic_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace otdf {

using nlohmann::json;

const Level* SpeciesData::find_level(const std::string& label) const {
  for (const auto& lv : levels)
    if (lv.label == label) return &lv;
  return nullptr;
}

const Level& SpeciesData::level(const std::string& label) const {
  if (const Level* lv = find_level(label)) return *lv;
  throw DataError(name + ": unknown level \"" + label + "\"");
}

std::optional<double> SpeciesData::a_coefficient(const std::string& upper,
                                                 const std::string& lower) const {
  for (const auto& t : dipole_transitions)
    if (t.upper == upper && t.lower == lower) return t.a_per_s;
  return std::nullopt;
}

double SpeciesData::a_required(const std::string& upper, const std::string& lower) const {
  if (auto a = a_coefficient(upper, lower)) return *a;
  throw DataError(name + ": no dipole transition " + upper + " -> " + lower +
                  " in species data; refusing to treat missing data as zero");
}

std::vector<SublevelRef> SpeciesData::sublevels_of(const std::string& label) const {
  const Level& lv = level(label);
  std::vector<SublevelRef> out;
  for (int m2 = -lv.j.twice(); m2 <= lv.j.twice(); m2 += 2)
    out.push_back({label, HalfInt::from_twice(m2)});
  return out;
}

std::vector<SublevelRef> SpeciesData::sublevels_of_l(int l_first, int l_second) const {
  std::vector<SublevelRef> out;
  for (const auto& lv : levels) {
    if (lv.l != l_first && lv.l != l_second) continue;
    for (int m2 = -lv.j.twice(); m2 <= lv.j.twice(); m2 += 2)
      out.push_back({lv.label, HalfInt::from_twice(m2)});
  }
  return out;
}

double transition_frequency(const SpeciesData& s, const std::string& a, const std::string& b) {
  const Level& la = s.level(a);
  const Level& lb = s.level(b);
  return constants::angular_freq_per_inverse_cm * (la.energy_cm - lb.energy_cm);
}

namespace {

HalfInt read_half(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw DataError(origin + ": field \"" + key + "\" must be an integer (doubled half-integer)");
  return HalfInt::from_twice(j[key].get<int>());
}

double read_num(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_number())
    throw DataError(origin + ": missing numeric field \"" + key + "\"");
  return j[key].get<double>();
}

std::string read_str(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_string())
    throw DataError(origin + ": missing string field \"" + key + "\"");
  return j[key].get<std::string>();
}

} // namespace

SpeciesData parse_species_json(const std::string& json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw DataError(origin + ": JSON parse failure: " + e.what());
  }

  SpeciesData s;
  s.name = read_str(doc, "name", origin);
  s.mass_amu = read_num(doc, "mass_amu", origin);

  if (!doc.contains("levels") || !doc["levels"].is_array())
    throw DataError(origin + ": missing \"levels\" array");
  for (const auto& jl : doc["levels"]) {
    Level lv;
    lv.label = read_str(jl, "label", origin);
    lv.l = static_cast<int>(read_num(jl, "L", origin));
    lv.s = read_half(jl, "S2", origin);
    lv.j = read_half(jl, "J2", origin);
    lv.energy_cm = read_num(jl, "energy_cm", origin);
    s.levels.push_back(lv);
  }

  if (!doc.contains("transitions") || !doc["transitions"].is_array())
    throw DataError(origin + ": missing \"transitions\" array");
  for (const auto& jt : doc["transitions"]) {
    Transition t;
    t.upper = read_str(jt, "upper", origin);
    t.lower = read_str(jt, "lower", origin);
    t.a_per_s = read_num(jt, "A_per_s", origin);
    s.dipole_transitions.push_back(t);
  }

  if (!doc.contains("metastable_decay") || !doc["metastable_decay"].is_object())
    throw DataError(origin + ": missing \"metastable_decay\" object");
  for (const auto& [key, val] : doc["metastable_decay"].items()) {
    if (!val.is_number())
      throw DataError(origin + ": metastable_decay[\"" + key + "\"] must be a number");
    s.metastable_decay[key] = val.get<double>();
  }

  validate_species(s, origin);
  return s;
}

SpeciesData load_species(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open species file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_species_json(buf.str(), path);
}

void validate_species(const SpeciesData& s, const std::string& origin) {
  auto fail = [&](const std::string& msg) { throw DataError(origin + ": " + msg); };

  if (s.name.empty()) fail("species name is empty");
  if (!(s.mass_amu > 0)) fail("mass_amu must be > 0");
  if (s.levels.empty()) fail("no levels");

  for (const auto& lv : s.levels) {
    const std::string where = "level \"" + lv.label + "\"";
    if (lv.l < 0) fail(where + ": L must be >= 0");
    if (lv.s.twice() != 1) fail(where + ": S2 must be 1 (spin-1/2 species)");
    if (lv.j.twice() <= 0) fail(where + ": J must be > 0");
    const int lo = std::abs(2 * lv.l - lv.s.twice());
    const int hi = 2 * lv.l + lv.s.twice();
    if (lv.j.twice() < lo || lv.j.twice() > hi)
      fail(where + ": J=" + lv.j.str() + " violates |L-S| <= J <= L+S");
    if (lv.energy_cm < 0) fail(where + ": energy_cm must be >= 0");
    if (std::count_if(s.levels.begin(), s.levels.end(),
                      [&](const Level& o) { return o.label == lv.label; }) != 1)
      fail("duplicate level label \"" + lv.label + "\"");
  }

  const double min_e =
      std::min_element(s.levels.begin(), s.levels.end(), [](const Level& a, const Level& b) {
        return a.energy_cm < b.energy_cm;
      })->energy_cm;
  if (min_e != 0.0) fail("ground level must sit at 0 cm^-1");

  for (const char* req : {"S1/2", "P1/2", "P3/2", "D3/2", "D5/2"})
    if (!s.find_level(req)) fail(std::string("required level \"") + req + "\" missing");

  for (const auto& t : s.dipole_transitions) {
    const std::string where = "transition " + t.upper + " -> " + t.lower;
    const Level* up = s.find_level(t.upper);
    const Level* lo = s.find_level(t.lower);
    if (!up) fail(where + ": unknown upper level");
    if (!lo) fail(where + ": unknown lower level");
    if (!(t.a_per_s > 0)) fail(where + ": A_per_s must be > 0");
    if (!(up->energy_cm > lo->energy_cm)) fail(where + ": upper energy must exceed lower");
    if (std::abs(up->l - lo->l) != 1) fail(where + ": |dL| = 1 required for E1");
    const int dj2 = std::abs(up->j.twice() - lo->j.twice());
    if (dj2 > 2)
      fail(where + ": |dJ| <= 1 violated with dJ=" + HalfInt::from_twice(dj2).str());
    int dup = 0;
    for (const auto& o : s.dipole_transitions)
      if (o.upper == t.upper && o.lower == t.lower) ++dup;
    if (dup != 1) fail("duplicate " + where);
  }

  for (const auto& lv : s.levels) {
    if (!lv.is_d()) continue;
    auto it = s.metastable_decay.find(lv.label);
    if (it == s.metastable_decay.end())
      fail("D level \"" + lv.label + "\" has no metastable_decay entry");
    if (!(it->second > 0)) fail("metastable_decay[\"" + lv.label + "\"] must be > 0");
  }
  for (const auto& [label, rate] : s.metastable_decay) {
    const Level* lv = s.find_level(label);
    if (!lv) fail("metastable_decay references unknown level \"" + label + "\"");
    if (!lv->is_d()) fail("metastable_decay entry \"" + label + "\" is not a D level");
  }
}

void validate_sublevel(const SpeciesData& s, const SublevelRef& ref) {
  const Level& lv = s.level(ref.level);
  if (std::abs(ref.m.twice()) > lv.j.twice())
    throw DataError(s.name + ": |m|=" + ref.m.str() + " exceeds J=" + lv.j.str() + " of " +
                    ref.level);
  if (!ref.m.same_parity(lv.j))
    throw DataError(s.name + ": m=" + ref.m.str() + " has wrong parity for J=" + lv.j.str());
}

void validate_qubit(const SpeciesData& s, const QubitSpec& q) {
  validate_sublevel(s, q.down);
  validate_sublevel(s, q.up);
  const Level& down = s.level(q.down.level);
  const Level& up = s.level(q.up.level);
  if (!down.is_s() || down.j.twice() != 1)
    throw DataError(s.name + ": qubit |down> must be an S1/2 sublevel");
  if (!up.is_d()) throw DataError(s.name + ": qubit |up> must be a D-level sublevel");
}

QubitSpec default_qubit() {
  return QubitSpec{{"S1/2", half(1)}, {"D5/2", half(3)}};
}

} // namespace otdf
