#include <map>
#include <mutex>

#include "otdf/atomic_data.hpp"
#include "otdf/builtin_species_data.hpp"

namespace otdf {

namespace {

const std::map<std::string, SpeciesData>& registry() {
  static const std::map<std::string, SpeciesData> reg = [] {
    std::map<std::string, SpeciesData> m;
    for (int i = 0; i < detail::kEmbeddedSpeciesCount; ++i) {
      SpeciesData s = parse_species_json(detail::kEmbeddedSpeciesJson[i], "<builtin>");
      m.emplace(s.name, std::move(s));
    }
    return m;
  }();
  return reg;
}

} // namespace

std::vector<std::string> builtin_species_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

const SpeciesData& builtin_species(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string known;
    for (const auto& [n, _] : reg) known += (known.empty() ? "" : ", ") + n;
    throw DataError("unknown builtin species \"" + name + "\" (have: " + known + ")");
  }
  return it->second;
}

SpeciesData resolve_species(const std::string& name_or_path) {
  if (registry().count(name_or_path)) return registry().at(name_or_path);
  return load_species(name_or_path);
}

} // namespace otdf
