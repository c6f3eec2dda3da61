#pragma once

namespace otdf::detail {

extern const char* const kEmbeddedSpeciesJson[];
extern const int kEmbeddedSpeciesCount;

} // namespace otdf::detail
