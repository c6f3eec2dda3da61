#pragma once

#include <stdexcept>
#include <string>

namespace otdf {

// Species file / atomic structure problems (CLI exit code 2).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: ranges, flags, config files (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric failures: non-convergence, guard violations (CLI exit code 3).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Laser frequency too close to an atomic resonance for the perturbative
// formulas to be trusted. Carries the offending transition.
class NearResonanceError : public NumericError {
public:
  NearResonanceError(const std::string& what, std::string upper, std::string lower)
      : NumericError(what), upper_level(std::move(upper)), lower_level(std::move(lower)) {}
  std::string upper_level;
  std::string lower_level;
};

// The gate has no solution at this wavelength (vanishing differential
// shift, i.e. a magic wavelength, or a zero lattice-phase factor).
class GateImpossibleError : public NumericError {
public:
  explicit GateImpossibleError(const std::string& what) : NumericError(what) {}
};

} // namespace otdf
