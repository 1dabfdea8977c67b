#pragma once

#include <string>

#include "slicesum/sliceop.hpp"

namespace slicesum {

inline constexpr int kCoefficientFormatVersion = 1;

// Human-readable JSON; doubles serialize losslessly (shortest round-trip
// representation, <= 17 significant digits).
void save_coefficients(const std::string& path,
                       const CosineCoefficients& coeffs);

CosineCoefficients load_coefficients(const std::string& path);

}  // namespace slicesum
