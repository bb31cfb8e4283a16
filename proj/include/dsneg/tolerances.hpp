#pragma once

namespace dsneg {

/// Allowed deviation of a mass or probability total from 1.
inline constexpr double mass_tolerance = 1e-9;

/// Tolerance for comparing analytically equal floating-point quantities.
inline constexpr double compare_tolerance = 1e-9;

}  // namespace dsneg
