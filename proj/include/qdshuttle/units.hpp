#pragma once

// Unit system: energies in ueV, times in ns, lengths in nm.
// All paper-scale constants are then O(1)-O(1e4) and stay well inside
// double range.

namespace qds {

// hbar in ueV ns
inline constexpr double kHbar = 0.6582119569;

// hbar^2 / (2 m_e) in ueV nm^2, from (hbar c)^2 / (2 m_e c^2)
inline constexpr double kHbarSqOver2Me = 38099.819;

// Transverse effective mass for in-plane motion in silicon, in units of m_e.
inline constexpr double kSiliconEffectiveMass = 0.19;

inline constexpr double kNsPerSecond = 1e9;

}  // namespace qds
