#pragma once

#include <string>

namespace spdc::units {

// Internal unit system is SI base (meters, seconds, radians).
// Configuration files carry explicit unit suffixes ("0.5 mm", "185 fs/mm");
// unsuffixed numbers are rejected for dimensioned quantities.

/// Parses "<number> <unit>" where <unit> is a length unit (m, mm, um, nm).
/// Throws ConfigError on a missing or unknown suffix.
double parse_length(const std::string& text);

/// Parses a time quantity (s, ms, us, ns, ps, fs).
double parse_time(const std::string& text);

/// Parses an inverse-group-velocity difference (s/m, ps/mm, fs/mm).
double parse_time_per_length(const std::string& text);

/// Parses a wavenumber / phase-per-length (rad/m, rad/mm).
double parse_wavenumber(const std::string& text);

/// Parses a plain dimensionless number; a unit suffix is an error.
double parse_dimensionless(const std::string& text);

}  // namespace spdc::units
