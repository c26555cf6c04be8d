#pragma once

#include "vdemask/errors.hpp"

namespace vdemask {

inline constexpr double kMeanEarthRadius = 6371000.0;  // [m]
inline constexpr double kSpeedOfLight = 2.998e8;       // [m/s]

double wavelength(double frequency_hz);  // [m]

// Geometric line-of-sight horizon over a smooth sphere (no refraction term).
double horizon_distance(double antenna_height_m);  // [m]

// 20*log10(4*pi*d/lambda).
double free_space_loss(double distance_m, double frequency_hz);  // [dB]

// Free-space plus excess terrestrial loss, both non-negative.
double total_path_loss(double free_space_loss_db, double excess_loss_db);  // [dB]

// Spherical-Earth distance to a satellite at the given altitude seen at the
// given elevation angle.
double slant_range(double orbit_altitude_m, double elevation_deg);  // [m]

// Terrestrial link loss breakdown; total is the exact dB sum of the parts.
struct PathBudget {
    double distance_m;
    double free_space_loss_db;
    double excess_loss_db;
    double total_loss_db;
};

PathBudget make_path_budget(double distance_m, double frequency_hz, double excess_loss_db);

}  // namespace vdemask
