#include "vdemask/propagation.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vdemask {

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0)) {
        throw DomainError("frequency must be positive, got " +
                          std::to_string(frequency_hz) + " Hz");
    }
    return kSpeedOfLight / frequency_hz;
}

double horizon_distance(double antenna_height_m) {
    if (!(antenna_height_m >= 0.0)) {
        throw DomainError("antenna height must be non-negative, got " +
                          std::to_string(antenna_height_m) + " m");
    }
    return std::sqrt(2.0 * kMeanEarthRadius * antenna_height_m);
}

double free_space_loss(double distance_m, double frequency_hz) {
    if (!(distance_m > 0.0)) {
        throw DomainError("distance must be positive, got " +
                          std::to_string(distance_m) + " m");
    }
    const double lambda = wavelength(frequency_hz);
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m / lambda);
}

double total_path_loss(double free_space_loss_db, double excess_loss_db) {
    if (!(free_space_loss_db >= 0.0) || !(excess_loss_db >= 0.0)) {
        throw DomainError("path losses must be non-negative");
    }
    return free_space_loss_db + excess_loss_db;
}

double slant_range(double orbit_altitude_m, double elevation_deg) {
    if (!(orbit_altitude_m > 0.0)) {
        throw DomainError("orbit altitude must be positive, got " +
                          std::to_string(orbit_altitude_m) + " m");
    }
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0)) {
        throw DomainError("elevation angle must lie in [0, 90] deg, got " +
                          std::to_string(elevation_deg));
    }
    const double s = std::sin(elevation_deg * std::numbers::pi / 180.0);
    const double re = kMeanEarthRadius;
    const double h = orbit_altitude_m;
    return std::sqrt(re * re * s * s + 2.0 * re * h + h * h) - re * s;
}

PathBudget make_path_budget(double distance_m, double frequency_hz, double excess_loss_db) {
    const double fsl = free_space_loss(distance_m, frequency_hz);
    return PathBudget{distance_m, fsl, excess_loss_db,
                      total_path_loss(fsl, excess_loss_db)};
}

}  // namespace vdemask
