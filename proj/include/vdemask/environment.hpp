#pragma once

#include <span>

#include "vdemask/units.hpp"

namespace vdemask {

inline constexpr double kBoltzmann = 1.380649e-23;  // [J/K]

// Receiver noise environment: internal equipment noise plus the two dominant
// external VHF contributors, all as noise temperatures.
struct NoiseEnvironment {
    double receiver_temp_dbk = 30.0;  // [dBK]
    double galactic_temp_dbk = 24.0;  // [dBK]
    double manmade_temp_dbk = 31.0;   // [dBK]
    double frequency_hz = 159.025e6;  // [Hz]
};

void validate(const NoiseEnvironment& env);

// Sum of component temperatures in the linear domain, restored to dBK.
double combine_noise_temperatures(std::span<const double> temps_dbk);

// System noise temperature of the environment's three components.
double system_noise_temperature(const NoiseEnvironment& env);

// Thermal noise power k*T*B over the given bandwidth, tagged with it.
DecibelQuantity noise_power(double system_temp_dbk, double bandwidth_hz);

}  // namespace vdemask
