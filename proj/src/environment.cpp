#include "vdemask/environment.hpp"

#include <array>
#include <cmath>

namespace vdemask {

void validate(const NoiseEnvironment& env) {
    if (!(env.frequency_hz > 0.0)) {
        throw DomainError("frequency must be positive, got " +
                          std::to_string(env.frequency_hz) + " Hz");
    }
    for (double t : {env.receiver_temp_dbk, env.galactic_temp_dbk, env.manmade_temp_dbk}) {
        if (!std::isfinite(t)) {
            throw DomainError("noise temperatures must be finite");
        }
    }
}

double combine_noise_temperatures(std::span<const double> temps_dbk) {
    if (temps_dbk.empty()) {
        throw DomainError("combine_noise_temperatures requires at least one component");
    }
    double sum_k = 0.0;  // [K]
    for (double t : temps_dbk) {
        sum_k += from_db(t);
    }
    return to_db(sum_k);
}

double system_noise_temperature(const NoiseEnvironment& env) {
    validate(env);
    const std::array<double, 3> temps{env.receiver_temp_dbk, env.galactic_temp_dbk,
                                      env.manmade_temp_dbk};
    return combine_noise_temperatures(temps);
}

DecibelQuantity noise_power(double system_temp_dbk, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) {
        throw DomainError("noise bandwidth must be positive, got " +
                          std::to_string(bandwidth_hz) + " Hz");
    }
    const double value = 10.0 * std::log10(kBoltzmann) + system_temp_dbk +
                         10.0 * std::log10(bandwidth_hz);
    return DecibelQuantity(value, UnitKind::PowerDBW, bandwidth_hz);
}

}  // namespace vdemask
