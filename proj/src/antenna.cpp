#include "vdemask/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vdemask {

double beamwidth_from_peak_gain(double peak_gain_dbi) {
    return 107.6 * std::pow(10.0, -0.1 * peak_gain_dbi);
}

AntennaPattern::AntennaPattern(double peak_gain_dbi, double beamwidth_3db_deg,
                               double sidelobe_param)
    : peak_gain_dbi_(peak_gain_dbi),
      beamwidth_3db_deg_(beamwidth_3db_deg),
      sidelobe_param_(sidelobe_param) {
    if (!std::isfinite(peak_gain_dbi_)) {
        throw DomainError("peak gain must be finite");
    }
    if (!(beamwidth_3db_deg_ > 0.0)) {
        throw DomainError("3 dB beamwidth must be positive, got " +
                          std::to_string(beamwidth_3db_deg_) + " deg");
    }
    // The crossover angle exists only while the main lobe reaches the
    // sidelobe level; this caps k at 10^1.2 - 1 and keeps gain(0) == peak.
    const double arg = 1.0 - std::log10(sidelobe_param_ + 1.0) / 1.2;
    if (!(sidelobe_param_ >= 0.0) || !(arg > 0.0)) {
        throw DomainError("sidelobe parameter must lie in [0, 10^1.2 - 1), got " +
                          std::to_string(sidelobe_param_));
    }
    crossover_deg_ = beamwidth_3db_deg_ * std::sqrt(arg);
    const double r4 = crossover_deg_ / beamwidth_3db_deg_;
    crossover_gain_dbi_ = peak_gain_dbi_ - 12.0 * r4 * r4;
}

AntennaPattern AntennaPattern::from_peak_gain(double peak_gain_dbi, double sidelobe_param) {
    return AntennaPattern(peak_gain_dbi, beamwidth_from_peak_gain(peak_gain_dbi),
                          sidelobe_param);
}

double AntennaPattern::gain_dbi(double theta_deg) const {
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0)) {
        throw DomainError("elevation angle must lie in [0, 90] deg, got " +
                          std::to_string(theta_deg));
    }
    const double r = theta_deg / beamwidth_3db_deg_;
    if (theta_deg < crossover_deg_) {
        return peak_gain_dbi_ - 12.0 * r * r;
    }
    const double sidelobe = peak_gain_dbi_ - 12.0 +
                            10.0 * std::log10(std::pow(std::max(r, 1.0), -1.5) +
                                              sidelobe_param_);
    // Running-minimum clamp: never rise back above the main-lobe handover level.
    return std::min(sidelobe, crossover_gain_dbi_);
}

}  // namespace vdemask
