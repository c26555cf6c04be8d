#pragma once

#include "vdemask/errors.hpp"

namespace vdemask {

// 3 dB beamwidth of the omnidirectional reference pattern for a given peak
// gain: theta3 = 107.6 * 10^(-0.1*G0) degrees.
double beamwidth_from_peak_gain(double peak_gain_dbi);

// Omnidirectional average elevation gain pattern used for land mobile and
// base station antennas. Quadratic main lobe down to the crossover angle,
// then a k-floored sidelobe envelope; clamped to be non-increasing over
// [0, 90] degrees.
class AntennaPattern {
public:
    AntennaPattern(double peak_gain_dbi, double beamwidth_3db_deg, double sidelobe_param);

    // Beamwidth derived from the peak gain; k defaults to the value typical
    // of azimuth-averaged patterns.
    static AntennaPattern from_peak_gain(double peak_gain_dbi, double sidelobe_param = 0.7);

    double peak_gain_dbi() const { return peak_gain_dbi_; }
    double beamwidth_3db_deg() const { return beamwidth_3db_deg_; }
    double sidelobe_param() const { return sidelobe_param_; }

    // Angle at which the quadratic main lobe hands over to the sidelobe branch.
    double crossover_deg() const { return crossover_deg_; }

    // Gain at elevation theta in [0, 90] degrees; gain(0) == peak_gain exactly.
    double gain_dbi(double theta_deg) const;

private:
    double peak_gain_dbi_;
    double beamwidth_3db_deg_;  // [deg]
    double sidelobe_param_;
    double crossover_deg_;      // [deg]
    double crossover_gain_dbi_; // running minimum entering the sidelobe branch
};

}  // namespace vdemask
