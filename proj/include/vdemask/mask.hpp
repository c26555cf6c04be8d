#pragma once

#include <span>
#include <string>
#include <vector>

#include "vdemask/antenna.hpp"
#include "vdemask/criteria.hpp"

namespace vdemask {

struct MaskSample {
    double theta_deg;  // [deg]
    double pfd;        // [dBW/m^2] in the mask's reference bandwidth
};

// Maximum allowed PFD versus elevation angle, sampled over [0, 90] degrees.
class PfdMask {
public:
    PfdMask(std::string label, double ref_bandwidth_hz, std::vector<MaskSample> samples);

    const std::string& label() const { return label_; }
    double ref_bandwidth_hz() const { return ref_bandwidth_hz_; }
    std::span<const MaskSample> samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    // Linear interpolation between samples; theta must be within coverage.
    double value_at(double theta_deg) const;

private:
    std::string label_;
    double ref_bandwidth_hz_;  // [Hz]
    std::vector<MaskSample> samples_;
};

// Inclusive grid from start to end; the end point is always emitted exactly.
std::vector<double> theta_grid(double start_deg, double end_deg, double step_deg);

// PFD that deposits exactly i_max into a receiver behind the given antenna
// gain and feeder loss: i_max + 10*log10(4*pi/lambda^2) + feeder - gain.
double pfd_from_interference(double i_max_dbw, double feeder_loss_db,
                             double gain_at_theta_dbi, double wavelength_m);

// Sweep of pfd_from_interference over the receive pattern: the station
// tolerates more PFD wherever its gain has fallen off.
PfdMask station_mask(const CriterionLimit& limit, const AntennaPattern& pattern,
                     double feeder_loss_db, double wavelength_m,
                     std::span<const double> grid_deg);

// Field-strength threshold swept over the pattern relative to boresight,
// relaxed by the polarization mismatch.
PfdMask ecc_mask(const DecibelQuantity& threshold, const AntennaPattern& pattern,
                 double polarization_db, std::span<const double> grid_deg,
                 std::string label);

// Pointwise minimum of masks sharing a grid and reference bandwidth.
PfdMask compose_min(std::span<const PfdMask> masks);

}  // namespace vdemask
