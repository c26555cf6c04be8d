#include "vdemask/mask.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vdemask {

PfdMask::PfdMask(std::string label, double ref_bandwidth_hz, std::vector<MaskSample> samples)
    : label_(std::move(label)),
      ref_bandwidth_hz_(ref_bandwidth_hz),
      samples_(std::move(samples)) {
    if (!(ref_bandwidth_hz_ > 0.0)) {
        throw DomainError("mask reference bandwidth must be positive");
    }
    if (samples_.size() < 2) {
        throw DomainError("mask needs at least 2 samples");
    }
    if (samples_.front().theta_deg != 0.0 || samples_.back().theta_deg != 90.0) {
        throw DomainError("mask must span 0 to 90 deg inclusive");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i].pfd)) {
            throw DomainError("mask PFD values must be finite");
        }
        if (i > 0 && !(samples_[i].theta_deg > samples_[i - 1].theta_deg)) {
            throw DomainError("mask angles must be strictly increasing");
        }
    }
}

double PfdMask::value_at(double theta_deg) const {
    if (theta_deg < samples_.front().theta_deg || theta_deg > samples_.back().theta_deg) {
        throw DomainError("angle outside mask coverage: " + std::to_string(theta_deg));
    }
    const auto upper = std::lower_bound(
        samples_.begin(), samples_.end(), theta_deg,
        [](const MaskSample& s, double t) { return s.theta_deg < t; });
    if (upper->theta_deg == theta_deg) return upper->pfd;
    const auto lower = upper - 1;
    const double f = (theta_deg - lower->theta_deg) / (upper->theta_deg - lower->theta_deg);
    return lower->pfd + f * (upper->pfd - lower->pfd);
}

std::vector<double> theta_grid(double start_deg, double end_deg, double step_deg) {
    if (!(step_deg > 0.0) || !(end_deg > start_deg)) {
        throw DomainError("grid needs end > start and a positive step");
    }
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>((end_deg - start_deg) / step_deg + 1e-9);
    grid.reserve(count + 2);
    for (std::size_t i = 0; i <= count; ++i) {
        grid.push_back(start_deg + static_cast<double>(i) * step_deg);
    }
    if (grid.back() < end_deg - 1e-9) {
        grid.push_back(end_deg);
    } else {
        grid.back() = end_deg;  // land on the end point exactly
    }
    return grid;
}

double pfd_from_interference(double i_max_dbw, double feeder_loss_db,
                             double gain_at_theta_dbi, double wavelength_m) {
    if (!(wavelength_m > 0.0)) {
        throw DomainError("wavelength must be positive, got " +
                          std::to_string(wavelength_m) + " m");
    }
    const double spreading = 10.0 * std::log10(4.0 * std::numbers::pi /
                                               (wavelength_m * wavelength_m));
    return i_max_dbw + spreading + feeder_loss_db - gain_at_theta_dbi;
}

PfdMask station_mask(const CriterionLimit& limit, const AntennaPattern& pattern,
                     double feeder_loss_db, double wavelength_m,
                     std::span<const double> grid_deg) {
    if (!limit.i_max.ref_bandwidth_hz().has_value()) {
        throw DomainError("criterion limit must carry a reference bandwidth");
    }
    std::vector<MaskSample> samples;
    samples.reserve(grid_deg.size());
    for (double theta : grid_deg) {
        samples.push_back({theta, pfd_from_interference(limit.i_max.value(), feeder_loss_db,
                                                        pattern.gain_dbi(theta),
                                                        wavelength_m)});
    }
    return PfdMask(to_string(limit.criterion) + " " + to_string(limit.role),
                   *limit.i_max.ref_bandwidth_hz(), std::move(samples));
}

PfdMask ecc_mask(const DecibelQuantity& threshold, const AntennaPattern& pattern,
                 double polarization_db, std::span<const double> grid_deg,
                 std::string label) {
    if (threshold.kind() != UnitKind::PfdDBWPerM2 ||
        !threshold.ref_bandwidth_hz().has_value()) {
        throw DomainError("ECC mask needs a banded PFD threshold");
    }
    const double boresight_gain = pattern.gain_dbi(0.0);
    std::vector<MaskSample> samples;
    samples.reserve(grid_deg.size());
    for (double theta : grid_deg) {
        const double pfd = threshold.value() + (boresight_gain - pattern.gain_dbi(theta)) +
                           polarization_db;
        samples.push_back({theta, pfd});
    }
    return PfdMask(std::move(label), *threshold.ref_bandwidth_hz(), std::move(samples));
}

PfdMask compose_min(std::span<const PfdMask> masks) {
    if (masks.empty()) {
        throw DomainError("compose_min requires at least one mask");
    }
    const PfdMask& first = masks.front();
    for (const PfdMask& m : masks.subspan(1)) {
        if (m.ref_bandwidth_hz() != first.ref_bandwidth_hz()) {
            throw DomainError("compose_min: reference bandwidth mismatch");
        }
        if (m.size() != first.size()) {
            throw DomainError("compose_min: grid size mismatch");
        }
        for (std::size_t i = 0; i < first.size(); ++i) {
            if (m.samples()[i].theta_deg != first.samples()[i].theta_deg) {
                throw DomainError("compose_min: grid mismatch at index " + std::to_string(i));
            }
        }
    }
    std::vector<MaskSample> samples(first.samples().begin(), first.samples().end());
    std::string label = first.label();
    for (const PfdMask& m : masks.subspan(1)) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            samples[i].pfd = std::min(samples[i].pfd, m.samples()[i].pfd);
        }
        label += ", " + m.label();
    }
    return PfdMask("min(" + label + ")", first.ref_bandwidth_hz(), std::move(samples));
}

}  // namespace vdemask
