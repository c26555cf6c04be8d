#pragma once

#include <vector>

#include "vdemask/mask.hpp"

namespace vdemask {

// A satellite downlink reduced to what the mask check needs: the EIRP
// spectral density it points at the evaluation area, and its altitude.
struct SatelliteEmission {
    double eirp_density_dbw;  // [dBW] per the mask's reference bandwidth
    double orbit_altitude_m;  // [m]
};

// PFD the emission produces on the ground when seen at the given elevation:
// EIRP density spread over the slant-range sphere.
double satellite_pfd(const SatelliteEmission& emission, double theta_deg);

struct MarginSample {
    double theta_deg;
    double mask_pfd;       // [dBW/m^2]
    double satellite_pfd;  // [dBW/m^2]
    double margin_db;      // mask - satellite
};

struct ComplianceReport {
    double min_margin_db;
    double worst_theta_deg;  // smallest angle attaining the minimum
    bool compliant;          // min_margin_db >= 0
    std::vector<MarginSample> per_theta;
};

// Margin of the mask over the emission at every mask sample.
ComplianceReport compliance_margin(const PfdMask& mask, const SatelliteEmission& emission);

}  // namespace vdemask
