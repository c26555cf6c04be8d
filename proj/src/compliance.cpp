#include "vdemask/compliance.hpp"

#include <cmath>
#include <numbers>

#include "vdemask/propagation.hpp"

namespace vdemask {

double satellite_pfd(const SatelliteEmission& emission, double theta_deg) {
    const double d = slant_range(emission.orbit_altitude_m, theta_deg);  // [m]
    return emission.eirp_density_dbw -
           10.0 * std::log10(4.0 * std::numbers::pi * d * d);
}

ComplianceReport compliance_margin(const PfdMask& mask, const SatelliteEmission& emission) {
    ComplianceReport report;
    report.per_theta.reserve(mask.size());
    for (const MaskSample& s : mask.samples()) {
        const double sat = satellite_pfd(emission, s.theta_deg);
        report.per_theta.push_back({s.theta_deg, s.pfd, sat, s.pfd - sat});
    }
    report.min_margin_db = report.per_theta.front().margin_db;
    report.worst_theta_deg = report.per_theta.front().theta_deg;
    for (const MarginSample& m : report.per_theta) {
        if (m.margin_db < report.min_margin_db) {  // ties keep the smallest angle
            report.min_margin_db = m.margin_db;
            report.worst_theta_deg = m.theta_deg;
        }
    }
    report.compliant = report.min_margin_db >= 0.0;
    return report;
}

}  // namespace vdemask
