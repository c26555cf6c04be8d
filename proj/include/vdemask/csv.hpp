#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vdemask/antenna.hpp"
#include "vdemask/compliance.hpp"
#include "vdemask/mask.hpp"

namespace vdemask {

// Fixed two-decimal formatting used by every CSV body; reruns are
// byte-identical by construction.
std::string format_fixed(double value, int decimals = 2);

// Column name for a PFD in the given reference bandwidth, e.g.
// "pfd_dbw_m2_4khz".
std::string pfd_column_name(double ref_bandwidth_hz, const std::string& prefix = "pfd");

// Single mask: header theta_deg,<pfd column>.
void write_mask_csv(std::ostream& out, const PfdMask& mask);

struct MaskColumn {
    std::string header;
    const PfdMask* mask;  // sampled exactly on the shared grid
};

// Multi-mask table: theta_deg plus one column per mask.
void write_mask_table_csv(std::ostream& out, std::span<const double> grid_deg,
                          std::span<const MaskColumn> columns);

// Loads the single-mask format back; the reference bandwidth is read from the
// column name.
PfdMask load_mask_csv(const std::filesystem::path& path);

// Any two-column theta/value curve (for reference overlays); an optional
// non-numeric header line is skipped.
std::vector<MaskSample> load_curve_csv(const std::filesystem::path& path);

// Linear interpolation of a curve at theta; the curve must cover it.
double interpolate_curve(std::span<const MaskSample> curve, double theta_deg);

void write_margins_csv(std::ostream& out, const ComplianceReport& report,
                       double ref_bandwidth_hz);

// Elevation gain of the two receive patterns: theta_deg,gain_base_dbi,gain_mobile_dbi.
void write_gain_csv(std::ostream& out, std::span<const double> grid_deg,
                    const AntennaPattern& base, const AntennaPattern& mobile);

}  // namespace vdemask
