#include "vdemask/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vdemask/errors.hpp"

namespace vdemask {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) {
            field.pop_back();
        }
        while (!field.empty() && field.front() == ' ') {
            field.erase(field.begin());
        }
        fields.push_back(field);
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return !s.empty() && end == s.c_str() + s.size();
}

}  // namespace

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    std::string s(buf);
    if (s == "-0." + std::string(static_cast<std::size_t>(decimals), '0')) {
        s.erase(s.begin());
    }
    return s;
}

std::string pfd_column_name(double ref_bandwidth_hz, const std::string& prefix) {
    if (ref_bandwidth_hz >= 1e3 &&
        ref_bandwidth_hz == 1e3 * static_cast<double>(
                                      static_cast<long long>(ref_bandwidth_hz / 1e3))) {
        return prefix + "_dbw_m2_" +
               std::to_string(static_cast<long long>(ref_bandwidth_hz / 1e3)) + "khz";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", ref_bandwidth_hz);
    return prefix + "_dbw_m2_" + buf + "hz";
}

void write_mask_csv(std::ostream& out, const PfdMask& mask) {
    out << "theta_deg," << pfd_column_name(mask.ref_bandwidth_hz()) << "\n";
    for (const MaskSample& s : mask.samples()) {
        out << format_fixed(s.theta_deg) << "," << format_fixed(s.pfd) << "\n";
    }
}

void write_mask_table_csv(std::ostream& out, std::span<const double> grid_deg,
                          std::span<const MaskColumn> columns) {
    out << "theta_deg";
    for (const MaskColumn& c : columns) {
        out << "," << c.header;
    }
    out << "\n";
    for (std::size_t i = 0; i < grid_deg.size(); ++i) {
        out << format_fixed(grid_deg[i]);
        for (const MaskColumn& c : columns) {
            out << "," << format_fixed(c.mask->samples()[i].pfd);
        }
        out << "\n";
    }
}

PfdMask load_mask_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigFileError("cannot open mask CSV: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigValueError("empty mask CSV: " + path.string());
    }
    const std::vector<std::string> header = split_fields(line);
    if (header.size() != 2 || header[0] != "theta_deg") {
        throw ConfigValueError("mask CSV must have columns theta_deg,<pfd>: " +
                               path.string());
    }
    // Column name encodes the reference bandwidth, e.g. pfd_dbw_m2_4khz.
    double ref_bandwidth_hz = 0.0;
    const std::string& col = header[1];
    const std::string marker = "_dbw_m2_";
    const auto pos = col.find(marker);
    if (pos != std::string::npos) {
        std::string tail = col.substr(pos + marker.size());
        double scale = 1.0;
        if (tail.size() > 3 && tail.substr(tail.size() - 3) == "khz") {
            scale = 1e3;
            tail = tail.substr(0, tail.size() - 3);
        } else if (tail.size() > 2 && tail.substr(tail.size() - 2) == "hz") {
            tail = tail.substr(0, tail.size() - 2);
        }
        double parsed = 0.0;
        if (parse_double(tail, parsed)) {
            ref_bandwidth_hz = parsed * scale;
        }
    }
    if (!(ref_bandwidth_hz > 0.0)) {
        throw ConfigValueError("mask CSV column '" + col +
                               "' does not name a reference bandwidth: " + path.string());
    }

    std::vector<MaskSample> samples;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_fields(line);
        double theta = 0.0;
        double pfd = 0.0;
        if (fields.size() != 2 || !parse_double(fields[0], theta) ||
            !parse_double(fields[1], pfd)) {
            throw ConfigValueError("malformed mask CSV row (line " +
                                   std::to_string(line_no) + "): " + path.string());
        }
        samples.push_back({theta, pfd});
    }
    try {
        return PfdMask(path.stem().string(), ref_bandwidth_hz, std::move(samples));
    } catch (const DomainError& e) {
        throw ConfigValueError("invalid mask in " + path.string() + ": " + e.what());
    }
}

std::vector<MaskSample> load_curve_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigFileError("cannot open CSV: " + path.string());
    }
    std::vector<MaskSample> curve;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_fields(line);
        double theta = 0.0;
        double value = 0.0;
        if (fields.size() < 2) {
            throw ConfigValueError("malformed CSV row (line " + std::to_string(line_no) +
                                   "): " + path.string());
        }
        if (!parse_double(fields[0], theta) || !parse_double(fields[1], value)) {
            if (line_no == 1) continue;  // header
            throw ConfigValueError("malformed CSV row (line " + std::to_string(line_no) +
                                   "): " + path.string());
        }
        curve.push_back({theta, value});
    }
    if (curve.size() < 2) {
        throw ConfigValueError("curve CSV needs at least 2 data rows: " + path.string());
    }
    if (!std::is_sorted(curve.begin(), curve.end(),
                        [](const MaskSample& a, const MaskSample& b) {
                            return a.theta_deg < b.theta_deg;
                        })) {
        throw ConfigValueError("curve CSV angles must be increasing: " + path.string());
    }
    return curve;
}

double interpolate_curve(std::span<const MaskSample> curve, double theta_deg) {
    if (curve.size() < 2 || theta_deg < curve.front().theta_deg ||
        theta_deg > curve.back().theta_deg) {
        throw DomainError("angle " + std::to_string(theta_deg) +
                          " deg outside curve coverage");
    }
    const auto upper = std::lower_bound(
        curve.begin(), curve.end(), theta_deg,
        [](const MaskSample& s, double t) { return s.theta_deg < t; });
    if (upper->theta_deg == theta_deg) return upper->pfd;
    const auto lower = upper - 1;
    const double f = (theta_deg - lower->theta_deg) / (upper->theta_deg - lower->theta_deg);
    return lower->pfd + f * (upper->pfd - lower->pfd);
}

void write_margins_csv(std::ostream& out, const ComplianceReport& report,
                       double ref_bandwidth_hz) {
    out << "theta_deg," << pfd_column_name(ref_bandwidth_hz, "mask") << ","
        << pfd_column_name(ref_bandwidth_hz, "sat_pfd") << ",margin_db\n";
    for (const MarginSample& m : report.per_theta) {
        out << format_fixed(m.theta_deg) << "," << format_fixed(m.mask_pfd) << ","
            << format_fixed(m.satellite_pfd) << "," << format_fixed(m.margin_db) << "\n";
    }
}

void write_gain_csv(std::ostream& out, std::span<const double> grid_deg,
                    const AntennaPattern& base, const AntennaPattern& mobile) {
    out << "theta_deg,gain_base_dbi,gain_mobile_dbi\n";
    for (double theta : grid_deg) {
        out << format_fixed(theta) << "," << format_fixed(base.gain_dbi(theta)) << ","
            << format_fixed(mobile.gain_dbi(theta)) << "\n";
    }
}

}  // namespace vdemask
