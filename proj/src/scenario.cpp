#include "vdemask/scenario.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace vdemask {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(const std::string& key, std::string_view text, int line) {
    const std::string value(trim(text));
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(parsed)) {
        throw ConfigValueError("value of '" + key + "' is not a finite number: '" +
                               value + "' (line " + std::to_string(line) + ")");
    }
    return parsed;
}

// Shortest decimal form that parses back to the same double.
std::string format_number(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

struct KeyBinding {
    std::function<void(ScenarioConfig&, double)> set;
};

using Schema = std::map<std::string, KeyBinding>;

void bind_station(Schema& schema, const std::string& section,
                  StationConfig ScenarioConfig::* member) {
    auto add = [&](const std::string& key, double StationConfig::* field) {
        schema[section + "." + key] = {[member, field](ScenarioConfig& c, double v) {
            c.*member.*field = v;
        }};
    };
    add("antenna_gain_dbi", &StationConfig::antenna_gain_dbi);
    add("feeder_loss_db", &StationConfig::feeder_loss_db);
    add("antenna_height_m", &StationConfig::antenna_height_m);
    add("channel_bandwidth_hz", &StationConfig::channel_bandwidth_hz);
    add("digital_power_typical_w", &StationConfig::digital_power_typical_w);
    add("digital_power_min_w", &StationConfig::digital_power_min_w);
    add("analog_power_typical_w", &StationConfig::analog_power_typical_w);
    add("analog_power_min_w", &StationConfig::analog_power_min_w);
    add("sidelobe_param", &StationConfig::sidelobe_param);
    schema[section + ".beamwidth_3db_deg"] = {[member](ScenarioConfig& c, double v) {
        (c.*member).beamwidth_3db_deg = v;
    }};
}

Schema build_schema() {
    Schema schema;
    auto add = [&](const std::string& full_key, auto setter) {
        schema[full_key] = {setter};
    };
    add("environment.frequency_hz",
        [](ScenarioConfig& c, double v) { c.environment.frequency_hz = v; });
    add("environment.receiver_temp_dbk",
        [](ScenarioConfig& c, double v) { c.environment.receiver_temp_dbk = v; });
    add("environment.galactic_temp_dbk",
        [](ScenarioConfig& c, double v) { c.environment.galactic_temp_dbk = v; });
    add("environment.manmade_temp_dbk",
        [](ScenarioConfig& c, double v) { c.environment.manmade_temp_dbk = v; });
    add("environment.excess_path_loss_db",
        [](ScenarioConfig& c, double v) { c.excess_path_loss_db = v; });

    bind_station(schema, "stations.base", &ScenarioConfig::base);
    bind_station(schema, "stations.mobile", &ScenarioConfig::mobile);

    add("criteria.in_margin_db",
        [](ScenarioConfig& c, double v) { c.criteria.in_margin_db = v; });
    add("criteria.ecc_field_dbuv_m",
        [](ScenarioConfig& c, double v) { c.criteria.ecc_field_dbuv_per_m = v; });
    add("criteria.ecc_field_bandwidth_hz",
        [](ScenarioConfig& c, double v) { c.criteria.ecc_field_bandwidth_hz = v; });
    add("criteria.ebn0_required_db",
        [](ScenarioConfig& c, double v) { c.criteria.ebn0_required_db = v; });
    add("criteria.symbol_rate_hz",
        [](ScenarioConfig& c, double v) { c.criteria.symbol_rate_hz = v; });
    add("criteria.sinad_db",
        [](ScenarioConfig& c, double v) { c.criteria.sinad_db = v; });
    add("criteria.signal_to_distortion_db",
        [](ScenarioConfig& c, double v) { c.criteria.signal_to_distortion_db = v; });
    add("criteria.polarization_relaxation_db",
        [](ScenarioConfig& c, double v) { c.criteria.polarization_relaxation_db = v; });
    add("criteria.reference_bandwidth_hz",
        [](ScenarioConfig& c, double v) { c.criteria.reference_bandwidth_hz = v; });

    add("mask.theta_start_deg",
        [](ScenarioConfig& c, double v) { c.mask.theta_start_deg = v; });
    add("mask.theta_end_deg",
        [](ScenarioConfig& c, double v) { c.mask.theta_end_deg = v; });
    add("mask.theta_step_deg",
        [](ScenarioConfig& c, double v) { c.mask.theta_step_deg = v; });
    return schema;
}

void require(bool ok, const std::string& key, const std::string& requirement) {
    if (!ok) {
        throw ConfigValueError("'" + key + "' " + requirement);
    }
}

void validate_station(const StationConfig& s, const std::string& section) {
    require(std::isfinite(s.antenna_gain_dbi), section + ".antenna_gain_dbi",
            "must be finite");
    require(s.feeder_loss_db >= 0.0, section + ".feeder_loss_db", "must be >= 0");
    require(s.antenna_height_m >= 0.0, section + ".antenna_height_m", "must be >= 0");
    require(s.channel_bandwidth_hz > 0.0, section + ".channel_bandwidth_hz",
            "must be > 0");
    require(s.digital_power_typical_w > 0.0, section + ".digital_power_typical_w",
            "must be > 0");
    require(s.digital_power_min_w > 0.0, section + ".digital_power_min_w", "must be > 0");
    require(s.analog_power_typical_w > 0.0, section + ".analog_power_typical_w",
            "must be > 0");
    require(s.analog_power_min_w > 0.0, section + ".analog_power_min_w", "must be > 0");
    require(s.digital_power_min_w <= s.digital_power_typical_w,
            section + ".digital_power_min_w", "must not exceed the typical power");
    require(s.analog_power_min_w <= s.analog_power_typical_w,
            section + ".analog_power_min_w", "must not exceed the typical power");
    require(s.sidelobe_param >= 0.0 &&
                std::log10(s.sidelobe_param + 1.0) / 1.2 < 1.0,
            section + ".sidelobe_param", "must lie in [0, 10^1.2 - 1)");
    if (s.beamwidth_3db_deg.has_value()) {
        require(*s.beamwidth_3db_deg > 0.0, section + ".beamwidth_3db_deg", "must be > 0");
    }
}

}  // namespace

ScenarioConfig default_scenario() {
    ScenarioConfig config;
    config.base = StationConfig{8.15, 2.0, 65.0, 15e3, 60.0, 20.0, 30.0, 5.0};
    config.mobile = StationConfig{2.15, 1.0, 2.0, 15e3, 30.0, 1.0, 30.0, 1.0};
    return config;
}

ScenarioConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigFileError("cannot open config file: " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), path.string());
}

ScenarioConfig parse_config_text(std::string_view text, const std::string& origin) {
    static const Schema schema = build_schema();

    ScenarioConfig config = default_scenario();
    std::set<std::string> seen;
    std::string section;
    std::istringstream stream{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        std::string_view s = raw;
        if (auto hash = s.find('#'); hash != std::string_view::npos) {
            s = s.substr(0, hash);
        }
        s = trim(s);
        if (s.empty() || s.front() == ';') continue;

        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw ConfigSyntaxError(origin + ": malformed section header '" +
                                            std::string(s) + "' (line " +
                                            std::to_string(line) + ")",
                                        line);
            }
            section = std::string(trim(s.substr(1, s.size() - 2)));
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigSyntaxError(origin + ": expected 'key = value' (line " +
                                        std::to_string(line) + ")",
                                    line);
        }
        const std::string key(trim(s.substr(0, eq)));
        if (key.empty()) {
            throw ConfigSyntaxError(origin + ": empty key (line " +
                                        std::to_string(line) + ")",
                                    line);
        }
        if (section.empty()) {
            throw ConfigSyntaxError(origin + ": key '" + key +
                                        "' outside any section (line " +
                                        std::to_string(line) + ")",
                                    line);
        }
        const std::string full_key = section + "." + key;
        const auto binding = schema.find(full_key);
        if (binding == schema.end()) {
            throw ConfigUnknownKey(origin + ": unknown key '" + full_key + "' (line " +
                                   std::to_string(line) + ")");
        }
        if (!seen.insert(full_key).second) {
            throw ConfigValueError(origin + ": duplicate key '" + full_key + "' (line " +
                                   std::to_string(line) + ")");
        }
        binding->second.set(config, parse_number(full_key, s.substr(eq + 1), line));
    }
    validate(config);
    return config;
}

std::string serialize_config(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "[environment]\n";
    out << "frequency_hz = " << format_number(c.environment.frequency_hz) << "\n";
    out << "receiver_temp_dbk = " << format_number(c.environment.receiver_temp_dbk) << "\n";
    out << "galactic_temp_dbk = " << format_number(c.environment.galactic_temp_dbk) << "\n";
    out << "manmade_temp_dbk = " << format_number(c.environment.manmade_temp_dbk) << "\n";
    out << "excess_path_loss_db = " << format_number(c.excess_path_loss_db) << "\n";
    for (const auto& [name, s] : {std::pair<const char*, const StationConfig&>{"base", c.base},
                                  {"mobile", c.mobile}}) {
        out << "\n[stations." << name << "]\n";
        out << "antenna_gain_dbi = " << format_number(s.antenna_gain_dbi) << "\n";
        out << "feeder_loss_db = " << format_number(s.feeder_loss_db) << "\n";
        out << "antenna_height_m = " << format_number(s.antenna_height_m) << "\n";
        out << "channel_bandwidth_hz = " << format_number(s.channel_bandwidth_hz) << "\n";
        out << "digital_power_typical_w = " << format_number(s.digital_power_typical_w)
            << "\n";
        out << "digital_power_min_w = " << format_number(s.digital_power_min_w) << "\n";
        out << "analog_power_typical_w = " << format_number(s.analog_power_typical_w)
            << "\n";
        out << "analog_power_min_w = " << format_number(s.analog_power_min_w) << "\n";
        out << "sidelobe_param = " << format_number(s.sidelobe_param) << "\n";
        if (s.beamwidth_3db_deg.has_value()) {
            out << "beamwidth_3db_deg = " << format_number(*s.beamwidth_3db_deg) << "\n";
        }
    }
    out << "\n[criteria]\n";
    out << "in_margin_db = " << format_number(c.criteria.in_margin_db) << "\n";
    out << "ecc_field_dbuv_m = " << format_number(c.criteria.ecc_field_dbuv_per_m) << "\n";
    out << "ecc_field_bandwidth_hz = " << format_number(c.criteria.ecc_field_bandwidth_hz)
        << "\n";
    out << "ebn0_required_db = " << format_number(c.criteria.ebn0_required_db) << "\n";
    if (c.criteria.symbol_rate_hz.has_value()) {
        out << "symbol_rate_hz = " << format_number(*c.criteria.symbol_rate_hz) << "\n";
    }
    out << "sinad_db = " << format_number(c.criteria.sinad_db) << "\n";
    out << "signal_to_distortion_db = "
        << format_number(c.criteria.signal_to_distortion_db) << "\n";
    out << "polarization_relaxation_db = "
        << format_number(c.criteria.polarization_relaxation_db) << "\n";
    out << "reference_bandwidth_hz = "
        << format_number(c.criteria.reference_bandwidth_hz) << "\n";
    out << "\n[mask]\n";
    out << "theta_start_deg = " << format_number(c.mask.theta_start_deg) << "\n";
    out << "theta_end_deg = " << format_number(c.mask.theta_end_deg) << "\n";
    out << "theta_step_deg = " << format_number(c.mask.theta_step_deg) << "\n";
    return out.str();
}

void validate(const ScenarioConfig& c) {
    require(c.environment.frequency_hz > 0.0, "environment.frequency_hz", "must be > 0");
    require(std::isfinite(c.environment.receiver_temp_dbk),
            "environment.receiver_temp_dbk", "must be finite");
    require(std::isfinite(c.environment.galactic_temp_dbk),
            "environment.galactic_temp_dbk", "must be finite");
    require(std::isfinite(c.environment.manmade_temp_dbk),
            "environment.manmade_temp_dbk", "must be finite");
    require(c.excess_path_loss_db >= 0.0, "environment.excess_path_loss_db",
            "must be >= 0");

    validate_station(c.base, "stations.base");
    validate_station(c.mobile, "stations.mobile");

    require(c.criteria.reference_bandwidth_hz > 0.0, "criteria.reference_bandwidth_hz",
            "must be > 0");
    require(c.criteria.ecc_field_bandwidth_hz > 0.0, "criteria.ecc_field_bandwidth_hz",
            "must be > 0");
    require(c.criteria.sinad_db > 0.0, "criteria.sinad_db", "must be > 0");
    if (c.criteria.symbol_rate_hz.has_value()) {
        require(*c.criteria.symbol_rate_hz > 0.0, "criteria.symbol_rate_hz", "must be > 0");
    }

    // Mask curves are defined over the full elevation range; only the step is free.
    require(c.mask.theta_start_deg == 0.0, "mask.theta_start_deg", "must be 0");
    require(c.mask.theta_end_deg == 90.0, "mask.theta_end_deg", "must be 90");
    require(c.mask.theta_step_deg > 0.0 && c.mask.theta_step_deg <= 90.0,
            "mask.theta_step_deg", "must lie in (0, 90]");
}

const StationConfig& station_config(const ScenarioConfig& config, StationRole role) {
    return role == StationRole::Base ? config.base : config.mobile;
}

StationProfile station_profile(const StationConfig& station, StationRole role,
                               Modulation modulation) {
    StationProfile profile;
    profile.role = role;
    profile.modulation = modulation;
    if (modulation == Modulation::Digital) {
        profile.tx_power_typical_w = station.digital_power_typical_w;
        profile.tx_power_min_w = station.digital_power_min_w;
    } else {
        profile.tx_power_typical_w = station.analog_power_typical_w;
        profile.tx_power_min_w = station.analog_power_min_w;
    }
    profile.antenna_gain_dbi = station.antenna_gain_dbi;
    profile.feeder_loss_db = station.feeder_loss_db;
    profile.antenna_height_m = station.antenna_height_m;
    profile.channel_bandwidth_hz = station.channel_bandwidth_hz;
    validate(profile);
    return profile;
}

AntennaPattern antenna_pattern(const StationConfig& station) {
    const double beamwidth = station.beamwidth_3db_deg.has_value()
                                 ? *station.beamwidth_3db_deg
                                 : beamwidth_from_peak_gain(station.antenna_gain_dbi);
    return AntennaPattern(station.antenna_gain_dbi, beamwidth, station.sidelobe_param);
}

double resolved_symbol_rate(const CriteriaParams& params, double channel_bandwidth_hz) {
    return params.symbol_rate_hz.value_or(channel_bandwidth_hz);
}

}  // namespace vdemask
