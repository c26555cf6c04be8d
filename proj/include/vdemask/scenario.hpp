#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "vdemask/antenna.hpp"
#include "vdemask/criteria.hpp"
#include "vdemask/environment.hpp"

namespace vdemask {

// One station block of the config: profile fields plus the receive-pattern
// parameters (beamwidth defaults to the value implied by the peak gain).
struct StationConfig {
    double antenna_gain_dbi;
    double feeder_loss_db;
    double antenna_height_m;
    double channel_bandwidth_hz;
    double digital_power_typical_w;
    double digital_power_min_w;
    double analog_power_typical_w;
    double analog_power_min_w;
    double sidelobe_param = 0.7;
    std::optional<double> beamwidth_3db_deg{};
};

struct MaskGridConfig {
    double theta_start_deg = 0.0;
    double theta_end_deg = 90.0;
    double theta_step_deg = 0.5;
};

// Full scenario; every field has a built-in default so an empty config file
// is a valid, complete scenario.
struct ScenarioConfig {
    NoiseEnvironment environment;
    double excess_path_loss_db = 34.0;
    StationConfig base;
    StationConfig mobile;
    CriteriaParams criteria;
    MaskGridConfig mask;
};

ScenarioConfig default_scenario();

// Strict parser for the sectioned key = value format: unknown sections or
// keys, duplicate keys, bad numbers and out-of-range values are all errors.
ScenarioConfig parse_config(const std::filesystem::path& path);
ScenarioConfig parse_config_text(std::string_view text,
                                 const std::string& origin = "<config>");

std::string serialize_config(const ScenarioConfig& config);

// Cross-field checks; throws ConfigValueError naming the offending key.
void validate(const ScenarioConfig& config);

const StationConfig& station_config(const ScenarioConfig& config, StationRole role);
StationProfile station_profile(const StationConfig& station, StationRole role,
                               Modulation modulation);
AntennaPattern antenna_pattern(const StationConfig& station);

// Symbol rate to use for a receiver: configured value, else its channel bandwidth.
double resolved_symbol_rate(const CriteriaParams& params, double channel_bandwidth_hz);

}  // namespace vdemask
