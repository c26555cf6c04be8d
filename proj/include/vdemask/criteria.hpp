#pragma once

#include <string>
#include <vector>

#include "vdemask/units.hpp"

namespace vdemask {

enum class StationRole { Base, Mobile };
enum class Modulation { Digital, Analog };
enum class Criterion { ItuIN, EccField, ItuCI };

std::string to_string(StationRole role);
std::string to_string(Modulation mod);
std::string to_string(Criterion criterion);

// One land station as seen by the budgets: transmit powers, antenna, feeder,
// siting and channelization.
struct StationProfile {
    StationRole role = StationRole::Base;
    Modulation modulation = Modulation::Digital;
    double tx_power_typical_w = 60.0;   // [W]
    double tx_power_min_w = 20.0;       // [W]
    double antenna_gain_dbi = 8.15;     // [dBi]
    double feeder_loss_db = 2.0;        // [dB]
    double antenna_height_m = 65.0;     // [m]
    double channel_bandwidth_hz = 15e3; // [Hz]
};

void validate(const StationProfile& station);

// Protection-rule parameters shared by the three criteria.
struct CriteriaParams {
    double in_margin_db = -6.0;              // interference-to-noise ceiling [dB]
    double ecc_field_dbuv_per_m = 12.0;      // coordination field strength [dBuV/m]
    double ecc_field_bandwidth_hz = 25e3;    // bandwidth the field strength refers to [Hz]
    double ebn0_required_db = 10.0;          // digital performance target [dB]
    std::optional<double> symbol_rate_hz{};  // empty: track the channel bandwidth [Hz]
    double sinad_db = 12.0;                  // analog degradation floor [dB], must be > 0
    double signal_to_distortion_db = 20.0;   // [dB]
    double polarization_relaxation_db = 3.0; // circular-to-linear mismatch credit [dB]
    double reference_bandwidth_hz = 4e3;     // bandwidth the masks are expressed in [Hz]
};

void validate(const CriteriaParams& params);

// A labelled intermediate of a budget chain, kept so every step of a derived
// limit can be inspected and recomputed.
struct NamedValue {
    std::string name;
    double value;
    std::string unit;
    std::string tag;  // short derivation-step id, unique within a report section
};

// Maximum tolerable interference for one criterion and one receiving role,
// together with the chain that produced it.
struct CriterionLimit {
    Criterion criterion = Criterion::ItuIN;
    StationRole role = StationRole::Base;
    DecibelQuantity i_max;  // always carries a reference bandwidth
    std::vector<NamedValue> intermediates;
};

// Interference ceiling from the interference-to-noise rule: margin below the
// noise floor, relaxed by the polarization mismatch, re-expressed in the
// reference bandwidth.
CriterionLimit in_interference_limit(const DecibelQuantity& noise,
                                     const CriteriaParams& params, StationRole role);

// Coordination field strength converted to a PFD ceiling in the reference
// bandwidth (polarization relaxation is applied at mask level).
DecibelQuantity ecc_pfd_threshold(const CriteriaParams& params);

// Minimum EIRP of a transmitter: min power through its antenna net of feeder loss.
double min_eirp(const StationProfile& tx);  // [dBW]

// Weakest carrier a receiver must still demodulate: min EIRP across the
// terrestrial path into the receive antenna and feeder.
double sensitivity(const StationProfile& tx, const StationProfile& rx,
                   double path_loss_db);  // [dBW]

// Carrier-to-noise-plus-interference a digital receiver needs:
// Eb/N0 + 10*log10(2*Rs/B).
double required_cnir_digital(double ebn0_db, double symbol_rate_hz,
                             double bandwidth_hz);  // [dB]

// Carrier-to-interference a digital receiver needs once the thermal floor is
// spent: 1/(1/zeta_d - N/C) in the linear domain. Throws InfeasibleBudget
// when C/N does not even reach zeta_d.
double required_ci_digital(double c_min_dbw, const DecibelQuantity& noise,
                           double zeta_d_db);  // [dB]

// Analog counterpart with the SINAD floor and distortion share:
// 1/(1/(zeta_a - 1) - (N/C + D/C)) in the linear domain.
double required_ci_analog(double c_min_dbw, const DecibelQuantity& noise,
                          double sinad_db, double c_over_d_db);  // [dB]

// I_max = C_min / required C/I, per the noise's channel bandwidth.
DecibelQuantity digital_interference_limit(double c_min_dbw, const DecibelQuantity& noise,
                                           double zeta_d_db);
DecibelQuantity analog_interference_limit(double c_min_dbw, const DecibelQuantity& noise,
                                          double sinad_db, double c_over_d_db);

// Stricter of the digital and analog ceilings, relaxed by the polarization
// mismatch. Both inputs must share a reference bandwidth.
DecibelQuantity combined_ci_limit(const DecibelQuantity& digital,
                                  const DecibelQuantity& analog,
                                  double polarization_db);

}  // namespace vdemask
