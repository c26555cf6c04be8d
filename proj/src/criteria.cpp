#include "vdemask/criteria.hpp"

#include <cmath>
#include <sstream>

namespace vdemask {

std::string to_string(StationRole role) {
    return role == StationRole::Base ? "base" : "mobile";
}

std::string to_string(Modulation mod) {
    return mod == Modulation::Digital ? "digital" : "analog";
}

std::string to_string(Criterion criterion) {
    switch (criterion) {
        case Criterion::ItuIN: return "ITU I/N";
        case Criterion::EccField: return "ECC field strength";
        case Criterion::ItuCI: return "ITU C/I";
    }
    return "?";
}

void validate(const StationProfile& station) {
    if (!(station.tx_power_min_w > 0.0) || !(station.tx_power_typical_w > 0.0)) {
        throw DomainError("transmit powers must be positive");
    }
    if (station.tx_power_min_w > station.tx_power_typical_w) {
        throw DomainError("minimum transmit power exceeds typical power");
    }
    if (!(station.feeder_loss_db >= 0.0)) {
        throw DomainError("feeder loss must be non-negative");
    }
    if (!(station.channel_bandwidth_hz > 0.0)) {
        throw DomainError("channel bandwidth must be positive");
    }
    if (!(station.antenna_height_m >= 0.0)) {
        throw DomainError("antenna height must be non-negative");
    }
}

void validate(const CriteriaParams& params) {
    if (!(params.reference_bandwidth_hz > 0.0)) {
        throw DomainError("reference bandwidth must be positive");
    }
    if (!(params.ecc_field_bandwidth_hz > 0.0)) {
        throw DomainError("field-strength bandwidth must be positive");
    }
    if (params.symbol_rate_hz.has_value() && !(*params.symbol_rate_hz > 0.0)) {
        throw DomainError("symbol rate must be positive");
    }
    // The analog budget divides by zeta_a - 1 in the linear domain.
    if (!(params.sinad_db > 0.0)) {
        throw DomainError("SINAD must exceed 0 dB");
    }
}

CriterionLimit in_interference_limit(const DecibelQuantity& noise,
                                     const CriteriaParams& params, StationRole role) {
    if (!noise.ref_bandwidth_hz().has_value()) {
        throw DomainError("noise level must carry its channel bandwidth");
    }
    const DecibelQuantity per_channel = noise + ratio_db(params.in_margin_db);
    const DecibelQuantity relaxed = per_channel + ratio_db(params.polarization_relaxation_db);
    const DecibelQuantity per_reference = rebandwidth(relaxed, params.reference_bandwidth_hz);

    const std::string channel_unit = "dBW/" + bandwidth_label(*noise.ref_bandwidth_hz());
    CriterionLimit limit;
    limit.criterion = Criterion::ItuIN;
    limit.role = role;
    limit.i_max = per_reference;
    limit.intermediates = {
        {"interference limit per channel", per_channel.value(), channel_unit, "I/N"},
        {"after polarization relaxation", relaxed.value(), channel_unit, "I/N+pol"},
        {"per reference bandwidth", per_reference.value(),
         "dBW/" + bandwidth_label(params.reference_bandwidth_hz), "I/N@ref"},
    };
    return limit;
}

DecibelQuantity ecc_pfd_threshold(const CriteriaParams& params) {
    const DecibelQuantity field(params.ecc_field_dbuv_per_m, UnitKind::FieldDBuVPerM,
                                params.ecc_field_bandwidth_hz);
    return field_strength_to_pfd(rebandwidth(field, params.reference_bandwidth_hz));
}

double min_eirp(const StationProfile& tx) {
    validate(tx);
    return to_db(tx.tx_power_min_w) + tx.antenna_gain_dbi - tx.feeder_loss_db;
}

double sensitivity(const StationProfile& tx, const StationProfile& rx,
                   double path_loss_db) {
    if (!(path_loss_db > 0.0)) {
        throw DomainError("path loss must be positive, got " +
                          std::to_string(path_loss_db) + " dB");
    }
    return min_eirp(tx) - path_loss_db + rx.antenna_gain_dbi - rx.feeder_loss_db;
}

double required_cnir_digital(double ebn0_db, double symbol_rate_hz, double bandwidth_hz) {
    if (!(symbol_rate_hz > 0.0) || !(bandwidth_hz > 0.0)) {
        throw DomainError("symbol rate and bandwidth must be positive");
    }
    return ebn0_db + 10.0 * std::log10(2.0 * symbol_rate_hz / bandwidth_hz);
}

namespace {

[[noreturn]] void throw_infeasible(const char* scenario, double shortfall_db) {
    std::ostringstream msg;
    msg << "infeasible " << scenario << " budget: the required carrier ratio exceeds "
        << "the interference-free link by " << shortfall_db
        << " dB; no interference allowance exists";
    throw InfeasibleBudget(msg.str(), shortfall_db);
}

}  // namespace

double required_ci_digital(double c_min_dbw, const DecibelQuantity& noise,
                           double zeta_d_db) {
    const double cn_lin = from_db(c_min_dbw - noise.value());
    const double zeta_d_lin = from_db(zeta_d_db);
    const double budget = 1.0 / zeta_d_lin - 1.0 / cn_lin;
    if (!(budget > 0.0)) {
        throw_infeasible("digital", zeta_d_db - (c_min_dbw - noise.value()));
    }
    return to_db(1.0 / budget);
}

double required_ci_analog(double c_min_dbw, const DecibelQuantity& noise,
                          double sinad_db, double c_over_d_db) {
    const double sinad_lin = from_db(sinad_db);
    if (!(sinad_lin > 1.0)) {
        throw DomainError("SINAD must exceed 0 dB");
    }
    const double cn_lin = from_db(c_min_dbw - noise.value());
    const double spend = 1.0 / cn_lin + from_db(-c_over_d_db);  // N/C + D/C
    const double budget = 1.0 / (sinad_lin - 1.0) - spend;
    if (!(budget > 0.0)) {
        // Shortfall: how far the noise-plus-distortion spend overdraws the
        // SINAD allowance, as a dB factor.
        throw_infeasible("analog", to_db(spend * (sinad_lin - 1.0)));
    }
    return to_db(1.0 / budget);
}

DecibelQuantity digital_interference_limit(double c_min_dbw, const DecibelQuantity& noise,
                                           double zeta_d_db) {
    const double ci = required_ci_digital(c_min_dbw, noise, zeta_d_db);
    return DecibelQuantity(c_min_dbw - ci, UnitKind::PowerDBW, noise.ref_bandwidth_hz());
}

DecibelQuantity analog_interference_limit(double c_min_dbw, const DecibelQuantity& noise,
                                          double sinad_db, double c_over_d_db) {
    const double ci = required_ci_analog(c_min_dbw, noise, sinad_db, c_over_d_db);
    return DecibelQuantity(c_min_dbw - ci, UnitKind::PowerDBW, noise.ref_bandwidth_hz());
}

DecibelQuantity combined_ci_limit(const DecibelQuantity& digital,
                                  const DecibelQuantity& analog,
                                  double polarization_db) {
    if (digital.ref_bandwidth_hz() != analog.ref_bandwidth_hz()) {
        throw DomainError("combined limit requires matching reference bandwidths");
    }
    if (digital.kind() != analog.kind()) {
        throw DomainError("combined limit requires matching unit kinds");
    }
    const DecibelQuantity stricter = digital.value() <= analog.value() ? digital : analog;
    return stricter + ratio_db(polarization_db);
}

}  // namespace vdemask
