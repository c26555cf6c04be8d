#include "vdemask/units.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace vdemask {

namespace {

bool same_band(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() && b.has_value()) return *a == *b;
    return true;  // a missing band is compatible with anything
}

std::optional<double> merged_band(const std::optional<double>& a,
                                  const std::optional<double>& b) {
    return a.has_value() ? a : b;
}

[[noreturn]] void reject_band_mismatch(const std::optional<double>& a,
                                       const std::optional<double>& b) {
    throw DomainError("reference bandwidth mismatch: " + std::to_string(*a) +
                      " Hz vs " + std::to_string(*b) + " Hz");
}

}  // namespace

std::string to_string(UnitKind kind) {
    switch (kind) {
        case UnitKind::Ratio: return "dB";
        case UnitKind::PowerDBW: return "dBW";
        case UnitKind::PfdDBWPerM2: return "dBW/m^2";
        case UnitKind::GainDBi: return "dBi";
        case UnitKind::TemperatureDBK: return "dBK";
        case UnitKind::FieldDBuVPerM: return "dBuV/m";
    }
    return "dB?";
}

DecibelQuantity::DecibelQuantity(double value, UnitKind kind,
                                 std::optional<double> ref_bandwidth_hz)
    : value_(value), kind_(kind), ref_bandwidth_hz_(ref_bandwidth_hz) {
    if (ref_bandwidth_hz_.has_value() && !(*ref_bandwidth_hz_ > 0.0)) {
        throw DomainError("reference bandwidth must be positive, got " +
                          std::to_string(*ref_bandwidth_hz_) + " Hz");
    }
}

DecibelQuantity ratio_db(double value_db) {
    return DecibelQuantity(value_db, UnitKind::Ratio);
}

double to_db(double linear_ratio) {
    if (!(linear_ratio > 0.0)) {
        throw DomainError("to_db requires a positive linear ratio, got " +
                          std::to_string(linear_ratio));
    }
    return 10.0 * std::log10(linear_ratio);
}

double from_db(double value_db) {
    return std::pow(10.0, value_db / 10.0);
}

DecibelQuantity operator+(const DecibelQuantity& a, const DecibelQuantity& b) {
    if (!a.is_ratio() && !b.is_ratio()) {
        throw DomainError("cannot add two absolute dB kinds (" + to_string(a.kind()) +
                          " + " + to_string(b.kind()) + ")");
    }
    if (!same_band(a.ref_bandwidth_hz(), b.ref_bandwidth_hz())) {
        reject_band_mismatch(a.ref_bandwidth_hz(), b.ref_bandwidth_hz());
    }
    const UnitKind kind = a.is_ratio() ? b.kind() : a.kind();
    return DecibelQuantity(a.value() + b.value(), kind,
                           merged_band(a.ref_bandwidth_hz(), b.ref_bandwidth_hz()));
}

DecibelQuantity operator-(const DecibelQuantity& a, const DecibelQuantity& b) {
    if (!same_band(a.ref_bandwidth_hz(), b.ref_bandwidth_hz())) {
        reject_band_mismatch(a.ref_bandwidth_hz(), b.ref_bandwidth_hz());
    }
    if (b.is_ratio()) {
        return DecibelQuantity(a.value() - b.value(), a.kind(), a.ref_bandwidth_hz());
    }
    if (a.kind() == b.kind()) {
        // Difference of two like levels is a plain factor; the band cancels.
        return ratio_db(a.value() - b.value());
    }
    throw DomainError("cannot subtract " + to_string(b.kind()) + " from " +
                      to_string(a.kind()));
}

DecibelQuantity rebandwidth(const DecibelQuantity& level, double target_bandwidth_hz) {
    if (!level.ref_bandwidth_hz().has_value()) {
        throw DomainError("rebandwidth requires a level with a reference bandwidth");
    }
    if (!(target_bandwidth_hz > 0.0)) {
        throw DomainError("rebandwidth target must be positive, got " +
                          std::to_string(target_bandwidth_hz) + " Hz");
    }
    const double shift = 10.0 * std::log10(*level.ref_bandwidth_hz() / target_bandwidth_hz);
    return DecibelQuantity(level.value() - shift, level.kind(), target_bandwidth_hz);
}

std::string bandwidth_label(double bandwidth_hz) {
    char buf[48];
    if (bandwidth_hz >= 1e3) {
        const double khz = bandwidth_hz / 1e3;
        if (khz == static_cast<double>(static_cast<long long>(khz))) {
            std::snprintf(buf, sizeof(buf), "%lld kHz", static_cast<long long>(khz));
        } else {
            std::snprintf(buf, sizeof(buf), "%g kHz", khz);
        }
    } else {
        std::snprintf(buf, sizeof(buf), "%g Hz", bandwidth_hz);
    }
    return buf;
}

DecibelQuantity field_strength_to_pfd(const DecibelQuantity& field) {
    if (field.kind() != UnitKind::FieldDBuVPerM) {
        throw DomainError("field_strength_to_pfd expects dBuV/m, got " +
                          to_string(field.kind()));
    }
    // E[dBuV/m] - 120 is the level in dBV/m; dividing by the 120*pi ohm
    // plane-wave impedance yields W/m^2.
    const double impedance_db = 10.0 * std::log10(120.0 * std::numbers::pi);
    return DecibelQuantity(field.value() - 120.0 - impedance_db,
                           UnitKind::PfdDBWPerM2, field.ref_bandwidth_hz());
}

}  // namespace vdemask
