#pragma once

#include <optional>
#include <string>

#include "vdemask/errors.hpp"

namespace vdemask {

// What a dB value is relative to. Ratio is a plain dB factor; the others are
// absolute levels and may not be added to one another.
enum class UnitKind {
    Ratio,          // dB
    PowerDBW,       // dBW
    PfdDBWPerM2,    // dBW/m^2
    GainDBi,        // dBi
    TemperatureDBK, // dBK
    FieldDBuVPerM,  // dBuV/m
};

std::string to_string(UnitKind kind);

// A dB-denominated value tagged with its unit kind and, for spectral
// quantities, the reference bandwidth it is expressed in. The tag makes
// unit mixing a hard error instead of a silent bug.
class DecibelQuantity {
public:
    DecibelQuantity() = default;
    DecibelQuantity(double value, UnitKind kind,
                    std::optional<double> ref_bandwidth_hz = std::nullopt);

    double value() const { return value_; }
    UnitKind kind() const { return kind_; }
    std::optional<double> ref_bandwidth_hz() const { return ref_bandwidth_hz_; }

    bool is_ratio() const { return kind_ == UnitKind::Ratio; }

private:
    double value_ = 0.0;  // [dB...]
    UnitKind kind_ = UnitKind::Ratio;
    std::optional<double> ref_bandwidth_hz_{};
};

// Plain dB factor, the only kind that combines additively with everything.
DecibelQuantity ratio_db(double value_db);

// 10*log10(x); x must be a positive linear power ratio.
double to_db(double linear_ratio);

// 10^(x/10); inverse of to_db.
double from_db(double value_db);

// absolute + ratio -> absolute, ratio + ratio -> ratio; two absolute kinds reject.
DecibelQuantity operator+(const DecibelQuantity& a, const DecibelQuantity& b);

// absolute - ratio -> absolute; absolute - absolute (same kind, same band) -> ratio.
DecibelQuantity operator-(const DecibelQuantity& a, const DecibelQuantity& b);

// Re-express a banded level in a different reference bandwidth:
// value' = value - 10*log10(B1/B2). Kind is unchanged.
DecibelQuantity rebandwidth(const DecibelQuantity& level, double target_bandwidth_hz);

// Field strength [dBuV/m] -> power flux density [dBW/m^2] through the
// free-space plane-wave impedance of 120*pi ohms; reference bandwidth carries over.
DecibelQuantity field_strength_to_pfd(const DecibelQuantity& field);

// "15 kHz" / "2.5 kHz" / "250 Hz" for display and CSV headers.
std::string bandwidth_label(double bandwidth_hz);

}  // namespace vdemask
