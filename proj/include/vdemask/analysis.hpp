#pragma once

#include <span>
#include <vector>

#include "vdemask/compliance.hpp"
#include "vdemask/mask.hpp"
#include "vdemask/propagation.hpp"
#include "vdemask/scenario.hpp"

namespace vdemask {

// One modulation's leg of the carrier-to-interference budget on one link
// direction (the transmitter is the opposite role).
struct LinkBudgetLeg {
    double eirp_dbw;        // transmitter minimum EIRP [dBW]
    double c_min_dbw;       // received sensitivity [dBW]
    double cn_db;           // C_min over the noise floor [dB]
    double required_ci_db;  // interference ratio the budget leaves room for [dB]
    DecibelQuantity i_max;  // per channel bandwidth
};

// Everything one receiving role contributes to the three criteria.
struct RoleBudget {
    StationRole rx_role;
    DecibelQuantity noise;  // kTB in the receive channel
    CriterionLimit in_limit;  // per reference bandwidth
    double zeta_d_db;         // digital C/(N+I) requirement
    LinkBudgetLeg digital;
    LinkBudgetLeg analog;
    CriterionLimit ci_limit;  // per channel; i_max = min(digital, analog) + polarization
};

struct BudgetBreakdown {
    double system_temp_dbk;
    double horizon_base_m;
    double horizon_mobile_m;
    PathBudget path;                // at the sum of the two horizon distances
    DecibelQuantity ecc_field_ref;  // coordination field strength per reference bandwidth
    DecibelQuantity ecc_threshold;  // its PFD equivalent
    RoleBudget mobile_rx;
    RoleBudget base_rx;
};

// Runs the whole criteria pipeline for a scenario. Throws InfeasibleBudget if
// a C/I budget does not close.
BudgetBreakdown compute_budget(const ScenarioConfig& config);

// Restate a limit in another reference bandwidth, keeping the chain inspectable.
CriterionLimit rebandwidth(const CriterionLimit& limit, double target_bandwidth_hz);

struct MaskSet {
    std::vector<double> grid_deg;
    std::vector<std::pair<Criterion, PfdMask>> envelopes;  // in, ecc, ci order
};

// Per-role masks for a criterion, in the scenario's reference bandwidth.
std::vector<PfdMask> role_masks(const ScenarioConfig& config,
                                const BudgetBreakdown& budget, Criterion criterion,
                                std::span<const double> grid_deg);

// Envelope (pointwise minimum over roles) for each selected criterion.
MaskSet build_masks(const ScenarioConfig& config, std::span<const Criterion> selection);

}  // namespace vdemask
