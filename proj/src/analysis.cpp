#include "vdemask/analysis.hpp"

#include <algorithm>

namespace vdemask {

namespace {

LinkBudgetLeg make_leg(const StationProfile& tx, const StationProfile& rx,
                       double path_loss_db, const DecibelQuantity& noise,
                       const CriteriaParams& params, double zeta_d_db) {
    LinkBudgetLeg leg;
    leg.eirp_dbw = min_eirp(tx);
    leg.c_min_dbw = sensitivity(tx, rx, path_loss_db);
    leg.cn_db = leg.c_min_dbw - noise.value();
    if (tx.modulation == Modulation::Digital) {
        leg.required_ci_db = required_ci_digital(leg.c_min_dbw, noise, zeta_d_db);
    } else {
        leg.required_ci_db = required_ci_analog(leg.c_min_dbw, noise, params.sinad_db,
                                                params.signal_to_distortion_db);
    }
    leg.i_max = DecibelQuantity(leg.c_min_dbw - leg.required_ci_db, UnitKind::PowerDBW,
                                noise.ref_bandwidth_hz());
    return leg;
}

RoleBudget make_role_budget(const ScenarioConfig& config, StationRole rx_role,
                            double system_temp_dbk, double path_loss_db) {
    const StationRole tx_role =
        rx_role == StationRole::Base ? StationRole::Mobile : StationRole::Base;
    const StationConfig& rx_cfg = station_config(config, rx_role);
    const StationConfig& tx_cfg = station_config(config, tx_role);

    RoleBudget budget;
    budget.rx_role = rx_role;
    budget.noise = noise_power(system_temp_dbk, rx_cfg.channel_bandwidth_hz);
    budget.in_limit = in_interference_limit(budget.noise, config.criteria, rx_role);
    budget.zeta_d_db = required_cnir_digital(
        config.criteria.ebn0_required_db,
        resolved_symbol_rate(config.criteria, rx_cfg.channel_bandwidth_hz),
        rx_cfg.channel_bandwidth_hz);

    const StationProfile rx = station_profile(rx_cfg, rx_role, Modulation::Digital);
    budget.digital = make_leg(station_profile(tx_cfg, tx_role, Modulation::Digital), rx,
                              path_loss_db, budget.noise, config.criteria,
                              budget.zeta_d_db);
    budget.analog = make_leg(station_profile(tx_cfg, tx_role, Modulation::Analog), rx,
                             path_loss_db, budget.noise, config.criteria,
                             budget.zeta_d_db);

    budget.ci_limit.criterion = Criterion::ItuCI;
    budget.ci_limit.role = rx_role;
    budget.ci_limit.i_max = combined_ci_limit(budget.digital.i_max, budget.analog.i_max,
                                              config.criteria.polarization_relaxation_db);
    const std::string channel_unit =
        "dBW/" + bandwidth_label(rx_cfg.channel_bandwidth_hz);
    budget.ci_limit.intermediates = {
        {"noise floor", budget.noise.value(), channel_unit, "kTB"},
        {"digital C/(N+I) requirement", budget.zeta_d_db, "dB", "C/(N+I) req"},
        {"digital EIRP (min)", budget.digital.eirp_dbw, "dBW", "EIRP-d"},
        {"digital sensitivity", budget.digital.c_min_dbw, "dBW", "Cmin-d"},
        {"digital C/N", budget.digital.cn_db, "dB", "C/N-d"},
        {"digital required C/I", budget.digital.required_ci_db, "dB", "C/I-d"},
        {"digital interference limit", budget.digital.i_max.value(), channel_unit,
         "Imax-d"},
        {"analog EIRP (min)", budget.analog.eirp_dbw, "dBW", "EIRP-a"},
        {"analog sensitivity", budget.analog.c_min_dbw, "dBW", "Cmin-a"},
        {"analog C/N", budget.analog.cn_db, "dB", "C/N-a"},
        {"analog required C/I", budget.analog.required_ci_db, "dB", "C/I-a"},
        {"analog interference limit", budget.analog.i_max.value(), channel_unit,
         "Imax-a"},
        {"combined with polarization", budget.ci_limit.i_max.value(), channel_unit,
         "min+pol"},
    };
    return budget;
}

}  // namespace

BudgetBreakdown compute_budget(const ScenarioConfig& config) {
    validate(config);

    BudgetBreakdown budget;
    budget.system_temp_dbk = system_noise_temperature(config.environment);
    budget.horizon_base_m = horizon_distance(config.base.antenna_height_m);
    budget.horizon_mobile_m = horizon_distance(config.mobile.antenna_height_m);
    budget.path = make_path_budget(budget.horizon_base_m + budget.horizon_mobile_m,
                                   config.environment.frequency_hz,
                                   config.excess_path_loss_db);
    budget.ecc_field_ref = rebandwidth(
        DecibelQuantity(config.criteria.ecc_field_dbuv_per_m, UnitKind::FieldDBuVPerM,
                        config.criteria.ecc_field_bandwidth_hz),
        config.criteria.reference_bandwidth_hz);
    budget.ecc_threshold = ecc_pfd_threshold(config.criteria);
    budget.mobile_rx = make_role_budget(config, StationRole::Mobile,
                                        budget.system_temp_dbk, budget.path.total_loss_db);
    budget.base_rx = make_role_budget(config, StationRole::Base, budget.system_temp_dbk,
                                      budget.path.total_loss_db);
    return budget;
}

CriterionLimit rebandwidth(const CriterionLimit& limit, double target_bandwidth_hz) {
    CriterionLimit out = limit;
    out.i_max = rebandwidth(limit.i_max, target_bandwidth_hz);
    out.intermediates.push_back({"per reference bandwidth", out.i_max.value(),
                                 "dBW/" + bandwidth_label(target_bandwidth_hz), "@ref"});
    return out;
}

std::vector<PfdMask> role_masks(const ScenarioConfig& config,
                                const BudgetBreakdown& budget, Criterion criterion,
                                std::span<const double> grid_deg) {
    const double lambda = wavelength(config.environment.frequency_hz);
    std::vector<PfdMask> masks;
    for (const RoleBudget* role : {&budget.base_rx, &budget.mobile_rx}) {
        const StationConfig& station = station_config(config, role->rx_role);
        const AntennaPattern pattern = antenna_pattern(station);
        switch (criterion) {
            case Criterion::ItuIN:
                masks.push_back(station_mask(role->in_limit, pattern,
                                             station.feeder_loss_db, lambda, grid_deg));
                break;
            case Criterion::EccField:
                masks.push_back(ecc_mask(budget.ecc_threshold, pattern,
                                         config.criteria.polarization_relaxation_db,
                                         grid_deg,
                                         "ECC " + to_string(role->rx_role)));
                break;
            case Criterion::ItuCI:
                masks.push_back(station_mask(
                    rebandwidth(role->ci_limit, config.criteria.reference_bandwidth_hz),
                    pattern, station.feeder_loss_db, lambda, grid_deg));
                break;
        }
    }
    return masks;
}

MaskSet build_masks(const ScenarioConfig& config, std::span<const Criterion> selection) {
    if (selection.empty()) {
        throw DomainError("mask selection must not be empty");
    }
    const BudgetBreakdown budget = compute_budget(config);

    MaskSet set;
    set.grid_deg = theta_grid(config.mask.theta_start_deg, config.mask.theta_end_deg,
                              config.mask.theta_step_deg);
    for (Criterion criterion :
         {Criterion::ItuIN, Criterion::EccField, Criterion::ItuCI}) {
        if (std::find(selection.begin(), selection.end(), criterion) == selection.end()) {
            continue;
        }
        const std::vector<PfdMask> masks =
            role_masks(config, budget, criterion, set.grid_deg);
        set.envelopes.emplace_back(criterion, compose_min(masks));
    }
    return set;
}

}  // namespace vdemask
