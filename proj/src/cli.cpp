#include "vdemask/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "vdemask/analysis.hpp"
#include "vdemask/csv.hpp"
#include "vdemask/report.hpp"
#include "vdemask/svg.hpp"

namespace vdemask {

namespace {

ScenarioConfig load_scenario(const std::string& config_path) {
    if (!config_path.empty()) {
        return parse_config(config_path);
    }
    if (const char* env = std::getenv("VDEMASK_CONFIG"); env != nullptr && *env != '\0') {
        return parse_config(env);
    }
    return default_scenario();
}

std::vector<Criterion> parse_selection(const std::string& csv) {
    std::vector<Criterion> selection;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        Criterion criterion;
        if (item == "in") {
            criterion = Criterion::ItuIN;
        } else if (item == "ecc") {
            criterion = Criterion::EccField;
        } else if (item == "ci") {
            criterion = Criterion::ItuCI;
        } else {
            throw ConfigValueError("unknown criterion '" + item +
                                   "' (expected in, ecc or ci)");
        }
        if (std::find(selection.begin(), selection.end(), criterion) == selection.end()) {
            selection.push_back(criterion);
        }
    }
    if (selection.empty()) {
        throw ConfigValueError("criteria selection must not be empty");
    }
    return selection;
}

std::string criterion_column(Criterion criterion) {
    switch (criterion) {
        case Criterion::ItuIN: return "pfd_itu_in";
        case Criterion::EccField: return "pfd_ecc";
        case Criterion::ItuCI: return "pfd_itu_ci";
    }
    return "pfd";
}

std::string criterion_series_label(Criterion criterion) {
    switch (criterion) {
        case Criterion::ItuIN: return "ITU I/N envelope";
        case Criterion::EccField: return "ECC envelope";
        case Criterion::ItuCI: return "ITU C/I envelope";
    }
    return "?";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigFileError("cannot write output file: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw ConfigFileError("error while writing output file: " + path);
    }
}

int run_budget(const std::string& config_path) {
    const ScenarioConfig config = load_scenario(config_path);
    const BudgetBreakdown budget = compute_budget(config);
    std::cout << render_budget_report(budget, config);
    return 0;
}

int run_mask(const std::string& config_path, const std::string& criteria_csv,
             const std::string& out_path, const std::string& svg_path,
             const std::string& reference_path, const std::string& gain_path) {
    const ScenarioConfig config = load_scenario(config_path);
    const std::vector<Criterion> selection = parse_selection(criteria_csv);
    const MaskSet set = build_masks(config, selection);

    std::vector<MaskSample> reference;
    if (!reference_path.empty()) {
        reference = load_curve_csv(reference_path);
    }

    std::ostringstream csv;
    std::optional<PfdMask> reference_mask;
    if (set.envelopes.size() == 1 && reference.empty()) {
        write_mask_csv(csv, set.envelopes.front().second);
    } else {
        std::vector<MaskColumn> columns;
        columns.reserve(set.envelopes.size() + 1);
        for (const auto& [criterion, mask] : set.envelopes) {
            columns.push_back({criterion_column(criterion), &mask});
        }
        if (!reference.empty()) {
            std::vector<MaskSample> resampled;
            resampled.reserve(set.grid_deg.size());
            try {
                for (double theta : set.grid_deg) {
                    resampled.push_back({theta, interpolate_curve(reference, theta)});
                }
            } catch (const DomainError&) {
                throw ConfigValueError("reference CSV does not cover the mask grid: " +
                                       reference_path);
            }
            reference_mask.emplace("reference", config.criteria.reference_bandwidth_hz,
                                   std::move(resampled));
            columns.push_back({"pfd_reference", &*reference_mask});
        }
        write_mask_table_csv(csv, set.grid_deg, columns);
    }
    write_file(out_path, csv.str());
    std::cout << "wrote " << out_path << " (" << set.grid_deg.size() << " rows)\n";

    if (!svg_path.empty()) {
        ChartSpec spec;
        spec.title = "Maximum allowed PFD vs elevation";
        spec.x_label = "elevation angle [deg]";
        spec.y_label = "PFD [dBW/m^2 per " +
                       bandwidth_label(config.criteria.reference_bandwidth_hz) + "]";
        for (const auto& [criterion, mask] : set.envelopes) {
            spec.series.push_back({criterion_series_label(criterion),
                                   {mask.samples().begin(), mask.samples().end()}});
        }
        if (!reference.empty()) {
            spec.series.push_back({"reference", reference});
        }
        write_file(svg_path, render_line_chart_svg(spec));
        std::cout << "wrote " << svg_path << "\n";
    }

    if (!gain_path.empty()) {
        std::ostringstream gain;
        write_gain_csv(gain, set.grid_deg, antenna_pattern(config.base),
                       antenna_pattern(config.mobile));
        write_file(gain_path, gain.str());
        std::cout << "wrote " << gain_path << " (" << set.grid_deg.size() << " rows)\n";
    }
    return 0;
}

int run_check(const std::string& config_path, const std::string& mask_csv,
              const std::string& criterion_name, double sat_eirp_dbw,
              double altitude_km, const std::string& margins_path) {
    if (!(altitude_km > 0.0)) {
        throw ConfigValueError("--altitude-km must be > 0");
    }
    const ScenarioConfig config = load_scenario(config_path);

    std::optional<PfdMask> mask;
    if (!mask_csv.empty()) {
        mask = load_mask_csv(mask_csv);
    } else if (!criterion_name.empty()) {
        const std::vector<Criterion> selection = parse_selection(criterion_name);
        if (selection.size() != 1) {
            throw ConfigValueError("--criterion takes exactly one of in, ecc, ci");
        }
        MaskSet set = build_masks(config, selection);
        mask = std::move(set.envelopes.front().second);
    } else {
        throw ConfigValueError("check requires either --mask or --criterion");
    }

    const SatelliteEmission emission{sat_eirp_dbw, altitude_km * 1e3};
    const ComplianceReport report = compliance_margin(*mask, emission);
    std::cout << (report.compliant ? "COMPLIANT" : "NON-COMPLIANT")
              << ": minimum margin " << format_fixed(report.min_margin_db)
              << " dB at theta = " << format_fixed(report.worst_theta_deg)
              << " deg (EIRP " << format_fixed(sat_eirp_dbw) << " dBW per "
              << bandwidth_label(mask->ref_bandwidth_hz()) << ", altitude "
              << format_fixed(altitude_km) << " km)\n";

    if (!margins_path.empty()) {
        std::ostringstream csv;
        write_margins_csv(csv, report, mask->ref_bandwidth_hz());
        write_file(margins_path, csv.str());
        std::cout << "wrote " << margins_path << " (" << report.per_theta.size()
                  << " rows)\n";
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Power flux density protection masks for VHF land mobile receivers",
                 "vdemask"};
    app.require_subcommand(1);

    std::string budget_config;
    CLI::App* budget = app.add_subcommand("budget",
                                          "Print the full interference budget table");
    budget->add_option("--config", budget_config,
                       "Scenario config file ($VDEMASK_CONFIG or built-in defaults "
                       "when omitted)");

    std::string mask_config;
    std::string criteria_csv = "in,ecc,ci";
    std::string out_path = "masks.csv";
    std::string svg_path;
    std::string reference_path;
    std::string gain_path;
    CLI::App* mask = app.add_subcommand("mask", "Derive PFD masks and write CSV/SVG");
    mask->add_option("--config", mask_config, "Scenario config file");
    mask->add_option("--criteria", criteria_csv,
                     "Comma-separated subset of in,ecc,ci")
        ->capture_default_str();
    mask->add_option("--out", out_path, "Mask CSV output path")->capture_default_str();
    mask->add_option("--svg", svg_path, "Also write an SVG chart to this path");
    mask->add_option("--reference", reference_path,
                     "Overlay curve CSV (theta_deg,pfd) to include for comparison");
    mask->add_option("--emit-gain", gain_path,
                     "Also write the two antenna gain curves as CSV to this path");

    std::string check_config;
    std::string mask_csv;
    std::string criterion_name;
    std::string margins_path;
    double sat_eirp_dbw = 0.0;
    double altitude_km = 0.0;
    CLI::App* check =
        app.add_subcommand("check", "Check a satellite emission against a PFD mask");
    check->add_option("--config", check_config, "Scenario config file");
    CLI::Option* mask_opt =
        check->add_option("--mask", mask_csv, "Mask CSV (single-mask format)");
    CLI::Option* criterion_opt = check->add_option(
        "--criterion", criterion_name, "Compute the mask inline: in, ecc or ci");
    mask_opt->excludes(criterion_opt);
    criterion_opt->excludes(mask_opt);
    check->add_option("--sat-eirp", sat_eirp_dbw,
                      "Satellite EIRP density [dBW per reference bandwidth]")
        ->required();
    check->add_option("--altitude-km", altitude_km, "Orbit altitude [km]")->required();
    check->add_option("--out", margins_path, "Write per-angle margins CSV to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (budget->parsed()) {
            return run_budget(budget_config);
        }
        if (mask->parsed()) {
            return run_mask(mask_config, criteria_csv, out_path, svg_path,
                            reference_path, gain_path);
        }
        return run_check(check_config, mask_csv, criterion_name, sat_eirp_dbw,
                         altitude_km, margins_path);
    } catch (const InfeasibleBudget& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace vdemask
