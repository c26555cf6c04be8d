#include "vdemask/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace vdemask {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    std::string s(buf);
    if (s == "-0." + std::string(static_cast<std::size_t>(decimals), '0')) {
        s.erase(s.begin());  // avoid "-0.00"
    }
    return s;
}

class Table {
public:
    explicit Table(std::ostringstream& out) : out_(out) {}

    void section(const std::string& title) {
        out_ << "\n" << title << "\n";
        out_ << std::string(title.size(), '-') << "\n";
    }

    void row(const std::string& name, double value, const std::string& unit,
             const std::string& tag) {
        out_ << "  " << std::left << std::setw(34) << name << std::right
             << std::setw(12) << fixed(value, 2) << "  " << std::left << std::setw(14)
             << unit << "[" << tag << "]\n";
    }

    void rows(const std::vector<NamedValue>& values) {
        for (const NamedValue& v : values) {
            row(v.name, v.value, v.unit, v.tag);
        }
    }

private:
    std::ostringstream& out_;
};

}  // namespace

std::string render_budget_report(const BudgetBreakdown& budget,
                                 const ScenarioConfig& config) {
    std::ostringstream out;
    out << "vdemask budget report\n";
    out << "frequency: " << fixed(config.environment.frequency_hz / 1e6, 3) << " MHz, "
        << "reference bandwidth: " << bandwidth_label(config.criteria.reference_bandwidth_hz)
        << "\n";

    Table table(out);

    table.section("Noise");
    table.row("system noise temperature", budget.system_temp_dbk, "dBK", "T-sum");

    table.section("Terrestrial path");
    table.row("horizon distance, base", budget.horizon_base_m / 1e3, "km", "horizon-b");
    table.row("horizon distance, mobile", budget.horizon_mobile_m / 1e3, "km",
              "horizon-m");
    table.row("link distance", budget.path.distance_m / 1e3, "km", "d");
    table.row("free-space loss", budget.path.free_space_loss_db, "dB", "FSL");
    table.row("excess path loss", budget.path.excess_loss_db, "dB", "excess");
    table.row("total path loss", budget.path.total_loss_db, "dB", "L-total");

    table.section("ECC field-strength criterion");
    table.row("coordination field strength", budget.ecc_field_ref.value(),
              "dBuV/m/" + bandwidth_label(*budget.ecc_field_ref.ref_bandwidth_hz()),
              "E@ref");
    table.row("PFD threshold", budget.ecc_threshold.value(),
              "dBW/m^2/" + bandwidth_label(*budget.ecc_threshold.ref_bandwidth_hz()),
              "E->PFD");

    for (const RoleBudget* role : {&budget.mobile_rx, &budget.base_rx}) {
        const std::string rx = to_string(role->rx_role);
        const std::string tx =
            to_string(role->rx_role == StationRole::Base ? StationRole::Mobile
                                                         : StationRole::Base);
        table.section("ITU I/N limit, " + rx + " receiver");
        table.rows(role->in_limit.intermediates);

        table.section("ITU C/I limit, " + rx + " receiver (" + tx + " transmitter)");
        table.rows(role->ci_limit.intermediates);
    }

    return out.str();
}

}  // namespace vdemask
