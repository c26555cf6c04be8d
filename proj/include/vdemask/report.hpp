#pragma once

#include <string>

#include "vdemask/analysis.hpp"

namespace vdemask {

// Aligned text table of every intermediate of the three criteria chains,
// tagged with its derivation step. Deterministic row order and formatting.
std::string render_budget_report(const BudgetBreakdown& budget,
                                 const ScenarioConfig& config);

}  // namespace vdemask
