#pragma once
// Dense grid sweeps over premise space with per-variant power-delta stats.

#include "dualtv/comparison.hpp"

#include <array>
#include <cstddef>

namespace dualtv {

// Premise dimensions, in fixed row-major sweep order.
enum class Dim { F1 = 0, C1 = 1, F2 = 2, C2 = 3 };
inline constexpr std::size_t kDimCount = 4;

std::string_view to_string(Dim dim);
Dim parse_dim(std::string_view name);

struct SweepConfig {
    RuleKind rule = RuleKind::Deduction;
    std::vector<PlnVariant> variants;
    double grid_step = 0.05;
    double k = 0.5;
    // One entry per Dim; a value pins the dimension, nullopt sweeps it.
    std::array<std::optional<double>, kDimCount> pins{};
    std::optional<TermProbabilities> terms;  // pinned; full variants only
};

// Throws UsageError unless: grid_step divides 1 into whole steps (1e-9
// slack), at least one dimension is swept, pins lie in [0,1], k > 0,
// variants are unique and defined for the rule, terms appear exactly when a
// full variant is requested, and the grid stays below a practical size cap.
void validate(const SweepConfig& cfg);

// Inclusive-endpoint axis 0, 1/n, ..., 1 for grid_step = 1/n.
std::vector<double> grid_axis(double grid_step);

struct VariantStats {
    double mean_abs_power_delta = 0.0;
    double max_abs_power_delta = 0.0;
    // Premises (f1, c1, f2, c2) of the first grid point attaining the max;
    // all zero when every point was skipped.
    std::array<double, kDimCount> argmax_point{};
};

struct SweepSummary {
    std::size_t count = 0;    // grid points visited (product of axis sizes)
    std::size_t skipped = 0;  // points where a requested variant was singular
    std::map<PlnVariant, VariantStats> per_variant;
};

struct SweepResult {
    std::vector<ComparisonRecord> records;  // grid order, singular points omitted
    SweepSummary summary;
};

// Deterministic: the grid is walked row-major over (f1, c1, f2, c2) and the
// summary accumulates in that order, so identical configs produce identical
// records and summaries.
SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace dualtv
