#include "dualtv/sweep.hpp"

#include <cmath>
#include <string>

namespace dualtv {

namespace {

// Keeps a fat-fingered step from exhausting memory with records.
constexpr unsigned long long kMaxGridPoints = 10'000'000ULL;

long grid_steps(double grid_step) {
    if (!std::isfinite(grid_step) || grid_step <= 0.0 || grid_step > 1.0) {
        throw UsageError("grid_step must be in (0,1], got " + std::to_string(grid_step));
    }
    const double ratio = 1.0 / grid_step;
    const long n = std::lround(ratio);
    if (n < 1 || std::fabs(ratio - static_cast<double>(n)) > 1e-9) {
        throw UsageError("grid_step " + std::to_string(grid_step) +
                         " does not divide 1 into a whole number of steps");
    }
    return n;
}

}  // namespace

std::string_view to_string(Dim dim) {
    switch (dim) {
        case Dim::F1: return "f1";
        case Dim::C1: return "c1";
        case Dim::F2: return "f2";
        case Dim::C2: return "c2";
    }
    throw UsageError("unknown dimension");
}

Dim parse_dim(std::string_view name) {
    if (name == "f1") return Dim::F1;
    if (name == "c1") return Dim::C1;
    if (name == "f2") return Dim::F2;
    if (name == "c2") return Dim::C2;
    throw UsageError("unknown dimension '" + std::string(name) + "' (expected f1|c1|f2|c2)");
}

std::vector<double> grid_axis(double grid_step) {
    const long n = grid_steps(grid_step);
    std::vector<double> axis(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        axis[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(n);
    }
    return axis;
}

void validate(const SweepConfig& cfg) {
    const long n = grid_steps(cfg.grid_step);
    if (!std::isfinite(cfg.k) || cfg.k <= 0.0) {
        throw UsageError("k must be finite and > 0, got " + std::to_string(cfg.k));
    }
    bool any_swept = false;
    unsigned long long points = 1;
    for (std::size_t d = 0; d < kDimCount; ++d) {
        if (cfg.pins[d].has_value()) {
            const double v = *cfg.pins[d];
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw UsageError("pinned " + std::string(to_string(static_cast<Dim>(d))) +
                                 " must be in [0,1], got " + std::to_string(v));
            }
        } else {
            any_swept = true;
            points *= static_cast<unsigned long long>(n) + 1;
        }
    }
    if (!any_swept) {
        throw UsageError("at least one of f1, c1, f2, c2 must be swept");
    }
    if (points > kMaxGridPoints) {
        throw UsageError("grid has " + std::to_string(points) + " points, above the cap of " +
                         std::to_string(kMaxGridPoints));
    }
    bool any_full = false;
    for (std::size_t i = 0; i < cfg.variants.size(); ++i) {
        if (!variant_valid_for(cfg.rule, cfg.variants[i])) {
            throw UsageError("variant '" + std::string(to_string(cfg.variants[i])) +
                             "' is not defined for rule '" +
                             std::string(to_string(cfg.rule)) + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (cfg.variants[j] == cfg.variants[i]) {
                throw UsageError("variant '" + std::string(to_string(cfg.variants[i])) +
                                 "' requested twice");
            }
        }
        any_full = any_full || variant_needs_terms(cfg.variants[i]);
    }
    if (any_full && !cfg.terms.has_value()) {
        throw UsageError("term probabilities are required by a requested full variant");
    }
    if (!any_full && cfg.terms.has_value()) {
        throw UsageError("term probabilities were given but no requested variant consumes them");
    }
}

SweepResult run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<double> axis = grid_axis(cfg.grid_step);
    std::array<std::vector<double>, kDimCount> values;
    for (std::size_t d = 0; d < kDimCount; ++d) {
        values[d] = cfg.pins[d].has_value() ? std::vector<double>{*cfg.pins[d]} : axis;
    }

    SweepResult out;
    out.summary.count =
        values[0].size() * values[1].size() * values[2].size() * values[3].size();
    out.records.reserve(out.summary.count);

    struct Accum {
        double sum = 0.0;
        double max = -1.0;
        std::array<double, kDimCount> arg{};
        std::size_t n = 0;
    };
    std::map<PlnVariant, Accum> acc;
    for (PlnVariant v : cfg.variants) acc.emplace(v, Accum{});

    for (double f1 : values[0]) {
        for (double c1 : values[1]) {
            for (double f2 : values[2]) {
                for (double c2 : values[3]) {
                    try {
                        ComparisonRecord rec =
                            compare_point(cfg.rule, TruthValue{f1, c1}, TruthValue{f2, c2},
                                          cfg.k, cfg.variants, cfg.terms);
                        for (auto& [variant, a] : acc) {
                            const double d = rec.abs_power_delta.at(variant);
                            a.sum += d;
                            a.n += 1;
                            if (d > a.max) {
                                a.max = d;
                                a.arg = {f1, c1, f2, c2};
                            }
                        }
                        out.records.push_back(std::move(rec));
                    } catch (const SingularityError&) {
                        ++out.summary.skipped;
                    }
                }
            }
        }
    }

    for (const auto& [variant, a] : acc) {
        VariantStats st;
        if (a.n > 0) {
            st.mean_abs_power_delta = a.sum / static_cast<double>(a.n);
            st.max_abs_power_delta = a.max;
            st.argmax_point = a.arg;
        }
        out.summary.per_variant.emplace(variant, st);
    }
    return out;
}

}  // namespace dualtv
