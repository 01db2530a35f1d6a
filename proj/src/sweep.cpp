#include "otto/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <set>
#include <thread>

#include "otto/errors.hpp"
#include "otto/spectrum.hpp"

namespace otto::sweep {

namespace {

constexpr std::array<std::pair<Parameter, std::string_view>, 5> kParameterNames{{
    {Parameter::LambdaCold, "lambda_cold"},
    {Parameter::LambdaHot, "lambda_hot"},
    {Parameter::THot, "t_hot"},
    {Parameter::TCold, "t_cold"},
    {Parameter::LevelN, "level_n"},
}};

constexpr std::array<std::pair<Quantity, std::string_view>, 8> kQuantityNames{{
    {Quantity::Work, "work"},
    {Quantity::QHot, "q_hot"},
    {Quantity::QColdOut, "q_cold_out"},
    {Quantity::Efficiency, "efficiency"},
    {Quantity::Mode, "mode"},
    {Quantity::EnergyGapShift, "energy_gap_shift"},
    {Quantity::PopulationShift, "population_shift"},
    {Quantity::GapRatio, "gap_ratio"},
}};

bool needs_cycle(Quantity q) {
    return q == Quantity::Work || q == Quantity::QHot || q == Quantity::QColdOut || q == Quantity::Efficiency ||
           q == Quantity::Mode;
}

std::vector<Parameter> required_parameters(Quantity q) {
    using P = Parameter;
    switch (q) {
        case Quantity::Work:
        case Quantity::QHot:
        case Quantity::QColdOut:
        case Quantity::Efficiency:
        case Quantity::Mode: return {P::LambdaCold, P::LambdaHot, P::THot, P::TCold};
        case Quantity::EnergyGapShift: return {P::LambdaCold, P::LambdaHot, P::LevelN};
        case Quantity::PopulationShift: return {P::LambdaCold, P::LambdaHot, P::THot, P::TCold, P::LevelN};
        case Quantity::GapRatio: return {P::LambdaHot, P::LevelN};
    }
    return {};
}

void check_value(Parameter p, double v) {
    const bool finite = std::isfinite(v);
    switch (p) {
        case Parameter::LambdaCold:
        case Parameter::LambdaHot:
            if (!finite || v < 0.0) {
                throw DomainError(std::string(name(p)) + " values must be finite and >= 0");
            }
            break;
        case Parameter::THot:
        case Parameter::TCold:
            if (!finite || v <= 0.0) {
                throw DomainError(std::string(name(p)) + " values must be finite and > 0");
            }
            break;
        case Parameter::LevelN:
            if (!finite || v < 0.0 || v != std::floor(v) || v > 9.0e15) {
                throw DomainError("level_n values must be non-negative integers");
            }
            break;
    }
}

// Values a parameter takes over the grid: its axis values or its fixed value.
std::vector<double> parameter_values(const SweepSpec& spec, Parameter p) {
    for (const auto& axis : spec.axes) {
        if (axis.parameter == p) {
            return axis.values;
        }
    }
    if (auto it = spec.fixed.find(p); it != spec.fixed.end()) {
        return {it->second};
    }
    return {};
}

struct Point {
    double lambda_cold = 0.0;
    double lambda_hot = 0.0;
    double t_hot = 0.0;
    double t_cold = 0.0;
    spectrum::Level level = 0;

    void set(Parameter p, double v) {
        switch (p) {
            case Parameter::LambdaCold: lambda_cold = v; break;
            case Parameter::LambdaHot: lambda_hot = v; break;
            case Parameter::THot: t_hot = v; break;
            case Parameter::TCold: t_cold = v; break;
            case Parameter::LevelN: level = static_cast<spectrum::Level>(v); break;
        }
    }
};

SweepRow evaluate_row(const SweepSpec& spec, std::size_t index) {
    SweepRow row;
    Point pt;
    for (const auto& [p, v] : spec.fixed) {
        pt.set(p, v);
    }
    // mixed-radix decomposition, last axis fastest
    std::vector<std::size_t> digits(spec.axes.size());
    std::size_t rest = index;
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
        digits[k] = rest % spec.axes[k].values.size();
        rest /= spec.axes[k].values.size();
    }
    for (std::size_t k = 0; k < spec.axes.size(); ++k) {
        const double v = spec.axes[k].values[digits[k]];
        row.axis_values.push_back(v);
        pt.set(spec.axes[k].parameter, v);
    }

    const bool want_cycle = std::any_of(spec.quantities.begin(), spec.quantities.end(), needs_cycle);
    try {
        std::optional<cycle::CycleOutcome> outcome;
        if (want_cycle) {
            outcome = cycle::run_cycle(cycle::OttoParams{pt.lambda_cold, pt.lambda_hot, pt.t_cold, pt.t_hot,
                                                         spec.policy});
        }
        for (Quantity q : spec.quantities) {
            switch (q) {
                case Quantity::Work: row.cells.emplace_back(outcome->work); break;
                case Quantity::QHot: row.cells.emplace_back(outcome->q_hot); break;
                case Quantity::QColdOut: row.cells.emplace_back(outcome->q_cold_out); break;
                case Quantity::Efficiency:
                    if (outcome->efficiency) {
                        row.cells.emplace_back(*outcome->efficiency);
                    } else {
                        row.cells.emplace_back(NotApplicable{});
                    }
                    break;
                case Quantity::Mode: row.cells.emplace_back(outcome->mode); break;
                case Quantity::EnergyGapShift:
                    row.cells.emplace_back(spectrum::energy(pt.level, pt.lambda_hot) -
                                           spectrum::energy(pt.level, pt.lambda_cold));
                    break;
                case Quantity::PopulationShift: {
                    const thermo::GibbsState hot(pt.lambda_hot, pt.t_hot, spec.policy);
                    const thermo::GibbsState cold(pt.lambda_cold, pt.t_cold, spec.policy);
                    row.cells.emplace_back(hot.population(pt.level) - cold.population(pt.level));
                    break;
                }
                case Quantity::GapRatio: row.cells.emplace_back(spectrum::gap_ratio(pt.level, pt.lambda_hot)); break;
            }
        }
    } catch (const TruncationError&) {
        row.status = RowStatus::TruncationFailure;
        row.cells.assign(spec.quantities.size(), NotApplicable{});
    }
    return row;
}

}  // namespace

std::string_view name(Parameter p) {
    for (const auto& [k, v] : kParameterNames) {
        if (k == p) return v;
    }
    return "?";
}

std::string_view name(Quantity q) {
    for (const auto& [k, v] : kQuantityNames) {
        if (k == q) return v;
    }
    return "?";
}

std::string_view name(RowStatus s) { return s == RowStatus::Ok ? "ok" : "truncation_failure"; }

std::optional<Parameter> parse_parameter(std::string_view s) {
    for (const auto& [k, v] : kParameterNames) {
        if (v == s) return k;
    }
    return std::nullopt;
}

std::optional<Quantity> parse_quantity(std::string_view s) {
    for (const auto& [k, v] : kQuantityNames) {
        if (v == s) return k;
    }
    return std::nullopt;
}

Axis Axis::range(Parameter parameter, double lo, double hi, std::size_t count) {
    if (count < 2) {
        throw DomainError("axis point count must be >= 2");
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw DomainError("axis range needs finite lo < hi");
    }
    Axis axis{parameter, {}};
    axis.values.reserve(count);
    const double steps = static_cast<double>(count - 1);
    for (std::size_t i = 0; i + 1 < count; ++i) {
        axis.values.push_back(lo + (hi - lo) * static_cast<double>(i) / steps);
    }
    axis.values.push_back(hi);
    return axis;
}

Axis Axis::list(Parameter parameter, std::vector<double> values) { return Axis{parameter, std::move(values)}; }

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2) {
        throw DomainError("a sweep needs one or two axes");
    }
    if (quantities.empty()) {
        throw DomainError("a sweep needs at least one quantity");
    }
    policy.validate();

    std::set<Parameter> seen;
    for (const auto& axis : axes) {
        if (axis.values.size() < 2) {
            throw DomainError("axis " + std::string(name(axis.parameter)) + " needs at least 2 points");
        }
        if (!seen.insert(axis.parameter).second) {
            throw DomainError("duplicate axis " + std::string(name(axis.parameter)));
        }
        if (fixed.count(axis.parameter) != 0) {
            throw DomainError(std::string(name(axis.parameter)) + " is both an axis and fixed");
        }
        for (double v : axis.values) {
            check_value(axis.parameter, v);
        }
    }
    for (const auto& [p, v] : fixed) {
        check_value(p, v);
    }

    bool temperatures_used = false;
    for (Quantity q : quantities) {
        for (Parameter p : required_parameters(q)) {
            if (parameter_values(*this, p).empty()) {
                throw DomainError("quantity " + std::string(name(q)) + " needs parameter " +
                                  std::string(name(p)));
            }
            temperatures_used = temperatures_used || p == Parameter::THot;
        }
    }
    if (temperatures_used) {
        const auto hot = parameter_values(*this, Parameter::THot);
        const auto cold = parameter_values(*this, Parameter::TCold);
        if (*std::min_element(hot.begin(), hot.end()) <= *std::max_element(cold.begin(), cold.end())) {
            throw DomainError("every t_hot on the grid must exceed every t_cold");
        }
    }
}

std::size_t SweepSpec::row_count() const {
    std::size_t n = 1;
    for (const auto& axis : axes) {
        n *= axis.values.size();
    }
    return n;
}

SweepTable sweep_grid(const SweepSpec& spec, unsigned workers) {
    spec.validate();

    SweepTable table;
    table.provenance = spec;
    for (const auto& axis : spec.axes) {
        table.columns.emplace_back(name(axis.parameter));
    }
    for (Quantity q : spec.quantities) {
        table.columns.emplace_back(name(q));
    }
    table.columns.emplace_back("status");

    const std::size_t n_rows = spec.row_count();
    table.rows.resize(n_rows);

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_rows));

    if (workers <= 1) {
        for (std::size_t i = 0; i < n_rows; ++i) {
            table.rows[i] = evaluate_row(spec, i);
        }
        return table;
    }

    // Strided assignment; each slot is written by exactly one worker.
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < n_rows; i += workers) {
                        table.rows[i] = evaluate_row(spec, i);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return table;
}

}  // namespace otto::sweep
