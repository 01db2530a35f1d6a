#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "otto/cycle.hpp"
#include "otto/thermo.hpp"

namespace otto::sweep {

enum class Parameter { LambdaCold, LambdaHot, THot, TCold, LevelN };

enum class Quantity {
    Work,
    QHot,
    QColdOut,
    Efficiency,
    Mode,
    EnergyGapShift,   // E_n(lambda_hot) - E_n(lambda_cold)
    PopulationShift,  // P_n(t_hot, lambda_hot) - P_n(t_cold, lambda_cold)
    GapRatio,         // (E_{n+1} - E_n) / E_0 at lambda_hot
};

std::string_view name(Parameter p);
std::string_view name(Quantity q);
std::optional<Parameter> parse_parameter(std::string_view s);
std::optional<Quantity> parse_quantity(std::string_view s);

struct Axis {
    Parameter parameter;
    std::vector<double> values;

    /// count points from lo to hi inclusive; endpoints are exact.
    static Axis range(Parameter parameter, double lo, double hi, std::size_t count);
    static Axis list(Parameter parameter, std::vector<double> values);
};

struct SweepSpec {
    std::vector<Axis> axes;  // first axis is the outer loop
    std::map<Parameter, double> fixed;
    std::vector<Quantity> quantities;
    thermo::TruncationPolicy policy{};

    /// Throws DomainError on any structural or parameter-domain problem.
    void validate() const;
    std::size_t row_count() const;
};

struct NotApplicable {
    bool operator==(const NotApplicable&) const = default;
};

using Cell = std::variant<double, cycle::OperationMode, NotApplicable>;

enum class RowStatus { Ok, TruncationFailure };

std::string_view name(RowStatus s);

struct SweepRow {
    std::vector<double> axis_values;
    std::vector<Cell> cells;  // one per requested quantity
    RowStatus status = RowStatus::Ok;

    bool operator==(const SweepRow&) const = default;
};

struct SweepTable {
    std::vector<std::string> columns;  // axis names, quantity names, "status"
    std::vector<SweepRow> rows;
    SweepSpec provenance;
};

/// Evaluates every grid point. Rows are independent; with workers > 1 they
/// are computed concurrently but always emitted in grid order. workers == 0
/// uses the hardware concurrency.
SweepTable sweep_grid(const SweepSpec& spec, unsigned workers = 0);

}  // namespace otto::sweep
