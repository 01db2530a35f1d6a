#include "otto/table_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "otto/errors.hpp"

namespace otto::io {

namespace {

void check_precision(int precision) {
    if (precision < 1 || precision > 17) {
        throw DomainError("print precision must be in [1, 17]");
    }
}

nlohmann::ordered_json number_json(double v, int precision) { return round_to_precision(v, precision); }

}  // namespace

std::string format_number(double value, int precision) {
    check_precision(precision);
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return std::string(buf, static_cast<std::size_t>(n));
}

double round_to_precision(double value, int precision) {
    if (precision == kDefaultPrecision) {
        return value;
    }
    return std::strtod(format_number(value, precision).c_str(), nullptr);
}

std::string format_cell(const sweep::Cell& cell, int precision) {
    if (const auto* v = std::get_if<double>(&cell)) {
        return format_number(*v, precision);
    }
    if (const auto* m = std::get_if<cycle::OperationMode>(&cell)) {
        return std::string(cycle::to_string(*m));
    }
    return "NA";
}

void write_csv(std::ostream& out, const sweep::SweepTable& table, int precision) {
    check_precision(precision);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        bool first = true;
        for (double v : row.axis_values) {
            out << (first ? "" : ",") << format_number(v, precision);
            first = false;
        }
        for (const auto& cell : row.cells) {
            out << ',' << format_cell(cell, precision);
        }
        out << ',' << sweep::name(row.status) << '\n';
    }
}

nlohmann::ordered_json to_json(const sweep::SweepSpec& spec) {
    nlohmann::ordered_json j;
    auto& axes = j["axes"] = nlohmann::ordered_json::array();
    for (const auto& axis : spec.axes) {
        axes.push_back({{"parameter", sweep::name(axis.parameter)}, {"values", axis.values}});
    }
    auto& fixed = j["fixed"] = nlohmann::ordered_json::object();
    for (const auto& [p, v] : spec.fixed) {
        fixed[std::string(sweep::name(p))] = v;
    }
    auto& qs = j["quantities"] = nlohmann::ordered_json::array();
    for (auto q : spec.quantities) {
        qs.push_back(sweep::name(q));
    }
    j["rel_tol"] = spec.policy.rel_tol;
    j["n_max"] = spec.policy.n_max;
    return j;
}

nlohmann::ordered_json to_json(const sweep::SweepTable& table, int precision) {
    check_precision(precision);
    nlohmann::ordered_json j;
    j["columns"] = table.columns;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double v : row.axis_values) {
            r.push_back(number_json(v, precision));
        }
        for (const auto& cell : row.cells) {
            if (const auto* v = std::get_if<double>(&cell)) {
                r.push_back(number_json(*v, precision));
            } else if (const auto* m = std::get_if<cycle::OperationMode>(&cell)) {
                r.push_back(cycle::to_string(*m));
            } else {
                r.push_back(nullptr);
            }
        }
        r.push_back(sweep::name(row.status));
        rows.push_back(std::move(r));
    }
    j["provenance"] = to_json(table.provenance);
    return j;
}

nlohmann::ordered_json to_json(const cycle::CycleOutcome& o, int precision) {
    check_precision(precision);
    nlohmann::ordered_json j;
    j["q_hot"] = number_json(o.q_hot, precision);
    j["q_cold_out"] = number_json(o.q_cold_out, precision);
    j["work"] = number_json(o.work, precision);
    j["efficiency"] = o.efficiency ? number_json(*o.efficiency, precision) : nlohmann::ordered_json(nullptr);
    j["cop"] = o.cop ? number_json(*o.cop, precision) : nlohmann::ordered_json(nullptr);
    j["mode"] = cycle::to_string(o.mode);
    j["n_levels"] = o.n_levels;
    return j;
}

}  // namespace otto::io
