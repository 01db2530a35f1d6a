#include <cmath>
#include <variant>

#include "doctest.h"
#include "otto/errors.hpp"
#include "otto/figures.hpp"
#include "otto/sweep.hpp"

using namespace otto::sweep;
using otto::cycle::OperationMode;

namespace {

double num(const Cell& c) { return std::get<double>(c); }

SweepSpec cycle_spec(std::vector<Axis> axes, std::map<Parameter, double> fixed, std::vector<Quantity> qs) {
    SweepSpec s;
    s.axes = std::move(axes);
    s.fixed = std::move(fixed);
    s.quantities = std::move(qs);
    return s;
}

}  // namespace

TEST_CASE("names round-trip") {
    for (auto p : {Parameter::LambdaCold, Parameter::LambdaHot, Parameter::THot, Parameter::TCold, Parameter::LevelN}) {
        CHECK(parse_parameter(name(p)) == p);
    }
    for (auto q : {Quantity::Work, Quantity::QHot, Quantity::QColdOut, Quantity::Efficiency, Quantity::Mode,
                   Quantity::EnergyGapShift, Quantity::PopulationShift, Quantity::GapRatio}) {
        CHECK(parse_quantity(name(q)) == q);
    }
    CHECK_FALSE(parse_parameter("lambda").has_value());
    CHECK_FALSE(parse_quantity("power").has_value());
    for (auto f : all_figures()) {
        CHECK(parse_figure(name(f)) == f);
    }
    CHECK_FALSE(parse_figure("fig3").has_value());
}

TEST_CASE("axis construction") {
    const auto a = Axis::range(Parameter::LambdaHot, 0.1, 5.0, 50);
    CHECK(a.values.size() == 50);
    CHECK(a.values.front() == 0.1);
    CHECK(a.values.back() == 5.0);
    const auto two = Axis::range(Parameter::LambdaHot, 0.3, 0.7, 2);
    CHECK(two.values == std::vector<double>{0.3, 0.7});
    CHECK_THROWS_AS(Axis::range(Parameter::LambdaHot, 0.1, 5.0, 1), otto::DomainError);
}

TEST_CASE("one-axis sweep below the transition") {
    const auto spec = cycle_spec({Axis::range(Parameter::LambdaHot, 0.1, 5.0, 50)},
                                 {{Parameter::LambdaCold, 0.1}, {Parameter::THot, 1.0}, {Parameter::TCold, 0.1}},
                                 {Quantity::Work, Quantity::Mode});
    const auto t = sweep_grid(spec);
    REQUIRE(t.rows.size() == 50);
    CHECK(t.columns == std::vector<std::string>{"lambda_hot", "work", "mode", "status"});
    CHECK(std::abs(num(t.rows[0].cells[0])) <= 1e-12);
    CHECK(std::get<OperationMode>(t.rows[0].cells[1]) == OperationMode::Dissipator);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        CHECK(num(t.rows[i].cells[0]) > 0.0);
        CHECK(std::get<OperationMode>(t.rows[i].cells[1]) == OperationMode::Engine);
        CHECK(t.rows[i].status == RowStatus::Ok);
    }
}

TEST_CASE("two-axis sweep: antisymmetric sign and null diagonal") {
    const auto spec = cycle_spec(
        {Axis::range(Parameter::LambdaCold, 0.1, 3.0, 20), Axis::range(Parameter::LambdaHot, 0.1, 3.0, 20)},
        {{Parameter::THot, 1.0}, {Parameter::TCold, 0.1}}, {Quantity::Work});
    const auto t = sweep_grid(spec);
    REQUIRE(t.rows.size() == 400);
    for (std::size_t i = 0; i < 20; ++i) {
        for (std::size_t j = 0; j < 20; ++j) {
            const auto& row = t.rows[i * 20 + j];
            CHECK(row.axis_values[0] == spec.axes[0].values[i]);
            CHECK(row.axis_values[1] == spec.axes[1].values[j]);
            const double w = num(row.cells[0]);
            if (i == j) {
                CHECK(std::abs(w) <= 1e-12);
            } else if (j > i) {
                CHECK(w > 0.0);
            } else {
                CHECK(w < 0.0);
            }
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    const auto spec = cycle_spec(
        {Axis::range(Parameter::LambdaCold, 0.05, 4.0, 13), Axis::range(Parameter::LambdaHot, 0.05, 9.0, 17)},
        {{Parameter::THot, 1.0}, {Parameter::TCold, 0.1}},
        {Quantity::Work, Quantity::QHot, Quantity::QColdOut, Quantity::Efficiency, Quantity::Mode});
    const auto serial = sweep_grid(spec, 1);
    for (unsigned w : {2u, 3u, 8u, 0u}) {
        const auto parallel = sweep_grid(spec, w);
        CHECK(parallel.rows == serial.rows);
    }
}

TEST_CASE("spec validation") {
    const std::map<Parameter, double> temps{{Parameter::THot, 1.0}, {Parameter::TCold, 0.1}};
    auto good = cycle_spec({Axis::range(Parameter::LambdaHot, 0.1, 1.0, 3)},
                           {{Parameter::LambdaCold, 0.1}, {Parameter::THot, 1.0}, {Parameter::TCold, 0.1}},
                           {Quantity::Work});
    CHECK_NOTHROW(good.validate());

    auto no_axes = good;
    no_axes.axes.clear();
    CHECK_THROWS_AS(no_axes.validate(), otto::DomainError);

    auto three = good;
    three.axes = {Axis::range(Parameter::LambdaHot, 0.1, 1.0, 3), Axis::range(Parameter::LambdaCold, 0.1, 1.0, 3),
                  Axis::range(Parameter::THot, 1.0, 2.0, 3)};
    CHECK_THROWS_AS(three.validate(), otto::DomainError);

    auto missing = good;
    missing.fixed.erase(Parameter::LambdaCold);
    CHECK_THROWS_AS(missing.validate(), otto::DomainError);

    auto hot_cold = good;
    hot_cold.fixed[Parameter::TCold] = 2.0;
    CHECK_THROWS_AS(hot_cold.validate(), otto::DomainError);

    auto neg = good;
    neg.axes = {Axis::list(Parameter::LambdaHot, {0.1, -0.2})};
    CHECK_THROWS_AS(neg.validate(), otto::DomainError);

    auto level = good;
    level.quantities = {Quantity::GapRatio};
    level.axes = {Axis::list(Parameter::LevelN, {0.0, 1.5})};
    level.fixed[Parameter::LambdaHot] = 1.0;
    CHECK_THROWS_AS(level.validate(), otto::DomainError);

    auto nothing = good;
    nothing.quantities.clear();
    CHECK_THROWS_AS(nothing.validate(), otto::DomainError);

    CHECK_THROWS_AS(sweep_grid(hot_cold), otto::DomainError);
}

TEST_CASE("truncation failures are recorded per row") {
    auto spec = cycle_spec({Axis::list(Parameter::THot, {0.5, 50.0})},
                           {{Parameter::LambdaCold, 0.0}, {Parameter::LambdaHot, 0.01}, {Parameter::TCold, 0.1}},
                           {Quantity::Work, Quantity::Mode});
    spec.policy.n_max = 40;
    const auto t = sweep_grid(spec, 2);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].status == RowStatus::Ok);
    CHECK(t.rows[1].status == RowStatus::TruncationFailure);
    CHECK(std::holds_alternative<NotApplicable>(t.rows[1].cells[0]));
    CHECK(std::holds_alternative<NotApplicable>(t.rows[1].cells[1]));
}

TEST_CASE("fig2: gap ratio") {
    const auto t = figure_dataset(FigureId::Fig2);
    CHECK(t.rows.size() == 8 * 101);
    for (const auto& row : t.rows) {
        const double n = row.axis_values[0];
        const double l = row.axis_values[1];
        if (l == 0.0) {
            CHECK(num(row.cells[0]) == doctest::Approx(2.0).epsilon(1e-15));
        }
        // grows with n at positive curvature
        if (l > 0.0 && n > 0) {
            const auto& prev = t.rows[(static_cast<std::size_t>(n) - 1) * 101 + static_cast<std::size_t>(std::lround(l * 10))];
            CHECK(num(row.cells[0]) > num(prev.cells[0]));
        }
    }
}

TEST_CASE("fig4: energy gap shift") {
    const auto t = figure_dataset(FigureId::Fig4);
    for (const auto& row : t.rows) {
        const double l = row.axis_values[1];
        const double shift = num(row.cells[0]);
        if (l == 0.5) {
            CHECK(shift == 0.0);
        } else if (l > 0.5) {
            CHECK(shift > 0.0);
        } else {
            CHECK(shift < 0.0);
        }
    }
}

TEST_CASE("fig5: population shift shrinks with level") {
    const auto t = figure_dataset(FigureId::Fig5);
    const std::size_t per_level = 51;
    for (std::size_t j = 0; j < per_level; ++j) {
        if (t.rows[j].axis_values[1] < 0.5) continue;
        for (std::size_t n = 1; n <= 5; ++n) {
            CAPTURE(n);
            CAPTURE(t.rows[j].axis_values[1]);
            CHECK(std::abs(num(t.rows[n * per_level + j].cells[0])) <
                  std::abs(num(t.rows[(n - 1) * per_level + j].cells[0])));
        }
    }
}

TEST_CASE("fig9 and fig10: efficiency bounded by Carnot") {
    for (auto id : {FigureId::Fig9, FigureId::Fig10}) {
        const auto t = figure_dataset(id);
        for (const auto& row : t.rows) {
            const auto mode = std::get<OperationMode>(row.cells[1]);
            if (mode == OperationMode::Engine) {
                CHECK(num(row.cells[0]) <= 0.9 + 1e-12);
                CHECK(num(row.cells[0]) > 0.0);
            } else {
                CHECK(std::holds_alternative<NotApplicable>(row.cells[0]));
            }
        }
    }
}

TEST_CASE("fig9: efficiency rises with hot curvature while the engine runs") {
    const auto t = figure_dataset(FigureId::Fig9);
    const std::size_t per_family = 200;
    for (std::size_t f = 0; f < 4; ++f) {
        double prev = -1.0;
        for (std::size_t j = 0; j < per_family; ++j) {
            const auto& row = t.rows[f * per_family + j];
            if (std::get<OperationMode>(row.cells[1]) != OperationMode::Engine) continue;
            CHECK(num(row.cells[0]) >= prev);
            prev = num(row.cells[0]);
        }
    }
}

TEST_CASE("fig11: q_hot changes sign between 7.0 and 7.5") {
    const auto t = figure_dataset(FigureId::Fig11);
    REQUIRE(t.columns == std::vector<std::string>{"lambda_hot", "q_hot", "q_cold_out", "work", "mode", "status"});
    int flips = 0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const double a = num(t.rows[i - 1].cells[0]);
        const double b = num(t.rows[i].cells[0]);
        if (a > 0.0 && b <= 0.0) {
            ++flips;
            CHECK(t.rows[i - 1].axis_values[0] >= 7.0);
            CHECK(t.rows[i].axis_values[0] <= 7.5);
        }
        // energy balance in every row
        CHECK(num(t.rows[i].cells[2]) == doctest::Approx(num(t.rows[i].cells[0]) - num(t.rows[i].cells[1])));
    }
    CHECK(flips == 1);
}
