#include "otto/figures.hpp"

#include <array>
#include <utility>

#include "otto/errors.hpp"

namespace otto::sweep {

namespace {

constexpr std::array<std::pair<FigureId, std::string_view>, 9> kFigureNames{{
    {FigureId::Fig2, "fig2"},
    {FigureId::Fig4, "fig4"},
    {FigureId::Fig5, "fig5"},
    {FigureId::Fig6, "fig6"},
    {FigureId::Fig7, "fig7"},
    {FigureId::Fig8, "fig8"},
    {FigureId::Fig9, "fig9"},
    {FigureId::Fig10, "fig10"},
    {FigureId::Fig11, "fig11"},
}};

constexpr double kTHot = 1.0;
constexpr double kTCold = 0.1;

const std::vector<double> kColdFamilies{0.1, 0.3, 0.5, 1.0};
const std::vector<double> kFig8HotCurvatures{0.15, 0.2, 0.25};

}  // namespace

std::string_view name(FigureId id) {
    for (const auto& [k, v] : kFigureNames) {
        if (k == id) return v;
    }
    return "?";
}

std::optional<FigureId> parse_figure(std::string_view s) {
    for (const auto& [k, v] : kFigureNames) {
        if (v == s) return k;
    }
    return std::nullopt;
}

const std::vector<FigureId>& all_figures() {
    static const std::vector<FigureId> ids = [] {
        std::vector<FigureId> out;
        for (const auto& [k, v] : kFigureNames) out.push_back(k);
        return out;
    }();
    return ids;
}

SweepSpec figure_spec(FigureId id, const thermo::TruncationPolicy& policy) {
    using P = Parameter;
    using Q = Quantity;
    SweepSpec spec;
    spec.policy = policy;
    const std::map<Parameter, double> temps{{P::THot, kTHot}, {P::TCold, kTCold}};

    switch (id) {
        case FigureId::Fig2:
            spec.axes = {Axis::range(P::LevelN, 0, 7, 8), Axis::range(P::LambdaHot, 0, 10, 101)};
            spec.quantities = {Q::GapRatio};
            break;
        case FigureId::Fig4:
            spec.axes = {Axis::range(P::LevelN, 0, 7, 8), Axis::range(P::LambdaHot, 0, 5, 51)};
            spec.fixed = {{P::LambdaCold, 0.5}};
            spec.quantities = {Q::EnergyGapShift};
            break;
        case FigureId::Fig5:
            spec.axes = {Axis::range(P::LevelN, 0, 7, 8), Axis::range(P::LambdaHot, 0, 5, 51)};
            spec.fixed = temps;
            spec.fixed[P::LambdaCold] = 0.5;
            spec.quantities = {Q::PopulationShift};
            break;
        case FigureId::Fig6:
            spec.axes = {Axis::list(P::LambdaCold, kColdFamilies), Axis::range(P::LambdaHot, 0.01, 10, 200)};
            spec.fixed = temps;
            spec.quantities = {Q::Work, Q::Mode};
            break;
        case FigureId::Fig7:
            spec.axes = {Axis::range(P::LambdaCold, 0.01, 10, 50), Axis::range(P::LambdaHot, 0.01, 10, 50)};
            spec.fixed = temps;
            spec.quantities = {Q::Work};
            break;
        case FigureId::Fig8:
            spec.axes = {Axis::list(P::LambdaHot, kFig8HotCurvatures), Axis::range(P::THot, 0.2, 3, 57)};
            spec.fixed = {{P::LambdaCold, 0.1}, {P::TCold, kTCold}};
            spec.quantities = {Q::Work};
            break;
        case FigureId::Fig9:
            spec.axes = {Axis::list(P::LambdaCold, kColdFamilies), Axis::range(P::LambdaHot, 0.01, 10, 200)};
            spec.fixed = temps;
            spec.quantities = {Q::Efficiency, Q::Mode};
            break;
        case FigureId::Fig10:
            spec.axes = {Axis::range(P::LambdaCold, 0.01, 10, 50), Axis::range(P::LambdaHot, 0.01, 10, 50)};
            spec.fixed = temps;
            spec.quantities = {Q::Efficiency, Q::Mode};
            break;
        case FigureId::Fig11:
            spec.axes = {Axis::range(P::LambdaHot, 0.01, 10, 200)};
            spec.fixed = temps;
            spec.fixed[P::LambdaCold] = 0.1;
            spec.quantities = {Q::QHot, Q::QColdOut, Q::Work, Q::Mode};
            break;
        default: throw DomainError("unknown figure id");
    }
    return spec;
}

SweepTable figure_dataset(FigureId id, const thermo::TruncationPolicy& policy, unsigned workers) {
    return sweep_grid(figure_spec(id, policy), workers);
}

}  // namespace otto::sweep
