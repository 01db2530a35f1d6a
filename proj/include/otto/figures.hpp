#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "otto/sweep.hpp"

namespace otto::sweep {

enum class FigureId { Fig2, Fig4, Fig5, Fig6, Fig7, Fig8, Fig9, Fig10, Fig11 };

std::string_view name(FigureId id);
std::optional<FigureId> parse_figure(std::string_view s);
const std::vector<FigureId>& all_figures();

// Grids behind each figure. All cycle figures use t_hot = 1, t_cold = 0.1
// except fig8, which sweeps t_hot. Ranges:
//   fig2         level_n 0..7 x lambda_hot [0, 10] (101)           gap_ratio
//   fig4, fig5   level_n 0..7 x lambda_hot [0, 5] (51), lambda_cold = 0.5
//   fig6, fig9   lambda_cold {0.1, 0.3, 0.5, 1.0} x lambda_hot [0.01, 10] (200)
//   fig7, fig10  lambda_cold x lambda_hot over [0.01, 10]^2 (50 x 50)
//   fig8         lambda_hot {0.15, 0.2, 0.25} x t_hot [0.2, 3] (57), lambda_cold = 0.1
//   fig11        lambda_hot [0.01, 10] (200), lambda_cold = 0.1
SweepSpec figure_spec(FigureId id, const thermo::TruncationPolicy& policy = {});

SweepTable figure_dataset(FigureId id, const thermo::TruncationPolicy& policy = {}, unsigned workers = 0);

}  // namespace otto::sweep
