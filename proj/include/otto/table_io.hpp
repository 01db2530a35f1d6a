#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "otto/cycle.hpp"
#include "otto/sweep.hpp"

namespace otto::io {

inline constexpr int kDefaultPrecision = 17;

// CSV dialect: ',' separator, '.' decimal point, '\n' line endings, header
// row always present, "NA" for not-applicable cells. Numbers use %.{p}g, so
// the default 17 significant digits re-parse to the identical double.

std::string format_number(double value, int precision = kDefaultPrecision);

/// Value after printing at `precision` digits and parsing back.
double round_to_precision(double value, int precision);

std::string format_cell(const sweep::Cell& cell, int precision = kDefaultPrecision);

void write_csv(std::ostream& out, const sweep::SweepTable& table, int precision = kDefaultPrecision);

nlohmann::ordered_json to_json(const sweep::SweepTable& table, int precision = kDefaultPrecision);
nlohmann::ordered_json to_json(const sweep::SweepSpec& spec);
nlohmann::ordered_json to_json(const cycle::CycleOutcome& outcome, int precision = kDefaultPrecision);

}  // namespace otto::io
