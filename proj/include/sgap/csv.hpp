#pragma once

#include "sgap/box_dimension.hpp"
#include "sgap/geometry.hpp"
#include "sgap/language.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sgap {

// CSV output: '.' decimal separator, shortest round-trip formatting, LF line
// endings. Independent of the global locale.

std::string format_double(double value);
double parse_double(const std::string& text);

struct PressureRow {
    std::size_t n = 0;
    double t = 0.0;
    double sum_lower = 0.0;
    std::optional<double> pressure_lower;
    double sum_upper = 0.0;
    std::optional<double> pressure_upper;
};

struct LanguageRow {
    std::size_t n = 0;
    Count language = 0;
    Count core = 0;
};

void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_point_cloud_csv(std::istream& in);

void write_box_counts_csv(std::ostream& out, const BoxCountSeries& series);
BoxCountSeries read_box_counts_csv(std::istream& in);

void write_pressure_csv(std::ostream& out, const std::vector<PressureRow>& rows);
std::vector<PressureRow> read_pressure_csv(std::istream& in);

void write_language_csv(std::ostream& out, const std::vector<LanguageRow>& rows);
std::vector<LanguageRow> read_language_csv(std::istream& in);

}  // namespace sgap
