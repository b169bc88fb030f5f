#include "sgap/csv.hpp"

#include "sgap/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace sgap {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw std::logic_error("to_chars failed");
    return std::string(buf.data(), ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw InputError("malformed number '" + text + "'");
    }
    return value;
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

// Reads the header and returns the data rows split into fields.
std::vector<std::vector<std::string>> read_table(std::istream& in, const std::string& header) {
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw InputError("expected CSV header '" + header + "', got '" + line + "'");
    }
    const std::size_t width = split(header).size();
    std::vector<std::vector<std::string>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != width) {
            throw InputError("CSV line " + std::to_string(lineno) + ": expected " +
                             std::to_string(width) + " fields");
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::uint64_t parse_unsigned(const std::string& text) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw InputError("malformed integer '" + text + "'");
    }
    return value;
}

Count parse_count(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("malformed count '" + text + "'");
    }
    return Count(text.c_str());
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::optional<double> parse_optional(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_double(text);
}

constexpr const char* pressure_header = "n,t,sum_lower,pressure_lower,sum_upper,pressure_upper";
constexpr const char* box_header = "r,N,ln_inv_r,ln_N";
constexpr const char* language_header = "n,language_count,core_count";

}  // namespace

void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud) {
    out << (cloud.dimension == 2 ? "x,y" : "x") << '\n';
    for (const Point& p : cloud.points) {
        out << format_double(p.real());
        if (cloud.dimension == 2) out << ',' << format_double(p.imag());
        out << '\n';
    }
}

PointCloud read_point_cloud_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || (header != "x" && header != "x,y")) {
        throw InputError("expected point-cloud header 'x' or 'x,y'");
    }
    PointCloud cloud;
    cloud.dimension = header == "x" ? 1 : 2;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line);
        if (static_cast<int>(fields.size()) != cloud.dimension) {
            throw InputError("point-cloud row has the wrong number of coordinates");
        }
        cloud.points.emplace_back(parse_double(fields[0]),
                                  cloud.dimension == 2 ? parse_double(fields[1]) : 0.0);
    }
    return cloud;
}

void write_box_counts_csv(std::ostream& out, const BoxCountSeries& series) {
    out << box_header << '\n';
    for (const auto& e : series.entries) {
        out << format_double(e.scale) << ',' << std::to_string(e.occupied) << ','
            << format_double(-std::log(e.scale)) << ','
            << format_double(std::log(static_cast<double>(e.occupied))) << '\n';
    }
}

BoxCountSeries read_box_counts_csv(std::istream& in) {
    BoxCountSeries series;
    for (const auto& row : read_table(in, box_header)) {
        series.entries.push_back({parse_double(row[0]), parse_unsigned(row[1])});
    }
    return series;
}

void write_pressure_csv(std::ostream& out, const std::vector<PressureRow>& rows) {
    out << pressure_header << '\n';
    for (const auto& r : rows) {
        out << std::to_string(r.n) << ',' << format_double(r.t) << ',' << format_double(r.sum_lower) << ','
            << format_optional(r.pressure_lower) << ',' << format_double(r.sum_upper) << ','
            << format_optional(r.pressure_upper) << '\n';
    }
}

std::vector<PressureRow> read_pressure_csv(std::istream& in) {
    std::vector<PressureRow> rows;
    for (const auto& f : read_table(in, pressure_header)) {
        rows.push_back({static_cast<std::size_t>(parse_unsigned(f[0])), parse_double(f[1]),
                        parse_double(f[2]), parse_optional(f[3]), parse_double(f[4]),
                        parse_optional(f[5])});
    }
    return rows;
}

void write_language_csv(std::ostream& out, const std::vector<LanguageRow>& rows) {
    out << language_header << '\n';
    for (const auto& r : rows) {
        out << std::to_string(r.n) << ',' << r.language.str() << ',' << r.core.str() << '\n';
    }
}

std::vector<LanguageRow> read_language_csv(std::istream& in) {
    std::vector<LanguageRow> rows;
    for (const auto& f : read_table(in, language_header)) {
        rows.push_back({static_cast<std::size_t>(parse_unsigned(f[0])), parse_count(f[1]),
                        parse_count(f[2])});
    }
    return rows;
}

}  // namespace sgap
