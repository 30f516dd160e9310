// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "swi/harness.hpp"

namespace swi {

namespace detail {

/// Shortest 17-significant-digit form; round-trips any finite double.
[[nodiscard]] inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[nodiscard]] inline std::string format_optional(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

[[nodiscard]] inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch != '\r') {
            field.push_back(ch);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

[[nodiscard]] inline double parse_double_field(const std::string& field) {
    std::size_t consumed = 0;
    const double v = std::stod(field, &consumed);
    if (consumed != field.size()) throw std::runtime_error("malformed numeric field '" + field + "'");
    return v;
}

[[nodiscard]] inline int parse_int_field(const std::string& field) {
    std::size_t consumed = 0;
    const int v = std::stoi(field, &consumed);
    if (consumed != field.size()) throw std::runtime_error("malformed integer field '" + field + "'");
    return v;
}

inline void expect_header(std::istream& in, const std::string& expected) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected)
        throw std::runtime_error("unexpected CSV header '" + line + "'");
}

template <class WriteAll>
void export_csv_to_path(const std::filesystem::path& destination, WriteAll&& write_all) {
    std::ofstream out(destination);
    if (!out) throw std::runtime_error("cannot open '" + destination.string() + "' for writing");
    write_all(out);
    out.flush();
    if (!out) throw std::runtime_error("failed while writing '" + destination.string() + "'");
}

}  // namespace detail

inline constexpr std::string_view kSweepCsvHeader =
    "function_id,method,n,max_error,cumulative_error,endpoint_part,central_part";
inline constexpr std::string_view kMinimalDegreeCsvHeader =
    "function_id,metric,epsilon,family,degree";
inline constexpr std::string_view kRobustnessCsvHeader = "function_id,kind,n,max_deviation";

inline void export_csv(std::span<const SweepRecord> records, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.function_id << ',' << method_token(r.method) << ',' << r.n << ','
            << detail::format_double(r.max_error) << ','
            << detail::format_double(r.cumulative_error) << ','
            << detail::format_optional(r.endpoint_part) << ','
            << detail::format_optional(r.central_part) << '\n';
    }
}

inline void export_csv(std::span<const MinimalDegreeRecord> records, std::ostream& out) {
    out << kMinimalDegreeCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.function_id << ',' << metric_token(r.metric) << ','
            << detail::format_double(r.epsilon) << ',' << family_token(r.family) << ','
            << r.degree << '\n';
    }
}

inline void export_csv(std::span<const RobustnessRecord> records, std::ostream& out) {
    out << kRobustnessCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.function_id << ',' << r.kind << ',' << r.n << ','
            << detail::format_double(r.max_deviation) << '\n';
    }
}

template <class Record>
void export_csv(std::span<const Record> records, const std::filesystem::path& destination) {
    detail::export_csv_to_path(destination,
                               [&](std::ostream& out) { export_csv(records, out); });
}

[[nodiscard]] inline std::vector<SweepRecord> parse_sweep_csv(std::istream& in) {
    detail::expect_header(in, std::string(kSweepCsvHeader));
    std::vector<SweepRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 7) throw std::runtime_error("sweep row needs 7 fields");
        SweepRecord r{detail::parse_int_field(f[0]), method_from_token(f[1]),
                      detail::parse_int_field(f[2]), detail::parse_double_field(f[3]),
                      detail::parse_double_field(f[4]), {}, {}};
        if (!f[5].empty()) r.endpoint_part = detail::parse_double_field(f[5]);
        if (!f[6].empty()) r.central_part = detail::parse_double_field(f[6]);
        records.push_back(r);
    }
    return records;
}

[[nodiscard]] inline std::vector<MinimalDegreeRecord> parse_minimal_degree_csv(std::istream& in) {
    detail::expect_header(in, std::string(kMinimalDegreeCsvHeader));
    std::vector<MinimalDegreeRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 5) throw std::runtime_error("minimal-degree row needs 5 fields");
        records.push_back(MinimalDegreeRecord{detail::parse_int_field(f[0]),
                                              metric_from_token(f[1]),
                                              detail::parse_double_field(f[2]),
                                              family_from_token(f[3]),
                                              detail::parse_int_field(f[4])});
    }
    return records;
}

[[nodiscard]] inline std::vector<RobustnessRecord> parse_robustness_csv(std::istream& in) {
    detail::expect_header(in, std::string(kRobustnessCsvHeader));
    std::vector<RobustnessRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 4) throw std::runtime_error("robustness row needs 4 fields");
        records.push_back(RobustnessRecord{detail::parse_int_field(f[0]),
                                           detail::parse_int_field(f[1]),
                                           detail::parse_int_field(f[2]),
                                           detail::parse_double_field(f[3])});
    }
    return records;
}

}  // namespace swi
