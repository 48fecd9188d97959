// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "larmor/errors.hpp"
#include "larmor/version.hpp"

namespace larmor {

/// One output field: absent, numeric, or text.
using Cell = std::variant<std::monostate, double, std::string>;

/// Column-named result table, the single output shape of every command.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    long dropped_rows = 0;  ///< rows skipped by a guard, reported in output
};

/// Provenance block for JSON output. Parameters keep insertion order so
/// identical invocations serialize byte-identically.
struct TableMeta {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<std::uint64_t> seed;
};

/// Scientific notation with the given number of significant digits.
inline std::string format_number(double value, int precision) {
    if (precision < 6 || precision > 17) {
        throw InvalidArgument("precision must be in [6, 17], got " +
                              std::to_string(precision));
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, value);
    return std::string(buf);
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char ch : s) {
        switch (ch) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            case '\r':
                out += "\\r";
                break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace detail

/// Comma-separated output: header row always, '\n' line endings, numbers
/// in scientific notation, absent cells empty. A trailing comment line
/// reports dropped rows when any were skipped.
inline void write_csv(const Table& table, std::ostream& out, int precision) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) {
            out << ',';
        }
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out << ',';
            }
            if (const double* num = std::get_if<double>(&row[c])) {
                out << format_number(*num, precision);
            } else if (const std::string* text =
                           std::get_if<std::string>(&row[c])) {
                out << *text;
            }
        }
        out << '\n';
    }
    if (table.dropped_rows > 0) {
        out << "# dropped_rows=" << table.dropped_rows << '\n';
    }
}

/// JSON output: {"meta": {...}, "rows": [...]} with rows keyed by the CSV
/// column names and absent cells encoded as null. Numbers are rendered
/// with the same formatter as CSV so the two formats carry identical
/// values at any precision.
inline void write_json(const Table& table, const TableMeta& meta,
                       std::ostream& out, int precision) {
    out << "{\n  \"meta\": {\n    \"command\": \""
        << detail::json_escape(meta.command) << "\",\n    \"parameters\": {";
    for (size_t i = 0; i < meta.parameters.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << "\n      \"" << detail::json_escape(meta.parameters[i].first)
            << "\": \"" << detail::json_escape(meta.parameters[i].second)
            << "\"";
    }
    if (!meta.parameters.empty()) {
        out << "\n    ";
    }
    out << "},\n";
    if (meta.seed.has_value()) {
        out << "    \"seed\": " << *meta.seed << ",\n";
    }
    if (table.dropped_rows > 0) {
        out << "    \"dropped_rows\": " << table.dropped_rows << ",\n";
    }
    out << "    \"version\": \"" << version_string << "\"\n  },\n  \"rows\": [";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        if (r > 0) {
            out << ',';
        }
        out << "\n    {";
        const auto& row = table.rows[r];
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out << ", ";
            }
            out << "\"" << detail::json_escape(table.columns[c]) << "\": ";
            if (const double* num = std::get_if<double>(&row[c])) {
                out << format_number(*num, precision);
            } else if (const std::string* text =
                           std::get_if<std::string>(&row[c])) {
                out << "\"" << detail::json_escape(*text) << "\"";
            } else {
                out << "null";
            }
        }
        out << "}";
    }
    if (!table.rows.empty()) {
        out << "\n  ";
    }
    out << "]\n}\n";
}

}  // namespace larmor
