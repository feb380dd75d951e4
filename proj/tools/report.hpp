#pragma once

// Row-oriented report output shared by every subcommand: CSV, JSON, or an
// aligned plain-text table. Rows are ordered JSON objects whose keys are the
// column names.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthzero/arith.hpp"

namespace depthzero::cli {

using Row = nlohmann::ordered_json;

enum class Format { Csv, Json, Table };

inline Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "table") return Format::Table;
    throw invalid_parameter("unknown format '" + name + "'");
}

inline nlohmann::ordered_json fraction(const Rational& x) { return to_fraction_string(x); }
inline nlohmann::ordered_json big(const Integer& x) { return x.str(); }

inline std::string cell_text(const nlohmann::ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

// Writes rows as they arrive. CSV and JSON-lines stream; a JSON array and the
// plain table are emitted by finish().
class ReportWriter {
public:
    ReportWriter(std::ostream& out, Format format, std::vector<std::string> columns, bool json_lines = false)
        : out_(out), format_(format), columns_(std::move(columns)), json_lines_(json_lines) {}

    void add(const Row& row) {
        switch (format_) {
        case Format::Csv:
            if (!header_written_) {
                write_csv_line(columns_);
                header_written_ = true;
            }
            write_csv_line(cells(row));
            out_.flush();
            break;
        case Format::Json:
            if (json_lines_) {
                out_ << row.dump() << '\n';
                out_.flush();
            } else {
                buffered_.push_back(row);
            }
            break;
        case Format::Table:
            buffered_.push_back(row);
            break;
        }
    }

    void finish() {
        if (format_ == Format::Csv && !header_written_) {
            write_csv_line(columns_);
            header_written_ = true;
        }
        if (format_ == Format::Json && !json_lines_) {
            nlohmann::ordered_json array = nlohmann::ordered_json::array();
            for (auto& row : buffered_) array.push_back(row);
            out_ << array.dump(2) << '\n';
        }
        if (format_ == Format::Table) write_table();
        buffered_.clear();
        out_.flush();
    }

private:
    std::vector<std::string> cells(const Row& row) const {
        std::vector<std::string> out;
        for (const auto& c : columns_) out.push_back(row.contains(c) ? cell_text(row.at(c)) : "");
        return out;
    }

    void write_csv_line(const std::vector<std::string>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            const auto& v = values[i];
            if (v.find_first_of(",\"\n") != std::string::npos) {
                out_ << '"';
                for (char c : v) out_ << (c == '"' ? "\"\"" : std::string(1, c));
                out_ << '"';
            } else {
                out_ << v;
            }
        }
        out_ << '\n';
    }

    void write_table() {
        std::vector<std::vector<std::string>> grid{columns_};
        for (const auto& row : buffered_) grid.push_back(cells(row));
        std::vector<std::size_t> width(columns_.size(), 0);
        for (const auto& line : grid)
            for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        for (const auto& line : grid) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i) out_ << "  ";
                out_ << line[i];
                if (i + 1 < line.size()) out_ << std::string(width[i] - line[i].size(), ' ');
            }
            out_ << '\n';
        }
    }

    std::ostream& out_;
    Format format_;
    std::vector<std::string> columns_;
    bool json_lines_;
    bool header_written_ = false;
    std::vector<Row> buffered_;
};

}  // namespace depthzero::cli
