/*
   Copyright 2026 The cuelab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cuelab/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace cuelab {

namespace {

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& cell) {
    std::string out = "\"";
    for (char c : cell) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns_.size()) throw std::logic_error("Table: row width mismatch");
    rows_.push_back(std::move(row));
}

std::string Table::render(TableFormat format) const {
    std::string out;
    if (format == TableFormat::csv) {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c > 0) out += ',';
            out += csv_escape(columns_[c]);
        }
        out += '\n';
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out += ',';
                out += csv_escape(row[c]);
            }
            out += '\n';
        }
        return out;
    }
    for (const auto& row : rows_) {
        out += '{';
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += json_escape(columns_[c]);
            out += ':';
            out += json_escape(row[c]);
        }
        out += "}\n";
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

}  // namespace cuelab
