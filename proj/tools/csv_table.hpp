// Copyright 2026 The spindir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <string>
#include <vector>

namespace spindir_cli {

struct SweepRow {
    int n = 0;
    int twice_m = 0;
    double fidelity = 0.0;
    double one_minus_f = 0.0;
    double scaled_constant = 0.0;
};

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline bool parse_double(const std::string& text, double& out) {
    if (text.empty()) {
        return false;
    }
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size();
}

inline bool parse_int(const std::string& text, int& out) {
    if (text.empty()) {
        return false;
    }
    char* end = nullptr;
    const long value = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size()) {
        return false;
    }
    out = static_cast<int>(value);
    return true;
}

/// Parses one sweep CSV document (header + data rows) and appends the rows.
/// Returns false with a description in `problem` on any malformation.
inline bool parse_sweep_csv(const std::string& text, const std::string& expected_header,
                            std::vector<SweepRow>& rows, std::string& problem) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        lines.push_back(cur);
    }
    if (lines.empty()) {
        problem = "empty file";
        return false;
    }
    bool saw_data = false;
    for (const std::string& line : lines) {
        // Concatenated sweep outputs repeat the header; accept it anywhere.
        if (line.empty() || line.substr(0, line.find('\r')) == expected_header) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 5) {
            problem = "expected 5 fields, got " + std::to_string(fields.size()) + " in '" +
                      line + "'";
            return false;
        }
        SweepRow row;
        if (!parse_int(fields[0], row.n) || !parse_int(fields[1], row.twice_m) ||
            !parse_double(fields[2], row.fidelity) || !parse_double(fields[3], row.one_minus_f) ||
            !parse_double(fields[4], row.scaled_constant)) {
            problem = "unparseable field in '" + line + "'";
            return false;
        }
        rows.push_back(row);
        saw_data = true;
    }
    if (!saw_data) {
        problem = "no data rows";
        return false;
    }
    return true;
}

}  // namespace spindir_cli
