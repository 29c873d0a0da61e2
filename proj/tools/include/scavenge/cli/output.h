// Copyright 2026 The Scavenge Authors
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

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace scavenge::cli {

/// Formats a double with 17 significant digits ("%.17g"), '.' decimal separator.
std::string format_number(double value);

/// Parses "log:a..b:n" (n log-spaced integers from a to b, rounded, deduplicated, ascending)
/// or a comma-separated list of integers. Throws DomainError on malformed input or K < 1.
std::vector<std::int64_t> parse_k_grid(std::string_view text);

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Rectangular result table rendered as CSV or as JSON rows.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Column line plus one line per row, '\n' line endings.
    void write_csv(std::ostream &out) const;
    /// Array of {column: value} objects.
    nlohmann::ordered_json to_json() const;
};

/// Provenance block echoed on stdout and stored in JSON outputs.
struct Header {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    /// Null for deterministic subcommands.
    nlohmann::ordered_json seed = nullptr;
    std::string version;

    nlohmann::ordered_json to_json() const;
};

/// Version string embedded in every header.
std::string_view version();

}  // namespace scavenge::cli
