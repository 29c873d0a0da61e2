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

#include "scavenge/cli/output.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "scavenge/errors.h"

#ifndef SCAVENGE_VERSION
#define SCAVENGE_VERSION "unknown"
#endif

namespace scavenge::cli {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    std::string s(text);
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(value)) {
        throw DomainError("k-grid: malformed " + std::string(what) + " '" + s + "'");
    }
    return value;
}

std::int64_t parse_integer(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        // Accept integral values written in floating-point notation, e.g. 1e4.
        double d = parse_double(text, "grid value");
        if (d != std::floor(d) || std::abs(d) > 9.0e15) {
            throw DomainError("k-grid: '" + std::string(text) + "' is not an integer");
        }
        value = static_cast<std::int64_t>(d);
    }
    return value;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<std::int64_t> parse_k_grid(std::string_view text) {
    std::vector<std::int64_t> grid;
    if (text.rfind("log:", 0) == 0) {
        std::string_view body = text.substr(4);
        const auto range_sep = body.find("..");
        const auto count_sep = body.rfind(':');
        if (range_sep == std::string_view::npos || count_sep == std::string_view::npos || count_sep < range_sep) {
            throw DomainError("k-grid: expected log:a..b:n, got '" + std::string(text) + "'");
        }
        const double a = parse_double(body.substr(0, range_sep), "lower bound");
        const double b = parse_double(body.substr(range_sep + 2, count_sep - range_sep - 2), "upper bound");
        const std::int64_t n = parse_integer(body.substr(count_sep + 1));
        if (!(a >= 1.0) || !(b >= a)) {
            throw DomainError("k-grid: need 1 <= a <= b");
        }
        if (n < 1) {
            throw DomainError("k-grid: need at least one point");
        }
        const double la = std::log(a);
        const double lb = std::log(b);
        for (std::int64_t i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
            grid.push_back(std::llround(std::exp(la + t * (lb - la))));
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            if (comma == std::string_view::npos) {
                comma = text.size();
            }
            std::string_view item = text.substr(start, comma - start);
            if (item.empty()) {
                throw DomainError("k-grid: empty entry in '" + std::string(text) + "'");
            }
            grid.push_back(parse_integer(item));
            start = comma + 1;
        }
    }
    for (std::int64_t k : grid) {
        if (k < 1) {
            throw DomainError("k-grid: every K must be at least 1");
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

void Table::write_csv(std::ostream &out) const {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out << ',';
            }
            std::visit(
                [&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        out << format_number(v);
                    } else if constexpr (std::is_same_v<T, bool>) {
                        out << (v ? "true" : "false");
                    } else {
                        out << v;
                    }
                },
                row[c]);
        }
        out << '\n';
    }
}

nlohmann::ordered_json Table::to_json() const {
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size() && c < columns.size(); ++c) {
            std::visit([&](const auto &v) { obj[columns[c]] = v; }, row[c]);
        }
        rows_json.push_back(std::move(obj));
    }
    return rows_json;
}

nlohmann::ordered_json Header::to_json() const {
    return nlohmann::ordered_json{{"params", params}, {"seed", seed}, {"version", version}};
}

std::string_view version() {
    return SCAVENGE_VERSION;
}

}  // namespace scavenge::cli
