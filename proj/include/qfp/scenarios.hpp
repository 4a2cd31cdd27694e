// Copyright 2026 The qfp Authors
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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfp/config.hpp"

namespace qfp::scenarios {

struct Range {
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
};

struct SweepSpec {
    std::string scenario;
    std::optional<Range> range;     ///< default range of the scenario if empty
    std::string variable;           ///< empty selects the scenario's default variable
    Config config;
    std::optional<std::uint64_t> seed;
    int threads = 0;                ///< 0 uses the hardware concurrency
};

using Cell = std::variant<double, std::string>;

struct Table {
    std::string scenario;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::size_t column(const std::string &name) const;
    double number(std::size_t row, const std::string &name) const;
    std::vector<double> numbers(const std::string &name) const;
};

const std::vector<std::string> &scenario_ids();
std::vector<std::string> columns_for(const std::string &scenario);
std::string default_variable(const std::string &scenario);
Range default_range(const std::string &scenario, const std::string &variable = "");

/// Parses "a:b:n", optionally prefixed with "name=". Throws BadArgument.
std::pair<std::string, Range> parse_range(const std::string &text);
std::vector<double> grid(const Range &r);

/// Throws UnknownScenario, BadArgument, or the module error of the failing row.
Table run_scenario(const SweepSpec &spec);

/// Header row plus one line per row; numbers with 17 significant digits.
std::string format_csv(const Table &table);
Table parse_csv(const std::string &text);
nlohmann::json to_json(const Table &table);

/// Throw IoFailure when the path is not writable.
void emit_csv(const Table &table, const std::string &path);
void emit_json(const Table &table, const std::string &path);

}  // namespace qfp::scenarios
