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

// qfp: runs a named scenario sweep and writes CSV or JSON.
//
//   qfp <scenario> [--var a:b:n] [--config file] [--seed k] [--out path] [--json]
//
// Exit codes: 0 success, 2 bad arguments, 3 numerical failure.

#include <iostream>

#include <CLI11.hpp>

#include "qfp/errors.hpp"
#include "qfp/scenarios.hpp"

namespace {

int run(int argc, char **argv) {
    CLI::App app{"Quantum-state transformation at absorbing and amplifying four-port devices"};
    std::string scenario, var, config_path, out;
    std::uint64_t seed = 0;
    bool json = false, list = false;
    int threads = 0;
    app.add_option("scenario", scenario, "scenario id (see --list)");
    app.add_option("--var", var, "sweep range start:stop:points, optionally name=start:stop:points");
    app.add_option("--config", config_path, "flat key = value settings file");
    auto *seed_opt = app.add_option("--seed", seed, "optimizer seed");
    app.add_option("--out", out, "output path (stdout if omitted)");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_flag("--json", json, "emit JSON instead of CSV");
    app.add_flag("--list", list, "list scenario ids and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (list) {
        for (const auto &id : qfp::scenarios::scenario_ids()) {
            std::cout << id << "\n";
        }
        return 0;
    }
    if (scenario.empty()) {
        std::cerr << "missing scenario id; try --list\n";
        return 2;
    }

    qfp::scenarios::SweepSpec spec;
    spec.scenario = scenario;
    spec.threads = threads;
    if (!config_path.empty()) spec.config = qfp::Config::load(config_path);
    if (!var.empty()) {
        auto [name, range] = qfp::scenarios::parse_range(var);
        spec.variable = name;
        spec.range = range;
    }
    if (*seed_opt) spec.seed = seed;

    const auto table = qfp::scenarios::run_scenario(spec);
    if (out.empty()) {
        std::cout << (json ? qfp::scenarios::to_json(table).dump(2) + "\n"
                           : qfp::scenarios::format_csv(table));
    } else if (json) {
        qfp::scenarios::emit_json(table, out);
    } else {
        qfp::scenarios::emit_csv(table, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const qfp::Error &e) {
        std::cerr << "qfp: " << e.what() << "\n";
        switch (e.code()) {
            case qfp::ErrorCode::BadArgument:
            case qfp::ErrorCode::UnknownScenario:
            case qfp::ErrorCode::IoFailure:
                return 2;
            default:
                return 3;
        }
    } catch (const std::exception &e) {
        std::cerr << "qfp: " << e.what() << "\n";
        return 3;
    }
}
