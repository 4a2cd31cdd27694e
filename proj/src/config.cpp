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

#include "qfp/config.hpp"

#include <charconv>
#include <fstream>

#include "qfp/errors.hpp"

namespace qfp {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse(std::istream &in) {
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::BadArgument, "config line " + std::to_string(lineno) + " lacks '='");
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) {
            throw Error(ErrorCode::BadArgument, "config line " + std::to_string(lineno) + " has no key");
        }
        c.values_[key] = trim(t.substr(eq + 1));
    }
    return c;
}

Config Config::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw Error(ErrorCode::IoFailure, "cannot read config file " + path);
    }
    return parse(f);
}

double Config::get_double(const std::string &key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos == it->second.size()) return v;
    } catch (const std::exception &) {
    }
    throw Error(ErrorCode::BadArgument, "config key " + key + " needs a number, got '" + it->second + "'");
}

long long Config::get_int(const std::string &key, long long fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    long long v = 0;
    const auto &s = it->second;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
        throw Error(ErrorCode::BadArgument, "config key " + key + " needs an integer, got '" + s + "'");
    }
    return v;
}

std::string Config::get_string(const std::string &key, const std::string &fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

void Config::require_known(const std::set<std::string> &allowed) const {
    for (const auto &[k, v] : values_) {
        if (!allowed.count(k)) {
            throw Error(ErrorCode::BadArgument, "unknown config key " + k);
        }
    }
}

}  // namespace qfp
