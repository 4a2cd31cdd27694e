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

#include <istream>
#include <map>
#include <set>
#include <string>

namespace qfp {

/// Flat `key = value` settings. Lines starting with '#' are comments.
class Config {
  public:
    static Config parse(std::istream &in);
    /// Throws IoFailure if the file cannot be read.
    static Config load(const std::string &path);

    void set(const std::string &key, const std::string &value) { values_[key] = value; }
    bool has(const std::string &key) const { return values_.count(key) != 0; }
    const std::map<std::string, std::string> &values() const { return values_; }

    /// Throw BadArgument when the value does not parse.
    double get_double(const std::string &key, double fallback) const;
    long long get_int(const std::string &key, long long fallback) const;
    std::string get_string(const std::string &key, const std::string &fallback) const;

    /// Throws BadArgument naming the first key outside `allowed`.
    void require_known(const std::set<std::string> &allowed) const;

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace qfp
