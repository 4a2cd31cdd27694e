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

#include <nlohmann/json.hpp>

#include "qfp/fockspace.hpp"
#include "qfp/fourport.hpp"
#include "qfp/gaussian.hpp"

namespace qfp::io {

using nlohmann::json;

/// {"t_matrix": [[re, im] x4], "a_matrix": [[re, im] x4], "sigma": +-1}, row-major.
json to_json(const fourport::DeviceResponse &dev);
fourport::DeviceResponse device_from_json(const json &j);

/// {"cutoff1", "cutoff2", "re": [...], "im": [...]} with row-major data.
json to_json(const fock::TwoModeDensityMatrix &rho);
fock::TwoModeDensityMatrix density_from_json(const json &j);

/// {"mean": [4], "variance": [16]} with row-major variance.
json to_json(const amplifying::GaussianState &g);
amplifying::GaussianState gaussian_from_json(const json &j);

}  // namespace qfp::io
