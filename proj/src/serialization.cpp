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

#include "qfp/serialization.hpp"

#include "qfp/errors.hpp"

namespace qfp::io {

namespace {

json pairs(const Mat2 &m) {
    json a = json::array();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            a.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return a;
}

Mat2 mat_from_pairs(const json &a) {
    if (!a.is_array() || a.size() != 4) {
        throw Error(ErrorCode::BadArgument, "2x2 matrix needs four [re, im] entries");
    }
    Mat2 m;
    for (int k = 0; k < 4; ++k) {
        m(k / 2, k % 2) = cplx(a[k].at(0).get<double>(), a[k].at(1).get<double>());
    }
    return m;
}

template <class F>
auto guarded(F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::BadArgument, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

json to_json(const fourport::DeviceResponse &dev) {
    return {{"t_matrix", pairs(dev.t_matrix)}, {"a_matrix", pairs(dev.a_matrix)}, {"sigma", dev.sigma}};
}

fourport::DeviceResponse device_from_json(const json &j) {
    return guarded([&] {
        fourport::DeviceResponse d;
        d.t_matrix = mat_from_pairs(j.at("t_matrix"));
        d.a_matrix = mat_from_pairs(j.at("a_matrix"));
        d.sigma = j.at("sigma").get<int>();
        return d;
    });
}

json to_json(const fock::TwoModeDensityMatrix &rho) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < rho.dim(); ++i) {
        for (int k = 0; k < rho.dim(); ++k) {
            re.push_back(rho.data()(i, k).real());
            im.push_back(rho.data()(i, k).imag());
        }
    }
    return {{"cutoff1", rho.cutoff1()}, {"cutoff2", rho.cutoff2()}, {"re", re}, {"im", im}};
}

fock::TwoModeDensityMatrix density_from_json(const json &j) {
    return guarded([&] {
        const int c1 = j.at("cutoff1").get<int>(), c2 = j.at("cutoff2").get<int>();
        fock::TwoModeDensityMatrix rho(c1, c2);
        const auto &re = j.at("re");
        const auto &im = j.at("im");
        const std::size_t n = static_cast<std::size_t>(rho.dim()) * rho.dim();
        if (re.size() != n || im.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, "density data does not match cutoffs");
        }
        for (std::size_t k = 0; k < n; ++k) {
            rho.data()(k / rho.dim(), k % rho.dim()) = cplx(re[k].get<double>(), im[k].get<double>());
        }
        return rho;
    });
}

json to_json(const amplifying::GaussianState &g) {
    json mean = json::array(), var = json::array();
    for (int i = 0; i < 4; ++i) {
        mean.push_back(g.mean[i]);
        for (int k = 0; k < 4; ++k) {
            var.push_back(g.variance(i, k));
        }
    }
    return {{"mean", mean}, {"variance", var}};
}

amplifying::GaussianState gaussian_from_json(const json &j) {
    return guarded([&] {
        amplifying::GaussianState g;
        const auto &mean = j.at("mean");
        const auto &var = j.at("variance");
        if (mean.size() != 4 || var.size() != 16) {
            throw Error(ErrorCode::DimensionMismatch, "Gaussian state needs 4 means and 16 variances");
        }
        for (int i = 0; i < 4; ++i) {
            g.mean[i] = mean[i].get<double>();
            for (int k = 0; k < 4; ++k) {
                g.variance(i, k) = var[4 * i + k].get<double>();
            }
        }
        return g;
    });
}

}  // namespace qfp::io
