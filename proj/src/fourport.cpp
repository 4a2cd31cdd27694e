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

#include "qfp/fourport.hpp"

#include <cmath>

#include "qfp/errors.hpp"

namespace qfp::fourport {

namespace {

constexpr double kEigTol = 1e-12;

void check_sigma(int sigma) {
    if (sigma != 1 && sigma != -1) {
        throw Error(ErrorCode::BadArgument, "sigma must be +1 or -1");
    }
}

}  // namespace

DeviceResponse make_device(const Mat2 &t, int sigma) {
    check_sigma(sigma);
    const Mat2 tt = t * t.adjoint();
    const Eigen::VectorXd lam = linalg::eigenvalues_hermitian(tt);
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const bool ok = sigma > 0 ? lam[i] <= 1.0 + kEigTol : lam[i] >= 1.0 - kEigTol;
        if (!ok) {
            throw Error(ErrorCode::InfeasibleCoefficients,
                        sigma > 0 ? "T T^+ has an eigenvalue above 1"
                                  : "T T^+ has an eigenvalue below 1");
        }
    }
    DeviceResponse dev;
    dev.t_matrix = t;
    dev.sigma = sigma;
    const MatX s2 = static_cast<double>(sigma) * (MatX(Mat2::Identity()) - MatX(tt));
    dev.a_matrix = linalg::hermitian_sqrt(s2);
    return dev;
}

DeviceResponse make_beamsplitter(cplx r, cplx t, int sigma) {
    Mat2 m;
    m << r, t, t, r;
    return make_device(m, sigma);
}

DeviceResponse make_channel_pair(cplx t1, cplx t2) {
    Mat2 m;
    m << t1, 0.0, 0.0, t2;
    return make_device(m, 1);
}

double check_dissipation_constraint(const DeviceResponse &dev) {
    const Mat2 res = dev.t_matrix * dev.t_matrix.adjoint() +
                     static_cast<double>(dev.sigma) * dev.a_matrix * dev.a_matrix.adjoint() -
                     Mat2::Identity();
    return res.cwiseAbs().maxCoeff();
}

void require_consistent(const DeviceResponse &dev, double tol) {
    check_sigma(dev.sigma);
    const double res = check_dissipation_constraint(dev);
    if (!(res <= tol)) {
        throw Error(ErrorCode::InconsistentDevice,
                    "dissipation constraint residual " + std::to_string(res));
    }
}

ExtendedTransform extended_transform(const DeviceResponse &dev) {
    require_consistent(dev);
    const double sg = static_cast<double>(dev.sigma);
    // T = C U and A = S V. The blocks -sigma S C^-1 T = -sigma S U and
    // C S^-1 A = C V need no inverse, so lossless and opaque devices are covered.
    const linalg::Polar pt = linalg::polar(dev.t_matrix);
    const linalg::Polar pa = linalg::polar(dev.a_matrix);
    ExtendedTransform x;
    x.c_matrix = pt.positive;
    x.s_matrix = pa.positive;
    x.lambda.topLeftCorner<2, 2>() = dev.t_matrix;
    x.lambda.topRightCorner<2, 2>() = dev.a_matrix;
    x.lambda.bottomLeftCorner<2, 2>() = -sg * x.s_matrix * pt.unitary;
    x.lambda.bottomRightCorner<2, 2>() = x.c_matrix * pa.unitary;
    x.j_metric = Mat4::Identity();
    x.j_metric(2, 2) = sg;
    x.j_metric(3, 3) = sg;
    return x;
}

double metric_residual(const ExtendedTransform &x) {
    return (x.lambda * x.j_metric * x.lambda.adjoint() - x.j_metric).cwiseAbs().maxCoeff();
}

std::pair<double, double> mzi_mean_photon_numbers(const MziSpec &s) {
    const cplx r1 = s.bs1.t_matrix(0, 0), t1 = s.bs1.t_matrix(0, 1);
    const cplx r2 = s.bs2.t_matrix(0, 0), t2 = s.bs2.t_matrix(0, 1);
    const double ar1 = std::abs(r1), at1 = std::abs(t1), ar2 = std::abs(r2), at2 = std::abs(t2);
    const double at3 = std::abs(s.t3), at4 = std::abs(s.t4);
    const double common = std::arg(r1) - std::arg(t1) + std::arg(s.t3) - std::arg(s.t4);
    const double th1 = s.theta + common + std::arg(r2) - std::arg(t2);
    const double th2 = s.theta + common - std::arg(r2) + std::arg(t2);
    const double cross = 2.0 * ar1 * ar2 * at1 * at2 * at3 * at4;
    const double n1 = std::pow(ar1 * at3 * ar2, 2) + std::pow(at1 * at4 * at2, 2) + cross * std::cos(th1);
    const double n2 = std::pow(ar1 * at3 * at2, 2) + std::pow(ar2 * at4 * at1, 2) + cross * std::cos(th2);
    return {std::max(0.0, n1), std::max(0.0, n2)};
}

std::pair<double, double> mzi_visibility(const MziSpec &s) {
    const double ar1 = std::abs(s.bs1.t_matrix(0, 0)), at1 = std::abs(s.bs1.t_matrix(0, 1));
    const double ar2 = std::abs(s.bs2.t_matrix(0, 0)), at2 = std::abs(s.bs2.t_matrix(0, 1));
    const double at3 = std::abs(s.t3), at4 = std::abs(s.t4);
    auto harmonic = [](double a, double b) {
        const double den = a * a + b * b;
        if (den == 0.0) {
            throw Error(ErrorCode::UndefinedVisibility, "detector receives no light for any phase");
        }
        return 2.0 * a * b / den;
    };
    return {harmonic(ar1 * at3 * ar2, at1 * at4 * at2), harmonic(ar1 * at3 * at2, ar2 * at1 * at4)};
}

}  // namespace qfp::fourport
