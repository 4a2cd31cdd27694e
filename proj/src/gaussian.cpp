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

#include "qfp/gaussian.hpp"

#include <cmath>

#include "qfp/errors.hpp"

namespace qfp::amplifying {

namespace {

// Action of multiplication by a complex number on (q, p).
Eigen::Matrix2d rotation_gain(cplx t) {
    Eigen::Matrix2d m;
    m << t.real(), -t.imag(), t.imag(), t.real();
    return m;
}

Eigen::Matrix2d symplectic_j() {
    Eigen::Matrix2d j;
    j << 0.0, 1.0, -1.0, 0.0;
    return j;
}

}  // namespace

GaussianState two_mode_squeezed_vacuum(double zeta) {
    if (!std::isfinite(zeta)) {
        throw Error(ErrorCode::BadArgument, "squeezing parameter must be finite");
    }
    const double c = std::cosh(2.0 * zeta), s = std::sinh(2.0 * zeta);
    GaussianState g;
    g.variance << c / 2, 0, -s / 2, 0,
                  0, c / 2, 0, s / 2,
                  -s / 2, 0, c / 2, 0,
                  0, s / 2, 0, c / 2;
    return g;
}

double uncertainty_margin(const GaussianState &state) {
    Eigen::Matrix4cd m = state.variance.cast<cplx>();
    const cplx h(0.0, 0.5);
    for (int k = 0; k < 2; ++k) {
        m(2 * k, 2 * k + 1) += h;
        m(2 * k + 1, 2 * k) -= h;
    }
    return linalg::eigenvalues_hermitian(m).minCoeff();
}

GaussianState propagate_gaussian(const GaussianState &state, const fourport::DeviceResponse &dev1,
                                 const fourport::DeviceResponse &dev2) {
    fourport::require_consistent(dev1);
    fourport::require_consistent(dev2);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.topLeftCorner<2, 2>() = rotation_gain(dev1.t_matrix(0, 0));
    m.bottomRightCorner<2, 2>() = rotation_gain(dev2.t_matrix(0, 0));
    auto noise = [](const fourport::DeviceResponse &d) {
        return 0.5 * (std::norm(d.t_matrix(0, 1)) + (d.a_matrix * d.a_matrix.adjoint())(0, 0).real());
    };
    GaussianState out;
    out.mean = m * state.mean;
    out.variance = m * state.variance * m.transpose();
    out.variance.topLeftCorner<2, 2>() += noise(dev1) * Eigen::Matrix2d::Identity();
    out.variance.bottomRightCorner<2, 2>() += noise(dev2) * Eigen::Matrix2d::Identity();
    return out;
}

PhVerdict ph_criterion(const GaussianState &state) {
    const Eigen::Matrix2d x = state.x_block(), y = state.y_block(), z = state.z_block();
    const Eigen::Matrix2d j = symplectic_j();
    const double dx = x.determinant(), dy = y.determinant(), dz = z.determinant();
    PhVerdict v;
    v.lhs = dx * dy + std::pow(0.25 - std::abs(dz), 2) - (x * j * z * j * y * j * z.transpose() * j).trace();
    v.rhs = 0.25 * (dx + dy);
    v.margin = v.lhs - v.rhs;
    v.separable = v.margin >= 0.0;
    return v;
}

BoundaryPoint separability_boundary(double r_mag, double zeta) {
    if (r_mag < 0.0) {
        throw Error(ErrorCode::BadArgument, "|R| must be non-negative");
    }
    BoundaryPoint b;
    b.t2 = 2.0 * (1.0 - r_mag * r_mag) / (1.0 + std::exp(-2.0 * std::abs(zeta)));
    b.gain = b.t2 - 1.0;
    b.feasible = b.t2 >= 1.0 - 1e-12;
    return b;
}

fourport::DeviceResponse make_amplifier(double t2, double r2) {
    if (t2 < 0.0 || r2 < 0.0) {
        throw Error(ErrorCode::BadArgument, "|T|^2 and |R|^2 must be non-negative");
    }
    const cplx r(0.0, std::sqrt(r2));
    return fourport::make_beamsplitter(std::sqrt(t2), r, -1);
}

}  // namespace qfp::amplifying
