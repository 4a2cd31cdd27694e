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

#include "qfp/fourport.hpp"

/// Gaussian two-mode states over xi = (q1, p1, q2, p2), vacuum variance 1/2.
namespace qfp::amplifying {

struct GaussianState {
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    Eigen::Matrix4d variance = 0.5 * Eigen::Matrix4d::Identity();

    Eigen::Matrix2d x_block() const { return variance.topLeftCorner<2, 2>(); }
    Eigen::Matrix2d y_block() const { return variance.bottomRightCorner<2, 2>(); }
    Eigen::Matrix2d z_block() const { return variance.topRightCorner<2, 2>(); }
};

struct PhVerdict {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool separable = true;
};

struct BoundaryPoint {
    double t2 = 1.0;       ///< |T|^2 on the boundary
    double gain = 0.0;     ///< |T|^2 - 1
    bool feasible = true;  ///< false when |T|^2 < 1 (no amplifier realizes it)
};

GaussianState two_mode_squeezed_vacuum(double zeta);

/// Smallest eigenvalue of V + (i/2) Omega; non-negative for physical states.
double uncertainty_margin(const GaussianState &state);

/// Mode k enters port 1 of device k, whose second port and internal modes are in
/// the ground state. Either device class is accepted.
GaussianState propagate_gaussian(const GaussianState &state, const fourport::DeviceResponse &dev1,
                                 const fourport::DeviceResponse &dev2);

/// Peres-Horodecki test in its determinant form for two-mode variance matrices.
PhVerdict ph_criterion(const GaussianState &state);

/// |T|^2 at which the squeezed vacuum through two equal amplifiers becomes separable.
BoundaryPoint separability_boundary(double r_mag, double zeta);

/// Amplifier with T-matrix [[t, i r], [i r, t]] for real t, r; T T^+ = (t^2 + r^2) I.
fourport::DeviceResponse make_amplifier(double t2, double r2);

}  // namespace qfp::amplifying
