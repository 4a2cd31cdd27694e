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

#include <utility>

#include "qfp/linalg.hpp"

namespace qfp::fourport {

enum class DeviceClass : int { Absorbing = 1, Amplifying = -1 };

/// Per-frequency characteristic matrices of a four-port device.
///
/// Outgoing field operators are b = T a + A d, where d collects the device
/// operators (annihilators for absorbing devices, creators for amplifying ones).
struct DeviceResponse {
    Mat2 t_matrix = Mat2::Identity();
    Mat2 a_matrix = Mat2::Zero();
    int sigma = 1;

    DeviceClass device_class() const {
        return sigma > 0 ? DeviceClass::Absorbing : DeviceClass::Amplifying;
    }
};

/// Lambda acting on (a1, a2, d1, d2), with Lambda J Lambda^+ = J.
struct ExtendedTransform {
    Mat4 lambda;
    Mat4 j_metric;
    Mat2 c_matrix;
    Mat2 s_matrix;
};

struct MziSpec {
    DeviceResponse bs1;
    DeviceResponse bs2;
    cplx t3{1.0, 0.0};
    cplx t4{1.0, 0.0};
    double theta = 0.0;
};

/// Device built from an arbitrary T. A is the positive root of sigma (I - T T^+).
/// Throws InfeasibleCoefficients if the eigenvalues of T T^+ are on the wrong side of 1.
DeviceResponse make_device(const Mat2 &t, int sigma);

/// Symmetric device with T = [[r, t], [t, r]].
DeviceResponse make_beamsplitter(cplx r, cplx t, int sigma);

/// Two independent channels, T = diag(t1, t2).
DeviceResponse make_channel_pair(cplx t1, cplx t2);

/// Max-norm of T T^+ + sigma A A^+ - I.
double check_dissipation_constraint(const DeviceResponse &dev);

/// Throws InconsistentDevice if the residual exceeds `tol`.
void require_consistent(const DeviceResponse &dev, double tol = 1e-8);

ExtendedTransform extended_transform(const DeviceResponse &dev);

/// Residual max-norm of Lambda J Lambda^+ - J.
double metric_residual(const ExtendedTransform &x);

/// Mean photon numbers at the two detectors for a single photon entering port 1.
std::pair<double, double> mzi_mean_photon_numbers(const MziSpec &spec);

/// Fringe visibilities V1, V2 of the two detectors.
std::pair<double, double> mzi_visibility(const MziSpec &spec);

}  // namespace qfp::fourport
