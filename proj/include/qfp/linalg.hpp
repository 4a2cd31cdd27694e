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

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace qfp {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

namespace linalg {

/// Eigenvalues at or below this are clamped to zero before square roots and logarithms.
inline constexpr double kClamp = 1e-14;

/// Largest absolute entry.
double max_abs(const MatX &m);

bool is_hermitian(const MatX &m, double tol);

/// Applies `f` to the spectrum of a Hermitian matrix. The input is symmetrized first.
MatX hermitian_function(const MatX &m, const std::function<double(double)> &f);

/// Positive square root of a positive-semidefinite Hermitian matrix; eigenvalues below
/// kClamp (including round-off negatives) are treated as zero.
MatX hermitian_sqrt(const MatX &m);

/// Polar decomposition m = P * W with P = sqrt(m m^+) positive and W unitary.
/// For singular m the unitary factor is completed from the SVD.
struct Polar {
    MatX positive;
    MatX unitary;
};
Polar polar(const MatX &m);

/// Hermitian eigenvalues in ascending order.
Eigen::VectorXd eigenvalues_hermitian(const MatX &m);

}  // namespace linalg
}  // namespace qfp
