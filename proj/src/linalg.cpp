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

#include "qfp/linalg.hpp"

#include "qfp/errors.hpp"

namespace qfp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InfeasibleCoefficients: return "InfeasibleCoefficients";
        case ErrorCode::InconsistentDevice: return "InconsistentDevice";
        case ErrorCode::NonPassiveResponse: return "NonPassiveResponse";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::UndefinedVisibility: return "UndefinedVisibility";
        case ErrorCode::NotAState: return "NotAState";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
        case ErrorCode::UnknownScenario: return "UnknownScenario";
        case ErrorCode::BadArgument: return "BadArgument";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Error";
}

namespace linalg {

double max_abs(const MatX &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const MatX &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

MatX hermitian_function(const MatX &m, const std::function<double(double)> &f) {
    const MatX h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<MatX> es(h);
    Eigen::VectorXd lam = es.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        lam[i] = f(lam[i]);
    }
    return es.eigenvectors() * lam.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

MatX hermitian_sqrt(const MatX &m) {
    return hermitian_function(m, [](double x) { return x <= kClamp ? 0.0 : std::sqrt(x); });
}

Polar polar(const MatX &m) {
    Eigen::JacobiSVD<MatX> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const MatX &u = svd.matrixU();
    const MatX &v = svd.matrixV();
    Polar out;
    out.positive = u * svd.singularValues().cast<cplx>().asDiagonal() * u.adjoint();
    out.unitary = u * v.adjoint();
    return out;
}

Eigen::VectorXd eigenvalues_hermitian(const MatX &m) {
    const MatX h = 0.5 * (m + m.adjoint());
    return Eigen::SelfAdjointEigenSolver<MatX>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace linalg
}  // namespace qfp
