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

#include <cstdint>
#include <vector>

#include "qfp/fockspace.hpp"

namespace qfp::entanglement {

/// Convex mixture of product pure states sum_k w_k |a_k b_k><a_k b_k|.
struct SeparableAnsatz {
    int dim1 = 1;
    int dim2 = 1;
    std::vector<double> weights;
    std::vector<VecX> local1;
    std::vector<VecX> local2;

    int m_terms() const { return static_cast<int>(weights.size()); }
    MatX density() const;
    /// Max deviation from the simplex and unit-norm constraints.
    double constraint_residual() const;
};

enum class Status { Converged, MaxIter };

struct EntanglementReport {
    double value = 0.0;
    SeparableAnsatz certificate;
    int restarts_used = 0;
    double gradient_norm = 0.0;
    Status status = Status::Converged;
    int iterations = 0;
};

struct ReeConfig {
    int m_terms = 0;  ///< 0 selects (d1 d2)^2
    int restarts = 16;
    int max_iter = 1000;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    bool warm_start = true;
};

/// Tr sigma (ln sigma - ln rho). Returns +infinity when sigma has weight
/// outside the support of rho. Throws DimensionMismatch.
double quantum_relative_entropy(const MatX &sigma, const MatX &rho);

/// Smooth objective over unconstrained parameters x = (u, Re/Im v_a, Re/Im v_b):
/// weights u_k^2 / sum u^2, local states v / |v|. Value is -Tr sigma ln rho_eps with
/// rho_eps = (1 - eps) rho + eps I / d.
class ReeObjective {
  public:
    static constexpr double kFloor = 1e-9;

    ReeObjective(const MatX &sigma, int dim1, int dim2, int m_terms);

    int n_params() const { return m_ * (1 + 2 * d1_ + 2 * d2_); }
    int m_terms() const { return m_; }
    double value_and_gradient(const Eigen::VectorXd &x, Eigen::VectorXd *grad) const;
    SeparableAnsatz ansatz(const Eigen::VectorXd &x) const;
    Eigen::VectorXd pack(const SeparableAnsatz &a) const;

  private:
    MatX sigma_;
    int d1_;
    int d2_;
    int m_;
};

/// Upper bound on the relative entropy of entanglement with a separable certificate.
/// Throws DimensionTooLarge if a local dimension of the support exceeds 6.
EntanglementReport relative_entropy_of_entanglement(const fock::TwoModeDensityMatrix &rho,
                                                    const ReeConfig &config = {});

/// Real parameters of an N x N separable mixture: 4 N^4 (N - 1) + N^4 - 1.
long long separable_parameter_count(int n_dim);

}  // namespace qfp::entanglement
