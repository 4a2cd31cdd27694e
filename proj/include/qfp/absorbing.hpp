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

#include "qfp/fockspace.hpp"
#include "qfp/fourport.hpp"

namespace qfp::absorbing {

struct BellPsiSpec {
    int n = 1;
    int sign = 1;
    cplx t1{1.0, 0.0};
    cplx t2{1.0, 0.0};
};

struct BellPhiSpec {
    int n = 1;
    cplx q{1.0, 0.0};
    cplx t1{1.0, 0.0};
    cplx t2{1.0, 0.0};
};

/// Field state after an absorbing device whose internal modes start in vacuum.
/// Output cutoffs equal the largest total photon number of the input.
fock::TwoModeDensityMatrix transform_fock_input(const fourport::DeviceResponse &dev,
                                                const fock::TwoModePureState &psi_in);

/// Mixed-input version: rho is decomposed into its eigenvectors.
fock::TwoModeDensityMatrix transform_fock_input(const fourport::DeviceResponse &dev,
                                                const fock::TwoModeDensityMatrix &rho_in);

/// Closed-form output of (|0n> + sign |n0>)/sqrt 2 through T = diag(t1, t2).
fock::TwoModeDensityMatrix bell_psi_output(const BellPsiSpec &spec);

/// Closed-form output of (|00> + q |nn>)/sqrt(1 + |q|^2) through T = diag(t1, t2).
fock::TwoModeDensityMatrix bell_phi_output(const BellPhiSpec &spec);

double overlap_psi(const BellPsiSpec &spec);

/// Convexity bound on the entanglement of bell_psi_output.
double upper_bound_psi(const BellPsiSpec &spec);

/// Convexity bound on the entanglement of bell_phi_output.
double upper_bound_phi(const BellPhiSpec &spec);

/// Entanglement of the pure state (|00> + q |nn>)/sqrt(1 + |q|^2).
double phi_entanglement_exact(int n, cplx q);

}  // namespace qfp::absorbing
