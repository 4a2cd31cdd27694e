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

#include "qfp/linalg.hpp"

/// Material response models and the per-frequency coefficients derived from them.
///
/// Frequencies are dimensionless: omega_rel = omega / omega0 for Lorentz media and
/// delta / gamma_perp for the EIT medium. Lengths are measured in units of c / omega0
/// (slabs) or c / omega_ref (channels).
namespace qfp::dielectrics {

/// Single-resonance Lorentz permittivity.
struct LorentzModel {
    double eps_s = 1.5;       ///< static permittivity, > 1
    double gamma_rel = 1e-3;  ///< damping gamma / omega0, >= 0
};

/// Three-level medium driven into electromagnetically induced transparency.
struct EitModel {
    double n_strength = 1.0;
    double gamma1 = 1.0;
    double gamma0 = 1e-4;
    double gamma_perp = 1.0;
    double rabi = 1.0;
    double delta1 = 0.0;
};

/// A homogeneous propagation channel (fiber arm).
struct ChannelSpec {
    cplx refractive_index{1.0, 0.0};  ///< eta + i kappa
    double length = 0.0;              ///< in units of c / omega_ref
    double omega = 1.0;               ///< omega / omega_ref
};

struct SlabCoefficients {
    cplx r;
    cplx t;
    double absorption;
};

void validate(const LorentzModel &model);
void validate(const EitModel &model);

cplx lorentz_permittivity(const LorentzModel &model, double omega_rel);

/// Probe susceptibility of the EIT medium at two-photon detuning `delta`.
/// Throws DegenerateDenominator if the resonance denominator vanishes.
cplx eit_susceptibility(const EitModel &model, double delta);

/// Principal square root with Im >= 0 (decaying wave in a passive medium).
cplx refractive_index(cplx eps);

/// Normal-incidence reflection and transmission of a single slab in vacuum.
/// Throws NonPassiveResponse if |r|^2 + |t|^2 exceeds one.
SlabCoefficients slab_response(cplx eps, double thickness, double omega_rel);

/// Complex amplitude transmission exp(i n omega l). Its magnitude follows the
/// Lambert-Beer law with absorption length 1 / (omega kappa).
cplx channel_transmission(const ChannelSpec &spec);

/// Absorption length c / (omega kappa); infinite for kappa == 0.
double absorption_length(const ChannelSpec &spec);

}  // namespace qfp::dielectrics
