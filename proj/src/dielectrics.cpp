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

#include "qfp/dielectrics.hpp"

#include <cmath>
#include <limits>

#include "qfp/errors.hpp"

namespace qfp::dielectrics {

void validate(const LorentzModel &model) {
    if (!(model.eps_s > 1.0) || !(model.gamma_rel >= 0.0)) {
        throw Error(ErrorCode::BadArgument, "Lorentz model needs eps_s > 1 and gamma_rel >= 0");
    }
}

void validate(const EitModel &model) {
    if (model.gamma1 < 0 || model.gamma0 < 0 || model.gamma_perp < 0) {
        throw Error(ErrorCode::BadArgument, "EIT relaxation rates must be non-negative");
    }
}

cplx lorentz_permittivity(const LorentzModel &model, double omega_rel) {
    const cplx den{1.0 - omega_rel * omega_rel, -2.0 * model.gamma_rel * omega_rel};
    return 1.0 + (model.eps_s - 1.0) / den;
}

cplx eit_susceptibility(const EitModel &m, double delta) {
    const cplx num = m.n_strength * m.gamma1 * cplx{-delta, m.gamma0};
    const cplx den{m.rabi * m.rabi + m.gamma_perp * m.gamma0 - delta * (m.delta1 - delta),
                   delta * (m.gamma_perp + m.gamma0) + m.delta1 * m.gamma0};
    if (std::abs(den) < 1e-300) {
        throw Error(ErrorCode::DegenerateDenominator, "EIT susceptibility denominator vanishes");
    }
    return num / den;
}

cplx refractive_index(cplx eps) {
    cplx n = std::sqrt(eps);
    if (n.imag() < 0.0) {
        n = -n;
    }
    return n;
}

SlabCoefficients slab_response(cplx eps, double thickness, double omega_rel) {
    const cplx n = refractive_index(eps);
    const cplx r12 = (1.0 - n) / (1.0 + n);
    // Round-trip phase factor P^2 with P = exp(i n omega d / c).
    const cplx p = std::exp(cplx{0.0, 1.0} * n * omega_rel * thickness);
    const cplx p2 = p * p;
    const cplx den = 1.0 - r12 * r12 * p2;
    SlabCoefficients out;
    out.r = r12 * (1.0 - p2) / den;
    out.t = (1.0 - r12 * r12) * p / den;
    const double flux = std::norm(out.r) + std::norm(out.t);
    if (flux > 1.0 + 1e-9) {
        throw Error(ErrorCode::NonPassiveResponse,
                    "slab reflects and transmits more than the incident flux");
    }
    out.absorption = std::max(0.0, 1.0 - flux);
    return out;
}

cplx channel_transmission(const ChannelSpec &spec) {
    if (spec.length < 0.0) {
        throw Error(ErrorCode::BadArgument, "channel length must be non-negative");
    }
    return std::exp(cplx{0.0, 1.0} * spec.refractive_index * spec.omega * spec.length);
}

double absorption_length(const ChannelSpec &spec) {
    const double k = spec.omega * spec.refractive_index.imag();
    return k > 0.0 ? 1.0 / k : std::numeric_limits<double>::infinity();
}

}  // namespace qfp::dielectrics
