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

#include "qfp/absorbing.hpp"

#include <cmath>

#include "qfp/errors.hpp"

namespace qfp::absorbing {

namespace {

using Poly = std::map<fock::FourModeState::Key, cplx>;

double factorial(int n) {
    return std::tgamma(n + 1.0);
}

double binom(int n, int k) {
    return std::round(factorial(n) / (factorial(k) * factorial(n - k)));
}

double xlogx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

// Multiplies the polynomial by sum_j column[j] x_j.
Poly times_linear(const Poly &p, const Eigen::Vector4cd &column) {
    Poly out;
    for (const auto &[k, v] : p) {
        for (int j = 0; j < 4; ++j) {
            if (column[j] == 0.0) {
                continue;
            }
            auto kk = k;
            ++kk[j];
            out[kk] += v * column[j];
        }
    }
    return out;
}

void check_spec(cplx t1, cplx t2, int n) {
    if (n < 1) {
        throw Error(ErrorCode::BadArgument, "photon number must be at least 1");
    }
    if (std::abs(t1) > 1.0 + 1e-12 || std::abs(t2) > 1.0 + 1e-12) {
        throw Error(ErrorCode::InfeasibleCoefficients, "channel transmission exceeds 1");
    }
}

}  // namespace

fock::TwoModeDensityMatrix transform_fock_input(const fourport::DeviceResponse &dev,
                                                const fock::TwoModePureState &psi_in) {
    if (dev.sigma != 1) {
        throw Error(ErrorCode::BadArgument, "device must be absorbing");
    }
    const Mat4 lambda = fourport::extended_transform(dev).lambda;
    const int n_max = psi_in.max_total_photons();

    fock::FourModeState out;
    // Powers of the transformed creation operators, built incrementally per mode.
    std::vector<Poly> pow1{Poly{{{0, 0, 0, 0}, 1.0}}};
    std::vector<Poly> pow2{Poly{{{0, 0, 0, 0}, 1.0}}};
    for (int k = 1; k <= psi_in.cutoff1(); ++k) {
        pow1.push_back(times_linear(pow1.back(), lambda.col(0)));
    }
    for (int k = 1; k <= psi_in.cutoff2(); ++k) {
        pow2.push_back(times_linear(pow2.back(), lambda.col(1)));
    }
    for (int n1 = 0; n1 <= psi_in.cutoff1(); ++n1) {
        for (int n2 = 0; n2 <= psi_in.cutoff2(); ++n2) {
            const cplx c = psi_in.amplitude(n1, n2);
            if (c == 0.0) {
                continue;
            }
            const cplx pre = c / std::sqrt(factorial(n1) * factorial(n2));
            for (const auto &[k1, v1] : pow1[n1]) {
                for (const auto &[k2, v2] : pow2[n2]) {
                    fock::FourModeState::Key k;
                    double f = 1.0;
                    for (int i = 0; i < 4; ++i) {
                        k[i] = k1[i] + k2[i];
                        f *= factorial(k[i]);
                    }
                    out.add(k, pre * v1 * v2 * std::sqrt(f));
                }
            }
        }
    }
    fock::TwoModeDensityMatrix rho = out.trace_device();
    return rho.resized(n_max, n_max);
}

fock::TwoModeDensityMatrix transform_fock_input(const fourport::DeviceResponse &dev,
                                                const fock::TwoModeDensityMatrix &rho_in) {
    fock::require_state(rho_in.data());
    Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (rho_in.data() + rho_in.data().adjoint()));
    const int c = rho_in.cutoff1() + rho_in.cutoff2();
    fock::TwoModeDensityMatrix acc(c, c);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double w = es.eigenvalues()[i];
        if (w <= linalg::kClamp) {
            continue;
        }
        const fock::TwoModePureState psi(rho_in.cutoff1(), rho_in.cutoff2(), es.eigenvectors().col(i));
        const auto part = transform_fock_input(dev, psi).resized(c, c);
        acc.data() += w * part.data();
    }
    int n_max = 0;
    for (int n1 = 0; n1 <= rho_in.cutoff1(); ++n1) {
        for (int n2 = 0; n2 <= rho_in.cutoff2(); ++n2) {
            if (std::abs(rho_in(n1, n2, n1, n2)) > 0.0) {
                n_max = std::max(n_max, n1 + n2);
            }
        }
    }
    return acc.resized(n_max, n_max);
}

fock::TwoModeDensityMatrix bell_psi_output(const BellPsiSpec &s) {
    check_spec(s.t1, s.t2, s.n);
    const int n = s.n;
    const double a1 = std::norm(s.t1), a2 = std::norm(s.t2);
    fock::TwoModeDensityMatrix rho(n, n);
    for (int k = 0; k < n; ++k) {
        rho(k, 0, k, 0) += 0.5 * binom(n, k) * std::pow(a1, k) * std::pow(1.0 - a1, n - k);
        rho(0, k, 0, k) += 0.5 * binom(n, k) * std::pow(a2, k) * std::pow(1.0 - a2, n - k);
    }
    // Unnormalized pure part T1^n |n0> + sign T2^n |0n>, weight 1/2.
    const cplx u = std::pow(s.t1, n) * (s.sign >= 0 ? 1.0 : -1.0);
    const cplx v = std::pow(s.t2, n);
    rho(n, 0, n, 0) += 0.5 * std::norm(u);
    rho(0, n, 0, n) += 0.5 * std::norm(v);
    rho(n, 0, 0, n) += 0.5 * u * std::conj(v);
    rho(0, n, n, 0) += 0.5 * v * std::conj(u);
    return rho;
}

fock::TwoModeDensityMatrix bell_phi_output(const BellPhiSpec &s) {
    check_spec(s.t1, s.t2, s.n);
    const int n = s.n;
    const double a1 = std::norm(s.t1), a2 = std::norm(s.t2);
    const double q2 = std::norm(s.q);
    fock::TwoModeDensityMatrix rho(n, n);
    const double w = q2 / (1.0 + q2);
    for (int k1 = 0; k1 <= n; ++k1) {
        for (int k2 = 0; k2 <= n; ++k2) {
            rho(k1, k2, k1, k2) += w * binom(n, k1) * binom(n, k2) * std::pow(a1, k1) *
                                   std::pow(a2, k2) * std::pow(1.0 - a1, n - k1) *
                                   std::pow(1.0 - a2, n - k2);
        }
    }
    rho(n, n, n, n) -= w * std::pow(a1, n) * std::pow(a2, n);
    const cplx qp = s.q * std::pow(s.t1, n) * std::pow(s.t2, n);
    const double p = 1.0 / (1.0 + q2);
    rho(0, 0, 0, 0) += p;
    rho(n, n, n, n) += p * std::norm(qp);
    rho(n, n, 0, 0) += p * qp;
    rho(0, 0, n, n) += p * std::conj(qp);
    return rho;
}

double overlap_psi(const BellPsiSpec &spec) {
    return fock::overlap(fock::TwoModePureState::bell_psi(spec.n, spec.sign), bell_psi_output(spec));
}

double upper_bound_psi(const BellPsiSpec &s) {
    check_spec(s.t1, s.t2, s.n);
    const double x = std::pow(std::norm(s.t1), s.n);
    const double y = std::pow(std::norm(s.t2), s.n);
    return std::max(0.0, 0.5 * (xlogx(x + y) - xlogx(x) - xlogx(y)));
}

double upper_bound_phi(const BellPhiSpec &s) {
    check_spec(s.t1, s.t2, s.n);
    const double qp2 = std::norm(s.q * std::pow(s.t1, s.n) * std::pow(s.t2, s.n));
    return std::max(0.0, (xlogx(1.0 + qp2) - xlogx(qp2)) / (1.0 + std::norm(s.q)));
}

double phi_entanglement_exact(int n, cplx q) {
    if (n < 1) {
        throw Error(ErrorCode::BadArgument, "photon number must be at least 1");
    }
    const double q2 = std::norm(q);
    if (q2 > 1.0 + 1e-12) {
        throw Error(ErrorCode::BadArgument, "|q| must not exceed 1");
    }
    return std::log1p(q2) - xlogx(q2) / (1.0 + q2);
}

}  // namespace qfp::absorbing
