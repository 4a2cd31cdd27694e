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

#include <vector>

#include "qfp/fockspace.hpp"
#include "qfp/fourport.hpp"
#include "qfp/jet.hpp"

/// Field state after a four-port device fed with |p, q> and ground-state device modes,
/// computed from the transformed Wigner function.
namespace qfp::amplifying {

struct AmplifierFockSpec {
    int p = 0;
    int q = 0;
    fourport::DeviceResponse dev;
    int cutoff = -1;              ///< output truncation per mode; -1 picks a default
    double tail_tolerance = 1e-8; ///< allowed missing trace
};

struct WignerGrid {
    double extent = 4.0;  ///< samples span [-extent, extent] on each real axis
    int points = 33;
};

/// W(a1, a2) on a tensor grid over (Re a1, Im a1, Re a2, Im a2).
struct WignerSamples {
    std::vector<double> axis;
    std::vector<double> values;  ///< index ((i * n + j) * n + k) * n + l
    double integral = 0.0;

    double at(int i, int j, int k, int l) const {
        const std::size_t n = axis.size();
        return values[((i * n + j) * n + k) * n + l];
    }
};

/// Default cutoff: p + q plus the thermal tail length for ratio g / (1 + g) below 1e-10.
int default_cutoff(const AmplifierFockSpec &spec);

/// Point evaluator for the output Wigner function.
class AmplifierWigner {
  public:
    explicit AmplifierWigner(const AmplifierFockSpec &spec);
    double operator()(cplx a1, cplx a2) const;

  private:
    int p_;
    int q_;
    Mat2T<BiJet> m_;
    BiJet det_h_;
};

/// Throws GridTooCoarse if the samples do not integrate to 1 within 1e-3.
WignerSamples amplifier_fock_wigner(const AmplifierFockSpec &spec, const WignerGrid &grid);

/// Output density matrix. Throws CutoffTooSmall if the missing trace exceeds
/// spec.tail_tolerance.
fock::TwoModeDensityMatrix amplifier_fock_output(const AmplifierFockSpec &spec);

/// Diagonal reduced state of mode 1 or 2 with the same cutoff.
MatX amplifier_reduced_mode(const AmplifierFockSpec &spec, int mode);

namespace detail {

double factorial(int n);
double binomial(int n, int k);

/// Terminating 2F1(-m, b; c; z) by finite summation with compensated addition.
cplx hyp2f1_terminating(int m, double b, double c, cplx z);
BiJet hyp2f1_terminating(int m, double b, double c, const BiJet &z);

/// sum_{h<=p, l<=q} (-1)^{h+p+l+q} C(p,h) C(q,l) f_{hl}: turns the generating function
/// into the Fock-input result.
cplx derivative_operator(const BiJet &f, int p, int q);

template <class S>
struct Kernel {
    Mat2T<S> m;   ///< exponent matrix: W ~ exp(-2 a^+ M a) / det H
    Mat2T<S> e;   ///< M^-1
    S det_h;
    S det_e;
};

/// Integrating the device variables out of the generating Gaussian with
/// G = I - 2 diag(k1, k2).
template <class S>
Kernel<S> make_kernel(const Mat4 &lambda_inv, const S &k1, const S &k2) {
    const auto p = Mat2T<S>::from(lambda_inv.topLeftCorner<2, 2>());
    const auto q = Mat2T<S>::from(lambda_inv.topRightCorner<2, 2>());
    const auto r = Mat2T<S>::from(lambda_inv.bottomLeftCorner<2, 2>());
    const auto s = Mat2T<S>::from(lambda_inv.bottomRightCorner<2, 2>());
    const auto g = Mat2T<S>::diag(S(1.0) - S(2.0) * k1, S(1.0) - S(2.0) * k2);
    const auto n = p.adjoint() * g * p + r.adjoint() * r;
    const auto b = q.adjoint() * g * p + s.adjoint() * r;
    const auto h = q.adjoint() * g * q + s.adjoint() * s;
    Kernel<S> out;
    out.m = n - b.adjoint() * h.inverse() * b;
    out.e = out.m.inverse();
    out.det_h = h.det();
    out.det_e = out.e.det();
    return out;
}

/// exp(-2 a^+ M a) / det H.
template <class S>
S wigner_generating(const Kernel<S> &kr, cplx a1, cplx a2) {
    using std::exp;
    const cplx a[2] = {a1, a2};
    S quad(0.0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            quad = quad + kr.m(i, j) * S(std::conj(a[i]) * a[j]);
        }
    }
    return exp(S(-2.0) * quad) / kr.det_h;
}

/// Generating function of <m1 m2| rho |n1 n2> for m2 >= n2, m1 + m2 = n1 + n2.
template <class S>
S density_generating(const Kernel<S> &kr, int m1, int m2, int n1, int n2) {
    const int delta = m2 - n2;
    const S a1 = (S(1.0) + kr.e(0, 0)) * S(0.5);
    const S a2 = (S(1.0) + kr.e(1, 1)) * S(0.5);
    const S w2 = kr.e(0, 1) * kr.e(1, 0);
    const S lam = a1 - w2 / (S(4.0) * a2);
    const S inv_lam = S(1.0) / lam;
    const S cross = S(-1.0) * w2 / (S(4.0) * a2);
    const S a2m1 = a2 - S(1.0);
    S total(0.0);
    for (int i = 0; i <= n2; ++i) {
        const double c = binomial(n2 + delta, n2 - i) * factorial(delta + i) / factorial(i) *
                         binomial(m1 + delta, m1);
        S term = ipow(a2m1, n2 - i) * ipow(cross, i) * ipow(inv_lam, delta + i + 1) *
                 hyp2f1_terminating(m1, delta + i + 1.0, delta + 1.0, inv_lam);
        total = total + term * S(c);
    }
    const double pre = std::sqrt(factorial(m1) * factorial(n2) / (factorial(n1) * factorial(m2)));
    return kr.det_e / kr.det_h * S(pre) * ipow(kr.e(1, 0) * S(0.5), delta) *
           ipow(a2, -(n2 + delta + 1)) * total;
}

/// Generating function of the n-th diagonal element of the reduced state of `mode`.
template <class S>
S reduced_generating(const Kernel<S> &kr, int mode, int n) {
    const S eii = kr.e(mode, mode);
    return kr.det_e / kr.det_h * S(2.0) / (eii + S(1.0)) *
           ipow((eii - S(1.0)) / (eii + S(1.0)), n);
}

}  // namespace detail
}  // namespace qfp::amplifying
