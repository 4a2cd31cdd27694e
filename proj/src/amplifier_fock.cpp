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

#include "qfp/amplifier_fock.hpp"

#include <cmath>

#include "qfp/errors.hpp"

namespace qfp::amplifying {

namespace detail {

double factorial(int n) {
    return std::tgamma(n + 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

namespace {

// Neumaier summation on real and imaginary parts separately.
struct CompensatedSum {
    double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;

    static void add(double &s, double &c, double x) {
        const double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    void operator+=(cplx x) {
        add(re, re_c, x.real());
        add(im, im_c, x.imag());
    }
    cplx value() const { return {re + re_c, im + im_c}; }
};

// Coefficients (-m)_k (b)_k / ((c)_k k!) of the terminating series.
std::vector<double> hyp_coefficients(int m, double b, double c) {
    std::vector<double> out{1.0};
    for (int k = 0; k < m; ++k) {
        out.push_back(out.back() * (k - m) * (b + k) / ((c + k) * (k + 1.0)));
    }
    return out;
}

}  // namespace

cplx hyp2f1_terminating(int m, double b, double c, cplx z) {
    const auto coef = hyp_coefficients(m, b, c);
    CompensatedSum sum;
    cplx zk = 1.0;
    for (double a : coef) {
        sum += a * zk;
        zk *= z;
    }
    return sum.value();
}

BiJet hyp2f1_terminating(int m, double b, double c, const BiJet &z) {
    const auto coef = hyp_coefficients(m, b, c);
    const int p = z.p(), q = z.q();
    std::vector<CompensatedSum> sums(static_cast<std::size_t>((p + 1) * (q + 1)));
    BiJet zk = BiJet::constant(p, q, 1.0);
    for (double a : coef) {
        for (int h = 0; h <= p; ++h) {
            for (int l = 0; l <= q; ++l) {
                sums[static_cast<std::size_t>(h * (q + 1) + l)] += a * zk.coeff(h, l);
            }
        }
        zk = zk * z;
    }
    BiJet out = BiJet::constant(p, q, 0.0);
    for (int h = 0; h <= p; ++h) {
        for (int l = 0; l <= q; ++l) {
            out.at(h, l) = sums[static_cast<std::size_t>(h * (q + 1) + l)].value();
        }
    }
    return out;
}

cplx derivative_operator(const BiJet &f, int p, int q) {
    cplx s = 0.0;
    for (int h = 0; h <= p; ++h) {
        for (int l = 0; l <= q; ++l) {
            const double sign = ((h + p + l + q) % 2 == 0) ? 1.0 : -1.0;
            s += sign * binomial(p, h) * binomial(q, l) * f.coeff(h, l);
        }
    }
    return s;
}

}  // namespace detail

namespace {

constexpr int kMaxWignerPhotons = 4;
constexpr int kMaxClosedFormPhotons = 2;

Mat4 lambda_inverse(const fourport::DeviceResponse &dev) {
    const fourport::ExtendedTransform x = fourport::extended_transform(dev);
    return x.j_metric * x.lambda.adjoint() * x.j_metric;
}

void check_photons(const AmplifierFockSpec &spec, int limit) {
    if (spec.p < 0 || spec.q < 0 || spec.p > limit || spec.q > limit) {
        throw Error(ErrorCode::BadArgument,
                    "input photon numbers must lie in [0, " + std::to_string(limit) + "]");
    }
}

detail::Kernel<BiJet> jet_kernel(const AmplifierFockSpec &spec) {
    const BiJet k1 = BiJet::variable(spec.p, spec.q, 0);
    const BiJet k2 = BiJet::variable(spec.p, spec.q, 1);
    auto kr = detail::make_kernel(lambda_inverse(spec.dev), k1, k2);
    if (std::abs(kr.det_h.value()) < 1e-300) {
        throw Error(ErrorCode::DegenerateDenominator, "device block is singular");
    }
    return kr;
}

}  // namespace

int default_cutoff(const AmplifierFockSpec &spec) {
    const Mat2 tt = spec.dev.t_matrix * spec.dev.t_matrix.adjoint();
    const double g = linalg::eigenvalues_hermitian(tt).maxCoeff() - 1.0;
    int tail = 0;
    if (g > 1e-12) {
        const double ratio = g / (1.0 + g);
        tail = static_cast<int>(std::ceil(std::log(1e-10) / std::log(ratio)));
        while (std::pow(ratio, tail) >= 1e-10) ++tail;
    }
    return spec.p + spec.q + tail;
}

AmplifierWigner::AmplifierWigner(const AmplifierFockSpec &spec) : p_(spec.p), q_(spec.q) {
    check_photons(spec, kMaxWignerPhotons);
    const auto kr = jet_kernel(spec);
    m_ = kr.m;
    det_h_ = kr.det_h;
}

double AmplifierWigner::operator()(cplx a1, cplx a2) const {
    detail::Kernel<BiJet> kr;
    kr.m = m_;
    kr.det_h = det_h_;
    const BiJet f = detail::wigner_generating(kr, a1, a2);
    return std::pow(2.0 / kPi, 2) * detail::derivative_operator(f, p_, q_).real();
}

WignerSamples amplifier_fock_wigner(const AmplifierFockSpec &spec, const WignerGrid &grid) {
    if (grid.points < 2 || !(grid.extent > 0.0)) {
        throw Error(ErrorCode::BadArgument, "grid needs at least two points and positive extent");
    }
    const AmplifierWigner w(spec);
    WignerSamples out;
    const int n = grid.points;
    const double h = 2.0 * grid.extent / (n - 1);
    for (int i = 0; i < n; ++i) {
        out.axis.push_back(-grid.extent + h * i);
    }
    out.values.resize(static_cast<std::size_t>(n) * n * n * n);
    double sum = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx a1(out.axis[i], out.axis[j]);
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    const double v = w(a1, cplx(out.axis[k], out.axis[l]));
                    out.values[idx++] = v;
                    sum += v;
                }
            }
        }
    }
    out.integral = sum * std::pow(h, 4);
    if (std::abs(out.integral - 1.0) > 1e-3) {
        throw Error(ErrorCode::GridTooCoarse,
                    "Wigner samples integrate to " + std::to_string(out.integral));
    }
    return out;
}

fock::TwoModeDensityMatrix amplifier_fock_output(const AmplifierFockSpec &spec) {
    check_photons(spec, kMaxClosedFormPhotons);
    const int c = spec.cutoff >= 0 ? spec.cutoff : default_cutoff(spec);
    const auto kr = jet_kernel(spec);
    fock::TwoModeDensityMatrix rho(c, c);
    for (int m2 = 0; m2 <= c; ++m2) {
        for (int n2 = 0; n2 <= m2; ++n2) {
            const int delta = m2 - n2;
            for (int n1 = delta; n1 <= c; ++n1) {
                const int m1 = n1 - delta;
                const BiJet f = detail::density_generating(kr, m1, m2, n1, n2);
                const cplx v = detail::derivative_operator(f, spec.p, spec.q);
                rho(m1, m2, n1, n2) = v;
                rho(n1, n2, m1, m2) = std::conj(v);
            }
        }
    }
    for (int i = 0; i < rho.dim(); ++i) {
        rho.data()(i, i) = rho.data()(i, i).real();
    }
    const double tail = 1.0 - rho.trace();
    if (tail > spec.tail_tolerance) {
        throw Error(ErrorCode::CutoffTooSmall,
                    "cutoff " + std::to_string(c) + " misses trace " + std::to_string(tail));
    }
    return rho;
}

MatX amplifier_reduced_mode(const AmplifierFockSpec &spec, int mode) {
    if (mode != 1 && mode != 2) {
        throw Error(ErrorCode::BadArgument, "mode index must be 1 or 2");
    }
    check_photons(spec, kMaxClosedFormPhotons);
    const int c = spec.cutoff >= 0 ? spec.cutoff : default_cutoff(spec);
    const auto kr = jet_kernel(spec);
    MatX out = MatX::Zero(c + 1, c + 1);
    for (int n = 0; n <= c; ++n) {
        const BiJet f = detail::reduced_generating(kr, mode - 1, n);
        out(n, n) = detail::derivative_operator(f, spec.p, spec.q).real();
    }
    const double tail = 1.0 - out.trace().real();
    if (tail > spec.tail_tolerance) {
        throw Error(ErrorCode::CutoffTooSmall,
                    "cutoff " + std::to_string(c) + " misses trace " + std::to_string(tail));
    }
    return out;
}

}  // namespace qfp::amplifying
