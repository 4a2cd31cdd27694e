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

#include "qfp/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "qfp/errors.hpp"

namespace qfp::fock {

namespace {

void check_cutoffs(int c1, int c2) {
    if (c1 < 0 || c2 < 0) {
        throw Error(ErrorCode::BadArgument, "cutoffs must be non-negative");
    }
}

}  // namespace

TwoModePureState::TwoModePureState(int cutoff1, int cutoff2)
    : c1_(cutoff1), c2_(cutoff2) {
    check_cutoffs(c1_, c2_);
    amp_ = VecX::Zero((c1_ + 1) * (c2_ + 1));
}

TwoModePureState::TwoModePureState(int cutoff1, int cutoff2, VecX amplitudes)
    : c1_(cutoff1), c2_(cutoff2), amp_(std::move(amplitudes)) {
    check_cutoffs(c1_, c2_);
    if (amp_.size() != (c1_ + 1) * (c2_ + 1)) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude vector does not match cutoffs");
    }
}

TwoModePureState TwoModePureState::fock(int n1, int n2) {
    TwoModePureState s(n1, n2);
    s.amplitude(n1, n2) = 1.0;
    return s;
}

TwoModePureState TwoModePureState::bell_psi(int n, int sign) {
    if (n < 1) {
        throw Error(ErrorCode::BadArgument, "photon number must be at least 1");
    }
    TwoModePureState s(n, n);
    const double h = 1.0 / std::sqrt(2.0);
    s.amplitude(0, n) = h;
    s.amplitude(n, 0) = sign >= 0 ? h : -h;
    return s;
}

TwoModePureState TwoModePureState::bell_phi(int n, cplx q) {
    if (n < 1) {
        throw Error(ErrorCode::BadArgument, "photon number must be at least 1");
    }
    TwoModePureState s(n, n);
    const double norm = std::sqrt(1.0 + std::norm(q));
    s.amplitude(0, 0) = 1.0 / norm;
    s.amplitude(n, n) = q / norm;
    return s;
}

cplx TwoModePureState::amplitude(int n1, int n2) const {
    if (n1 < 0 || n2 < 0 || n1 > c1_ || n2 > c2_) {
        return 0.0;
    }
    return amp_[index(n1, n2)];
}

int TwoModePureState::max_total_photons() const {
    int best = 0;
    for (int n1 = 0; n1 <= c1_; ++n1) {
        for (int n2 = 0; n2 <= c2_; ++n2) {
            if (amplitude(n1, n2) != 0.0) {
                best = std::max(best, n1 + n2);
            }
        }
    }
    return best;
}

TwoModeDensityMatrix::TwoModeDensityMatrix(int cutoff1, int cutoff2)
    : c1_(cutoff1), c2_(cutoff2) {
    check_cutoffs(c1_, c2_);
    const int d = (c1_ + 1) * (c2_ + 1);
    data_ = MatX::Zero(d, d);
}

TwoModeDensityMatrix::TwoModeDensityMatrix(int cutoff1, int cutoff2, MatX data)
    : c1_(cutoff1), c2_(cutoff2), data_(std::move(data)) {
    check_cutoffs(c1_, c2_);
    const int d = (c1_ + 1) * (c2_ + 1);
    if (data_.rows() != d || data_.cols() != d) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix does not match cutoffs");
    }
}

TwoModeDensityMatrix TwoModeDensityMatrix::from_pure(const TwoModePureState &psi) {
    return TwoModeDensityMatrix(psi.cutoff1(), psi.cutoff2(),
                                psi.amplitudes() * psi.amplitudes().adjoint());
}

TwoModeDensityMatrix TwoModeDensityMatrix::resized(int cutoff1, int cutoff2) const {
    TwoModeDensityMatrix out(cutoff1, cutoff2);
    const int k1 = std::min(c1_, cutoff1), k2 = std::min(c2_, cutoff2);
    for (int n1 = 0; n1 <= k1; ++n1) {
        for (int n2 = 0; n2 <= k2; ++n2) {
            for (int m1 = 0; m1 <= k1; ++m1) {
                for (int m2 = 0; m2 <= k2; ++m2) {
                    out(n1, n2, m1, m2) = (*this)(n1, n2, m1, m2);
                }
            }
        }
    }
    return out;
}

TwoModeDensityMatrix TwoModeDensityMatrix::trimmed(double tol) const {
    int t1 = 0, t2 = 0;
    for (int n1 = 0; n1 <= c1_; ++n1) {
        for (int n2 = 0; n2 <= c2_; ++n2) {
            if (std::abs((*this)(n1, n2, n1, n2)) > tol) {
                t1 = std::max(t1, n1);
                t2 = std::max(t2, n2);
            }
        }
    }
    return resized(t1, t2);
}

double FourModeState::norm() const {
    double s = 0.0;
    for (const auto &[k, v] : amp_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

std::array<int, 4> FourModeState::max_photons() const {
    std::array<int, 4> m{0, 0, 0, 0};
    for (const auto &[k, v] : amp_) {
        for (int i = 0; i < 4; ++i) {
            m[i] = std::max(m[i], k[i]);
        }
    }
    return m;
}

TwoModeDensityMatrix FourModeState::trace_device() const {
    const auto m = max_photons();
    TwoModeDensityMatrix rho(m[0], m[1]);
    // Group field amplitudes by device configuration, then sum the outer products.
    std::map<std::pair<int, int>, std::vector<std::pair<int, cplx>>> by_device;
    for (const auto &[k, v] : amp_) {
        if (v != 0.0) {
            by_device[{k[2], k[3]}].push_back({rho.index(k[0], k[1]), v});
        }
    }
    for (const auto &[dev, col] : by_device) {
        for (const auto &[i, vi] : col) {
            for (const auto &[j, vj] : col) {
                rho.data()(i, j) += vi * std::conj(vj);
            }
        }
    }
    return rho;
}

void require_state(const MatX &rho) {
    if (rho.rows() != rho.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-6) {
        throw Error(ErrorCode::NotAState, "trace " + std::to_string(tr) + " differs from 1");
    }
}

double von_neumann_entropy(const MatX &rho) {
    require_state(rho);
    const Eigen::VectorXd lam = linalg::eigenvalues_hermitian(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] > linalg::kClamp) {
            s -= lam[i] * std::log(lam[i]);
        }
    }
    return std::max(0.0, s);
}

double von_neumann_entropy(const TwoModeDensityMatrix &rho) {
    return von_neumann_entropy(rho.data());
}

MatX partial_trace(const TwoModeDensityMatrix &rho, int keep) {
    if (keep != 1 && keep != 2) {
        throw Error(ErrorCode::BadArgument, "mode index must be 1 or 2");
    }
    const int ck = keep == 1 ? rho.cutoff1() : rho.cutoff2();
    const int co = keep == 1 ? rho.cutoff2() : rho.cutoff1();
    MatX out = MatX::Zero(ck + 1, ck + 1);
    for (int a = 0; a <= ck; ++a) {
        for (int b = 0; b <= ck; ++b) {
            cplx s = 0.0;
            for (int k = 0; k <= co; ++k) {
                s += keep == 1 ? rho(a, k, b, k) : rho(k, a, k, b);
            }
            out(a, b) = s;
        }
    }
    return out;
}

TwoModeDensityMatrix embed(const MatX &single, int keep, int other_cutoff) {
    if (keep != 1 && keep != 2) {
        throw Error(ErrorCode::BadArgument, "mode index must be 1 or 2");
    }
    const int c = static_cast<int>(single.rows()) - 1;
    TwoModeDensityMatrix out = keep == 1 ? TwoModeDensityMatrix(c, other_cutoff)
                                         : TwoModeDensityMatrix(other_cutoff, c);
    for (int a = 0; a <= c; ++a) {
        for (int b = 0; b <= c; ++b) {
            if (keep == 1) {
                out(a, 0, b, 0) = single(a, b);
            } else {
                out(0, a, 0, b) = single(a, b);
            }
        }
    }
    return out;
}

double mutual_information(const TwoModeDensityMatrix &rho) {
    const double s1 = von_neumann_entropy(partial_trace(rho, 1));
    const double s2 = von_neumann_entropy(partial_trace(rho, 2));
    return std::max(0.0, s1 + s2 - von_neumann_entropy(rho));
}

double overlap(const TwoModePureState &psi, const TwoModeDensityMatrix &rho) {
    VecX v = VecX::Zero(rho.dim());
    for (int n1 = 0; n1 <= rho.cutoff1(); ++n1) {
        for (int n2 = 0; n2 <= rho.cutoff2(); ++n2) {
            v[rho.index(n1, n2)] = psi.amplitude(n1, n2);
        }
    }
    return (v.adjoint() * rho.data() * v)(0, 0).real();
}

}  // namespace qfp::fock
