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

#include "qfp/entanglement.hpp"

#include <cmath>
#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <random>

#include <ceres/ceres.h>

#include "qfp/errors.hpp"
#include "qfp/seeding.hpp"

namespace qfp::entanglement {

namespace {

constexpr int kMaxLocalDim = 6;
constexpr double kSupportTol = 1e-13;
constexpr double kWarmWeight = 1e-6;

VecX kron(const VecX &a, const VecX &b) {
    VecX out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

double trace_xlogx(const MatX &sigma) {
    const Eigen::VectorXd lam = linalg::eigenvalues_hermitian(sigma);
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam[i] > linalg::kClamp) {
            s += lam[i] * std::log(lam[i]);
        }
    }
    return s;
}

class CeresAdapter : public ceres::FirstOrderFunction {
  public:
    explicit CeresAdapter(const ReeObjective &obj) : obj_(obj) {}

    bool Evaluate(const double *x, double *f, double *g) const override {
        const Eigen::Map<const Eigen::VectorXd> xv(x, obj_.n_params());
        Eigen::VectorXd grad;
        f[0] = obj_.value_and_gradient(xv, g ? &grad : nullptr);
        if (g) {
            Eigen::Map<Eigen::VectorXd>(g, obj_.n_params()) = grad;
        }
        return std::isfinite(f[0]);
    }

    int NumParameters() const override { return obj_.n_params(); }

  private:
    const ReeObjective &obj_;
};

// Stops once the objective has dropped by less than tol (relative) over `window` iterations.
class WindowStop : public ceres::IterationCallback {
  public:
    WindowStop(double tol, int window) : tol_(tol), window_(window) {}

    ceres::CallbackReturnType operator()(const ceres::IterationSummary &s) override {
        history_.push_back(s.cost);
        if (static_cast<int>(history_.size()) > window_) {
            const double old = history_.front();
            history_.pop_front();
            if (old - s.cost <= tol_ * (1.0 + std::abs(s.cost))) {
                converged_ = true;
                return ceres::SOLVER_TERMINATE_SUCCESSFULLY;
            }
        }
        return ceres::SOLVER_CONTINUE;
    }

    bool converged() const { return converged_; }

  private:
    double tol_;
    int window_;
    std::deque<double> history_;
    bool converged_ = false;
};

struct RunResult {
    double value = std::numeric_limits<double>::infinity();
    SeparableAnsatz certificate;
    bool converged = false;
    int iterations = 0;
};

SeparableAnsatz with_floor(const SeparableAnsatz &a, double eps) {
    SeparableAnsatz out = a;
    for (double &w : out.weights) {
        w *= 1.0 - eps;
    }
    const double share = eps / (a.dim1 * a.dim2);
    for (int i = 0; i < a.dim1; ++i) {
        for (int j = 0; j < a.dim2; ++j) {
            out.weights.push_back(share);
            out.local1.push_back(VecX::Unit(a.dim1, i));
            out.local2.push_back(VecX::Unit(a.dim2, j));
        }
    }
    return out;
}

// Exact value of a certificate, falling back to its floored version if the
// unfloored state misses part of sigma's support.
RunResult score(const MatX &sigma, const SeparableAnsatz &a) {
    RunResult r;
    r.value = quantum_relative_entropy(sigma, a.density());
    r.certificate = a;
    const SeparableAnsatz floored = with_floor(a, ReeObjective::kFloor);
    const double vf = quantum_relative_entropy(sigma, floored.density());
    if (vf < r.value) {
        r.value = vf;
        r.certificate = floored;
    }
    return r;
}

// Product basis U1 (x) U2 with weights given by the diagonal of sigma in that basis.
SeparableAnsatz dephased(const MatX &sigma, const MatX &u1, const MatX &u2) {
    SeparableAnsatz a;
    a.dim1 = static_cast<int>(u1.rows());
    a.dim2 = static_cast<int>(u2.rows());
    for (int i = 0; i < a.dim1; ++i) {
        for (int j = 0; j < a.dim2; ++j) {
            const VecX x = kron(u1.col(i), u2.col(j));
            a.weights.push_back(std::max(0.0, (x.adjoint() * sigma * x)(0, 0).real()));
            a.local1.push_back(u1.col(i));
            a.local2.push_back(u2.col(j));
        }
    }
    return a;
}

VecX random_unit(int d, std::mt19937_64 &gen) {
    std::normal_distribution<double> nd;
    VecX v(d);
    for (int i = 0; i < d; ++i) {
        v[i] = cplx(nd(gen), nd(gen));
    }
    return v / v.norm();
}

// Pads a warm-start ansatz to m terms with small random product states.
SeparableAnsatz pad(const SeparableAnsatz &a, int m, std::mt19937_64 &gen) {
    SeparableAnsatz out;
    out.dim1 = a.dim1;
    out.dim2 = a.dim2;
    for (int k = 0; k < m; ++k) {
        if (k < a.m_terms()) {
            out.weights.push_back(std::max(a.weights[k], kWarmWeight));
            out.local1.push_back(a.local1[k]);
            out.local2.push_back(a.local2[k]);
        } else {
            out.weights.push_back(kWarmWeight);
            out.local1.push_back(random_unit(a.dim1, gen));
            out.local2.push_back(random_unit(a.dim2, gen));
        }
    }
    double s = 0.0;
    for (double w : out.weights) s += w;
    for (double &w : out.weights) w /= s;
    return out;
}

SeparableAnsatz random_ansatz(int d1, int d2, int m, std::mt19937_64 &gen) {
    SeparableAnsatz a;
    a.dim1 = d1;
    a.dim2 = d2;
    for (int k = 0; k < m; ++k) {
        a.weights.push_back(1.0 / m);
        a.local1.push_back(random_unit(d1, gen));
        a.local2.push_back(random_unit(d2, gen));
    }
    return a;
}

RunResult optimize(const MatX &sigma, const ReeObjective &obj, const SeparableAnsatz &start,
                   const ReeConfig &cfg) {
    Eigen::VectorXd x = obj.pack(start);
    ceres::GradientProblem problem(new CeresAdapter(obj));
    ceres::GradientProblemSolver::Options opt;
    opt.line_search_direction_type = ceres::LBFGS;
    opt.max_lbfgs_rank = 20;
    opt.max_num_iterations = cfg.max_iter;
    opt.function_tolerance = 0.0;
    opt.gradient_tolerance = 1e-14;
    opt.parameter_tolerance = 0.0;
    opt.logging_type = ceres::SILENT;
    WindowStop stop(cfg.tol, 20);
    opt.callbacks.push_back(&stop);
    opt.update_state_every_iteration = true;
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(opt, problem, x.data(), &summary);
    RunResult r = score(sigma, obj.ansatz(x));
    r.converged = stop.converged() || summary.termination_type == ceres::CONVERGENCE;
    r.iterations = static_cast<int>(summary.iterations.size());
    return r;
}

SeparableAnsatz embed_certificate(const SeparableAnsatz &a, int d1, int d2) {
    SeparableAnsatz out = a;
    out.dim1 = d1;
    out.dim2 = d2;
    for (auto &v : out.local1) {
        VecX p = VecX::Zero(d1);
        p.head(v.size()) = v;
        v = p;
    }
    for (auto &v : out.local2) {
        VecX p = VecX::Zero(d2);
        p.head(v.size()) = v;
        v = p;
    }
    return out;
}

}  // namespace

MatX SeparableAnsatz::density() const {
    const int d = dim1 * dim2;
    MatX rho = MatX::Zero(d, d);
    for (int k = 0; k < m_terms(); ++k) {
        const VecX x = kron(local1[k], local2[k]);
        rho.noalias() += weights[k] * (x * x.adjoint());
    }
    return rho;
}

double SeparableAnsatz::constraint_residual() const {
    double s = 0.0, res = 0.0;
    for (int k = 0; k < m_terms(); ++k) {
        s += weights[k];
        res = std::max(res, std::max(0.0, -weights[k]));
        res = std::max(res, std::abs(local1[k].norm() - 1.0));
        res = std::max(res, std::abs(local2[k].norm() - 1.0));
    }
    return std::max(res, std::abs(s - 1.0));
}

double quantum_relative_entropy(const MatX &sigma, const MatX &rho) {
    if (sigma.rows() != rho.rows() || sigma.cols() != rho.cols() || sigma.rows() != sigma.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "relative entropy needs equal square matrices");
    }
    Eigen::SelfAdjointEigenSolver<MatX> es(0.5 * (rho + rho.adjoint()));
    const MatX s = es.eigenvectors().adjoint() * sigma * es.eigenvectors();
    double cross = 0.0, outside = 0.0;
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        const double mu = es.eigenvalues()[i];
        const double p = s(i, i).real();
        if (mu < kSupportTol) {
            outside += std::max(0.0, p);
        } else {
            cross += p * std::log(mu);
        }
    }
    if (outside > 1e-12) {
        return std::numeric_limits<double>::infinity();
    }
    return std::max(0.0, trace_xlogx(sigma) - cross);
}

ReeObjective::ReeObjective(const MatX &sigma, int dim1, int dim2, int m_terms)
    : sigma_(sigma), d1_(dim1), d2_(dim2), m_(m_terms) {
    if (sigma.rows() != dim1 * dim2 || sigma.cols() != dim1 * dim2) {
        throw Error(ErrorCode::DimensionMismatch, "sigma does not match local dimensions");
    }
    if (m_terms < 1) {
        throw Error(ErrorCode::BadArgument, "need at least one product term");
    }
}

double ReeObjective::value_and_gradient(const Eigen::VectorXd &x, Eigen::VectorXd *grad) const {
    using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const int m = m_, d = d1_ * d2_;
    const int oa = m, ob = m + 2 * m * d1_;
    const Eigen::VectorXd u = x.head(m);
    const double usum = u.squaredNorm();
    if (!(usum > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    const Eigen::VectorXd w = u.array().square() / usum;

    // Interleaved (re, im) pairs are viewed as complex rows of length d1 and d2.
    const Eigen::Map<const RowMat> va(reinterpret_cast<const cplx *>(x.data() + oa), m, d1_);
    const Eigen::Map<const RowMat> vb(reinterpret_cast<const cplx *>(x.data() + ob), m, d2_);
    const Eigen::VectorXd na = va.rowwise().norm();
    const Eigen::VectorXd nb = vb.rowwise().norm();
    if (na.minCoeff() <= 0.0 || nb.minCoeff() <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const RowMat a = na.cwiseInverse().asDiagonal() * va;
    const RowMat b = nb.cwiseInverse().asDiagonal() * vb;

    RowMat xs(m, d);
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < d1_; ++i) {
            for (int j = 0; j < d2_; ++j) {
                xs(k, i * d2_ + j) = a(k, i) * b(k, j);
            }
        }
    }
    // Small sizes: plain loops beat blocked products here.
    MatX rho = MatX::Zero(d, d);
    for (int k = 0; k < m; ++k) {
        const cplx *row = &xs(k, 0);
        const double wk = (1.0 - kFloor) * w[k];
        for (int p = 0; p < d; ++p) {
            const double cr = wk * row[p].real(), ci = wk * row[p].imag();
            cplx *out = &rho(0, p);
            for (int r = p; r < d; ++r) {
                // Column p of the lower triangle holds rho(r, p) = c * conj(row[r]) conjugated.
                out[r] += cplx(cr * row[r].real() + ci * row[r].imag(),
                               ci * row[r].real() - cr * row[r].imag());
            }
        }
    }
    for (int p = 0; p < d; ++p) {
        rho(p, p) = rho(p, p).real() + kFloor / d;
        for (int r = p + 1; r < d; ++r) {
            rho(r, p) = std::conj(rho(r, p));
            rho(p, r) = std::conj(rho(r, p));
        }
    }

    Eigen::SelfAdjointEigenSolver<MatX> es(rho);
    const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(1e-300);
    const Eigen::VectorXd loglam = lam.array().log();
    const MatX &q = es.eigenvectors();
    const MatX s = q.adjoint() * sigma_ * q;
    double f = 0.0;
    for (int i = 0; i < d; ++i) {
        f -= s(i, i).real() * loglam[i];
    }
    if (!grad) {
        return f;
    }

    // Frechet derivative of log at rho applied to sigma.
    MatX gam(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double dl = lam[i] - lam[j];
            gam(i, j) = std::abs(dl) > 1e-8 * std::max(lam[i], lam[j])
                            ? (loglam[i] - loglam[j]) / dl
                            : 2.0 / (lam[i] + lam[j]);
        }
    }
    const MatX g = (1.0 - kFloor) * (q * gam.cwiseProduct(s) * q.adjoint());
    RowMat gx(m, d);
    for (int k = 0; k < m; ++k) {
        const cplx *row = &xs(k, 0);
        for (int p = 0; p < d; ++p) {
            double ar = 0.0, ai = 0.0;
            for (int r = 0; r < d; ++r) {
                // g is Hermitian, so g(p, r) = conj(g(r, p)) reads down a column.
                const cplx h = g(r, p);
                ar += h.real() * row[r].real() + h.imag() * row[r].imag();
                ai += h.real() * row[r].imag() - h.imag() * row[r].real();
            }
            gx(k, p) = cplx(ar, ai);
        }
    }

    grad->resize(n_params());
    Eigen::Map<RowMat> ga_out(reinterpret_cast<cplx *>(grad->data() + oa), m, d1_);
    Eigen::Map<RowMat> gb_out(reinterpret_cast<cplx *>(grad->data() + ob), m, d2_);
    Eigen::VectorXd gw(m);
    for (int k = 0; k < m; ++k) {
        gw[k] = -(xs.row(k).conjugate().cwiseProduct(gx.row(k))).sum().real();
    }
    const double mean = w.dot(gw);
    for (int k = 0; k < m; ++k) {
        (*grad)[k] = 2.0 * u[k] / usum * (gw[k] - mean);
    }
    std::array<cplx, kMaxLocalDim> ga{}, gb{};
    for (int k = 0; k < m; ++k) {
        const double scale = -2.0 * w[k];
        // Row k of gx read as a d1 x d2 block.
        for (int i = 0; i < d1_; ++i) ga[i] = 0.0;
        for (int j = 0; j < d2_; ++j) gb[j] = 0.0;
        for (int i = 0; i < d1_; ++i) {
            for (int j = 0; j < d2_; ++j) {
                const cplx v = gx(k, i * d2_ + j);
                ga[i] += v * std::conj(b(k, j));
                gb[j] += v * std::conj(a(k, i));
            }
        }
        cplx pa = 0.0, pb = 0.0;
        for (int i = 0; i < d1_; ++i) pa += std::conj(a(k, i)) * ga[i];
        for (int j = 0; j < d2_; ++j) pb += std::conj(b(k, j)) * gb[j];
        for (int i = 0; i < d1_; ++i) {
            ga_out(k, i) = scale * (ga[i] - pa.real() * a(k, i)) / na[k];
        }
        for (int j = 0; j < d2_; ++j) {
            gb_out(k, j) = scale * (gb[j] - pb.real() * b(k, j)) / nb[k];
        }
    }
    return f;
}

SeparableAnsatz ReeObjective::ansatz(const Eigen::VectorXd &x) const {
    SeparableAnsatz a;
    a.dim1 = d1_;
    a.dim2 = d2_;
    const int oa = m_, ob = m_ + 2 * m_ * d1_;
    const double usum = x.head(m_).squaredNorm();
    for (int k = 0; k < m_; ++k) {
        a.weights.push_back(x[k] * x[k] / usum);
        VecX va(d1_), vb(d2_);
        for (int i = 0; i < d1_; ++i) {
            va[i] = cplx(x[oa + 2 * (k * d1_ + i)], x[oa + 2 * (k * d1_ + i) + 1]);
        }
        for (int j = 0; j < d2_; ++j) {
            vb[j] = cplx(x[ob + 2 * (k * d2_ + j)], x[ob + 2 * (k * d2_ + j) + 1]);
        }
        a.local1.push_back(va / va.norm());
        a.local2.push_back(vb / vb.norm());
    }
    return a;
}

Eigen::VectorXd ReeObjective::pack(const SeparableAnsatz &a) const {
    if (a.m_terms() != m_ || a.dim1 != d1_ || a.dim2 != d2_) {
        throw Error(ErrorCode::DimensionMismatch, "ansatz does not match objective");
    }
    Eigen::VectorXd x(n_params());
    const int oa = m_, ob = m_ + 2 * m_ * d1_;
    for (int k = 0; k < m_; ++k) {
        x[k] = std::sqrt(std::max(0.0, a.weights[k]));
        for (int i = 0; i < d1_; ++i) {
            x[oa + 2 * (k * d1_ + i)] = a.local1[k][i].real();
            x[oa + 2 * (k * d1_ + i) + 1] = a.local1[k][i].imag();
        }
        for (int j = 0; j < d2_; ++j) {
            x[ob + 2 * (k * d2_ + j)] = a.local2[k][j].real();
            x[ob + 2 * (k * d2_ + j) + 1] = a.local2[k][j].imag();
        }
    }
    return x;
}

EntanglementReport relative_entropy_of_entanglement(const fock::TwoModeDensityMatrix &rho,
                                                    const ReeConfig &cfg) {
    fock::require_state(rho.data());
    if (cfg.restarts < 0 || cfg.max_iter < 1 || cfg.m_terms < 0 || !(cfg.tol > 0.0)) {
        throw Error(ErrorCode::BadArgument, "invalid entanglement configuration");
    }
    const fock::TwoModeDensityMatrix t = rho.trimmed();
    const int d1 = t.cutoff1() + 1, d2 = t.cutoff2() + 1;
    if (d1 > kMaxLocalDim || d2 > kMaxLocalDim) {
        throw Error(ErrorCode::DimensionTooLarge,
                    "local dimensions " + std::to_string(d1) + "x" + std::to_string(d2) +
                        " exceed " + std::to_string(kMaxLocalDim));
    }
    const MatX sigma = 0.5 * (t.data() + t.data().adjoint());
    const int full1 = rho.cutoff1() + 1, full2 = rho.cutoff2() + 1;

    EntanglementReport report;
    if (d1 == 1 || d2 == 1) {
        // One side is a single Fock state, so sigma is a product state.
        Eigen::SelfAdjointEigenSolver<MatX> es(sigma);
        SeparableAnsatz a;
        a.dim1 = d1;
        a.dim2 = d2;
        for (int i = 0; i < sigma.rows(); ++i) {
            const double lam = std::max(0.0, es.eigenvalues()[i]);
            if (lam <= 0.0) continue;
            a.weights.push_back(lam);
            const VecX v = es.eigenvectors().col(i);
            a.local1.push_back(d1 == 1 ? VecX::Ones(1) : v);
            a.local2.push_back(d2 == 1 ? VecX::Ones(1) : v);
        }
        report.certificate = embed_certificate(a, full1, full2);
        report.value = quantum_relative_entropy(rho.data(), report.certificate.density());
        return report;
    }

    const int m = cfg.m_terms > 0 ? cfg.m_terms : (d1 * d2) * (d1 * d2);
    const ReeObjective obj(sigma, d1, d2, m);
    std::vector<RunResult> runs;
    bool certified = false;

    if (cfg.warm_start) {
        const fock::TwoModeDensityMatrix tt(d1 - 1, d2 - 1, sigma);
        Eigen::SelfAdjointEigenSolver<MatX> e1(fock::partial_trace(tt, 1));
        Eigen::SelfAdjointEigenSolver<MatX> e2(fock::partial_trace(tt, 2));
        const SeparableAnsatz fockbasis = dephased(sigma, MatX::Identity(d1, d1), MatX::Identity(d2, d2));
        const SeparableAnsatz eigbasis = dephased(sigma, e1.eigenvectors(), e2.eigenvectors());
        RunResult c1 = score(sigma, fockbasis);
        RunResult c2 = score(sigma, eigbasis);
        const SeparableAnsatz &seed_state = c2.value < c1.value ? eigbasis : fockbasis;
        // Coherent information bounds the relative entropy of entanglement from below.
        const double s_ab = fock::von_neumann_entropy(sigma);
        const double lower = std::max({0.0, fock::von_neumann_entropy(fock::partial_trace(tt, 1)) - s_ab,
                                       fock::von_neumann_entropy(fock::partial_trace(tt, 2)) - s_ab});
        const double found = std::min(c1.value, c2.value);
        certified = found - lower <= cfg.tol * (1.0 + std::abs(lower));
        runs.push_back(std::move(c1));
        runs.push_back(std::move(c2));
        if (!certified) {
            std::mt19937_64 gen(derive_seed(cfg.seed, 0));
            runs.push_back(optimize(sigma, obj, pad(seed_state, m, gen), cfg));
        }
    }
    for (int r = 0; r < cfg.restarts && !certified; ++r) {
        std::mt19937_64 gen(derive_seed(cfg.seed, static_cast<std::uint64_t>(r) + 1));
        runs.push_back(optimize(sigma, obj, random_ansatz(d1, d2, m, gen), cfg));
    }

    std::size_t best = 0;
    int iterations = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        iterations += runs[i].iterations;
        if (runs[i].value < runs[best].value) {
            best = i;
        }
    }
    const RunResult &b = runs[best];
    report.certificate = embed_certificate(b.certificate, full1, full2);
    report.value = quantum_relative_entropy(rho.data(), report.certificate.density());
    report.restarts_used = certified ? 0 : cfg.restarts + (cfg.warm_start ? 1 : 0);
    report.iterations = iterations;
    report.status = (b.iterations == 0 || b.converged) ? Status::Converged : Status::MaxIter;
    const ReeObjective at_best(sigma, d1, d2, b.certificate.m_terms());
    Eigen::VectorXd g;
    at_best.value_and_gradient(at_best.pack(b.certificate), &g);
    report.gradient_norm = g.norm();
    return report;
}

long long separable_parameter_count(int n_dim) {
    if (n_dim < 1) {
        throw Error(ErrorCode::BadArgument, "dimension must be positive");
    }
    const long long n4 = static_cast<long long>(n_dim) * n_dim * n_dim * n_dim;
    return 4 * n4 * (n_dim - 1) + n4 - 1;
}

}  // namespace qfp::entanglement
