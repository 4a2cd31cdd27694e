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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qfp/absorbing.hpp"
#include "qfp/amplifier_fock.hpp"
#include "qfp/entanglement.hpp"
#include "qfp/errors.hpp"
#include "qfp/fockspace.hpp"
#include "qfp/fourport.hpp"
#include "qfp/gaussian.hpp"
#include "qfp/scenarios.hpp"

using namespace qfp;
using fock::TwoModeDensityMatrix;
using fock::TwoModePureState;

namespace {

const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

scenarios::Table run(const std::string &id) {
    scenarios::SweepSpec s;
    s.scenario = id;
    return scenarios::run_scenario(s);
}

std::size_t argmax_in(const std::vector<double> &x, const std::vector<double> &y, double lo, double hi) {
    std::size_t best = x.size();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] >= lo && x[i] <= hi && (best == x.size() || y[i] > y[best])) best = i;
    return best;
}

bool strict_local_max(const std::vector<double> &y, std::size_t i) {
    return i > 0 && i + 1 < y.size() && y[i] > y[i - 1] && y[i] > y[i + 1];
}

double max_diff(const TwoModeDensityMatrix &a, const TwoModeDensityMatrix &b) {
    const int c1 = std::max(a.cutoff1(), b.cutoff1()), c2 = std::max(a.cutoff2(), b.cutoff2());
    return linalg::max_abs(a.resized(c1, c2).data() - b.resized(c1, c2).data());
}

TwoModeDensityMatrix random_pure_state(int d1, int d2, std::mt19937_64 &gen) {
    const VecX v = oracle::random_pure(d1 * d2, gen);
    return TwoModeDensityMatrix(d1 - 1, d2 - 1, v * v.adjoint());
}

double subsystem_entropy(const TwoModeDensityMatrix &rho) {
    return oracle::entropy(oracle::reduce(rho.data(), rho.cutoff1(), rho.cutoff2(), 1));
}

MatX kron(const MatX &a, const MatX &b) {
    MatX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

void lossless_beamsplitter(Outcome &o) {
    const auto start = std::chrono::steady_clock::now();
    const auto t = run("fig-lossless");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto x = t.numbers("t2"), e = t.numbers("E");
    std::size_t half = x.size();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - 0.5) < 1e-12) half = i;
    o.require(half < x.size(), "grid contains 0.5");
    const double e_half = half < x.size() ? e[half] : NAN;
    const std::size_t top = argmax_in(x, e, 0.0, 1.0);
    const double lo_star = 0.5 * (1.0 - 1.0 / std::sqrt(3.0)), hi_star = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
    o.require(std::abs(e_half - kLn2) <= 1e-3, "E(0.5) = ln 2");
    o.require(std::abs(e[top] - kLn3) <= 1e-2, "max E = ln 3");
    o.require(std::min(std::abs(x[top] - lo_star), std::abs(x[top] - hi_star)) <= 0.01, "argmax location");
    o.require(secs < 120.0, "runtime");
    o.detail << "E(0.5)=" << e_half << " maxE=" << e[top] << " at t2=" << x[top] << " runtime=" << secs << "s";
}

void creation10(Outcome &o) {
    const auto t = run("fig-creation10");
    const auto w = t.numbers("omega_rel"), e = t.numbers("E"), ic = t.numbers("I_c"), ab = t.numbers("absorption");
    const std::size_t top = argmax_in(w, e, -1e9, 1e9);
    o.require(w[top] >= 1.20 && w[top] <= 1.30, "peak location");
    o.require(e[top] >= 0.85 * kLn2, "peak height");
    double lo = 1e9, hi = -1e9;
    int used = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (ab[i] < 0.01 && e[i] > 1e-6) {
            lo = std::min(lo, ic[i] / e[i]);
            hi = std::max(hi, ic[i] / e[i]);
            ++used;
        }
    }
    o.require(used > 0 && lo >= 1.8 && hi <= 2.2, "I_c/E ratio");
    o.detail << "peak E=" << e[top] << " at " << w[top] << " ratio in [" << lo << ", " << hi << "] over " << used
             << " points";
}

void creation11(Outcome &o) {
    const auto t = run("fig-creation11");
    const auto w = t.numbers("omega_rel"), e = t.numbers("E");
    const std::size_t a = argmax_in(w, e, 1.13, 1.23), b = argmax_in(w, e, 1.28, 1.38);
    o.require(a < w.size() && strict_local_max(e, a) && e[a] >= 0.85 * kLn3, "first maximum");
    o.require(b < w.size() && strict_local_max(e, b) && e[b] >= 0.85 * kLn3, "second maximum");
    std::size_t m = a;
    for (std::size_t i = a; i <= b && b < w.size(); ++i)
        if (e[i] < e[m]) m = i;
    o.require(m > a && m < b && std::abs(w[m] - 1.25) <= 0.03, "minimum between maxima");
    o.detail << "maxima E=" << e[a] << " at " << w[a] << ", E=" << e[b] << " at " << w[b] << "; minimum E=" << e[m]
             << " at " << w[m];
}

void gamma01(Outcome &o) {
    const auto t = run("fig-gamma01");
    const auto w = t.numbers("omega_rel"), e = t.numbers("E");
    const std::size_t top = argmax_in(w, e, -1e9, 1e9);
    o.require(e[top] >= 0.30 && e[top] <= 0.50, "max E range");
    o.detail << "max E=" << e[top] << " at " << w[top];
}

void zweifaser(Outcome &o) {
    const auto t = run("fig-zweifaser");
    const auto l = t.numbers("l_over_L");
    o.require(l.size() == 61, "61 grid points");
    double worst_excess = -1e9, worst_gap = 0.0, gap_at = 0.0;
    for (int n : {1, 2}) {
        const auto e = t.numbers("E_n" + std::to_string(n));
        for (std::size_t i = 0; i < l.size(); ++i) {
            const double bound = std::exp(-2.0 * n * l[i]) * kLn2;
            worst_excess = std::max(worst_excess, e[i] - bound);
            if (n == 2 && l[i] <= 1.0 + 1e-12 && (bound - e[i]) / bound > worst_gap) {
                worst_gap = (bound - e[i]) / bound;
                gap_at = l[i];
            }
        }
    }
    o.require(worst_excess <= 1e-6, "E below bound");
    o.require(worst_gap <= 0.10, "n=2 bound tight within 10%");
    o.detail << "max(E - bound)=" << worst_excess << " worst n=2 relative gap=" << worst_gap << " at l/L=" << gap_at;
}

void vergleich(Outcome &o) {
    const auto t = run("fig-vergleich");
    const auto psi = t.numbers("E_psi"), phi = t.numbers("E_phi");
    double worst = -1e9;
    for (std::size_t i = 0; i < psi.size(); ++i) worst = std::max(worst, phi[i] - psi[i]);
    o.require(worst <= 2e-3, "E_phi <= E_psi");
    o.detail << "max(E_phi - E_psi)=" << worst;
}

bool gaussian_separable(double t2, double r2, double zeta) {
    const auto dev = amplifying::make_amplifier(t2, r2);
    return amplifying::ph_criterion(
               amplifying::propagate_gaussian(amplifying::two_mode_squeezed_vacuum(zeta), dev, dev))
        .separable;
}

double located_boundary(double r2, double zeta, double hi, int scan, int bisect) {
    const double lo = 1.0 - r2 + 1e-9;
    double a = lo, b = hi;
    bool prev = gaussian_separable(lo, r2, zeta);
    for (int i = 1; i <= scan; ++i) {
        const double x = lo + (hi - lo) * i / scan;
        const bool now = gaussian_separable(x, r2, zeta);
        if (now != prev) {
            a = x - (hi - lo) / scan;
            b = x;
            break;
        }
        prev = now;
    }
    const bool left = gaussian_separable(a, r2, zeta);
    for (int i = 0; i < bisect; ++i) {
        const double mid = 0.5 * (a + b);
        (gaussian_separable(mid, r2, zeta) == left ? a : b) = mid;
    }
    return 0.5 * (a + b);
}

void amplifier_boundary(Outcome &o) {
    std::mt19937_64 gen(2024);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double r = oracle::uniform(gen, 0.0, 0.7), zeta = oracle::uniform(gen, 0.05, 2.0);
        const double analytic = 2.0 * (1.0 - r * r) / (1.0 + std::exp(-2.0 * zeta));
        worst = std::max(worst, std::abs(located_boundary(r * r, zeta, 3.0, 4000, 60) - analytic));
    }
    o.require(worst <= 1e-6, "random boundaries");
    double worst_r0 = 0.0;
    for (double zeta : {0.1, 0.5, 1.0, 2.0}) {
        const double gain = located_boundary(0.0, zeta, 3.0, 4000, 80) - 1.0;
        worst_r0 = std::max(worst_r0, std::abs(gain - std::tanh(zeta)));
    }
    o.require(worst_r0 <= 1e-9, "R=0 gain = tanh zeta");
    bool vacuum_ok = true;
    for (double g = 1e-3; g <= 10.0; g *= 1.2) vacuum_ok = vacuum_ok && gaussian_separable(1.0 + g, 0.0, 0.0);
    o.require(vacuum_ok, "vacuum stays separable");
    o.detail << "max |boundary - formula|=" << worst << " R=0 gain error=" << worst_r0;
}

void engine_vs_closed_forms(Outcome &o) {
    std::mt19937_64 gen(31);
    auto transmission = [&] { return std::polar(oracle::uniform(gen, 0.0, 1.0), oracle::uniform(gen, -kPi, kPi)); };
    double worst = 0.0;
    for (int n : {1, 2}) {
        for (int k = 0; k < 50; ++k) {
            const cplx t1 = transmission(), t2 = transmission();
            const auto dev = fourport::make_channel_pair(t1, t2);
            const int sign = k % 2 == 0 ? 1 : -1;
            worst = std::max(worst, max_diff(absorbing::transform_fock_input(dev, TwoModePureState::bell_psi(n, sign)),
                                             absorbing::bell_psi_output({n, sign, t1, t2})));
            const cplx q = transmission();
            worst = std::max(worst, max_diff(absorbing::transform_fock_input(dev, TwoModePureState::bell_phi(n, q)),
                                             absorbing::bell_phi_output({n, q, t1, t2})));
        }
    }
    o.require(worst <= 1e-10, "closed forms");
    double worst_polar = 0.0;
    for (int k = 0; k < 50; ++k) {
        auto dev = oracle::random_absorbing(gen);
        const TwoModePureState psi(2, 2, oracle::random_pure(9, gen));
        const auto base = absorbing::transform_fock_input(dev, psi);
        dev.a_matrix = dev.a_matrix * oracle::random_unitary(2, gen);
        worst_polar = std::max(worst_polar, max_diff(absorbing::transform_fock_input(dev, psi), base));
    }
    o.require(worst_polar <= 1e-10, "polar factor");
    o.detail << "closed-form error=" << worst << " polar-factor error=" << worst_polar;
}

void amplifier_fock(Outcome &o) {
    const oracle::PlaneGrid grid;
    const double ortho = oracle::kernel_orthonormality_error(grid, 5);
    o.require(ortho <= 1e-10, "quadrature grid resolves kernels");
    double worst_quad = 0.0, worst_trace = 0.0, worst_reduced = 0.0;
    bool selection = true;
    for (double t2 : {1.2, 1.5}) {
        for (int p = 0; p <= 1; ++p) {
            for (int q = 0; q <= 1; ++q) {
                amplifying::AmplifierFockSpec spec;
                spec.p = p;
                spec.q = q;
                spec.dev = amplifying::make_amplifier(t2, 0.0);
                const auto rho = amplifying::amplifier_fock_output(spec);
                const amplifying::AmplifierWigner w(spec);
                const auto quad = oracle::density_by_quadrature([&](cplx a, cplx b) { return w(a, b); }, 5, grid);
                for (int m1 = 0; m1 <= 5; ++m1)
                    for (int m2 = 0; m2 <= 5; ++m2)
                        for (int n1 = 0; n1 <= 5; ++n1)
                            for (int n2 = 0; n2 <= 5; ++n2) {
                                const bool inside = m1 <= rho.cutoff1() && n1 <= rho.cutoff1() &&
                                                    m2 <= rho.cutoff2() && n2 <= rho.cutoff2();
                                const cplx x = inside ? rho(m1, m2, n1, n2) : cplx(0.0);
                                worst_quad = std::max(worst_quad, std::abs(x - quad(m1, m2, n1, n2)));
                            }
                worst_trace = std::max(worst_trace, std::abs(rho.trace() - 1.0));
                for (int m1 = 0; m1 <= rho.cutoff1(); ++m1)
                    for (int m2 = 0; m2 <= rho.cutoff2(); ++m2)
                        for (int n1 = 0; n1 <= rho.cutoff1(); ++n1)
                            for (int n2 = 0; n2 <= rho.cutoff2(); ++n2)
                                if (m1 + m2 != n1 + n2 && rho(m1, m2, n1, n2) != cplx(0.0)) selection = false;
                for (int mode : {1, 2}) {
                    const MatX red = amplifying::amplifier_reduced_mode(spec, mode);
                    const MatX pt = oracle::reduce(rho.data(), rho.cutoff1(), rho.cutoff2(), mode);
                    const int d = static_cast<int>(std::min(red.rows(), pt.rows()));
                    worst_reduced = std::max(worst_reduced, linalg::max_abs(red.topLeftCorner(d, d) - pt.topLeftCorner(d, d)));
                }
            }
        }
    }
    o.require(worst_quad <= 1e-4, "quadrature oracle");
    o.require(worst_trace <= 1e-6, "trace");
    o.require(selection, "selection rule");
    o.require(worst_reduced <= 1e-6, "reduced mode");
    o.detail << "quadrature error=" << worst_quad << " trace error=" << worst_trace << " reduced-mode error="
             << worst_reduced << " kernel check=" << ortho;
}

void estimator_quality(Outcome &o) {
    std::mt19937_64 gen(99);
    double worst_pure = 0.0;
    for (int k = 0; k < 50; ++k) {
        const int d1 = 2 + k % 2, d2 = 2 + (k / 2) % 2;
        const auto rho = random_pure_state(d1, d2, gen);
        entanglement::ReeConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(k);
        worst_pure = std::max(worst_pure, std::abs(entanglement::relative_entropy_of_entanglement(rho, cfg).value -
                                                   subsystem_entropy(rho)));
    }
    double worst_cold = 0.0;
    for (int k = 0; k < 6; ++k) {
        const auto rho = random_pure_state(2 + k % 2, 2, gen);
        entanglement::ReeConfig cfg;
        cfg.warm_start = false;
        cfg.restarts = 4;
        cfg.seed = static_cast<std::uint64_t>(k);
        worst_cold = std::max(worst_cold, std::abs(entanglement::relative_entropy_of_entanglement(rho, cfg).value -
                                                   subsystem_entropy(rho)));
    }
    o.require(worst_pure <= 2e-3 && worst_cold <= 2e-3, "pure states");
    double worst_sep = 0.0;
    for (int k = 0; k < 20; ++k) {
        const int d1 = 2 + k % 2, d2 = 2 + (k / 2) % 2;
        MatX rho = MatX::Zero(d1 * d2, d1 * d2);
        double total = 0.0;
        for (int j = 0; j <= k % 5; ++j) {
            const double wgt = oracle::uniform(gen, 0.1, 1.0);
            const VecX a = oracle::random_pure(d1, gen), b = oracle::random_pure(d2, gen);
            rho += wgt * kron(a * a.adjoint(), b * b.adjoint());
            total += wgt;
        }
        entanglement::ReeConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(k);
        worst_sep = std::max(worst_sep, entanglement::relative_entropy_of_entanglement(
                                            TwoModeDensityMatrix(d1 - 1, d2 - 1, rho / total), cfg).value);
    }
    o.require(worst_sep <= 1e-4, "separable mixtures");
    double worst_grad = 0.0;
    for (auto [d1, d2] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 3}}) {
        const int d = d1 * d2;
        const entanglement::ReeObjective obj(oracle::random_density(d, d, gen), d1, d2, d + 3);
        Eigen::VectorXd x(obj.n_params());
        std::normal_distribution<double> nd;
        for (int i = 0; i < x.size(); ++i) x[i] = nd(gen);
        Eigen::VectorXd g;
        obj.value_and_gradient(x, &g);
        Eigen::VectorXd fd(x.size());
        const double h = 1e-5;
        for (int i = 0; i < x.size(); ++i) {
            Eigen::VectorXd xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            fd[i] = (obj.value_and_gradient(xp, nullptr) - obj.value_and_gradient(xm, nullptr)) / (2.0 * h);
        }
        worst_grad = std::max(worst_grad, (g - fd).lpNorm<Eigen::Infinity>() / g.lpNorm<Eigen::Infinity>());
    }
    o.require(worst_grad <= 1e-5, "gradient");
    o.detail << "pure error=" << worst_pure << " cold-start error=" << worst_cold << " separable max E=" << worst_sep
             << " gradient error=" << worst_grad;
}

void mzi(Outcome &o) {
    std::mt19937_64 gen(5150);
    auto polar_c = [](double m, double ph) { return std::polar(m, ph); };
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        auto bs = [&] {
            const double a = oracle::uniform(gen, 0.05, 0.95);
            const double b = oracle::uniform(gen, 0.05, 1.0 - a);
            return fourport::make_beamsplitter(polar_c(a, oracle::uniform(gen, -kPi, kPi)),
                                               polar_c(b, oracle::uniform(gen, -kPi, kPi)), 1);
        };
        fourport::MziSpec s;
        s.bs1 = bs();
        s.bs2 = bs();
        s.t3 = polar_c(oracle::uniform(gen, 0.1, 1.0), oracle::uniform(gen, -kPi, kPi));
        s.t4 = polar_c(oracle::uniform(gen, 0.1, 1.0), oracle::uniform(gen, -kPi, kPi));
        s.theta = oracle::uniform(gen, 0.0, 2.0 * kPi);
        const auto [v1, v2] = fourport::mzi_visibility(s);
        const auto [s1, s2] = oracle::mzi_scan_visibility(s);
        worst = std::max({worst, std::abs(v1 - s1), std::abs(v2 - s2)});
    }
    o.require(worst <= 1e-10, "closed form vs scan");
    fourport::MziSpec s;
    s.bs1 = s.bs2 = fourport::make_beamsplitter(cplx(0.0, 1.0 / std::sqrt(2.0)), 1.0 / std::sqrt(2.0), 1);
    const auto [v1, v2] = fourport::mzi_visibility(s);
    const double lossless = std::max(std::abs(v1 - 1.0), std::abs(v2 - 1.0));
    o.require(lossless <= 1e-12, "lossless visibility");
    o.detail << "scan error=" << worst << " lossless |V-1|=" << lossless;
}

void eit(Outcome &o) {
    const auto t = run("fig-eit");
    const auto d = t.numbers("delta"), kappa = t.numbers("kappa"), e = t.numbers("E_one");
    std::size_t zero = d.size(), left = d.size(), right = d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::abs(d[i]) < 1e-12) zero = i;
        if (d[i] < 0 && (left == d.size() || kappa[i] > kappa[left])) left = i;
        if (d[i] > 0 && (right == d.size() || kappa[i] > kappa[right])) right = i;
    }
    o.require(zero < d.size() && left < d.size() && right < d.size(), "grid");
    if (!o.pass) return;
    o.require(e[zero] >= 0.95 * kLn2, "transparency window");
    o.require(e[left] <= 0.1 * kLn2 && e[right] <= 0.1 * kLn2, "absorption peaks");
    o.detail << "E(0)=" << e[zero] << " E at peaks " << d[left] << ": " << e[left] << ", " << d[right] << ": "
             << e[right];
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria = {
        {"lossless beam splitter", lossless_beamsplitter},
        {"slab creation, gamma 0.001, one photon", creation10},
        {"slab creation, gamma 0.001, two photons", creation11},
        {"slab creation, gamma 0.01", gamma01},
        {"Bell propagation bounds", zweifaser},
        {"Psi versus Phi robustness", vergleich},
        {"Gaussian amplifier boundary", amplifier_boundary},
        {"absorbing engine versus closed forms", engine_vs_closed_forms},
        {"amplifier Fock engine", amplifier_fock},
        {"relative entropy estimator", estimator_quality},
        {"Mach-Zehnder visibility", mzi},
        {"EIT window", eit},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s criterion %zu (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
