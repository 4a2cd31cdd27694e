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


#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "qfp/dielectrics.hpp"
#include "qfp/errors.hpp"

using namespace qfp;
using namespace qfp::dielectrics;
using cld = std::complex<long double>;

namespace {

cplx to_cplx(cld z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

TEST(Lorentz, StaticLimitIsExact) {
    EXPECT_EQ(lorentz_permittivity({1.5, 1e-3}, 0.0), cplx(1.5, 0.0));
}

TEST(Lorentz, HighFrequencyTendsToOne) {
    EXPECT_LT(std::abs(lorentz_permittivity({1.5, 1e-3}, 1e6) - 1.0), 1e-11);
}

TEST(Lorentz, MatchesExtendedPrecision) {
    const long double w = 1.25L, g = 0.001L;
    const cld want = 1.0L + 0.5L / cld(1.0L - w * w, -2.0L * g * w);
    const cplx got = lorentz_permittivity({1.5, 1e-3}, 1.25);
    EXPECT_LT(std::abs(got - to_cplx(want)), 1e-15 * std::abs(to_cplx(want)));
}

TEST(Lorentz, PassiveForPositiveDamping) {
    std::mt19937_64 gen(11);
    for (int k = 0; k < 500; ++k) {
        const LorentzModel m{oracle::uniform(gen, 1.01, 4.0), oracle::uniform(gen, 1e-4, 0.2)};
        const double w = oracle::uniform(gen, 1e-3, 3.0);
        const cplx eps = lorentz_permittivity(m, w);
        EXPECT_GT(eps.imag(), 0.0);
        EXPECT_GE(slab_response(eps, oracle::uniform(gen, 0.1, 5.0), w).absorption, 0.0);
    }
}

TEST(Lorentz, KramersKronigSpotCheck) {
    // Re eps - 1 = (2/pi) P int w' Im eps(w') / (w'^2 - w^2) dw', midpoint grid offset from w.
    const LorentzModel m{1.5, 0.05};
    const double h = 2e-4, top = 400.0;
    double scale = 0.0;
    for (double w = 0.2; w < 2.0; w += 0.01) scale = std::max(scale, std::abs(lorentz_permittivity(m, w).real() - 1.0));
    for (double w : {0.3, 0.7, 0.9, 1.0, 1.1, 1.4, 2.0}) {
        double sum = 0.0;
        for (double x = h / 2; x < top; x += h) {
            sum += x * lorentz_permittivity(m, x).imag() / (x * x - w * w);
        }
        const double kk = 2.0 / kPi * sum * h;
        EXPECT_LT(std::abs(kk - (lorentz_permittivity(m, w).real() - 1.0)), 0.02 * scale) << "w=" << w;
    }
}

TEST(Lorentz, ValidateRejectsBadModels) {
    EXPECT_THROW(validate(LorentzModel{1.0, 1e-3}), Error);
    EXPECT_THROW(validate(LorentzModel{1.5, -1.0}), Error);
    EXPECT_NO_THROW(validate(LorentzModel{}));
}

TEST(Eit, TransparentWithoutGroundDephasing) {
    EitModel m;
    m.gamma0 = 0.0;
    EXPECT_EQ(eit_susceptibility(m, 0.0), cplx(0.0, 0.0));
}

TEST(Eit, DecaysAtLargeDetuning) {
    const EitModel m;
    EXPECT_LT(std::abs(eit_susceptibility(m, 1e6)), 1e-5);
    EXPECT_LT(std::abs(eit_susceptibility(m, -1e6)), 1e-5);
}

TEST(Eit, MatchesExtendedPrecisionAtRabiDetuning) {
    const EitModel m;
    const long double d = m.rabi;
    const cld num = (long double)m.n_strength * m.gamma1 * cld(-d, m.gamma0);
    const cld den((long double)m.rabi * m.rabi + (long double)m.gamma_perp * m.gamma0 - d * (m.delta1 - d),
                  d * ((long double)m.gamma_perp + m.gamma0) + (long double)m.delta1 * m.gamma0);
    const cplx want = to_cplx(num / den);
    EXPECT_LT(std::abs(eit_susceptibility(m, m.rabi) - want), 1e-15 * std::abs(want));
}

TEST(Eit, DegenerateDenominatorThrows) {
    EitModel m;
    m.rabi = 0.0;
    m.gamma0 = 0.0;
    try {
        eit_susceptibility(m, 0.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateDenominator);
    }
}

TEST(Index, PrincipalBranchDecays) {
    std::mt19937_64 gen(3);
    for (int k = 0; k < 200; ++k) {
        const cplx eps(oracle::uniform(gen, -3.0, 3.0), oracle::uniform(gen, 0.0, 2.0));
        const cplx n = refractive_index(eps);
        EXPECT_GE(n.imag(), 0.0);
        EXPECT_LT(std::abs(n * n - eps), 1e-13);
    }
}

TEST(Slab, IndexMatchedIsPurePhase) {
    const auto s = slab_response(1.0, 2.7, 0.8);
    EXPECT_LT(std::abs(s.r), 1e-15);
    EXPECT_LT(std::abs(s.t - std::exp(cplx(0.0, 0.8 * 2.7))), 1e-14);
    EXPECT_LT(s.absorption, 1e-14);
}

TEST(Slab, LosslessConservesFlux) {
    const auto s = slab_response(1.5, 2.0, 0.5);
    EXPECT_NEAR(std::norm(s.r) + std::norm(s.t), 1.0, 1e-12);
    EXPECT_LT(s.absorption, 1e-12);
}

TEST(Slab, MatchesCharacteristicMatrix) {
    const cplx eps = lorentz_permittivity({1.5, 1e-3}, 1.25);
    const auto s = slab_response(eps, 2.0, 1.25);
    const auto [r, t] = oracle::slab_characteristic(eps, 2.0, 1.25);
    EXPECT_LT(std::abs(s.r - r), 1e-12);
    EXPECT_LT(std::abs(s.t - t), 1e-12);
    EXPECT_NEAR(s.absorption, 1.0 - std::norm(r) - std::norm(t), 1e-12);
}

TEST(Slab, CharacteristicMatrixAgreesOnRandomLayers) {
    std::mt19937_64 gen(5);
    for (int k = 0; k < 300; ++k) {
        const cplx eps(oracle::uniform(gen, 0.2, 6.0), oracle::uniform(gen, 0.0, 1.0));
        const double d = oracle::uniform(gen, 0.1, 8.0), w = oracle::uniform(gen, 0.05, 2.0);
        const auto s = slab_response(eps, d, w);
        const auto [r, t] = oracle::slab_characteristic(eps, d, w);
        EXPECT_LT(std::abs(s.r - r), 1e-11);
        EXPECT_LT(std::abs(s.t - t), 1e-11);
    }
}

TEST(Slab, TransmissionBoundedForThickLossyLayers) {
    const cplx eps(2.0, 0.1);
    for (double d = 0.5; d < 60.0; d += 0.5) {
        EXPECT_LE(std::abs(slab_response(eps, d, 1.0).t), 1.0);
    }
    EXPECT_LT(std::abs(slab_response(eps, 200.0, 1.0).t), 1e-3);
}

TEST(Slab, GainMediumIsRejected) {
    try {
        slab_response(cplx(2.0, -0.3), 5.0, 1.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPassiveResponse);
    }
}

TEST(Channel, VacuumIsPurePhase) {
    const cplx t = channel_transmission({cplx(1.0, 0.0), 3.3, 1.0});
    EXPECT_NEAR(std::abs(t), 1.0, 1e-15);
}

TEST(Channel, LambertBeerAtAbsorptionLength) {
    ChannelSpec s{cplx(1.45, 0.02), 0.0, 1.3};
    s.length = absorption_length(s);
    EXPECT_NEAR(std::abs(channel_transmission(s)), std::exp(-1.0), 1e-14);
}

TEST(Channel, MatchesExtendedPrecision) {
    const cld n(1.45L, 1e-3L);
    const cld want = std::exp(cld(0.0L, 1.0L) * n * 500.0L);
    const cplx got = channel_transmission({cplx(1.45, 1e-3), 500.0, 1.0});
    EXPECT_LT(std::abs(got - to_cplx(want)), 1e-13);
}

TEST(Channel, Composes) {
    std::mt19937_64 gen(9);
    for (int k = 0; k < 100; ++k) {
        const cplx n(oracle::uniform(gen, 1.0, 2.0), oracle::uniform(gen, 0.0, 0.05));
        const double l1 = oracle::uniform(gen, 0.0, 20.0), l2 = oracle::uniform(gen, 0.0, 20.0);
        const cplx t12 = channel_transmission({n, l1 + l2, 1.0});
        const cplx t1 = channel_transmission({n, l1, 1.0}), t2 = channel_transmission({n, l2, 1.0});
        EXPECT_LT(std::abs(t12 - t1 * t2), 1e-12);
    }
}

TEST(Channel, NegativeLengthRejected) {
    EXPECT_THROW(channel_transmission({cplx(1.0, 0.0), -1.0, 1.0}), Error);
}
