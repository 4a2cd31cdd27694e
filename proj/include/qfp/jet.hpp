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

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "qfp/linalg.hpp"

namespace qfp {

/// Bivariate truncated Taylor series in (k1, k2) around a base point, orders (p, q).
///
/// Coefficient (h, l) is the Taylor coefficient d^h/dk1^h d^l/dk2^l f / (h! l!).
/// Constants built from scalars have order (0, 0) and broadcast in binary operations.
class BiJet {
  public:
    BiJet() : BiJet(cplx(0.0)) {}
    BiJet(cplx c) : p_(0), q_(0), c_{c} {}
    BiJet(double c) : BiJet(cplx(c)) {}

    static BiJet constant(int p, int q, cplx c) {
        BiJet j;
        j.p_ = p;
        j.q_ = q;
        j.c_.assign(static_cast<std::size_t>((p + 1) * (q + 1)), cplx(0.0));
        j.c_[0] = c;
        return j;
    }

    /// k_which (0 or 1) as a jet: base + delta.
    static BiJet variable(int p, int q, int which, double base = 0.0) {
        BiJet j = constant(p, q, base);
        if (which == 0 && p > 0) j.at(1, 0) = 1.0;
        if (which == 1 && q > 0) j.at(0, 1) = 1.0;
        return j;
    }

    int p() const { return p_; }
    int q() const { return q_; }
    cplx value() const { return c_[0]; }
    cplx coeff(int h, int l) const {
        return (h <= p_ && l <= q_) ? c_[static_cast<std::size_t>(h * (q_ + 1) + l)] : cplx(0.0);
    }
    cplx &at(int h, int l) { return c_[static_cast<std::size_t>(h * (q_ + 1) + l)]; }

    BiJet &operator+=(const BiJet &o) { return *this = combine(*this, o, 1.0); }
    BiJet &operator-=(const BiJet &o) { return *this = combine(*this, o, -1.0); }
    BiJet &operator*=(const BiJet &o) { return *this = *this * o; }

    friend BiJet operator+(const BiJet &a, const BiJet &b) { return combine(a, b, 1.0); }
    friend BiJet operator-(const BiJet &a, const BiJet &b) { return combine(a, b, -1.0); }
    friend BiJet operator-(const BiJet &a) { return combine(BiJet::constant(a.p_, a.q_, 0.0), a, -1.0); }

    friend BiJet operator*(const BiJet &a, const BiJet &b) {
        if (a.p_ == 0 && a.q_ == 0) return b.scaled(a.c_[0]);
        if (b.p_ == 0 && b.q_ == 0) return a.scaled(b.c_[0]);
        BiJet r = constant(std::max(a.p_, b.p_), std::max(a.q_, b.q_), 0.0);
        for (int h = 0; h <= r.p_; ++h) {
            for (int l = 0; l <= r.q_; ++l) {
                cplx s = 0.0;
                for (int i = 0; i <= h; ++i) {
                    for (int j = 0; j <= l; ++j) {
                        s += a.coeff(i, j) * b.coeff(h - i, l - j);
                    }
                }
                r.at(h, l) = s;
            }
        }
        return r;
    }

    friend BiJet operator/(const BiJet &a, const BiJet &b) { return a * b.reciprocal(); }

    BiJet reciprocal() const {
        BiJet g = constant(p_, q_, 1.0 / c_[0]);
        for (int h = 0; h <= p_; ++h) {
            for (int l = 0; l <= q_; ++l) {
                if (h == 0 && l == 0) continue;
                cplx s = 0.0;
                for (int i = 0; i <= h; ++i) {
                    for (int j = 0; j <= l; ++j) {
                        if (i == 0 && j == 0) continue;
                        s += coeff(i, j) * g.coeff(h - i, l - j);
                    }
                }
                g.at(h, l) = -s * g.c_[0];
            }
        }
        return g;
    }

    friend BiJet exp(const BiJet &f) {
        const cplx e0 = std::exp(f.c_[0]);
        BiJet d = f;
        d.c_[0] = 0.0;
        BiJet term = constant(f.p_, f.q_, 1.0);
        BiJet sum = term;
        for (int k = 1; k <= f.p_ + f.q_; ++k) {
            term = term * d;
            sum += term.scaled(1.0 / std::tgamma(k + 1.0));
        }
        return sum.scaled(e0);
    }

    friend BiJet conj(const BiJet &f) {
        BiJet r = f;
        for (auto &c : r.c_) c = std::conj(c);
        return r;
    }

  private:
    static BiJet combine(const BiJet &a, const BiJet &b, double sign) {
        BiJet r = constant(std::max(a.p_, b.p_), std::max(a.q_, b.q_), 0.0);
        for (int h = 0; h <= r.p_; ++h) {
            for (int l = 0; l <= r.q_; ++l) {
                r.at(h, l) = a.coeff(h, l) + sign * b.coeff(h, l);
            }
        }
        return r;
    }

    BiJet scaled(cplx s) const {
        BiJet r = *this;
        for (auto &c : r.c_) c *= s;
        return r;
    }

    int p_;
    int q_;
    std::vector<cplx> c_;
};

/// Integer power by repeated squaring; negative n inverts first.
template <class S>
S ipow(S x, int n) {
    if (n < 0) {
        x = S(1.0) / x;
        n = -n;
    }
    S r(1.0);
    while (n > 0) {
        if (n & 1) r = r * x;
        n >>= 1;
        if (n > 0) x = x * x;
    }
    return r;
}

/// 2x2 matrix over an arbitrary scalar (complex or BiJet).
template <class S>
struct Mat2T {
    std::array<S, 4> v{S(0.0), S(0.0), S(0.0), S(0.0)};

    static Mat2T from(const Mat2 &m) {
        Mat2T r;
        r.v = {S(m(0, 0)), S(m(0, 1)), S(m(1, 0)), S(m(1, 1))};
        return r;
    }
    static Mat2T diag(const S &a, const S &b) {
        Mat2T r;
        r.v = {a, S(0.0), S(0.0), b};
        return r;
    }

    const S &operator()(int i, int j) const { return v[static_cast<std::size_t>(2 * i + j)]; }
    S &operator()(int i, int j) { return v[static_cast<std::size_t>(2 * i + j)]; }

    Mat2T adjoint() const {
        using std::conj;
        Mat2T r;
        r.v = {conj(v[0]), conj(v[2]), conj(v[1]), conj(v[3])};
        return r;
    }
    S det() const { return v[0] * v[3] - v[1] * v[2]; }
    Mat2T inverse() const {
        const S d = S(1.0) / det();
        Mat2T r;
        r.v = {v[3] * d, -(v[1] * d), -(v[2] * d), v[0] * d};
        return r;
    }

    friend Mat2T operator*(const Mat2T &a, const Mat2T &b) {
        Mat2T r;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
            }
        }
        return r;
    }
    friend Mat2T operator+(const Mat2T &a, const Mat2T &b) {
        Mat2T r;
        for (std::size_t i = 0; i < 4; ++i) r.v[i] = a.v[i] + b.v[i];
        return r;
    }
    friend Mat2T operator-(const Mat2T &a, const Mat2T &b) {
        Mat2T r;
        for (std::size_t i = 0; i < 4; ++i) r.v[i] = a.v[i] - b.v[i];
        return r;
    }
};

}  // namespace qfp
