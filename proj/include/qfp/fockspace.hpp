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
#include <map>

#include "qfp/linalg.hpp"

/// Truncated Fock-space states.
///
/// Two-mode vectors and matrices are flattened with index n1 * (cutoff2 + 1) + n2,
/// so mode 1 is the major index. Single-mode density matrices are plain MatX.
namespace qfp::fock {

class TwoModePureState {
  public:
    TwoModePureState() : TwoModePureState(0, 0) {}
    TwoModePureState(int cutoff1, int cutoff2);
    TwoModePureState(int cutoff1, int cutoff2, VecX amplitudes);

    static TwoModePureState fock(int n1, int n2);
    /// (|0n> + sign |n0>) / sqrt 2.
    static TwoModePureState bell_psi(int n, int sign);
    /// (|00> + q |nn>) / sqrt(1 + |q|^2).
    static TwoModePureState bell_phi(int n, cplx q);

    int cutoff1() const { return c1_; }
    int cutoff2() const { return c2_; }
    int index(int n1, int n2) const { return n1 * (c2_ + 1) + n2; }
    cplx amplitude(int n1, int n2) const;
    cplx &amplitude(int n1, int n2) { return amp_[index(n1, n2)]; }
    const VecX &amplitudes() const { return amp_; }
    double norm() const { return amp_.norm(); }
    /// Largest n1 + n2 carrying a nonzero amplitude.
    int max_total_photons() const;

  private:
    int c1_;
    int c2_;
    VecX amp_;
};

class TwoModeDensityMatrix {
  public:
    TwoModeDensityMatrix() : TwoModeDensityMatrix(0, 0) {}
    TwoModeDensityMatrix(int cutoff1, int cutoff2);
    TwoModeDensityMatrix(int cutoff1, int cutoff2, MatX data);

    static TwoModeDensityMatrix from_pure(const TwoModePureState &psi);

    int cutoff1() const { return c1_; }
    int cutoff2() const { return c2_; }
    int dim() const { return static_cast<int>(data_.rows()); }
    int index(int n1, int n2) const { return n1 * (c2_ + 1) + n2; }

    /// <n1 n2| rho |m1 m2>.
    cplx operator()(int n1, int n2, int m1, int m2) const {
        return data_(index(n1, n2), index(m1, m2));
    }
    cplx &operator()(int n1, int n2, int m1, int m2) {
        return data_(index(n1, n2), index(m1, m2));
    }

    const MatX &data() const { return data_; }
    MatX &data() { return data_; }
    double trace() const { return data_.trace().real(); }

    /// Same state with cutoffs changed; entries beyond the new cutoffs are dropped.
    TwoModeDensityMatrix resized(int cutoff1, int cutoff2) const;
    /// Shrinks each cutoff to the largest photon number with diagonal weight above tol.
    TwoModeDensityMatrix trimmed(double tol = 1e-14) const;

  private:
    int c1_;
    int c2_;
    MatX data_;
};

/// Sparse state of the field slots (0, 1) and device slots (2, 3).
class FourModeState {
  public:
    using Key = std::array<int, 4>;

    void add(const Key &k, cplx v) { amp_[k] += v; }
    const std::map<Key, cplx> &amplitudes() const { return amp_; }
    double norm() const;
    std::array<int, 4> max_photons() const;

    /// Reduced density matrix of the field slots.
    TwoModeDensityMatrix trace_device() const;

  private:
    std::map<Key, cplx> amp_;
};

/// Throws NotAState if the trace is off by more than 1e-6.
void require_state(const MatX &rho);

/// -sum lambda ln lambda over eigenvalues above 1e-14, in nats.
double von_neumann_entropy(const MatX &rho);
double von_neumann_entropy(const TwoModeDensityMatrix &rho);

/// Reduced state of mode `keep` (1 or 2).
MatX partial_trace(const TwoModeDensityMatrix &rho, int keep);

/// rho (x) |0><0| (keep == 1) or |0><0| (x) rho (keep == 2), partner cutoff `other_cutoff`.
TwoModeDensityMatrix embed(const MatX &single, int keep, int other_cutoff = 0);

/// S1 + S2 - S12.
double mutual_information(const TwoModeDensityMatrix &rho);

/// <psi| rho |psi>; amplitudes outside rho's cutoffs do not contribute.
double overlap(const TwoModePureState &psi, const TwoModeDensityMatrix &rho);

}  // namespace qfp::fock
