/*
   Copyright 2026 The cuelab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cuelab/numbers.hpp"
#include "cuelab/partitions.hpp"

namespace cuelab {

using Complex = std::complex<double>;
using UnitaryMatrix = Eigen::MatrixXcd;

enum class MomentKind { secular, symmetric_power };

/// Mixed moment E prod_j X_j^{a_j} conj(X_j)^{b_j} over U(N), where X_j is
/// the j-th secular coefficient or the j-th symmetric-power trace.
struct MomentSpec {
    std::vector<int> a;
    std::vector<int> b;
    int N = 1;
    MomentKind kind = MomentKind::secular;

    Partition mu() const { return Partition::from_multiplicities(a); }
    Partition mu_tilde() const { return Partition::from_multiplicities(b); }
};

enum class RangeVerdict { in_range_dg, in_range_min, out_of_range };

std::string to_string(RangeVerdict v);

/// Exact secular-coefficient moment: the truncated Hall pairing of e_mu
/// with e_mu~. Equals N_{mu,mu~} whenever sum j a_j <= N and
/// sum j b_j <= N; 0 on degree mismatch.
Int sc_moment_exact(const MomentSpec& spec);

/// Exact symmetric-power-trace moment: h_mu paired with h_mu~. Equals
/// N_{mu,mu~} whenever min(sum a_j, sum b_j) <= N.
Int trsym_moment_exact(const MomentSpec& spec);

/// Whether the spec sits inside the theorem range for its kind.
RangeVerdict range_verdict(const MomentSpec& spec);

/// Haar-distributed N x N unitary: i.i.d. complex Gaussian matrix, QR,
/// with phases fixed so the triangular factor has positive real diagonal.
/// Deterministic for a given seed. Requires N <= 64.
UnitaryMatrix haar_sample(int N, std::uint64_t seed);

double unitarity_defect(const UnitaryMatrix& U);

/// (Sc_0, ..., Sc_N): coefficients of det(zI + U) = sum z^{N-n} Sc_n(U),
/// i.e. elementary symmetric polynomials of the eigenvalues.
std::vector<Complex> secular_coeffs(const UnitaryMatrix& U);

/// (h_0, ..., h_{n_max}) on the eigenvalues of U, via the Newton recursion
/// n h_n = sum_{k=1}^{n} p_k h_{n-k} with p_k = Tr(U^k). n_max <= 64.
std::vector<Complex> trsym_values(const UnitaryMatrix& U, int n_max);

struct McEstimate {
    Complex estimate{0.0, 0.0};
    double stderr_est = 0.0;
};

/// Monte Carlo estimate of the spec's moment: sample mean and standard
/// error over `samples` Haar draws. Deterministic for a given seed.
/// Requires samples >= 1000.
McEstimate mc_moment_estimate(const MomentSpec& spec, int samples, std::uint64_t seed);

}  // namespace cuelab
