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

#include "cuelab/cue.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "cuelab/symfunc.hpp"

namespace cuelab {

namespace {

constexpr int kMaxMatrixSize = 64;

void validate(const MomentSpec& spec) {
    if (spec.N < 1) throw std::invalid_argument("MomentSpec: N must be >= 1");
    for (int v : spec.a)
        if (v < 0) throw std::invalid_argument("MomentSpec: negative multiplicity in a");
    for (int v : spec.b)
        if (v < 0) throw std::invalid_argument("MomentSpec: negative multiplicity in b");
}

int weighted_sum(const std::vector<int>& m) {
    int s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) s += static_cast<int>(j + 1) * m[j];
    return s;
}

int plain_sum(const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Portable Box-Muller on top of mt19937_64 so that seeded runs are
// bit-stable across standard libraries.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = unit_open();
        const double u2 = unit_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Complex next_complex() {
        const double re = next();
        const double im = next();
        return Complex(re, im);
    }

private:
    double unit_open() {
        // uniform in (0, 1]: avoids log(0)
        return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

UnitaryMatrix haar_from_stream(int N, GaussianStream& g) {
    UnitaryMatrix A(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) A(i, j) = g.next_complex();
    Eigen::HouseholderQR<UnitaryMatrix> qr(A);
    UnitaryMatrix Q = qr.householderQ() * UnitaryMatrix::Identity(N, N);
    const UnitaryMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j) {
        const Complex r = R(j, j);
        const double mag = std::abs(r);
        const Complex phase = mag > 0.0 ? r / mag : Complex(1.0, 0.0);
        Q.col(j) *= phase;
    }
    return Q;
}

std::vector<Complex> eigenvalues_of(const UnitaryMatrix& U) {
    Eigen::ComplexEigenSolver<UnitaryMatrix> solver(U, /*computeEigenvectors=*/false);
    std::vector<Complex> eigs(static_cast<std::size_t>(U.rows()));
    for (int i = 0; i < U.rows(); ++i) eigs[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return eigs;
}

std::vector<Complex> elementary_from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> e(roots.size() + 1, Complex(0.0, 0.0));
    e[0] = Complex(1.0, 0.0);
    std::size_t used = 0;
    for (const Complex& z : roots) {
        ++used;
        for (std::size_t n = used; n >= 1; --n) e[n] += z * e[n - 1];
    }
    return e;
}

std::vector<Complex> complete_homogeneous_from_roots(const std::vector<Complex>& eigs, int n_max) {
    std::vector<Complex> p(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    for (int k = 1; k <= n_max; ++k)
        for (const Complex& z : eigs) p[static_cast<std::size_t>(k)] += std::pow(z, k);
    std::vector<Complex> h(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    h[0] = Complex(1.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        Complex acc(0.0, 0.0);
        for (int k = 1; k <= n; ++k)
            acc += p[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(n - k)];
        h[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
    }
    return h;
}

Complex complex_pow(const Complex& z, int e) {
    Complex r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

}  // namespace

std::string to_string(RangeVerdict v) {
    switch (v) {
        case RangeVerdict::in_range_dg: return "in-range-DG";
        case RangeVerdict::in_range_min: return "in-range-min";
        case RangeVerdict::out_of_range: return "out-of-range";
    }
    return "?";
}

Int sc_moment_exact(const MomentSpec& spec) {
    validate(spec);
    return hall_pairing_truncated(e_to_schur(spec.mu()), e_to_schur(spec.mu_tilde()), spec.N);
}

Int trsym_moment_exact(const MomentSpec& spec) {
    validate(spec);
    return hall_pairing_truncated(h_to_schur(spec.mu()), h_to_schur(spec.mu_tilde()), spec.N);
}

RangeVerdict range_verdict(const MomentSpec& spec) {
    validate(spec);
    if (spec.kind == MomentKind::secular) {
        return weighted_sum(spec.a) <= spec.N && weighted_sum(spec.b) <= spec.N
                   ? RangeVerdict::in_range_dg
                   : RangeVerdict::out_of_range;
    }
    return std::min(plain_sum(spec.a), plain_sum(spec.b)) <= spec.N ? RangeVerdict::in_range_min
                                                                    : RangeVerdict::out_of_range;
}

UnitaryMatrix haar_sample(int N, std::uint64_t seed) {
    if (N < 1 || N > kMaxMatrixSize)
        throw std::invalid_argument("haar_sample: N must be in [1, 64]");
    GaussianStream g(seed);
    return haar_from_stream(N, g);
}

double unitarity_defect(const UnitaryMatrix& U) {
    const UnitaryMatrix D = U * U.adjoint() - UnitaryMatrix::Identity(U.rows(), U.cols());
    return D.norm();
}

std::vector<Complex> secular_coeffs(const UnitaryMatrix& U) {
    return elementary_from_roots(eigenvalues_of(U));
}

std::vector<Complex> trsym_values(const UnitaryMatrix& U, int n_max) {
    if (n_max < 0 || n_max > kMaxMatrixSize)
        throw std::invalid_argument("trsym_values: n_max must be in [0, 64]");
    return complete_homogeneous_from_roots(eigenvalues_of(U), n_max);
}

McEstimate mc_moment_estimate(const MomentSpec& spec, int samples, std::uint64_t seed) {
    validate(spec);
    if (samples < 1000) throw std::invalid_argument("mc_moment_estimate: samples must be >= 1000");
    const int ell = static_cast<int>(std::max(spec.a.size(), spec.b.size()));
    GaussianStream g(seed);
    Complex sum(0.0, 0.0);
    double sum_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
        const UnitaryMatrix U = haar_from_stream(spec.N, g);
        std::vector<Complex> values;
        if (spec.kind == MomentKind::secular) {
            values = secular_coeffs(U);
            values.resize(static_cast<std::size_t>(ell) + 1, Complex(0.0, 0.0));
        } else {
            values = trsym_values(U, ell);
        }
        Complex term(1.0, 0.0);
        for (int j = 1; j <= ell; ++j) {
            const std::size_t idx = static_cast<std::size_t>(j);
            const int aj = j <= static_cast<int>(spec.a.size()) ? spec.a[idx - 1] : 0;
            const int bj = j <= static_cast<int>(spec.b.size()) ? spec.b[idx - 1] : 0;
            if (aj > 0) term *= complex_pow(values[idx], aj);
            if (bj > 0) term *= complex_pow(std::conj(values[idx]), bj);
        }
        sum += term;
        sum_sq += std::norm(term);
    }
    const double inv_n = 1.0 / static_cast<double>(samples);
    const Complex mean = sum * inv_n;
    const double var =
        std::max(0.0, (sum_sq - std::norm(sum) * inv_n) / static_cast<double>(samples - 1));
    return McEstimate{mean, std::sqrt(var * inv_n)};
}

}  // namespace cuelab
