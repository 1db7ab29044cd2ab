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

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cuelab/contingency.hpp"
#include "cuelab/limits.hpp"
#include "cuelab/numbers.hpp"
#include "cuelab/partitions.hpp"

namespace cuelab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_q with q = p^r. Elements are codes 0..q-1; for r > 1 the code is the
/// base-p digit vector of the polynomial-basis representation, with the
/// lexicographically smallest monic irreducible of degree r as modulus.
class Field {
public:
    /// q factored as p^r automatically. Throws for q not a prime power.
    static FieldPtr make(int q);
    static FieldPtr make(int p, int r);

    int p() const { return p_; }
    int r() const { return r_; }
    int q() const { return q_; }

    /// Modulus coefficients over F_p, low-to-high, degree r. Empty for r = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;

    /// Coefficient vectors (low-to-high element codes, including the leading
    /// 1) of all monic irreducibles of degree d, in code order. Built lazily
    /// and immutable afterwards.
    const std::vector<std::vector<int>>& irreducibles_of_degree(int d) const;

    bool same_as(const Field& other) const { return p_ == other.p_ && r_ == other.r_; }

private:
    Field(int p, int r);

    int p_ = 2;
    int r_ = 1;
    int q_ = 2;
    std::vector<int> modulus_;
    std::vector<int> mul_table_;  // r > 1 only
    std::vector<int> inv_table_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<std::vector<std::vector<int>>> irreducible_cache_;
};

/// Polynomial over F_q, low-to-high coefficient codes, no trailing zeros;
/// the zero polynomial has an empty vector.
class FPoly {
public:
    FPoly() = default;
    FPoly(FieldPtr field, std::vector<int> coeffs);

    static FPoly zero(FieldPtr field) { return FPoly(std::move(field), {}); }
    static FPoly one(FieldPtr field) { return FPoly(std::move(field), {1}); }
    static FPoly constant(FieldPtr field, int c) { return FPoly(std::move(field), {c}); }
    static FPoly variable(FieldPtr field) { return FPoly(std::move(field), {0, 1}); }

    /// Monic polynomial of the given degree whose lower coefficients are the
    /// base-q digits of code (code in [0, q^degree)).
    static FPoly monic_from_code(FieldPtr field, int degree, std::uint64_t code);

    /// Inverse of code(): base-q digits of code as coefficients.
    static FPoly from_code(FieldPtr field, std::uint64_t code);

    const FieldPtr& field() const { return field_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    int leading() const { return coeffs_.back(); }

    /// Base-q encoding including the leading coefficient.
    std::uint64_t code() const;

    FPoly make_monic() const;

    FPoly operator+(const FPoly& o) const;
    FPoly operator-(const FPoly& o) const;
    FPoly operator*(const FPoly& o) const;
    std::pair<FPoly, FPoly> divmod(const FPoly& d) const;
    FPoly operator/(const FPoly& d) const;
    FPoly operator%(const FPoly& d) const;

    bool operator==(const FPoly& o) const;
    bool operator!=(const FPoly& o) const { return !(*this == o); }

    /// "T^2+2*T+1" style rendering.
    std::string to_string() const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<int> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
FPoly poly_gcd(FPoly a, FPoly b);

struct Factorization {
    std::vector<std::pair<FPoly, int>> factors;  // (monic irreducible, multiplicity), sorted

    /// Cycle type of the factorization: deg P repeated per prime-power copy.
    Partition cycle_type() const;
};

/// All monic polynomials of degree n over the field, in code order.
/// Throws bound_error when q^n exceeds the enumeration cap.
std::vector<FPoly> enumerate_monic(const FieldPtr& field, int n);

/// Streaming variant of enumerate_monic.
void for_each_monic(const FieldPtr& field, int n, const std::function<void(const FPoly&)>& fn);

/// Unique factorization by trial division against the cached irreducibles.
/// Requires a monic input of degree <= 24.
Factorization factorize(const FPoly& f);

/// 0 on squarefull f, else (-1)^{number of prime factors}. Requires monic f.
int moebius(const FPoly& f);

/// d_{la,q}(f) = d_la(pi) for pi with cycle lengths {deg P_i} from the
/// factorization of f. Requires |la| = deg f.
Int d_lambda_q(const Partition& la, const FPoly& f);

/// sum over monic degree-n f of d_{mu,q}(f) d_{nu,q}(f).
Int divisor_correlation_sum(const Partition& mu, const Partition& nu, int n, const FieldPtr& field);

struct PolyFitReport {
    std::vector<Rat> coeffs;  // low-to-high in q
    bool integer_coeffs = false;
    bool degree_matches = false;
    bool leading_matches = false;
    bool holdout_matches = false;
    Int leading_target = 0;

    bool verdict() const {
        return integer_coeffs && degree_matches && leading_matches && holdout_matches;
    }
};

/// Lagrange-interpolates q -> divisor_correlation_sum over the first n+1
/// sample field sizes and demands: integer coefficients, degree exactly n,
/// leading coefficient N_{mu,nu}, and an exact match at holdout_q (any
/// extra sample points must match too). Throws std::invalid_argument when
/// fewer than n+1 sample points are supplied.
PolyFitReport polynomiality_check(const Partition& mu, const Partition& nu, int n,
                                  const std::vector<int>& sample_qs, int holdout_q);

/// h[i][j] = gcd(g[i], f[j]), monic entries. Rows follow g, columns f.
std::vector<std::vector<FPoly>> gcd_matrix(const std::vector<FPoly>& f_list,
                                           const std::vector<FPoly>& g_list);

/// Entrywise degrees of a gcd matrix, as a contingency-style matrix.
MarginMatrix degree_matrix(const std::vector<std::vector<FPoly>>& h);

/// Inductive gcd decomposition: a_{1,1} = gcd(m_1, n_1) and, by induction
/// on i+j, a_{i,j} = gcd(m_i / prod_{l<j} a_{i,l}, n_j / prod_{l<i} a_{l,j}).
/// Rows multiply back to m and columns to n with no coprimality assumption.
/// Throws std::invalid_argument when prod m != prod n.
std::vector<std::vector<Int>> vaughan_wooley_decompose(const std::vector<Int>& m,
                                                       const std::vector<Int>& n);
std::vector<std::vector<FPoly>> vaughan_wooley_decompose(const std::vector<FPoly>& m,
                                                         const std::vector<FPoly>& n);

}  // namespace cuelab
