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
#include <memory>
#include <unordered_map>
#include <vector>

#include "cuelab/ffield.hpp"
#include "cuelab/numbers.hpp"

namespace cuelab {

/// Unit group of F_q[T]/Q, decomposed into cyclic factors. Generators are
/// found Sylow subgroup by Sylow subgroup via greedy maximal-order selection
/// with quotient recursion; the decomposition is validated at construction
/// (product of orders equals phi, exponent vectors are unique).
class UnitGroup {
public:
    explicit UnitGroup(FPoly modulus);

    const FPoly& modulus() const { return modulus_; }
    const FieldPtr& field() const { return modulus_.field(); }
    int order() const { return static_cast<int>(unit_codes_.size()); }  // phi(Q)
    Int phi() const { return Int(order()); }

    const std::vector<int>& generator_orders() const { return gen_orders_; }
    const std::vector<std::uint64_t>& generator_codes() const { return gen_codes_; }

    /// lcm of the generator orders (the group exponent).
    int exponent() const { return exponent_; }

    const std::vector<std::uint64_t>& unit_codes() const { return unit_codes_; }

    /// Index of the residue f mod Q among the units; -1 when gcd(f, Q) != 1.
    int unit_index(const FPoly& f) const;
    int index_of_code(std::uint64_t code) const;
    int identity_index() const { return identity_; }

    /// Exponent vector of a unit against the generators.
    const std::vector<int>& exponents_of(int unit_index) const {
        return exponents_[static_cast<std::size_t>(unit_index)];
    }

    /// Group operation on unit indices (exponent-vector addition).
    int mul_units(int i, int j) const;

    FPoly unit_poly(int unit_index) const;

private:
    FPoly modulus_;
    std::vector<std::uint64_t> unit_codes_;
    std::unordered_map<std::uint64_t, int> index_of_;
    std::vector<std::uint64_t> gen_codes_;
    std::vector<int> gen_orders_;
    std::vector<std::vector<int>> exponents_;
    std::vector<int> radix_to_index_;
    std::vector<int> radix_strides_;
    int exponent_ = 1;
    int identity_ = 0;
};

using UnitGroupPtr = std::shared_ptr<const UnitGroup>;

/// Builds and validates the unit group. Throws bound_error when phi(Q)
/// would exceed the configured cap.
UnitGroupPtr build_unit_group(const FPoly& Q);

/// Dirichlet character mod Q, stored as exponents against the unit-group
/// generators. Values are exact roots of unity zeta_L^a with L the group
/// exponent.
class Character {
public:
    Character(UnitGroupPtr group, std::vector<int> exps);

    const UnitGroup& group() const { return *group_; }
    const std::vector<int>& exponents() const { return exps_; }

    /// a with chi(unit) = zeta_L^a.
    int value_exponent_at(int unit_index) const;

    /// a with chi(f) = zeta_L^a, or -1 when gcd(f, Q) != 1 (chi(f) = 0).
    int value_exponent(const FPoly& f) const;

    std::complex<double> value(const FPoly& f) const;

    bool is_principal() const;
    /// Nontrivial on the constants F_q^*.
    bool is_odd() const;
    /// Not induced from any proper divisor modulus: for every proper monic
    /// divisor Q' of Q some unit u = 1 mod Q' has chi(u) != 1.
    bool is_primitive() const;

private:
    UnitGroupPtr group_;
    std::vector<int> exps_;
};

/// All phi(Q) characters, odometer order over generator exponents.
std::vector<Character> characters(const UnitGroupPtr& group);

/// Exact element of Z[zeta_L]: sum_a counts[a] zeta_L^a. Zero testing
/// reduces modulo the L-th cyclotomic polynomial.
class RootOfUnitySum {
public:
    explicit RootOfUnitySum(int order);

    int order() const { return order_; }
    const std::vector<Int>& counts() const { return counts_; }
    void add(int exponent, const Int& c = 1);

    bool is_zero() const;
    std::complex<double> to_complex() const;

private:
    int order_ = 1;
    std::vector<Int> counts_;
};

/// Coefficients of the L-th cyclotomic polynomial, low-to-high. Memoized.
const std::vector<Int>& cyclotomic_polynomial(int L);

/// sum over monic degree-n f of chi(f), exact. Zero exactly for
/// non-principal chi once n >= deg Q.
RootOfUnitySum char_sum(const Character& chi, int n);

/// L(u, chi) coefficients (char_sum(chi, n))_{0 <= n < deg Q} as complex.
std::vector<std::complex<double>> lfunction_coeffs(const Character& chi);

enum class Twist { none, moebius };

/// (1/phi(Q)) sum_chi |sum_{f in M_n} twist(f) chi(f)|^{2k}, computed
/// exactly: the 2k-fold character-orthogonality sum collapses to counting
/// tuple pairs with congruent products, an integer-valued rational.
Rat char_moment(const UnitGroup& G, int n, int k, Twist twist);

enum class TupleConstraint { none, squarefree };

/// #{(f_1..f_k, g_1..g_k) : prod f = prod g, all monic of degree n,
/// coprime to Q, optionally all squarefree}.
Int solution_count(int n, int k, const FPoly& Q, TupleConstraint constraint);

struct ThetaReport {
    int l_degree = 0;  // deg Q - 1 when degree_ok
    bool degree_ok = false;
    double max_root_modulus_error = 0.0;
    bool roots_ok = false;
    double max_sc_error = 0.0;
    bool sc_ok = false;
    double max_trsym_error = 0.0;
    bool trsym_ok = false;
    double weil_slack = 0.0;  // max over n of |S_n| - binom bound (<= 0 when ok)
    bool weil_ok = false;

    bool all_ok() const { return degree_ok && roots_ok && sc_ok && trsym_ok && weil_ok; }
};

/// For odd primitive chi: checks deg L = deg Q - 1, root moduli q^{-1/2}
/// (simultaneous-iteration root finding), the secular-coefficient and
/// symmetric-power-trace relations against L and 1/L, and the Weil bound.
/// Throws std::invalid_argument unless chi is odd and primitive; requires
/// deg Q <= 10.
ThetaReport theta_checks(const Character& chi);

struct KatzRow {
    int q = 0;
    std::string modulus;
    Rat moment_none;
    Rat moment_moebius;
    Rat ratio_none;     // moment / q^{nk}
    Rat ratio_moebius;
    Int target;         // N_{(n^k),(n^k)}
};

/// Large-q trend table: both character moments over the first squarefree
/// monic modulus of degree d, per field size. Report only; asserts nothing.
std::vector<KatzRow> katz_trend_report(int d, int n, int k, const std::vector<int>& field_sizes);

/// M_k(x): pairs of k-tuples of positive integers <= x (optionally all
/// squarefree) with equal products. Requires x^k <= 1e8.
Int integer_mk(int x, int k, TupleConstraint constraint);

/// First monic squarefree polynomial of degree d in code order.
FPoly first_squarefree_modulus(const FieldPtr& field, int d);

}  // namespace cuelab
