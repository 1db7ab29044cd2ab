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

#include <map>
#include <stdexcept>

#include "cuelab/limits.hpp"
#include "cuelab/numbers.hpp"
#include "cuelab/partitions.hpp"

namespace cuelab {

/// Sparse expansion of a homogeneous degree-n symmetric function in the
/// Schur basis. Every key is a partition of exactly degree(); zero
/// coefficients are never stored.
template <class C>
class SchurExpansion {
public:
    SchurExpansion() = default;
    explicit SchurExpansion(int degree) : degree_(degree) {}

    /// s_() with coefficient 1 (the unit of the symmetric-function algebra).
    static SchurExpansion unit() {
        SchurExpansion f(0);
        f.add(Partition{}, C(1));
        return f;
    }

    int degree() const { return degree_; }
    bool empty() const { return coeffs_.empty(); }
    const std::map<Partition, C>& coeffs() const { return coeffs_; }

    C coeff(const Partition& la) const {
        auto it = coeffs_.find(la);
        return it == coeffs_.end() ? C(0) : it->second;
    }

    void add(const Partition& la, const C& c) {
        if (c == 0) return;
        if (la.size() != degree_)
            throw std::logic_error("SchurExpansion: key degree mismatch");
        auto [it, inserted] = coeffs_.try_emplace(la, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool operator==(const SchurExpansion&) const = default;

private:
    int degree_ = 0;
    std::map<Partition, C> coeffs_;
};

using SchurVector = SchurExpansion<Int>;

/// Rational-coefficient variant, used for characteristic-map images before
/// integrality is established.
using SchurVectorQ = SchurExpansion<Rat>;

/// Pieri products: f * e_k (add vertical strips), f * h_k (add horizontal
/// strips), f * p_k (Murnaghan-Nakayama border strips, signed).
SchurVector multiply_e(const SchurVector& f, int k);
SchurVector multiply_h(const SchurVector& f, int k);
SchurVector multiply_p(const SchurVector& f, int k);

/// e_mu = sum_la K_{la',mu} s_la. Throws bound_error above degree_bound.
SchurVector e_to_schur(const Partition& mu, int degree_bound = kDegreeBound);

/// h_mu = sum_la K_{la,mu} s_la.
SchurVector h_to_schur(const Partition& mu, int degree_bound = kDegreeBound);

/// Power sum p_rho in the Schur basis (signed integer coefficients).
SchurVector p_to_schur(const Partition& rho, int degree_bound = kDegreeBound);

/// Kostka number K_{la,mu}: semistandard tableaux of shape la and content
/// mu, counted by peeling horizontal strips. Throws std::invalid_argument
/// when |la| != |mu|.
Int kostka(const Partition& la, const Partition& mu);

/// The omega involution: s_la -> s_{la'}.
template <class C>
SchurExpansion<C> omega(const SchurExpansion<C>& f) {
    SchurExpansion<C> out(f.degree());
    for (const auto& [la, c] : f.coeffs()) out.add(la.conjugate(), c);
    return out;
}

/// Hall pairing restricted to Schur functions with at most num_rows rows;
/// this is Haar integration over U(num_rows). Degree mismatch pairs to 0.
template <class C>
C hall_pairing_truncated(const SchurExpansion<C>& f, const SchurExpansion<C>& g, int num_rows) {
    if (f.degree() != g.degree()) return C(0);
    C acc(0);
    for (const auto& [la, c] : f.coeffs()) {
        if (la.length() > num_rows) continue;
        const C gc = g.coeff(la);
        if (gc != 0) acc += c * gc;
    }
    return acc;
}

SchurVectorQ to_rational(const SchurVector& f);

/// Exact integer coefficients of f; throws std::domain_error if any
/// coefficient is non-integral.
SchurVector to_integral(const SchurVectorQ& f);

}  // namespace cuelab
