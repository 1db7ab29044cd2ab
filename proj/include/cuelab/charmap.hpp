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

#include "cuelab/numbers.hpp"
#include "cuelab/partitions.hpp"
#include "cuelab/symfunc.hpp"

namespace cuelab {

/// Rational-valued class function on S_n, stored by cycle type. Only cycle
/// types with nonzero value are kept.
class ClassFunction {
public:
    explicit ClassFunction(int degree) : degree_(degree) {}

    /// f == 1 on all of S_n.
    static ClassFunction one(int n);

    /// The sign character, rho -> (-1)^{n - ell(rho)}.
    static ClassFunction sign(int n);

    int degree() const { return degree_; }
    const std::map<Partition, Rat>& values() const { return values_; }

    Rat value(const Partition& rho) const {
        auto it = values_.find(rho);
        return it == values_.end() ? Rat(0) : it->second;
    }

    void set(const Partition& rho, const Rat& v);

    bool operator==(const ClassFunction&) const = default;

private:
    int degree_ = 0;
    std::map<Partition, Rat> values_;
};

/// d_la(pi) for any pi of cycle type rho: ordered tuples of disjoint
/// pi-invariant sets of sizes la_i covering [n]. Cycles are distributed
/// into labeled blocks with multinomial weights (equal-length cycles are
/// distinguishable). Throws std::invalid_argument when |la| != |rho|.
Int d_lambda_value(const Partition& la, const Partition& rho);

/// d_la as a class function on S_{|la|}.
ClassFunction d_lambda_class_function(const Partition& la);

/// (1/n!) sum_pi f(pi) g(pi) = sum_rho f(rho) g(rho) / z_rho.
Rat sn_inner_product(const ClassFunction& f, const ClassFunction& g);

/// Frobenius characteristic map: sum_rho (f(rho)/z_rho) p_rho in Schur
/// coordinates. The coordinates do not depend on the matrix size; the
/// row-count truncation lives in hall_pairing_truncated.
SchurVectorQ characteristic_map(const ClassFunction& f);

/// Pointwise product with the sign character. An involution.
ClassFunction sign_twist(const ClassFunction& f);

}  // namespace cuelab
