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

#include <compare>
#include <string>
#include <vector>

#include "cuelab/limits.hpp"
#include "cuelab/numbers.hpp"

namespace cuelab {

/// Integer partition in canonical (weakly decreasing) form.
///
/// Doubles as an S_n cycle type: a permutation with m_j cycles of length j
/// has cycle type from_multiplicities({m_1, m_2, ...}).
class Partition {
public:
    /// The empty partition of 0.
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);

    /// Partition with mult[j-1] parts equal to j. Trailing zeros and empty
    /// vectors are fine.
    static Partition from_multiplicities(const std::vector<int>& mult);

    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    /// m[j-1] = number of parts equal to j, for 1 <= j <= largest part.
    std::vector<int> multiplicities() const;

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// "(3,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, each exactly once, in reverse-lexicographic order:
/// (n) first, (1,...,1) last. Throws bound_error for n > bound.
std::vector<Partition> enumerate_partitions(int n, int bound = kPartitionBound);

/// Centralizer size z_rho = prod_j j^{m_j} m_j!. Exactly n!/z_rho
/// permutations in S_n have cycle type rho.
Int z_factor(const Partition& rho);

}  // namespace cuelab
