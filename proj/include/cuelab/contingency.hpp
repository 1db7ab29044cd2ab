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
#include <vector>

#include "cuelab/limits.hpp"
#include "cuelab/numbers.hpp"
#include "cuelab/partitions.hpp"

namespace cuelab {

/// Non-negative integer matrix with prescribed row and column sums.
struct MarginMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;  // row-major

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
    int& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    MarginMatrix transposed() const;

    bool operator==(const MarginMatrix&) const = default;
    auto operator<=>(const MarginMatrix&) const = default;
};

/// N_{mu,nu}: matrices with row sums mu and column sums nu, counted by
/// backtracking with column-remainder pruning. Returns 0 when |mu| != |nu|.
/// Throws bound_error when the search exceeds node_limit nodes.
Int count_matrices(const Partition& mu, const Partition& nu,
                   std::uint64_t node_limit = kDefaultNodeLimit);

/// Every matrix counted by count_matrices, each exactly once, row-major
/// lexicographic. Throws bound_error when the count exceeds max_matrices.
std::vector<MarginMatrix> enumerate_matrices(const Partition& mu, const Partition& nu,
                                             std::uint64_t max_matrices = 5'000'000);

/// sum_la K_{la,mu} K_{la,nu} over la |- n.
Int count_via_kostka(const Partition& mu, const Partition& nu);

/// <d_mu, d_nu>_{S_n}, asserted integral.
Int count_via_sn_average(const Partition& mu, const Partition& nu);

/// Checks n! <d_mu, d_nu>_{S_n} = sum over matrices C of
/// multinomial(n; c_ij) * prod c_ij!, the set-partition-pair bookkeeping
/// behind the matrix count. Requires n <= 8.
bool multinomial_identity_check(const Partition& mu, const Partition& nu);

}  // namespace cuelab
