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

namespace cuelab {

/// Partition size cap for enumerate_partitions.
inline constexpr int kPartitionBound = 30;

/// Degree cap for Schur-basis expansions.
inline constexpr int kDegreeBound = 16;

/// Default cap on enumeration sizes (monic polynomials, tuple products).
inline constexpr std::uint64_t kDefaultMaxEnum = 10'000'000;

/// Cap on unit-group orders phi(Q).
inline constexpr std::uint64_t kPhiBound = 100'000;

/// Default node cap for contingency-table backtracking.
inline constexpr std::uint64_t kDefaultNodeLimit = 200'000'000;

/// Enumeration cap: kDefaultMaxEnum unless the CUE_LAB_MAX_ENUM environment
/// variable overrides it. Read once per process.
std::uint64_t max_enum();

}  // namespace cuelab
