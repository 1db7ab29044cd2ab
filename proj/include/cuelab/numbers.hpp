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
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cuelab {

/// Exact arbitrary-precision integer. All counts in the repository use this.
using Int = mpz_class;

/// Exact rational (big numerator / big denominator, always canonical).
using Rat = mpq_class;

/// Thrown when a configured enumeration or size bound would be exceeded.
class bound_error : public std::runtime_error {
public:
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

/// Canonicalized rational num/den. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

bool is_integral(const Rat& r);

/// Exact integer value of r; throws std::domain_error if r is not integral.
Int to_int(const Rat& r);

Int factorial(int n);
Int binomial(int n, int k);
Int int_pow(const Int& base, int exp);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace cuelab
