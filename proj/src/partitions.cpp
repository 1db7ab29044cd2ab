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

#include "cuelab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cuelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
    std::vector<int> parts;
    for (int j = static_cast<int>(mult.size()); j >= 1; --j) {
        const int m = mult[static_cast<std::size_t>(j - 1)];
        if (m < 0) throw std::invalid_argument("Partition: negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(m), j);
    }
    return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p - 1)];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<std::size_t>(parts_.front()));
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

namespace {

void descend(int remaining, int max_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        stack.push_back(k);
        descend(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    if (n > bound)
        throw bound_error("enumerate_partitions: n = " + std::to_string(n) + " exceeds bound " +
                          std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> stack;
    descend(n, n, stack, out);
    return out;
}

Int z_factor(const Partition& rho) {
    Int z = 1;
    const std::vector<int> mult = rho.multiplicities();
    for (std::size_t j = 0; j < mult.size(); ++j) {
        if (mult[j] == 0) continue;
        z *= int_pow(Int(static_cast<long>(j + 1)), mult[j]);
        z *= factorial(mult[j]);
    }
    return z;
}

}  // namespace cuelab
