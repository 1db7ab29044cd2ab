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

#include "cuelab/charmap.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cuelab {

void ClassFunction::set(const Partition& rho, const Rat& v) {
    if (rho.size() != degree_) throw std::logic_error("ClassFunction: cycle-type degree mismatch");
    if (v == 0)
        values_.erase(rho);
    else
        values_[rho] = v;
}

ClassFunction ClassFunction::one(int n) {
    ClassFunction f(n);
    for (const Partition& rho : enumerate_partitions(n)) f.set(rho, 1);
    return f;
}

ClassFunction ClassFunction::sign(int n) {
    ClassFunction f(n);
    for (const Partition& rho : enumerate_partitions(n))
        f.set(rho, (n - rho.length()) % 2 == 0 ? 1 : -1);
    return f;
}

namespace {

// Distribute the cycle multiset of rho into ell labeled blocks of exact
// capacities caps. Blocks with equal remaining capacity are interchangeable,
// so the memo key sorts capacities.
class BlockAssignmentCounter {
public:
    BlockAssignmentCounter(std::vector<std::pair<int, int>> cycles, std::vector<int> caps)
        : cycles_(std::move(cycles)), caps_(std::move(caps)) {}

    Int count() { return rec(0); }

private:
    Int rec(std::size_t t) {
        if (t == cycles_.size()) {
            for (int c : caps_)
                if (c != 0) return 0;
            return 1;
        }
        std::vector<int> key = caps_;
        std::sort(key.begin(), key.end());
        auto memo_key = std::make_pair(t, std::move(key));
        if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

        const auto [len, count] = cycles_[t];
        Int total = 0;
        // Choose how many of the `count` distinguishable cycles of length
        // `len` land in each block; weight by the multinomial coefficient.
        std::function<void(std::size_t, int, Int)> assign = [&](std::size_t block, int left,
                                                                Int ways) {
            if (block == caps_.size()) {
                if (left == 0) total += ways * rec(t + 1);
                return;
            }
            const int cap_max = caps_[block] / len;
            for (int k = 0; k <= std::min(left, cap_max); ++k) {
                caps_[block] -= k * len;
                assign(block + 1, left - k, ways * binomial(left, k));
                caps_[block] += k * len;
            }
        };
        assign(0, count, 1);
        memo_.emplace(std::move(memo_key), total);
        return total;
    }

    std::vector<std::pair<int, int>> cycles_;  // (length, multiplicity)
    std::vector<int> caps_;
    std::map<std::pair<std::size_t, std::vector<int>>, Int> memo_;
};

}  // namespace

Int d_lambda_value(const Partition& la, const Partition& rho) {
    if (la.size() != rho.size())
        throw std::invalid_argument("d_lambda_value: |la| = " + std::to_string(la.size()) +
                                    " but |rho| = " + std::to_string(rho.size()));
    std::vector<std::pair<int, int>> cycles;
    const std::vector<int> mult = rho.multiplicities();
    for (std::size_t j = 0; j < mult.size(); ++j)
        if (mult[j] > 0) cycles.emplace_back(static_cast<int>(j + 1), mult[j]);
    BlockAssignmentCounter counter(std::move(cycles), la.parts());
    return counter.count();
}

ClassFunction d_lambda_class_function(const Partition& la) {
    ClassFunction f(la.size());
    for (const Partition& rho : enumerate_partitions(la.size()))
        f.set(rho, Rat(d_lambda_value(la, rho)));
    return f;
}

Rat sn_inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("sn_inner_product: degree mismatch");
    Rat acc(0);
    for (const auto& [rho, fv] : f.values()) {
        const Rat gv = g.value(rho);
        if (gv != 0) acc += fv * gv / Rat(z_factor(rho));
    }
    return acc;
}

SchurVectorQ characteristic_map(const ClassFunction& f) {
    SchurVectorQ out(f.degree());
    for (const auto& [rho, v] : f.values()) {
        const Rat scale = v / Rat(z_factor(rho));
        const SchurVector p = p_to_schur(rho);
        for (const auto& [la, c] : p.coeffs()) out.add(la, scale * Rat(c));
    }
    return out;
}

ClassFunction sign_twist(const ClassFunction& f) {
    ClassFunction out(f.degree());
    for (const auto& [rho, v] : f.values())
        out.set(rho, (f.degree() - rho.length()) % 2 == 0 ? v : -v);
    return out;
}

}  // namespace cuelab
