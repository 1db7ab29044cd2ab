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

#include "cuelab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <utility>

namespace cuelab {

namespace {

// Emit every partition la containing mu with la/mu a horizontal strip of
// size k (no two added boxes in the same column, i.e. mu interlaces la).
void for_each_horizontal_strip(const std::vector<int>& mu, int k,
                               const std::function<void(const Partition&)>& emit) {
    const int rows = static_cast<int>(mu.size()) + 1;
    std::vector<int> la(static_cast<std::size_t>(rows), 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == rows) {
            if (remaining == 0) {
                std::vector<int> parts(la.begin(), la.end());
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                emit(Partition(std::move(parts)));
            }
            return;
        }
        const int lo = i < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(i)] : 0;
        const int hi = i == 0 ? lo + remaining
                              : std::min(mu[static_cast<std::size_t>(i - 1)], lo + remaining);
        for (int v = lo; v <= hi; ++v) {
            la[static_cast<std::size_t>(i)] = v;
            rec(i + 1, remaining - (v - lo));
        }
        la[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, k);
}

// Emit every partition la containing mu with la/mu a vertical strip of
// size k (at most one added box per row).
void for_each_vertical_strip(const std::vector<int>& mu, int k,
                             const std::function<void(const Partition&)>& emit) {
    const int rows = static_cast<int>(mu.size()) + k;
    std::vector<int> la(static_cast<std::size_t>(rows), 0);
    std::function<void(int, int, int)> rec = [&](int i, int remaining, int prev) {
        if (remaining == 0) {
            std::vector<int> parts(la.begin(), la.begin() + i);
            for (int j = i; j < static_cast<int>(mu.size()); ++j)
                parts.push_back(mu[static_cast<std::size_t>(j)]);
            emit(Partition(std::move(parts)));
            return;
        }
        if (i == rows) return;
        const int base = i < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(i)] : 0;
        for (int delta = std::min(1, remaining); delta >= 0; --delta) {
            const int v = base + delta;
            if (v > prev || v == 0) continue;  // v == 0: no boxes left to place below
            la[static_cast<std::size_t>(i)] = v;
            rec(i + 1, remaining - delta, v);
        }
        la[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, k, std::numeric_limits<int>::max());
}

SchurVector multiply_strip(const SchurVector& f, int k, bool vertical) {
    if (k < 0) throw std::invalid_argument("Pieri multiply: negative k");
    if (k == 0) return f;
    SchurVector out(f.degree() + k);
    for (const auto& [mu, c] : f.coeffs()) {
        const auto emit = [&](const Partition& la) { out.add(la, c); };
        if (vertical)
            for_each_vertical_strip(mu.parts(), k, emit);
        else
            for_each_horizontal_strip(mu.parts(), k, emit);
    }
    return out;
}

void check_degree_bound(const Partition& mu, int degree_bound, const char* what) {
    if (mu.size() > degree_bound)
        throw bound_error(std::string(what) + ": degree " + std::to_string(mu.size()) +
                          " exceeds bound " + std::to_string(degree_bound));
}

}  // namespace

SchurVector multiply_h(const SchurVector& f, int k) { return multiply_strip(f, k, false); }

SchurVector multiply_e(const SchurVector& f, int k) { return multiply_strip(f, k, true); }

// Border-strip rule via shifted exponents: p_k a_beta = sum_i a_{beta + k e_i},
// re-sorted with the sign of the sorting permutation.
SchurVector multiply_p(const SchurVector& f, int k) {
    if (k < 1) throw std::invalid_argument("multiply_p: k must be positive");
    SchurVector out(f.degree() + k);
    for (const auto& [mu, c] : f.coeffs()) {
        const int m = mu.length() + k;
        std::vector<long> beta(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            beta[static_cast<std::size_t>(i)] =
                (i < mu.length() ? mu.part(i) : 0) + (m - 1 - i);
        for (int i = 0; i < m; ++i) {
            std::vector<long> b = beta;
            b[static_cast<std::size_t>(i)] += k;
            int inversions = 0;
            bool collision = false;
            for (int s = 0; s < m && !collision; ++s)
                for (int t = s + 1; t < m; ++t) {
                    if (b[static_cast<std::size_t>(s)] == b[static_cast<std::size_t>(t)]) {
                        collision = true;
                        break;
                    }
                    if (b[static_cast<std::size_t>(s)] < b[static_cast<std::size_t>(t)]) ++inversions;
                }
            if (collision) continue;
            std::sort(b.begin(), b.end(), std::greater<>());
            std::vector<int> parts(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                parts[static_cast<std::size_t>(j)] =
                    static_cast<int>(b[static_cast<std::size_t>(j)]) - (m - 1 - j);
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out.add(Partition(std::move(parts)), inversions % 2 == 0 ? c : -c);
        }
    }
    return out;
}

SchurVector e_to_schur(const Partition& mu, int degree_bound) {
    check_degree_bound(mu, degree_bound, "e_to_schur");
    SchurVector f = SchurVector::unit();
    for (int i = 0; i < mu.length(); ++i) f = multiply_e(f, mu.part(i));
    return f;
}

SchurVector h_to_schur(const Partition& mu, int degree_bound) {
    check_degree_bound(mu, degree_bound, "h_to_schur");
    SchurVector f = SchurVector::unit();
    for (int i = 0; i < mu.length(); ++i) f = multiply_h(f, mu.part(i));
    return f;
}

SchurVector p_to_schur(const Partition& rho, int degree_bound) {
    check_degree_bound(rho, degree_bound, "p_to_schur");
    SchurVector f = SchurVector::unit();
    for (int i = 0; i < rho.length(); ++i) f = multiply_p(f, rho.part(i));
    return f;
}

namespace {

// K(la, mu_1..mu_r) by peeling the entries equal to r off as a horizontal
// strip of size mu_r. Memoized on (shape, entries left).
Int kostka_rec(const Partition& la, const std::vector<int>& mu, int r,
               std::map<std::pair<Partition, int>, Int>& memo) {
    if (r == 0) return la.empty() ? 1 : 0;
    const auto key = std::make_pair(la, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = mu[static_cast<std::size_t>(r - 1)];
    Int total = 0;
    // nu interlaces la with |la| - |nu| = strip
    const auto& lp = la.parts();
    std::vector<int> nu(lp.size(), 0);
    std::function<void(int, int)> shrink = [&](int i, int removed) {
        if (removed > strip) return;
        if (i == static_cast<int>(lp.size())) {
            if (removed != strip) return;
            std::vector<int> parts(nu.begin(), nu.end());
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            total += kostka_rec(Partition(std::move(parts)), mu, r - 1, memo);
            return;
        }
        const int hi = lp[static_cast<std::size_t>(i)];
        const int lo = i + 1 < static_cast<int>(lp.size()) ? lp[static_cast<std::size_t>(i + 1)] : 0;
        for (int v = lo; v <= hi; ++v) {
            nu[static_cast<std::size_t>(i)] = v;
            shrink(i + 1, removed + (hi - v));
        }
    };
    shrink(0, 0);
    memo.emplace(key, total);
    return total;
}

}  // namespace

Int kostka(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size())
        throw std::invalid_argument("kostka: |la| = " + std::to_string(la.size()) +
                                    " but |mu| = " + std::to_string(mu.size()));
    // K_{la,mu} != 0 requires ell(la) <= ell(mu); cheap cutoff.
    if (la.length() > mu.length() && !la.empty()) return 0;
    std::map<std::pair<Partition, int>, Int> memo;
    return kostka_rec(la, mu.parts(), mu.length(), memo);
}

SchurVectorQ to_rational(const SchurVector& f) {
    SchurVectorQ out(f.degree());
    for (const auto& [la, c] : f.coeffs()) out.add(la, Rat(c));
    return out;
}

SchurVector to_integral(const SchurVectorQ& f) {
    SchurVector out(f.degree());
    for (const auto& [la, c] : f.coeffs()) out.add(la, to_int(c));
    return out;
}

}  // namespace cuelab
