// Test-only oracles: slow, definition-level implementations that the fast
// library paths are checked against. Nothing here may call the code under
// test beyond basic value types.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "cuelab/numbers.hpp"
#include "cuelab/partitions.hpp"

namespace oracles {

using cuelab::Int;
using cuelab::Partition;

// Number of partitions of n with parts <= cap, by direct recursion.
inline Int partition_count(int n, int cap) {
    if (n == 0) return 1;
    if (n < 0 || cap == 0) return 0;
    return partition_count(n - cap, cap) + partition_count(n, cap - 1);
}

inline Int partition_count(int n) { return partition_count(n, n); }

// ---- exact multivariate polynomials, monomial by monomial ----

struct MonomialPoly {
    int vars = 0;
    std::map<std::vector<int>, Int> terms;

    static MonomialPoly zero(int vars) { return MonomialPoly{vars, {}}; }

    static MonomialPoly one(int vars) {
        MonomialPoly f{vars, {}};
        f.terms.emplace(std::vector<int>(static_cast<std::size_t>(vars), 0), 1);
        return f;
    }

    void add_term(const std::vector<int>& exp, const Int& c) {
        auto [it, inserted] = terms.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    MonomialPoly operator*(const MonomialPoly& o) const {
        MonomialPoly out{vars, {}};
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    MonomialPoly operator+(const MonomialPoly& o) const {
        MonomialPoly out = *this;
        for (const auto& [e, c] : o.terms) out.add_term(e, c);
        return out;
    }

    MonomialPoly scaled(const Int& s) const {
        MonomialPoly out{vars, {}};
        if (s == 0) return out;
        for (const auto& [e, c] : terms) out.terms.emplace(e, c * s);
        return out;
    }

    bool operator==(const MonomialPoly&) const = default;
};

// e_k(x_1..x_m): sum over k-subsets.
inline MonomialPoly elementary(int k, int vars) {
    MonomialPoly f{vars, {}};
    std::vector<int> exp(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (left == 0) {
            f.add_term(exp, 1);
            return;
        }
        if (i == vars || vars - i < left) return;
        exp[static_cast<std::size_t>(i)] = 1;
        rec(i + 1, left - 1);
        exp[static_cast<std::size_t>(i)] = 0;
        rec(i + 1, left);
    };
    rec(0, k);
    return f;
}

// h_k(x_1..x_m): sum over degree-k monomials.
inline MonomialPoly complete_homogeneous(int k, int vars) {
    MonomialPoly f{vars, {}};
    std::vector<int> exp(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == vars - 1) {
            exp[static_cast<std::size_t>(i)] = left;
            f.add_term(exp, 1);
            exp[static_cast<std::size_t>(i)] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            exp[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
        exp[static_cast<std::size_t>(i)] = 0;
    };
    if (vars == 0) {
        if (k == 0) return MonomialPoly::one(0);
        return f;
    }
    rec(0, k);
    return f;
}

inline MonomialPoly power_sum(int k, int vars) {
    MonomialPoly f{vars, {}};
    for (int i = 0; i < vars; ++i) {
        std::vector<int> exp(static_cast<std::size_t>(vars), 0);
        exp[static_cast<std::size_t>(i)] = k;
        f.add_term(exp, 1);
    }
    return f;
}

inline MonomialPoly product_over_parts(const Partition& mu, int vars,
                                       MonomialPoly (*gen)(int, int)) {
    MonomialPoly f = MonomialPoly::one(vars);
    for (int i = 0; i < mu.length(); ++i) f = f * gen(mu.part(i), vars);
    return f;
}

// Every semistandard tableau of the given shape with entries in 1..vars,
// reported as its content vector (counts of each entry).
inline void for_each_ssyt(const Partition& shape, int vars,
                          const std::function<void(const std::vector<int>&)>& emit) {
    const auto& rows = shape.parts();
    std::vector<std::vector<int>> t(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        t[r].assign(static_cast<std::size_t>(rows[r]), 0);
    std::vector<int> content(static_cast<std::size_t>(vars), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == rows.size()) {
            emit(content);
            return;
        }
        if (c == t[r].size()) {
            rec(r + 1, 0);
            return;
        }
        const int left = c > 0 ? t[r][c - 1] : 1;
        const int above = r > 0 && c < t[r - 1].size() ? t[r - 1][c] + 1 : 1;
        for (int v = std::max(left, above); v <= vars; ++v) {
            t[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            rec(r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0, 0);
}

// Schur polynomial via its tableau definition.
inline MonomialPoly schur_by_tableaux(const Partition& shape, int vars) {
    MonomialPoly f{vars, {}};
    for_each_ssyt(shape, vars, [&](const std::vector<int>& content) { f.add_term(content, 1); });
    return f;
}

// Kostka number by direct tableau enumeration.
inline Int kostka_by_tableaux(const Partition& shape, const Partition& content) {
    Int count = 0;
    const int vars = content.length();
    std::vector<int> want(content.parts());
    for_each_ssyt(shape, vars, [&](const std::vector<int>& got) {
        if (std::equal(got.begin(), got.end(), want.begin(), want.end())) ++count;
    });
    return count;
}

// ---- brute force over S_n ----

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Partition cycle_type_of(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

// d_la(pi) straight from the definition: ordered tuples of disjoint
// invariant sets with the prescribed sizes, enumerated as block labelings.
inline Int d_lambda_bruteforce(const Partition& la, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    const int blocks = la.length();
    std::vector<int> capacity(la.parts());
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    Int count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (int j = 0; j < n; ++j)
                if (label[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] !=
                    label[static_cast<std::size_t>(j)])
                    return;
            ++count;
            return;
        }
        for (int b = 0; b < blocks; ++b) {
            if (capacity[static_cast<std::size_t>(b)] == 0) continue;
            --capacity[static_cast<std::size_t>(b)];
            label[static_cast<std::size_t>(i)] = b;
            rec(i + 1);
            label[static_cast<std::size_t>(i)] = -1;
            ++capacity[static_cast<std::size_t>(b)];
        }
    };
    if (la.size() != n) return 0;
    rec(0);
    return count;
}

// Contingency count by blind odometer over all entries (tiny cases only).
inline Int contingency_by_odometer(const std::vector<int>& row_sums,
                                   const std::vector<int>& col_sums) {
    const int r = static_cast<int>(row_sums.size());
    const int c = static_cast<int>(col_sums.size());
    const int total = std::accumulate(row_sums.begin(), row_sums.end(), 0);
    std::vector<int> cells(static_cast<std::size_t>(r * c), 0);
    Int count = 0;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == r * c) {
            for (int i = 0; i < r; ++i) {
                int s = 0;
                for (int j = 0; j < c; ++j) s += cells[static_cast<std::size_t>(i * c + j)];
                if (s != row_sums[static_cast<std::size_t>(i)]) return;
            }
            for (int j = 0; j < c; ++j) {
                int s = 0;
                for (int i = 0; i < r; ++i) s += cells[static_cast<std::size_t>(i * c + j)];
                if (s != col_sums[static_cast<std::size_t>(j)]) return;
            }
            ++count;
            return;
        }
        for (int v = 0; v <= total; ++v) {
            cells[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1);
        }
        cells[static_cast<std::size_t>(idx)] = 0;
    };
    rec(0);
    return count;
}

}  // namespace oracles
