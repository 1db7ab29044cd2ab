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

#include "cuelab/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cuelab/contingency.hpp"

namespace cuelab {

namespace {

using Complex = std::complex<double>;

std::vector<std::pair<int, int>> factor_int(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mod_inverse(long a, long m) {
    long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        const long quotient = r / new_r;
        std::swap(t -= quotient * new_t, new_t);
        std::swap(r -= quotient * new_r, new_r);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return static_cast<int>(((t % m) + m) % m);
}

}  // namespace

// ---- UnitGroup ----

UnitGroup::UnitGroup(FPoly modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.is_monic() || modulus_.degree() < 1)
        throw std::invalid_argument("UnitGroup: modulus must be monic of degree >= 1");
    const FieldPtr& F = modulus_.field();
    const int d = modulus_.degree();

    std::uint64_t residues = 1;
    for (int i = 0; i < d; ++i) {
        residues *= static_cast<std::uint64_t>(F->q());
        if (residues > max_enum())
            throw bound_error("UnitGroup: residue count exceeds enumeration cap");
    }
    for (std::uint64_t code = 0; code < residues; ++code) {
        const FPoly f = FPoly::from_code(F, code);
        if (poly_gcd(f, modulus_).is_one()) {
            index_of_.emplace(code, static_cast<int>(unit_codes_.size()));
            unit_codes_.push_back(code);
        }
    }
    if (unit_codes_.size() > kPhiBound)
        throw bound_error("UnitGroup: phi(Q) = " + std::to_string(unit_codes_.size()) +
                          " exceeds cap " + std::to_string(kPhiBound));
    const int phi = static_cast<int>(unit_codes_.size());
    identity_ = index_of_.at(1);

    const auto mul_codes = [&](std::uint64_t a, std::uint64_t b) {
        return ((FPoly::from_code(F, a) * FPoly::from_code(F, b)) % modulus_).code();
    };
    const auto pow_code = [&](std::uint64_t base, long e) {
        std::uint64_t acc = 1;
        std::uint64_t sq = base;
        while (e > 0) {
            if (e & 1) acc = mul_codes(acc, sq);
            sq = mul_codes(sq, sq);
            e >>= 1;
        }
        return acc;
    };

    // Sylow-by-Sylow basis: greedy element of maximal order in the current
    // quotient, adjusted so the new cyclic factor meets the previous ones
    // trivially.
    struct SylowBasis {
        std::vector<std::uint64_t> gens;
        std::vector<int> orders;
        std::unordered_map<std::uint64_t, std::vector<int>> dlog;
    };
    std::vector<std::pair<int, int>> phi_factors = factor_int(phi);
    std::vector<SylowBasis> sylows;
    std::vector<long> projectors;  // exponent s_p per prime

    for (const auto& [p, a] : phi_factors) {
        long pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        const long M = phi / pa;
        // CRT idempotent: s = 1 mod p^a, s = 0 mod phi/p^a, so u -> u^s
        // projects onto the Sylow p-subgroup.
        projectors.push_back(M * mod_inverse(M, pa));

        std::set<std::uint64_t> members;
        for (std::uint64_t u : unit_codes_) members.insert(pow_code(u, projectors.back()));
        if (static_cast<long>(members.size()) != pa)
            throw std::logic_error("UnitGroup: Sylow subgroup has unexpected size");

        SylowBasis basis;
        basis.dlog.emplace(1, std::vector<int>{});
        while (static_cast<long>(basis.dlog.size()) < pa) {
            std::uint64_t best_x = 0;
            std::uint64_t best_h = 0;
            long best_m = 0;
            for (std::uint64_t x : members) {
                if (basis.dlog.count(x)) continue;
                long m = 1;
                std::uint64_t y = x;
                while (!basis.dlog.count(y)) {
                    y = pow_code(y, p);
                    m *= p;
                }
                if (m > best_m) {
                    best_m = m;
                    best_x = x;
                    best_h = y;
                }
            }
            // x^m lands in <gens>; divide out its m-th root to detach the
            // new cyclic factor.
            const std::vector<int>& e = basis.dlog.at(best_h);
            std::uint64_t adjusted = best_x;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] % best_m != 0)
                    throw std::logic_error("UnitGroup: basis adjustment failed");
                const long shift = basis.orders[i] - e[i] / best_m;
                adjusted = mul_codes(adjusted, pow_code(basis.gens[i], shift));
            }
            if (pow_code(adjusted, best_m) != 1)
                throw std::logic_error("UnitGroup: adjusted generator order mismatch");
            basis.gens.push_back(adjusted);
            basis.orders.push_back(static_cast<int>(best_m));
            std::unordered_map<std::uint64_t, std::vector<int>> grown;
            for (long t = 0; t < best_m; ++t) {
                const std::uint64_t at = pow_code(adjusted, t);
                for (const auto& [code, vec] : basis.dlog) {
                    std::vector<int> v = vec;
                    v.push_back(static_cast<int>(t));
                    grown.emplace(mul_codes(code, at), std::move(v));
                }
            }
            if (grown.size() != basis.dlog.size() * static_cast<std::size_t>(best_m))
                throw std::logic_error("UnitGroup: subgroup growth collision");
            basis.dlog = std::move(grown);
        }
        sylows.push_back(std::move(basis));
    }

    for (const SylowBasis& s : sylows) {
        gen_codes_.insert(gen_codes_.end(), s.gens.begin(), s.gens.end());
        gen_orders_.insert(gen_orders_.end(), s.orders.begin(), s.orders.end());
    }

    // Exponent vector of u: concatenated Sylow discrete logs of the
    // projections u^{s_p}.
    exponents_.resize(unit_codes_.size());
    for (std::size_t ui = 0; ui < unit_codes_.size(); ++ui) {
        std::vector<int> e;
        for (std::size_t si = 0; si < sylows.size(); ++si) {
            const std::uint64_t proj = pow_code(unit_codes_[ui], projectors[si]);
            const std::vector<int>& part = sylows[si].dlog.at(proj);
            e.insert(e.end(), part.begin(), part.end());
        }
        exponents_[ui] = std::move(e);
    }

    // Validation: product of orders is phi, exponent vectors are unique.
    long order_product = 1;
    for (int o : gen_orders_) order_product *= o;
    if (order_product != phi)
        throw std::logic_error("UnitGroup: generator orders do not multiply to phi");
    radix_strides_.assign(gen_orders_.size(), 1);
    for (std::size_t i = 1; i < gen_orders_.size(); ++i)
        radix_strides_[i] =
            radix_strides_[i - 1] * gen_orders_[i - 1];
    radix_to_index_.assign(static_cast<std::size_t>(phi), -1);
    for (std::size_t ui = 0; ui < unit_codes_.size(); ++ui) {
        long code = 0;
        for (std::size_t i = 0; i < gen_orders_.size(); ++i)
            code += static_cast<long>(exponents_[ui][i]) * radix_strides_[i];
        int& slot = radix_to_index_[static_cast<std::size_t>(code)];
        if (slot != -1) throw std::logic_error("UnitGroup: exponent vectors are not unique");
        slot = static_cast<int>(ui);
    }

    exponent_ = 1;
    for (int o : gen_orders_) exponent_ = std::lcm(exponent_, o);
}

int UnitGroup::index_of_code(std::uint64_t code) const {
    auto it = index_of_.find(code);
    return it == index_of_.end() ? -1 : it->second;
}

int UnitGroup::unit_index(const FPoly& f) const { return index_of_code((f % modulus_).code()); }

int UnitGroup::mul_units(int i, int j) const {
    long code = 0;
    const std::vector<int>& a = exponents_[static_cast<std::size_t>(i)];
    const std::vector<int>& b = exponents_[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t < gen_orders_.size(); ++t)
        code += static_cast<long>((a[t] + b[t]) % gen_orders_[t]) * radix_strides_[t];
    return radix_to_index_[static_cast<std::size_t>(code)];
}

FPoly UnitGroup::unit_poly(int unit_index) const {
    return FPoly::from_code(field(), unit_codes_[static_cast<std::size_t>(unit_index)]);
}

UnitGroupPtr build_unit_group(const FPoly& Q) { return std::make_shared<const UnitGroup>(Q); }

// ---- Character ----

Character::Character(UnitGroupPtr group, std::vector<int> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {
    const std::vector<int>& orders = group_->generator_orders();
    if (exps_.size() != orders.size())
        throw std::invalid_argument("Character: exponent vector length mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < 0 || exps_[i] >= orders[i])
            throw std::invalid_argument("Character: exponent out of range");
}

int Character::value_exponent_at(int unit_index) const {
    const int L = group_->exponent();
    const std::vector<int>& x = group_->exponents_of(unit_index);
    const std::vector<int>& orders = group_->generator_orders();
    long acc = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const long term = (static_cast<long>(exps_[i]) * x[i]) % orders[i];
        acc = (acc + term * (L / orders[i])) % L;
    }
    return static_cast<int>(acc);
}

int Character::value_exponent(const FPoly& f) const {
    const int idx = group_->unit_index(f);
    return idx < 0 ? -1 : value_exponent_at(idx);
}

Complex Character::value(const FPoly& f) const {
    const int e = value_exponent(f);
    if (e < 0) return Complex(0.0, 0.0);
    const double angle = 2.0 * M_PI * static_cast<double>(e) / group_->exponent();
    return Complex(std::cos(angle), std::sin(angle));
}

bool Character::is_principal() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Character::is_odd() const {
    const FieldPtr& F = group_->field();
    for (int c = 1; c < F->q(); ++c)
        if (value_exponent(FPoly::constant(F, c)) != 0) return true;
    return false;
}

bool Character::is_primitive() const {
    const FPoly& Q = group_->modulus();
    const Factorization fac = factorize(Q);
    // Walk every proper monic divisor Q' of Q; chi must be nontrivial on
    // the units congruent to 1 mod Q'.
    std::vector<FPoly> divisors{FPoly::one(Q.field())};
    for (const auto& [prime, mult] : fac.factors) {
        std::vector<FPoly> grown;
        for (const FPoly& d : divisors) {
            FPoly power = d;
            for (int e = 0; e <= mult; ++e) {
                grown.push_back(power);
                if (e < mult) power = power * prime;
            }
        }
        divisors = std::move(grown);
    }
    for (const FPoly& div : divisors) {
        if (div == Q) continue;
        bool nontrivial = false;
        for (int ui = 0; ui < group_->order() && !nontrivial; ++ui) {
            const FPoly u = group_->unit_poly(ui);
            if ((u % div) == FPoly::one(Q.field()) % div && value_exponent_at(ui) != 0)
                nontrivial = true;
        }
        if (!nontrivial) return false;
    }
    return true;
}

std::vector<Character> characters(const UnitGroupPtr& group) {
    const std::vector<int>& orders = group->generator_orders();
    std::vector<Character> out;
    std::vector<int> exps(orders.size(), 0);
    while (true) {
        out.emplace_back(group, exps);
        std::size_t i = 0;
        for (; i < orders.size(); ++i) {
            if (++exps[i] < orders[i]) break;
            exps[i] = 0;
        }
        if (i == orders.size()) break;
    }
    return out;
}

// ---- exact root-of-unity sums ----

RootOfUnitySum::RootOfUnitySum(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("RootOfUnitySum: order must be >= 1");
    counts_.assign(static_cast<std::size_t>(order), 0);
}

void RootOfUnitySum::add(int exponent, const Int& c) {
    counts_[static_cast<std::size_t>(((exponent % order_) + order_) % order_)] += c;
}

namespace {

// Exact division of integer polynomials (monic divisor), low-to-high.
std::vector<Int> int_poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) return {};
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<Int> quot(num.size() - den.size() + 1, 0);
    while (static_cast<int>(num.size()) - 1 >= dd) {
        const int shift = static_cast<int>(num.size()) - 1 - dd;
        const Int c = num.back();
        quot[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= dd; ++i) num[static_cast<std::size_t>(shift + i)] -= c * den[static_cast<std::size_t>(i)];
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.empty()) break;
    }
    if (!num.empty()) throw std::logic_error("int_poly_div_exact: nonzero remainder");
    return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int L) {
    static std::map<int, std::vector<Int>> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    const std::function<const std::vector<Int>&(int)> get = [&](int n) -> const std::vector<Int>& {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::vector<Int> poly(static_cast<std::size_t>(n) + 1, 0);
        poly.front() = -1;
        poly.back() = 1;  // x^n - 1
        for (int d = 1; d < n; ++d)
            if (n % d == 0) poly = int_poly_div_exact(std::move(poly), get(d));
        return memo.emplace(n, std::move(poly)).first->second;
    };
    return get(L);
}

bool RootOfUnitySum::is_zero() const {
    std::vector<Int> poly = counts_;
    const std::vector<Int>& phi = cyclotomic_polynomial(order_);
    const int dd = static_cast<int>(phi.size()) - 1;
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    while (static_cast<int>(poly.size()) - 1 >= dd && !poly.empty()) {
        const int shift = static_cast<int>(poly.size()) - 1 - dd;
        const Int c = poly.back();
        for (int i = 0; i <= dd; ++i)
            poly[static_cast<std::size_t>(shift + i)] -= c * phi[static_cast<std::size_t>(i)];
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
    }
    return poly.empty();
}

Complex RootOfUnitySum::to_complex() const {
    Complex acc(0.0, 0.0);
    for (std::size_t a = 0; a < counts_.size(); ++a) {
        if (counts_[a] == 0) continue;
        const double angle = 2.0 * M_PI * static_cast<double>(a) / order_;
        acc += counts_[a].get_d() * Complex(std::cos(angle), std::sin(angle));
    }
    return acc;
}

// ---- character sums, moments, solution counts ----

RootOfUnitySum char_sum(const Character& chi, int n) {
    RootOfUnitySum acc(chi.group().exponent());
    for_each_monic(chi.group().field(), n, [&](const FPoly& f) {
        const int e = chi.value_exponent(f);
        if (e >= 0) acc.add(e);
    });
    return acc;
}

std::vector<Complex> lfunction_coeffs(const Character& chi) {
    const int d = chi.group().modulus().degree();
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) out.push_back(char_sum(chi, n).to_complex());
    return out;
}

Rat char_moment(const UnitGroup& G, int n, int k, Twist twist) {
    if (n < 0 || k < 1) throw std::invalid_argument("char_moment: need n >= 0 and k >= 1");
    std::vector<Int> base(static_cast<std::size_t>(G.order()), 0);
    for_each_monic(G.field(), n, [&](const FPoly& f) {
        const int idx = G.unit_index(f);
        if (idx < 0) return;
        if (twist == Twist::moebius) {
            const int m = moebius(f);
            if (m != 0) base[static_cast<std::size_t>(idx)] += m;
        } else {
            base[static_cast<std::size_t>(idx)] += 1;
        }
    });
    std::vector<Int> w(static_cast<std::size_t>(G.order()), 0);
    w[static_cast<std::size_t>(G.identity_index())] = 1;
    for (int t = 0; t < k; ++t) {
        std::vector<Int> next(static_cast<std::size_t>(G.order()), 0);
        for (int i = 0; i < G.order(); ++i) {
            if (w[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < G.order(); ++j) {
                if (base[static_cast<std::size_t>(j)] == 0) continue;
                next[static_cast<std::size_t>(G.mul_units(i, j))] +=
                    w[static_cast<std::size_t>(i)] * base[static_cast<std::size_t>(j)];
            }
        }
        w = std::move(next);
    }
    Int total = 0;
    for (const Int& v : w) total += v * v;
    return Rat(total);
}

Int solution_count(int n, int k, const FPoly& Q, TupleConstraint constraint) {
    if (n < 0 || k < 1) throw std::invalid_argument("solution_count: need n >= 0 and k >= 1");
    if (Q.is_zero()) throw std::invalid_argument("solution_count: Q must be nonzero");
    const FieldPtr& field = Q.field();
    std::uint64_t tuples = 1;
    for (int i = 0; i < n * k; ++i) {
        tuples *= static_cast<std::uint64_t>(field->q());
        if (tuples > max_enum())
            throw bound_error("solution_count: q^{nk} exceeds enumeration cap");
    }
    std::vector<FPoly> eligible;
    for_each_monic(field, n, [&](const FPoly& f) {
        if (!poly_gcd(f, Q).is_one()) return;
        if (constraint == TupleConstraint::squarefree && moebius(f) == 0) return;
        eligible.push_back(f);
    });
    std::map<std::uint64_t, Int> products{{FPoly::one(field).code(), Int(1)}};
    for (int t = 0; t < k; ++t) {
        std::map<std::uint64_t, Int> next;
        for (const auto& [code, cnt] : products) {
            const FPoly prod = FPoly::from_code(field, code);
            for (const FPoly& f : eligible) next[(prod * f).code()] += cnt;
        }
        products = std::move(next);
    }
    Int total = 0;
    for (const auto& [code, cnt] : products) total += cnt * cnt;
    return total;
}

// ---- theta checks ----

namespace {

// Simultaneous (all-roots) fixed-point iteration with deterministic
// perturbation restarts.
std::vector<Complex> durand_kerner(const std::vector<Complex>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};
    std::vector<Complex> monic(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) monic[i] = coeffs[i] / coeffs.back();
    const auto eval = [&](const Complex& z) {
        Complex acc(0.0, 0.0);
        for (std::size_t i = monic.size(); i-- > 0;) acc = acc * z + monic[i];
        return acc;
    };
    double scale = 1.0;
    for (const Complex& c : monic) scale = std::max(scale, std::abs(c));
    const double tol = 1e-12 * scale;

    std::mt19937_64 rng(0x5eedULL);
    for (int restart = 0; restart < 16; ++restart) {
        std::vector<Complex> z(static_cast<std::size_t>(deg));
        const Complex base(0.4, 0.9);
        Complex cur(1.0, 0.0);
        for (int i = 0; i < deg; ++i) {
            cur *= base;
            z[static_cast<std::size_t>(i)] = cur;
            if (restart > 0) {
                const double dx = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.3;
                const double dy = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.3;
                z[static_cast<std::size_t>(i)] += Complex(dx, dy);
            }
        }
        for (int sweep = 0; sweep < 10'000; ++sweep) {
            bool degenerate = false;
            for (int i = 0; i < deg && !degenerate; ++i) {
                Complex den(1.0, 0.0);
                for (int j = 0; j < deg; ++j) {
                    if (j == i) continue;
                    den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                }
                if (std::abs(den) < 1e-300) {
                    degenerate = true;
                    break;
                }
                z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / den;
            }
            if (degenerate) break;
            double residual = 0.0;
            for (int i = 0; i < deg; ++i)
                residual = std::max(residual, std::abs(eval(z[static_cast<std::size_t>(i)])));
            if (residual <= tol) return z;
        }
    }
    throw std::runtime_error("durand_kerner: root iteration did not converge");
}

std::vector<Complex> elementary_symmetric(const std::vector<Complex>& roots) {
    std::vector<Complex> e(roots.size() + 1, Complex(0.0, 0.0));
    e[0] = Complex(1.0, 0.0);
    std::size_t used = 0;
    for (const Complex& z : roots) {
        ++used;
        for (std::size_t n = used; n >= 1; --n) e[n] += z * e[n - 1];
    }
    return e;
}

}  // namespace

ThetaReport theta_checks(const Character& chi) {
    const FPoly& Q = chi.group().modulus();
    const int d = Q.degree();
    if (d > 10) throw bound_error("theta_checks: deg Q > 10");
    if (!chi.is_odd() || !chi.is_primitive())
        throw std::invalid_argument("theta_checks: character must be odd and primitive");
    const double q = static_cast<double>(chi.group().field()->q());

    ThetaReport report;
    report.l_degree = d - 1;

    // (i) deg L = deg Q - 1, exactly.
    report.degree_ok = !char_sum(chi, d - 1).is_zero();

    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) coeffs.push_back(char_sum(chi, n).to_complex());

    // (ii) all roots of L on |u| = q^{-1/2}.
    const std::vector<Complex> roots = durand_kerner(coeffs);
    const double target = 1.0 / std::sqrt(q);
    for (const Complex& u : roots)
        report.max_root_modulus_error =
            std::max(report.max_root_modulus_error, std::abs(std::abs(u) - target));
    report.roots_ok = report.max_root_modulus_error <= 1e-9;

    // Normalized Frobenius eigenvalues.
    std::vector<Complex> eigs;
    eigs.reserve(roots.size());
    for (const Complex& u : roots) eigs.push_back(1.0 / (std::sqrt(q) * u));

    // (iii) Sc_n(Theta) = (-1)^n q^{-n/2} S_n(chi).
    const std::vector<Complex> sc = elementary_symmetric(eigs);
    for (int n = 0; n < d; ++n) {
        const Complex expected = (n % 2 == 0 ? 1.0 : -1.0) * coeffs[static_cast<std::size_t>(n)] /
                                 std::pow(q, 0.5 * n);
        const Complex got =
            n < static_cast<int>(sc.size()) ? sc[static_cast<std::size_t>(n)] : Complex(0.0, 0.0);
        report.max_sc_error = std::max(report.max_sc_error, std::abs(got - expected));
    }
    report.sc_ok = report.max_sc_error <= 1e-8;

    // (iv) Tr Sym^n(Theta) = q^{-n/2} [u^n] (1/L).
    const int n_max = d + 2;
    std::vector<Complex> inv(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    inv[0] = Complex(1.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= std::min(n, d - 1); ++j)
            acc += coeffs[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(n - j)];
        inv[static_cast<std::size_t>(n)] = -acc;
    }
    std::vector<Complex> power(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    for (int m = 1; m <= n_max; ++m)
        for (const Complex& z : eigs) power[static_cast<std::size_t>(m)] += std::pow(z, m);
    std::vector<Complex> h(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    h[0] = Complex(1.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= n; ++j)
            acc += power[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(n - j)];
        h[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
    }
    for (int n = 0; n <= n_max; ++n) {
        const Complex expected = inv[static_cast<std::size_t>(n)] / std::pow(q, 0.5 * n);
        report.max_trsym_error = std::max(
            report.max_trsym_error, std::abs(h[static_cast<std::size_t>(n)] - expected));
    }
    report.trsym_ok = report.max_trsym_error <= 1e-8;

    // (v) Weil bound |S_n| <= binom(d-1, n) q^{n/2}.
    double slack = -1e300;
    for (int n = 0; n < d; ++n) {
        const double bound = binomial(d - 1, n).get_d() * std::pow(q, 0.5 * n);
        slack = std::max(slack, std::abs(coeffs[static_cast<std::size_t>(n)]) - bound);
    }
    report.weil_slack = slack;
    report.weil_ok = slack <= 1e-8;
    return report;
}

std::vector<KatzRow> katz_trend_report(int d, int n, int k, const std::vector<int>& field_sizes) {
    if (n < 1 || k < 1 || d < 1)
        throw std::invalid_argument("katz_trend_report: d, n, k must be positive");
    std::vector<KatzRow> rows;
    const Partition margins = Partition(std::vector<int>(static_cast<std::size_t>(k), n));
    const Int target = count_matrices(margins, margins);
    for (int q : field_sizes) {
        const FieldPtr field = Field::make(q);
        const FPoly Q = first_squarefree_modulus(field, d);
        const UnitGroupPtr G = build_unit_group(Q);
        KatzRow row;
        row.q = q;
        row.modulus = Q.to_string();
        row.moment_none = char_moment(*G, n, k, Twist::none);
        row.moment_moebius = char_moment(*G, n, k, Twist::moebius);
        const Rat scale = Rat(int_pow(Int(q), n * k));
        row.ratio_none = row.moment_none / scale;
        row.ratio_moebius = row.moment_moebius / scale;
        row.target = target;
        rows.push_back(std::move(row));
    }
    return rows;
}

Int integer_mk(int x, int k, TupleConstraint constraint) {
    if (x < 1 || k < 1) throw std::invalid_argument("integer_mk: x and k must be positive");
    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) {
        tuples *= static_cast<std::uint64_t>(x);
        if (tuples > 100'000'000ULL) throw bound_error("integer_mk: x^k exceeds 1e8");
    }
    std::vector<int> entries;
    if (constraint == TupleConstraint::squarefree) {
        std::vector<bool> squarefree(static_cast<std::size_t>(x) + 1, true);
        for (int p = 2; p * p <= x; ++p)
            for (int m = p * p; m <= x; m += p * p) squarefree[static_cast<std::size_t>(m)] = false;
        for (int v = 1; v <= x; ++v)
            if (squarefree[static_cast<std::size_t>(v)]) entries.push_back(v);
    } else {
        for (int v = 1; v <= x; ++v) entries.push_back(v);
    }
    std::map<std::uint64_t, Int> products{{1, Int(1)}};
    for (int t = 0; t < k; ++t) {
        std::map<std::uint64_t, Int> next;
        for (const auto& [prod, cnt] : products)
            for (int v : entries) next[prod * static_cast<std::uint64_t>(v)] += cnt;
        products = std::move(next);
    }
    Int total = 0;
    for (const auto& [prod, cnt] : products) total += cnt * cnt;
    return total;
}

FPoly first_squarefree_modulus(const FieldPtr& field, int d) {
    if (d < 1) throw std::invalid_argument("first_squarefree_modulus: degree must be >= 1");
    FPoly found = FPoly::zero(field);
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(field->q());
    for (std::uint64_t code = 0; code < count; ++code) {
        const FPoly f = FPoly::monic_from_code(field, d, code);
        if (moebius(f) != 0) return f;
    }
    throw std::logic_error("first_squarefree_modulus: none found");  // unreachable for d >= 1
}

}  // namespace cuelab
