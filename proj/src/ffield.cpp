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

#include "cuelab/ffield.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cuelab/charmap.hpp"

namespace cuelab {

namespace {

constexpr int kMaxExtensionOrder = 1024;
constexpr int kMaxFactorDegree = 24;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- plain F_p polynomial helpers (used before a Field exists) ----

std::vector<int> fp_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// remainder of a modulo a monic b, coefficients in F_p
std::vector<int> fp_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    a = fp_trim(std::move(a));
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int c = a.back();
        for (int i = 0; i <= db; ++i) {
            int& slot = a[static_cast<std::size_t>(shift + i)];
            slot = ((slot - c * b[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        a = fp_trim(std::move(a));
    }
    return a;
}

bool fp_is_irreducible(const std::vector<int>& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<int> g(static_cast<std::size_t>(dd) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < dd; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
                c /= static_cast<std::uint64_t>(p);
            }
            g.back() = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> smallest_irreducible_modulus(int p, int r) {
    std::uint64_t count = 1;
    for (int i = 0; i < r; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<int> f(static_cast<std::size_t>(r) + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < r; ++i) {
            f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
            c /= static_cast<std::uint64_t>(p);
        }
        f.back() = 1;
        if (fp_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

// ---- raw polynomial arithmetic over a Field (codes, low-to-high) ----

std::vector<int> raw_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> raw_mul(const Field& F, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>> raw_divmod(const Field& F, std::vector<int> a,
                                                         const std::vector<int>& b) {
    if (b.empty()) throw std::domain_error("FPoly: division by zero");
    a = raw_trim(std::move(a));
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, std::move(a)};
    const int lead_inv = F.inv(b.back());
    std::vector<int> quot(a.size() - b.size() + 1, 0);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int c = F.mul(a.back(), lead_inv);
        quot[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            int& slot = a[static_cast<std::size_t>(shift + i)];
            slot = F.sub(slot, F.mul(c, b[static_cast<std::size_t>(i)]));
        }
        a = raw_trim(std::move(a));
    }
    return {raw_trim(std::move(quot)), std::move(a)};
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap, const char* what) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / base)
            throw bound_error(std::string(what) + ": enumeration size exceeds cap " +
                              std::to_string(cap));
        v *= base;
    }
    return v;
}

}  // namespace

// ---- Field ----

Field::Field(int p, int r) : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxExtensionOrder && r > 1)
            throw std::invalid_argument("Field: extension order too large");
    }
    q_ = static_cast<int>(q);
    if (r_ == 1) return;

    modulus_ = smallest_irreducible_modulus(p, r);
    // element code <-> digit vector; tables for mul and inv
    const auto digits = [&](int code) {
        std::vector<int> d(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_; ++i) {
            d[static_cast<std::size_t>(i)] = code % p_;
            code /= p_;
        }
        return d;
    };
    const auto encode = [&](const std::vector<int>& d) {
        int code = 0;
        for (int i = r_ - 1; i >= 0; --i) code = code * p_ + d[static_cast<std::size_t>(i)];
        return code;
    };
    mul_table_.assign(static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        const std::vector<int> da = digits(a);
        for (int b = a; b < q_; ++b) {
            const std::vector<int> db = digits(b);
            std::vector<int> prod(static_cast<std::size_t>(2 * r_ - 1), 0);
            for (int i = 0; i < r_; ++i)
                for (int j = 0; j < r_; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] +
                         da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                        p_;
            std::vector<int> rem = fp_mod(prod, modulus_, p_);
            rem.resize(static_cast<std::size_t>(r_), 0);
            const int code = encode(rem);
            mul_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
                       static_cast<std::size_t>(b)] = code;
            mul_table_[static_cast<std::size_t>(b) * static_cast<std::size_t>(q_) +
                       static_cast<std::size_t>(a)] = code;
        }
    }
    inv_table_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_table_[static_cast<std::size_t>(a)] = b;
                break;
            }
}

FieldPtr Field::make(int p, int r) { return FieldPtr(new Field(p, r)); }

FieldPtr Field::make(int q) {
    if (q < 2) throw std::invalid_argument("Field: q must be >= 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int r = 0;
        int v = q;
        while (v % p == 0) {
            v /= p;
            ++r;
        }
        if (v != 1) throw std::invalid_argument("Field: q = " + std::to_string(q) + " is not a prime power");
        return make(p, r);
    }
    throw std::invalid_argument("Field: q = " + std::to_string(q) + " is not a prime power");
}

int Field::add(int a, int b) const {
    if (r_ == 1) return (a + b) % p_;
    int out = 0;
    int mult = 1;
    for (int i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

int Field::neg(int a) const {
    if (r_ == 1) return (p_ - a) % p_;
    int out = 0;
    int mult = 1;
    for (int i = 0; i < r_; ++i) {
        out += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    if (r_ == 1) return static_cast<int>((static_cast<std::int64_t>(a) * b) % p_);
    return mul_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
                      static_cast<std::size_t>(b)];
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    if (r_ == 1) {
        // extended Euclid
        int t = 0, new_t = 1, rr = p_, new_r = a;
        while (new_r != 0) {
            const int quotient = rr / new_r;
            std::swap(t -= quotient * new_t, new_t);
            std::swap(rr -= quotient * new_r, new_r);
        }
        return (t % p_ + p_) % p_;
    }
    return inv_table_[static_cast<std::size_t>(a)];
}

const std::vector<std::vector<int>>& Field::irreducibles_of_degree(int d) const {
    if (d < 1) throw std::invalid_argument("irreducibles_of_degree: degree must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex_);
    while (static_cast<int>(irreducible_cache_.size()) < d) {
        const int dd = static_cast<int>(irreducible_cache_.size()) + 1;
        const std::uint64_t count =
            checked_pow(static_cast<std::uint64_t>(q_), dd, max_enum(), "irreducibles_of_degree");
        std::vector<std::vector<int>> found;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<int> f(static_cast<std::size_t>(dd) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < dd; ++i) {
                f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(q_));
                c /= static_cast<std::uint64_t>(q_);
            }
            f.back() = 1;
            bool irreducible = true;
            for (int low = 1; irreducible && 2 * low <= dd; ++low)
                for (const std::vector<int>& g :
                     irreducible_cache_[static_cast<std::size_t>(low - 1)]) {
                    if (raw_divmod(*this, f, g).second.empty()) {
                        irreducible = false;
                        break;
                    }
                }
            if (irreducible) found.push_back(std::move(f));
        }
        irreducible_cache_.push_back(std::move(found));
    }
    return irreducible_cache_[static_cast<std::size_t>(d - 1)];
}

// ---- FPoly ----

FPoly::FPoly(FieldPtr field, std::vector<int> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("FPoly: null field");
    for (int c : coeffs_)
        if (c < 0 || c >= field_->q()) throw std::invalid_argument("FPoly: coefficient out of range");
    normalize();
}

void FPoly::normalize() { coeffs_ = raw_trim(std::move(coeffs_)); }

FPoly FPoly::monic_from_code(FieldPtr field, int degree, std::uint64_t code) {
    std::vector<int> c(static_cast<std::size_t>(degree) + 1, 0);
    const int q = field->q();
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(q));
        code /= static_cast<std::uint64_t>(q);
    }
    c.back() = 1;
    return FPoly(std::move(field), std::move(c));
}

FPoly FPoly::from_code(FieldPtr field, std::uint64_t code) {
    std::vector<int> c;
    const std::uint64_t q = static_cast<std::uint64_t>(field->q());
    while (code > 0) {
        c.push_back(static_cast<int>(code % q));
        code /= q;
    }
    return FPoly(std::move(field), std::move(c));
}

std::uint64_t FPoly::code() const {
    std::uint64_t v = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        v = v * static_cast<std::uint64_t>(field_->q()) + static_cast<std::uint64_t>(coeffs_[i]);
    return v;
}

FPoly FPoly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    const int s = field_->inv(leading());
    std::vector<int> c = coeffs_;
    for (int& v : c) v = field_->mul(v, s);
    return FPoly(field_, std::move(c));
}

FPoly FPoly::operator+(const FPoly& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("FPoly: field mismatch");
    std::vector<int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int a = i < coeffs_.size() ? coeffs_[i] : 0;
        const int b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
        c[i] = field_->add(a, b);
    }
    return FPoly(field_, std::move(c));
}

FPoly FPoly::operator-(const FPoly& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("FPoly: field mismatch");
    std::vector<int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int a = i < coeffs_.size() ? coeffs_[i] : 0;
        const int b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
        c[i] = field_->sub(a, b);
    }
    return FPoly(field_, std::move(c));
}

FPoly FPoly::operator*(const FPoly& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("FPoly: field mismatch");
    return FPoly(field_, raw_mul(*field_, coeffs_, o.coeffs_));
}

std::pair<FPoly, FPoly> FPoly::divmod(const FPoly& d) const {
    if (!field_->same_as(*d.field_)) throw std::invalid_argument("FPoly: field mismatch");
    auto [q, r] = raw_divmod(*field_, coeffs_, d.coeffs_);
    return {FPoly(field_, std::move(q)), FPoly(field_, std::move(r))};
}

FPoly FPoly::operator/(const FPoly& d) const { return divmod(d).first; }

FPoly FPoly::operator%(const FPoly& d) const { return divmod(d).second; }

bool FPoly::operator==(const FPoly& o) const {
    if (!field_ || !o.field_) return coeffs_ == o.coeffs_ && !field_ == !o.field_;
    return field_->same_as(*o.field_) && coeffs_ == o.coeffs_;
}

std::string FPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const int c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += i == 1 ? "T" : "T^" + std::to_string(i);
        }
    }
    return s;
}

FPoly poly_gcd(FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.make_monic();
}

Partition Factorization::cycle_type() const {
    std::vector<int> parts;
    for (const auto& [prime, mult] : factors)
        for (int i = 0; i < mult; ++i) parts.push_back(prime.degree());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

void for_each_monic(const FieldPtr& field, int n, const std::function<void(const FPoly&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_monic: negative degree");
    const std::uint64_t count =
        checked_pow(static_cast<std::uint64_t>(field->q()), n, max_enum(), "for_each_monic");
    for (std::uint64_t code = 0; code < count; ++code) fn(FPoly::monic_from_code(field, n, code));
}

std::vector<FPoly> enumerate_monic(const FieldPtr& field, int n) {
    std::vector<FPoly> out;
    for_each_monic(field, n, [&](const FPoly& f) { out.push_back(f); });
    return out;
}

Factorization factorize(const FPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("factorize: input must be monic");
    if (f.degree() > kMaxFactorDegree) throw bound_error("factorize: degree > 24");
    Factorization out;
    FPoly rem = f;
    const Field& F = *f.field();
    for (int d = 1; 2 * d <= rem.degree(); ++d) {
        for (const std::vector<int>& pc : F.irreducibles_of_degree(d)) {
            if (rem.degree() < 2 * d) break;
            FPoly prime(f.field(), pc);
            int mult = 0;
            while (true) {
                auto [q, r] = rem.divmod(prime);
                if (!r.is_zero()) break;
                rem = std::move(q);
                ++mult;
            }
            if (mult > 0) out.factors.emplace_back(std::move(prime), mult);
        }
    }
    if (rem.degree() >= 1) out.factors.emplace_back(rem, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const std::pair<FPoly, int>& lhs, const std::pair<FPoly, int>& rhs) {
                  if (lhs.first.degree() != rhs.first.degree())
                      return lhs.first.degree() < rhs.first.degree();
                  return lhs.first.code() < rhs.first.code();
              });
    return out;
}

int moebius(const FPoly& f) {
    const Factorization fac = factorize(f);
    int count = 0;
    for (const auto& [prime, mult] : fac.factors) {
        if (mult >= 2) return 0;
        ++count;
    }
    return count % 2 == 0 ? 1 : -1;
}

Int d_lambda_q(const Partition& la, const FPoly& f) {
    if (la.size() != f.degree())
        throw std::invalid_argument("d_lambda_q: |la| must equal deg f");
    return d_lambda_value(la, factorize(f).cycle_type());
}

Int divisor_correlation_sum(const Partition& mu, const Partition& nu, int n,
                            const FieldPtr& field) {
    if (mu.size() != n || nu.size() != n)
        throw std::invalid_argument("divisor_correlation_sum: margins must be partitions of n");
    std::map<Partition, Int> products;  // cycle type -> d_mu * d_nu
    Int total = 0;
    for_each_monic(field, n, [&](const FPoly& f) {
        const Partition type = factorize(f).cycle_type();
        auto it = products.find(type);
        if (it == products.end())
            it = products.emplace(type, d_lambda_value(mu, type) * d_lambda_value(nu, type)).first;
        total += it->second;
    });
    return total;
}

PolyFitReport polynomiality_check(const Partition& mu, const Partition& nu, int n,
                                  const std::vector<int>& sample_qs, int holdout_q) {
    if (static_cast<int>(sample_qs.size()) < n + 1)
        throw std::invalid_argument("polynomiality_check: need at least n+1 sample points");
    for (std::size_t i = 0; i < sample_qs.size(); ++i)
        for (std::size_t j = i + 1; j < sample_qs.size(); ++j)
            if (sample_qs[i] == sample_qs[j])
                throw std::invalid_argument("polynomiality_check: sample points must be distinct");

    const auto value_at = [&](int q) {
        return divisor_correlation_sum(mu, nu, n, Field::make(q));
    };

    // Newton divided differences over the first n+1 sample points.
    std::vector<Rat> xs;
    std::vector<Rat> dd;
    for (int i = 0; i <= n; ++i) {
        xs.emplace_back(sample_qs[static_cast<std::size_t>(i)]);
        dd.emplace_back(Rat(value_at(sample_qs[static_cast<std::size_t>(i)])));
    }
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[static_cast<std::size_t>(i)] =
                (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - level)]);

    // Expand sum_k dd_k prod_{i<k} (x - x_i) into monomial coefficients.
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    std::vector<Rat> basis{Rat(1)};  // prod_{i<k} (x - x_i)
    for (int k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            coeffs[i] += dd[static_cast<std::size_t>(k)] * basis[i];
        if (k < n) {
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * xs[static_cast<std::size_t>(k)];
            }
            basis = std::move(next);
        }
    }

    PolyFitReport report;
    report.coeffs = coeffs;
    report.integer_coeffs = true;
    for (const Rat& c : coeffs)
        if (!is_integral(c)) report.integer_coeffs = false;
    report.degree_matches = coeffs.back() != 0;
    report.leading_target = count_matrices(mu, nu);
    report.leading_matches = coeffs.back() == Rat(report.leading_target);

    const auto evaluate = [&](int q) {
        Rat acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * Rat(q) + coeffs[i];
        return acc;
    };
    report.holdout_matches = evaluate(holdout_q) == Rat(value_at(holdout_q));
    for (std::size_t i = static_cast<std::size_t>(n) + 1; i < sample_qs.size(); ++i)
        if (evaluate(sample_qs[i]) != Rat(value_at(sample_qs[i]))) report.holdout_matches = false;
    return report;
}

std::vector<std::vector<FPoly>> gcd_matrix(const std::vector<FPoly>& f_list,
                                           const std::vector<FPoly>& g_list) {
    for (const FPoly& f : f_list)
        if (!f.is_monic()) throw std::invalid_argument("gcd_matrix: entries must be monic");
    for (const FPoly& g : g_list)
        if (!g.is_monic()) throw std::invalid_argument("gcd_matrix: entries must be monic");
    std::vector<std::vector<FPoly>> h(g_list.size());
    for (std::size_t i = 0; i < g_list.size(); ++i) {
        h[i].reserve(f_list.size());
        for (std::size_t j = 0; j < f_list.size(); ++j)
            h[i].push_back(poly_gcd(g_list[i], f_list[j]));
    }
    return h;
}

MarginMatrix degree_matrix(const std::vector<std::vector<FPoly>>& h) {
    MarginMatrix m;
    m.rows = static_cast<int>(h.size());
    m.cols = h.empty() ? 0 : static_cast<int>(h.front().size());
    m.entries.reserve(static_cast<std::size_t>(m.rows * m.cols));
    for (const auto& row : h)
        for (const FPoly& entry : row) m.entries.push_back(entry.degree());
    return m;
}

namespace {

template <class T, class Ops>
std::vector<std::vector<T>> vw_generic(const std::vector<T>& m, const std::vector<T>& n, Ops ops) {
    T pm = ops.one;
    for (const T& v : m) pm = ops.mul(pm, v);
    T pn = ops.one;
    for (const T& v : n) pn = ops.mul(pn, v);
    if (!(pm == pn))
        throw std::invalid_argument("vaughan_wooley_decompose: products differ");

    const std::size_t rows = m.size();
    const std::size_t cols = n.size();
    std::vector<std::vector<T>> a(rows, std::vector<T>(cols, ops.one));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            T mrem = m[i];
            for (std::size_t l = 0; l < j; ++l) mrem = ops.div(mrem, a[i][l]);
            T nrem = n[j];
            for (std::size_t l = 0; l < i; ++l) nrem = ops.div(nrem, a[l][j]);
            a[i][j] = ops.gcd(mrem, nrem);
        }
    }
    return a;
}

struct IntVwOps {
    Int one = 1;
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int div(const Int& a, const Int& b) { return a / b; }
    static Int gcd(const Int& a, const Int& b) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
};

struct PolyVwOps {
    FPoly one;
    static FPoly mul(const FPoly& a, const FPoly& b) { return a * b; }
    static FPoly div(const FPoly& a, const FPoly& b) { return a / b; }
    static FPoly gcd(const FPoly& a, const FPoly& b) { return poly_gcd(a, b); }
};

}  // namespace

std::vector<std::vector<Int>> vaughan_wooley_decompose(const std::vector<Int>& m,
                                                       const std::vector<Int>& n) {
    for (const Int& v : m)
        if (v <= 0) throw std::invalid_argument("vaughan_wooley_decompose: entries must be positive");
    for (const Int& v : n)
        if (v <= 0) throw std::invalid_argument("vaughan_wooley_decompose: entries must be positive");
    return vw_generic(m, n, IntVwOps{});
}

std::vector<std::vector<FPoly>> vaughan_wooley_decompose(const std::vector<FPoly>& m,
                                                         const std::vector<FPoly>& n) {
    if (m.empty() || n.empty())
        throw std::invalid_argument("vaughan_wooley_decompose: empty tuple");
    for (const FPoly& v : m)
        if (!v.is_monic()) throw std::invalid_argument("vaughan_wooley_decompose: entries must be monic");
    for (const FPoly& v : n)
        if (!v.is_monic()) throw std::invalid_argument("vaughan_wooley_decompose: entries must be monic");
    return vw_generic(m, n, PolyVwOps{FPoly::one(m.front().field())});
}

}  // namespace cuelab
