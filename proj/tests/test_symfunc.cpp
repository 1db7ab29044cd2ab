#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuelab/symfunc.hpp"
#include "oracles.hpp"

using namespace cuelab;

namespace {

SchurVector sv(int degree, std::initializer_list<std::pair<Partition, Int>> entries) {
    SchurVector f(degree);
    for (const auto& [la, c] : entries) f.add(la, c);
    return f;
}

oracles::MonomialPoly expand_in_monomials(const SchurVector& f, int vars) {
    oracles::MonomialPoly out = oracles::MonomialPoly::zero(vars);
    for (const auto& [la, c] : f.coeffs())
        out = out + oracles::schur_by_tableaux(la, vars).scaled(c);
    return out;
}

}  // namespace

TEST_CASE("e_to_schur pinned values") {
    CHECK(e_to_schur(Partition({1})) == sv(1, {{Partition({1}), 1}}));
    CHECK(e_to_schur(Partition({1, 1})) == sv(2, {{Partition({2}), 1}, {Partition({1, 1}), 1}}));
    CHECK(e_to_schur(Partition({2})) == sv(2, {{Partition({1, 1}), 1}}));
    // coefficient of s_(1^n) in e_(n)
    const Partition ones({1, 1, 1, 1});
    CHECK(e_to_schur(Partition({4})).coeff(ones) == 1);
}

TEST_CASE("h_to_schur pinned values") {
    CHECK(h_to_schur(Partition({2})) == sv(2, {{Partition({2}), 1}}));
    CHECK(h_to_schur(Partition({1, 1})) == sv(2, {{Partition({2}), 1}, {Partition({1, 1}), 1}}));
    CHECK(h_to_schur(Partition({3})) == sv(3, {{Partition({3}), 1}}));
}

TEST_CASE("p_to_schur pinned values") {
    CHECK(p_to_schur(Partition({1})) == sv(1, {{Partition({1}), 1}}));
    CHECK(p_to_schur(Partition({2})) == sv(2, {{Partition({2}), 1}, {Partition({1, 1}), -1}}));
    CHECK(p_to_schur(Partition({1, 1})) == sv(2, {{Partition({2}), 1}, {Partition({1, 1}), 1}}));
}

TEST_CASE("generator expansions agree with the monomial oracle") {
    for (int n = 0; n <= 7; ++n) {
        const int vars = n;  // every partition of n has at most n rows
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(expand_in_monomials(e_to_schur(mu), vars) ==
                  oracles::product_over_parts(mu, vars, oracles::elementary));
            CHECK(expand_in_monomials(h_to_schur(mu), vars) ==
                  oracles::product_over_parts(mu, vars, oracles::complete_homogeneous));
            CHECK(expand_in_monomials(p_to_schur(mu), vars) ==
                  oracles::product_over_parts(mu, vars, oracles::power_sum));
        }
    }
}

TEST_CASE("degree bound is enforced") {
    CHECK_THROWS_AS(e_to_schur(Partition({17})), bound_error);
    CHECK_THROWS_AS(h_to_schur(Partition({10, 7})), bound_error);
    CHECK_THROWS_AS(p_to_schur(Partition({12}), 10), bound_error);
}

TEST_CASE("kostka pinned values and errors") {
    CHECK(kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(kostka(Partition({3, 1}), Partition({3, 1})) == 1);
    CHECK(kostka(Partition({1, 1}), Partition({2})) == 0);
    CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("kostka agrees with tableau enumeration") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : enumerate_partitions(n))
            for (const Partition& mu : enumerate_partitions(n))
                CHECK(kostka(la, mu) == oracles::kostka_by_tableaux(la, mu));
}

TEST_CASE("kostka diagonal and length vanishing") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& la : enumerate_partitions(n)) {
            CHECK(kostka(la, la) == 1);
            for (const Partition& mu : enumerate_partitions(n))
                if (kostka(la, mu) != 0) CHECK(la.length() <= mu.length());
        }
}

TEST_CASE("expansion coefficients are Kostka numbers") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            const SchurVector e = e_to_schur(mu);
            const SchurVector h = h_to_schur(mu);
            for (const Partition& la : enumerate_partitions(n)) {
                CHECK(e.coeff(la) == kostka(la.conjugate(), mu));
                CHECK(h.coeff(la) == kostka(la, mu));
            }
        }
}

TEST_CASE("omega") {
    CHECK(omega(sv(2, {{Partition({2}), 1}})) == sv(2, {{Partition({1, 1}), 1}}));
    CHECK(omega(e_to_schur(Partition({2, 1}))) == h_to_schur(Partition({2, 1})));
    CHECK(omega(SchurVector(2)) == SchurVector(2));
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(omega(omega(p_to_schur(mu))) == p_to_schur(mu));
            CHECK(omega(e_to_schur(mu)) == h_to_schur(mu));
        }
}

TEST_CASE("hall pairing pinned values") {
    const SchurVector s11 = sv(2, {{Partition({1, 1}), 1}});
    CHECK(hall_pairing_truncated(s11, s11, 1) == 0);
    const SchurVector both = sv(2, {{Partition({2}), 1}, {Partition({1, 1}), 1}});
    CHECK(hall_pairing_truncated(both, both, 2) == 2);
    CHECK(hall_pairing_truncated(both, both, 5) == 2);
    CHECK(hall_pairing_truncated(both, h_to_schur(Partition({3})), 4) == 0);
    CHECK(hall_pairing_truncated(SchurVector::unit(), SchurVector::unit(), 1) == 1);
}

TEST_CASE("power sums are orthogonal with norm z_rho") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& rho : enumerate_partitions(n)) {
            const SchurVector p = p_to_schur(rho);
            CHECK(hall_pairing_truncated(p, p, n) == z_factor(rho));
            for (const Partition& tau : enumerate_partitions(n))
                if (tau != rho) CHECK(hall_pairing_truncated(p, p_to_schur(tau), n) == 0);
        }
}

TEST_CASE("Newton-Girard: h_n is the z-weighted power-sum average") {
    for (int n = 1; n <= 8; ++n) {
        SchurVectorQ acc(n);
        for (const Partition& rho : enumerate_partitions(n)) {
            const Rat scale = Rat(1) / Rat(z_factor(rho));
            const SchurVector p = p_to_schur(rho);
            for (const auto& [la, c] : p.coeffs()) acc.add(la, scale * Rat(c));
        }
        CHECK(acc == to_rational(h_to_schur(Partition({n}))));
    }
}

TEST_CASE("rational round-trip") {
    const SchurVector f = h_to_schur(Partition({3, 2}));
    CHECK(to_integral(to_rational(f)) == f);
    SchurVectorQ q(1);
    q.add(Partition({1}), make_rat(1, 2));
    CHECK_THROWS_AS(to_integral(q), std::domain_error);
}
