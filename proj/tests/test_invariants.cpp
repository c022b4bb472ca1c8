#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lefschetz/errors.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/torus.hpp"
#include "test_support.hpp"

using namespace lefschetz;
using lefschetz::testing::naive_power;
using lefschetz::testing::random_matrix;

namespace {

WedgeMapHomology toral(const std::vector<std::size_t>& dims, const Matrix& h1) {
    return build_toral_wedge(ToralWedgeSpec::from_assembled_h1(dims, h1));
}

const Matrix kSwap{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
const Matrix kOffDiagonal{{0, 1, 1, 0}, {-1, 0, -1, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}};

Matrix scaled_swap(long a) { return Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-a, 0, 0, 0}, {0, -a, 0, 0}}; }

WedgeMapHomology constant_map() { return build_toral_wedge(ToralWedgeSpec::constant({2, 2})); }

// L(f^m) from naive powers of every assembled degree.
Integer oracle_lefschetz(const WedgeMapHomology& w, std::size_t m) {
    Rational total = 1;
    for (std::size_t k = 1; k <= w.top_degree(); ++k) {
        const Rational t = naive_power(w.assembled(k), m).trace();
        total += k % 2 ? -t : t;
    }
    return total.get_num();
}

std::vector<Integer> oracle_dold(const std::vector<Integer>& l) {
    std::vector<Integer> d;
    for (std::size_t m = 1; m <= l.size(); ++m) {
        Integer acc = 0;
        for (std::size_t r = 1; r <= m; ++r)
            if (m % r == 0) acc += testing::brute_mobius(m / r) * l[r - 1];
        d.push_back(acc);
    }
    return d;
}

Integer ipow(long a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), e);
    return r;
}

Polynomial one_minus_t_pow(std::size_t s) { return Polynomial{1} - Polynomial::monomial(1, s); }

// Random permutative map along sigma; every coordinate is a random n x n
// matrix that may be singular or even zero.
WedgeMapHomology random_permutative(std::mt19937_64& rng, const std::vector<std::size_t>& sigma, std::size_t n) {
    ToralWedgeSpec spec = ToralWedgeSpec::constant(std::vector<std::size_t>(sigma.size(), n));
    for (std::size_t i = 0; i < sigma.size(); ++i) spec.coords[i][sigma[i]] = random_matrix(rng, n, n, -3, 3);
    return build_toral_wedge(spec);
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t s) {
    std::vector<std::size_t> p(s);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_SUITE("Lefschetz numbers") {
    TEST_CASE("swap map values") {
        const auto w = toral({2, 2}, kSwap);
        CHECK(lefschetz_direct(w, 1) == 1);
        CHECK(lefschetz_direct(w, 2) == 7);
        CHECK(lefschetz_direct(w, 3) == 1);
        CHECK(lefschetz_direct(w, 4) == -1);
        const auto seq = lefschetz_sequence(w, 12);
        for (std::size_t m = 1; m <= 12; ++m) {
            const long expected[] = {-1, 1, 7, 1};
            CHECK(seq.at(m) == expected[m % 4]);
        }
    }

    TEST_CASE("constant map") {
        const auto seq = lefschetz_sequence(constant_map(), 6);
        for (auto& v : seq.values) CHECK(v == 1);
    }

    TEST_CASE("m = 0 is rejected") { CHECK_THROWS_AS(lefschetz_direct(constant_map(), 0), PreconditionError); }

    TEST_CASE("non-integer homology is rejected") {
        const SpaceSignature s({1, 1});
        CoordinateGrid grid(1, std::vector<std::optional<GradedLinearMap>>(1));
        grid[0][0] = GradedLinearMap(s, s, std::vector<Matrix>{Matrix::from_rows({{Rational(1, 2)}})});
        const auto w = WedgeMapHomology::assemble({s}, grid);
        CHECK_THROWS_AS(lefschetz_direct(w, 1), PreconditionError);
    }

    TEST_CASE("agrees with naive powers on random wedges") {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 15; ++trial) {
            ToralWedgeSpec spec = ToralWedgeSpec::constant({1 + rng() % 3, 1 + rng() % 3});
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    spec.coords[i][j] = random_matrix(rng, spec.dims[j], spec.dims[i], -2, 2);
            const auto w = build_toral_wedge(spec);
            const auto seq = lefschetz_sequence(w, 8);
            for (std::size_t m = 1; m <= 8; ++m) CHECK(seq.at(m) == oracle_lefschetz(w, m));
        }
    }

    TEST_CASE("single torus: L(g^m) = det(I - A^m)") {
        std::mt19937_64 rng(103);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + trial % 4;
            const Matrix a = random_matrix(rng, n, n, -2, 2);
            const auto w = toral({n}, a);
            const auto seq = lefschetz_sequence(w, 12);
            for (std::size_t m = 1; m <= 12; ++m)
                CHECK(seq.at(m) == testing::leibniz_det(Matrix::identity(n) - naive_power(a, m)));
        }
    }

    TEST_CASE("scaled swap family: closed forms") {
        for (long a : {1L, 2L, 3L, -2L}) {
            const auto w = toral({2, 2}, scaled_swap(a));
            CHECK(w.assembled(2) == Matrix{{0, 1}, {a * a, 0}});
            const auto seq = lefschetz_sequence(w, 16);
            for (std::size_t m = 1; m <= 16; ++m) {
                Integer expected = 1;
                const unsigned long k = m / 4;
                if (m % 4 == 0) expected = 1 - 4 * ipow(a, 2 * k) + 2 * ipow(a, 4 * k);
                if (m % 4 == 2) expected = 1 + 4 * ipow(a, 2 * k + 1) + 2 * ipow(a, 4 * k + 2);
                CHECK(seq.at(m) == expected);
                CHECK(seq.at(m) == oracle_lefschetz(w, m));
            }
        }
    }
}

TEST_SUITE("reduction formula for L") {
    TEST_CASE("swap map") {
        const auto w = toral({2, 2}, kSwap);
        CHECK(lefschetz_by_cycles(w, 2) == 7);
        CHECK(lefschetz_by_cycles(w, 3) == 1);
        CHECK(lefschetz_by_cycles(w, 4) == -1);
    }

    TEST_CASE("second iterate of the swap has L = 4 on each diagonal coordinate") {
        const auto w = toral({2, 2}, kSwap);
        const auto f2 = iterate(w, 2);
        CHECK(lefschetz_number(w.coordinate_of(f2, 0, 0)) == 4);
        CHECK(lefschetz_number(w.coordinate_of(f2, 1, 1)) == 4);
    }

    TEST_CASE("not applicable off the permutative class") {
        const auto w = toral({2, 2}, kOffDiagonal);
        CHECK_THROWS_AS(lefschetz_by_cycles(w, 2), NotApplicable);
        CHECK_THROWS_AS(dold_by_cycles(w, 2), NotApplicable);
        CHECK_THROWS_AS(zeta_by_cycles(w), NotApplicable);
    }

    TEST_CASE("diagonal maps: sum of coordinates minus s - 1") {
        std::mt19937_64 rng(107);
        for (int trial = 0; trial < 10; ++trial) {
            const auto w = random_permutative(rng, {0, 1, 2}, 2);
            for (std::size_t m = 1; m <= 6; ++m) {
                Integer expected = -2;
                const auto fm = iterate(w, m);
                for (std::size_t i = 0; i < 3; ++i) expected += lefschetz_number(w.coordinate_of(fm, i, i));
                CHECK(lefschetz_by_cycles(w, m) == expected);
                CHECK(lefschetz_direct(w, m) == expected);
            }
        }
    }
}

TEST_SUITE("zeta") {
    TEST_CASE("swap map") {
        const auto z = zeta_det(toral({2, 2}, kSwap));
        CHECK(z == RationalFunction(Polynomial{1, 0, 1}.pow(2), Polynomial{1, -1} * Polynomial{1, 0, -1}));
        CHECK(z == RationalFunction(one_minus_t_pow(4).pow(2), Polynomial{1, -1} * one_minus_t_pow(2).pow(3)));
        CHECK(z.degree() == 1);
        CHECK(zeta_by_cycles(toral({2, 2}, kSwap)) == z);
    }

    TEST_CASE("off-diagonal map") {
        CHECK(zeta_det(toral({2, 2}, kOffDiagonal)) == RationalFunction(Polynomial{1, 0, 1}, Polynomial{1, -1}.pow(2)));
    }

    TEST_CASE("constant map") { CHECK(zeta_det(constant_map()) == RationalFunction(Polynomial{1}, Polynomial{1, -1})); }

    TEST_CASE("scaled swap family") {
        for (long a : {1L, 2L, 3L}) {
            const auto z = zeta_det(toral({2, 2}, scaled_swap(a)));
            CHECK(z == RationalFunction(Polynomial{1, 0, a}.pow(2), Polynomial{1, -1} * Polynomial{1, 0, -a * a}));
        }
    }

    TEST_CASE("series expansion of the swap zeta") {
        // exp of sum L(f^m) t^m / m with L = 1, 7, 1, -1.
        const auto s = zeta_series(toral({2, 2}, kSwap), 4);
        const long expected[] = {1, 1, 4, 4, 8};
        for (std::size_t i = 0; i <= 4; ++i) CHECK(s[i] == expected[i]);
    }

    TEST_CASE("series of the constant map and the identity") {
        const auto c = zeta_series(constant_map(), 3);
        for (std::size_t i = 0; i <= 3; ++i) CHECK(c[i] == 1);
        const auto id = zeta_series(toral({2}, Matrix::identity(2)), 5);
        CHECK(id == PowerSeries::one(5));
        CHECK_THROWS_AS(zeta_series(constant_map(), 0), PreconditionError);
    }

    TEST_CASE("series matches the determinant form on random maps") {
        std::mt19937_64 rng(109);
        for (int trial = 0; trial < 12; ++trial) {
            ToralWedgeSpec spec = ToralWedgeSpec::constant({2, 1 + rng() % 2});
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    spec.coords[i][j] = random_matrix(rng, spec.dims[j], spec.dims[i], -2, 2);
            const auto w = build_toral_wedge(spec);
            CHECK(zeta_series(w, 16) == zeta_det(w).expand(16));
            CHECK(zeta_det(w).value_at_zero() == 1);
        }
    }

    TEST_CASE("diagonal maps: (1 - t)^(s-1) times the coordinate zetas") {
        std::mt19937_64 rng(113);
        for (int trial = 0; trial < 10; ++trial) {
            const auto w = random_permutative(rng, {0, 1, 2}, 2);
            RationalFunction expected(Polynomial{1, -1}.pow(2), Polynomial{1});
            for (std::size_t i = 0; i < 3; ++i) expected = expected * zeta_function(*w.coordinate(i, i));
            CHECK(zeta_det(w) == expected);
            CHECK(zeta_by_cycles(w) == expected);
        }
    }

    TEST_CASE("cyclic maps: root of the product of coordinate zetas") {
        std::mt19937_64 rng(127);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t s = 2 + trial % 3;
            std::vector<std::size_t> sigma(s);
            for (std::size_t i = 0; i < s; ++i) sigma[i] = (i + 1) % s;
            const auto w = random_permutative(rng, sigma, 2);
            const auto fs = iterate(w, s);
            RationalFunction inner;
            for (std::size_t i = 0; i < s; ++i) inner = inner * zeta_function(w.coordinate_of(fs, i, i)).substitute_power(s);
            const RationalFunction expected = RationalFunction(one_minus_t_pow(s), Polynomial{1, -1}) * nth_root(inner, s);
            CHECK(zeta_det(w) == expected);
        }
    }
}

TEST_SUITE("Dold coefficients") {
    TEST_CASE("swap map") {
        const auto d = dold_sequence(toral({2, 2}, kSwap), 12);
        const long expected[] = {1, 6, 0, -8, 0, 0, 0, 0, 0, 0, 0, 0};
        for (std::size_t m = 1; m <= 12; ++m) CHECK(d.at(m) == expected[m - 1]);
        const auto w = toral({2, 2}, kSwap);
        CHECK(dold_by_cycles(w, 2) == 6);
        CHECK(dold_by_cycles(w, 3) == 0);
        CHECK(dold_by_cycles(w, 4) == -8);
        const IterateTable t(w, 4);
        CHECK(coordinate_dold(w, t, 0, 4) == -4);
        CHECK(coordinate_dold(w, t, 1, 4) == -4);
    }

    TEST_CASE("off-diagonal map") {
        const auto d = dold_sequence(toral({2, 2}, kOffDiagonal), 8);
        CHECK(d.at(1) == 2);
        CHECK(d.at(2) == 2);
        CHECK(d.at(3) == 0);
        CHECK(d.at(4) == -4);
    }

    TEST_CASE("Moebius transform against the brute-force oracle and round trip") {
        std::mt19937_64 rng(131);
        for (int trial = 0; trial < 10; ++trial) {
            const auto w = toral({2, 1}, random_matrix(rng, 3, 3, -2, 2));
            const auto l = lefschetz_sequence(w, 20);
            const auto d = mobius_transform(l);
            CHECK(d.values == oracle_dold(l.values));
            CHECK(divisor_sum(d) == l);
        }
    }

    TEST_CASE("Euler product") {
        auto r = euler_product_check(toral({2, 2}, kSwap), 8);
        CHECK(r.agrees);
        CHECK(r.dold.at(1) == 1);
        CHECK(r.dold.at(2) == 6);
        CHECK(r.dold.at(4) == -8);
        CHECK(euler_product_check(constant_map(), 5).agrees);
        r = euler_product_check(toral({2, 2}, kOffDiagonal), 8);
        CHECK(r.agrees);
        CHECK(r.dold.at(4) == -4);
    }
}

TEST_SUITE("algebraic periods") {
    TEST_CASE("examples") {
        CHECK(aper_upto(toral({2, 2}, kSwap), 12).members == std::vector<std::size_t>{1, 2, 4});
        CHECK(aper_upto(toral({2, 2}, kOffDiagonal), 12).members == std::vector<std::size_t>{1, 2, 4});
        // l(f^4) = L(f^4) - L(f^2) = 17 - 17 = 0 for a = 2.
        CHECK(aper_upto(toral({2, 2}, scaled_swap(2)), 10).members == std::vector<std::size_t>{1, 2, 6, 8, 10});
        CHECK(aper_upto(toral({2, 2}, scaled_swap(1)), 24).members == std::vector<std::size_t>{1, 2, 4});
        const auto a3 = aper_upto(toral({2, 2}, scaled_swap(3)), 24);
        for (std::size_t m = 2; m <= 24; m += 2) CHECK(a3.contains(m));
        CHECK(aper_upto(constant_map(), 6).members == std::vector<std::size_t>{1});
        CHECK(aper_upto(constant_map(), 6).contains(1));
        CHECK_FALSE(aper_upto(constant_map(), 6).contains(2));
    }
}

TEST_SUITE("permutative properties") {
    TEST_CASE("both paths agree on random permutative maps") {
        std::mt19937_64 rng(137);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t s = 1 + rng() % 4, n = 1 + rng() % 3;
            const auto w = random_permutative(rng, random_permutation(rng, s), n);
            const IterateTable t(w, 12);
            CHECK(lefschetz_by_cycles_sequence(w, t) == lefschetz_sequence(t));
            CHECK(dold_by_cycles_sequence(w, t) == mobius_transform(lefschetz_sequence(t)));
            CHECK(zeta_by_cycles(w) == zeta_det(w));
            CHECK(compute_invariants(w, 12).cross_checked);
        }
    }

    TEST_CASE("cyclic vanishing off multiples of the cycle length") {
        std::mt19937_64 rng(139);
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t s = 2 + rng() % 3;
            std::vector<std::size_t> sigma(s);
            for (std::size_t i = 0; i < s; ++i) sigma[i] = (i + 1) % s;
            const auto w = random_permutative(rng, sigma, 2);
            const auto l = lefschetz_sequence(w, 16);
            const auto d = mobius_transform(l);
            for (std::size_t m = 2; m <= 16; ++m)
                if (m % s) {
                    CHECK(l.at(m) == 1);
                    CHECK(d.at(m) == 0);
                }
        }
    }

    TEST_CASE("diagonal traces agree around a cycle") {
        std::mt19937_64 rng(149);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t s = 2 + trial % 3;
            std::vector<std::size_t> sigma(s);
            for (std::size_t i = 0; i < s; ++i) sigma[i] = (i + 1) % s;
            const auto w = random_permutative(rng, sigma, 2);
            for (std::size_t m = 1; m <= 3; ++m) {
                const auto f = iterate(w, s * m);
                for (std::size_t k = 1; k <= 2; ++k) {
                    const Rational t0 = w.block(f[k - 1], k, 0, 0).trace();
                    for (std::size_t i = 1; i < s; ++i) CHECK(w.block(f[k - 1], k, i, i).trace() == t0);
                }
            }
        }
    }

    TEST_CASE("same-sign coordinate Dold values force an algebraic period") {
        std::mt19937_64 rng(151);
        std::size_t witnessed = 0;
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t s = 1 + rng() % 3;
            const auto w = random_permutative(rng, random_permutation(rng, s), 2);
            const IterateTable t(w, 12);
            const auto aper = aper_from(mobius_transform(lefschetz_sequence(t)));
            const auto r = classify(w);
            for (std::size_t m = 2; m <= 12; ++m) {
                int sign = 0;
                bool mixed = false;
                for (const auto& cycle : *r.cycles) {
                    if (m % cycle.size()) continue;
                    for (auto i : cycle) {
                        const Integer v = coordinate_dold(w, t, i, m);
                        const int sg = sgn(v);
                        if (sg == 0) continue;
                        if (sign && sg != sign) mixed = true;
                        sign = sg;
                    }
                }
                if (sign != 0 && !mixed) {
                    ++witnessed;
                    CHECK(aper.contains(m));
                }
            }
        }
        CHECK(witnessed > 0);
    }
}

TEST_SUITE("compute_invariants") {
    TEST_CASE("swap map is cross-checked") {
        const auto t = compute_invariants(toral({2, 2}, kSwap), 64);
        CHECK(t.cross_checked);
        CHECK(t.aper.members == std::vector<std::size_t>{1, 2, 4});
    }

    TEST_CASE("off-diagonal map only uses the definitions") {
        const auto t = compute_invariants(toral({2, 2}, kOffDiagonal), 64);
        CHECK_FALSE(t.cross_checked);
        CHECK(t.aper.members == std::vector<std::size_t>{1, 2, 4});
        CHECK(t.lefschetz.at(64) == 0);
    }
}
