#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lefschetz/errors.hpp"
#include "lefschetz/kernels.hpp"
#include "lefschetz/torus.hpp"
#include "lefschetz/wedge.hpp"
#include "test_support.hpp"

using namespace lefschetz;
using lefschetz::testing::random_matrix;

namespace {

const SpaceSignature kT2 = SpaceSignature::torus(2);

GradedLinearMap h1_map(const Matrix& a) { return torus_graded_from_h1(a); }

CoordinateGrid empty_grid(std::size_t s) { return CoordinateGrid(s, std::vector<std::optional<GradedLinearMap>>(s)); }

// Swap of two tori: 1 -> 2 by [[0,-1],[-1,0]], 2 -> 1 by [[0,1],[1,0]].
WedgeMapHomology swap_map() {
    auto grid = empty_grid(2);
    grid[0][1] = h1_map(Matrix{{0, -1}, {-1, 0}});
    grid[1][0] = h1_map(Matrix{{0, 1}, {1, 0}});
    return WedgeMapHomology::assemble({kT2, kT2}, grid);
}

WedgeMapHomology not_permutative_map() {
    const Matrix h{{0, 1, 1, 0}, {-1, 0, -1, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    return build_toral_wedge(ToralWedgeSpec::from_assembled_h1({2, 2}, h));
}

// Permutative map along sigma on copies of T^n with random nonzero coordinates.
WedgeMapHomology permutation_map(std::mt19937_64& rng, const std::vector<std::size_t>& sigma, std::size_t n) {
    ToralWedgeSpec spec = ToralWedgeSpec::constant(std::vector<std::size_t>(sigma.size(), n));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        Matrix a = random_matrix(rng, n, n, -3, 3);
        a(0, 0) = a(0, 0) == 0 ? 1 : a(0, 0);  // keep every coordinate nonzero
        spec.coords[i][sigma[i]] = a;
    }
    return build_toral_wedge(spec);
}

}  // namespace

TEST_SUITE("signatures and graded maps") {
    TEST_CASE("torus betti numbers") {
        CHECK(SpaceSignature::torus(3).betti_numbers() == std::vector<std::size_t>{1, 3, 3, 1});
        CHECK(SpaceSignature::torus(3).dimension() == 3);
        CHECK(SpaceSignature::torus(3).betti(7) == 0);
    }

    TEST_CASE("path-connected summands only") {
        CHECK_THROWS_AS(SpaceSignature({2, 1}), PreconditionError);
        CHECK_THROWS_AS(SpaceSignature({}), PreconditionError);
        CHECK(SpaceSignature({1, 0, 1, 0, 0}).dimension() == 2);
    }

    TEST_CASE("block shapes are checked") {
        CHECK_THROWS_AS(GradedLinearMap(kT2, kT2, std::vector<Matrix>{Matrix(3, 3)}), DimensionMismatch);
        CHECK_THROWS_AS(GradedLinearMap(kT2, kT2, std::vector<Matrix>{Matrix(2, 2), Matrix(1, 1), Matrix(1, 1)}), DimensionMismatch);
        const GradedLinearMap g(kT2, kT2, {Matrix::identity(2)});
        CHECK(g.degree(2) == Matrix(1, 1));
        CHECK(GradedLinearMap::zero(kT2, kT2).is_zero());
    }

    TEST_CASE("degree 0 cannot be supplied") {
        std::map<std::size_t, Matrix> by_degree{{0, Matrix::identity(1)}};
        CHECK_THROWS_AS(GradedLinearMap(kT2, kT2, by_degree), DimensionMismatch);
    }
}

TEST_SUITE("assemble") {
    TEST_CASE("swap map blocks") {
        const auto w = swap_map();
        CHECK(w.assembled(1) == Matrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
        CHECK(w.assembled(2) == Matrix{{0, -1}, {-1, 0}});
        CHECK(w.betti(0) == 1);
        CHECK(w.betti(1) == 4);
        CHECK(w.betti(2) == 2);
        CHECK(w.betti(3) == 0);
    }

    TEST_CASE("all coordinates constant") {
        const auto w = WedgeMapHomology::assemble({kT2, kT2}, empty_grid(2));
        CHECK(w.assembled(1) == Matrix(4, 4));
        CHECK(w.assembled(2) == Matrix(2, 2));
        CHECK(decompose(w) == std::vector<std::vector<std::size_t>>{{0}, {1}});
    }

    TEST_CASE("wrong block for a declared torus") {
        auto grid = empty_grid(2);
        grid[0][1] = h1_map(Matrix::identity(3));
        CHECK_THROWS_AS(WedgeMapHomology::assemble({kT2, kT2}, grid), DimensionMismatch);
    }

    TEST_CASE("mixed signatures") {
        const SpaceSignature s2({1, 0, 1});
        auto grid = empty_grid(2);
        grid[1][1] = GradedLinearMap(s2, s2, std::vector<Matrix>{Matrix(0, 0), Matrix{{3}}});
        grid[0][0] = h1_map(Matrix{{2, 1}, {1, 1}});
        const auto w = WedgeMapHomology::assemble({kT2, s2}, grid);
        CHECK(w.assembled(1) == Matrix{{2, 1}, {1, 1}});
        CHECK(w.assembled(2) == Matrix{{1, 0}, {0, 3}});
    }

    TEST_CASE("block extraction round trip") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 20; ++trial) {
            const std::vector<std::size_t> dims{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
            ToralWedgeSpec spec = ToralWedgeSpec::constant(dims);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    if (rng() % 2) spec.coords[i][j] = random_matrix(rng, dims[j], dims[i], -3, 3);
            const auto w = build_toral_wedge(spec);
            const auto again = WedgeMapHomology::from_assembled(w.spaces(), w.assembled_all());
            CHECK(again.assembled_all() == w.assembled_all());
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    const Matrix b = w.block(w.assembled(1), 1, i, j);
                    if (spec.coords[i][j])
                        CHECK(b == *spec.coords[i][j]);
                    else
                        CHECK(b.is_zero());
                }
        }
    }
}

TEST_SUITE("classify") {
    TEST_CASE("swap map is a 2-cycle") {
        const auto r = classify(swap_map());
        CHECK(r.is_permutative);
        CHECK_FALSE(r.is_diagonal);
        CHECK(r.is_cyclic);
        CHECK(r.is_squared_by_blocks);
        CHECK(*r.permutation == std::vector<std::size_t>{1, 0});
        CHECK(*r.cycles == std::vector<std::vector<std::size_t>>{{0, 1}});
    }

    TEST_CASE("two nonzero coordinates out of one summand") {
        const auto r = classify(not_permutative_map());
        CHECK_FALSE(r.is_permutative);
        CHECK_FALSE(r.cycles.has_value());
        CHECK_FALSE(r.reduction_formulas_apply());
    }

    TEST_CASE("diagonal on three tori") {
        ToralWedgeSpec spec = ToralWedgeSpec::constant({2, 2, 2});
        for (std::size_t i = 0; i < 3; ++i) spec.coords[i][i] = Matrix{{1, 1}, {0, 1}};
        const auto r = classify(build_toral_wedge(spec));
        CHECK(r.is_diagonal);
        CHECK(r.is_permutative);
        CHECK(r.cycles->size() == 3);
        CHECK_FALSE(r.is_cyclic);
    }

    TEST_CASE("shared target is not permutative") {
        ToralWedgeSpec spec = ToralWedgeSpec::constant({1, 1});
        spec.coords[0][0] = Matrix{{2}};
        spec.coords[1][0] = Matrix{{3}};
        CHECK_FALSE(classify(build_toral_wedge(spec)).is_permutative);
    }

    TEST_CASE("chain completed to a cycle") {
        ToralWedgeSpec spec = ToralWedgeSpec::constant({1, 1, 1});
        spec.coords[0][1] = Matrix{{2}};
        spec.coords[1][2] = Matrix{{2}};
        const auto r = classify(build_toral_wedge(spec));
        CHECK(r.is_permutative);
        CHECK(*r.permutation == std::vector<std::size_t>{1, 2, 0});
        CHECK(r.is_cyclic);
    }

    TEST_CASE("unequal signatures in a cycle") {
        ToralWedgeSpec spec = ToralWedgeSpec::constant({1, 2});
        spec.coords[0][1] = Matrix{{1}, {0}};
        spec.coords[1][0] = Matrix{{1, 0}};
        const auto r = classify(build_toral_wedge(spec));
        CHECK(r.is_permutative);
        CHECK_FALSE(r.is_squared_by_blocks);
    }

    TEST_CASE("cycle type of random permutations") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t s = 1 + rng() % 5;
            std::vector<std::size_t> sigma(s);
            std::iota(sigma.begin(), sigma.end(), 0);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            const auto r = classify(permutation_map(rng, sigma, 2));
            REQUIRE(r.is_permutative);
            CHECK(*r.permutation == sigma);
            // Cycle lengths from sigma directly.
            std::vector<std::size_t> expected, got;
            std::vector<bool> seen(s);
            for (std::size_t i = 0; i < s; ++i) {
                if (seen[i]) continue;
                std::size_t len = 0;
                for (std::size_t j = i; !seen[j]; j = sigma[j]) seen[j] = true, ++len;
                expected.push_back(len);
            }
            for (const auto& c : *r.cycles) got.push_back(c.size());
            CHECK(got == expected);
        }
    }
}

TEST_SUITE("decompose") {
    TEST_CASE("(1 2)(3)") {
        ToralWedgeSpec spec = ToralWedgeSpec::constant({1, 1, 1});
        spec.coords[0][1] = Matrix{{2}};
        spec.coords[1][0] = Matrix{{2}};
        spec.coords[2][2] = Matrix{{5}};
        CHECK(decompose(build_toral_wedge(spec)) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    }

    TEST_CASE("one component") {
        CHECK(decompose(not_permutative_map()) == std::vector<std::vector<std::size_t>>{{0, 1}});
    }

    TEST_CASE("iterates stay inside components") {
        std::mt19937_64 rng(29);
        for (int trial = 0; trial < 10; ++trial) {
            ToralWedgeSpec spec = ToralWedgeSpec::constant({2, 1, 2, 1});
            for (auto [i, j] : {std::pair{0, 2}, {2, 0}, {2, 2}, {1, 3}})
                spec.coords[i][j] = random_matrix(rng, spec.dims[j], spec.dims[i], -2, 2);
            const auto w = build_toral_wedge(spec);
            const auto parts = decompose(w);
            std::vector<std::size_t> part_of(4);
            for (std::size_t p = 0; p < parts.size(); ++p)
                for (auto i : parts[p]) part_of[i] = p;
            for (std::size_t m = 1; m <= 5; ++m) {
                const auto fm = iterate(w, m);
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        if (part_of[i] != part_of[j]) CHECK(w.coordinate_of(fm, i, j).is_zero());
            }
        }
    }
}

TEST_SUITE("iterate") {
    TEST_CASE("swap map squared is -I on H_1") {
        const auto f2 = iterate(swap_map(), 2);
        CHECK(f2[0] == Matrix::identity(4) * Rational(-1));
        CHECK(f2[1] == Matrix::identity(2));
    }

    TEST_CASE("m = 1 and m = 0") {
        const auto w = swap_map();
        CHECK(iterate(w, 1) == w.assembled_all());
        CHECK_THROWS_AS(iterate(w, 0), PreconditionError);
    }

    TEST_CASE("semigroup law") {
        const auto w = not_permutative_map();
        for (std::size_t a = 1; a <= 4; ++a)
            for (std::size_t b = 1; b <= 4; ++b) {
                const auto fa = iterate(w, a), fb = iterate(w, b), fab = iterate(w, a + b);
                for (std::size_t k = 0; k < fa.size(); ++k) CHECK(fab[k] == fa[k] * fb[k]);
            }
    }

    TEST_CASE("permutative iterates follow sigma^m") {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t s = 2 + rng() % 3;
            std::vector<std::size_t> sigma(s);
            std::iota(sigma.begin(), sigma.end(), 0);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            const auto w = permutation_map(rng, sigma, 2);
            for (std::size_t m = 1; m <= 6; ++m) {
                const auto fm = iterate(w, m);
                for (std::size_t i = 0; i < s; ++i) {
                    std::size_t target = i;
                    for (std::size_t r = 0; r < m; ++r) target = sigma[target];
                    for (std::size_t j = 0; j < s; ++j)
                        if (j != target) CHECK(w.coordinate_of(fm, i, j).is_zero());
                }
            }
        }
    }

    TEST_CASE("cyclic diagonal blocks vanish off multiples of the cycle length") {
        std::mt19937_64 rng(41);
        const auto w = permutation_map(rng, {1, 2, 0}, 2);
        for (std::size_t m = 1; m <= 8; ++m) {
            if (m % 3 == 0) continue;
            const auto fm = iterate(w, m);
            for (std::size_t i = 0; i < 3; ++i) CHECK(w.coordinate_of(fm, i, i).is_zero());
        }
    }

    TEST_CASE("iterate table agrees with iterate") {
        const auto w = not_permutative_map();
        const IterateTable t(w, 6);
        for (std::size_t m = 1; m <= 6; ++m) CHECK(t.degrees(m) == iterate(w, m));
        CHECK_THROWS(t.power(1, 7));
    }
}
