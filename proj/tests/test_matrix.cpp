#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlab/errors.hpp"
#include "crlab/matrix.hpp"
#include "support.hpp"

using namespace crlab;
using namespace crlab::testing;

TEST_CASE("rank basics") {
    Field f3(3, 1);
    CHECK(rank(Matrix::j_r(f3, 3, 2, 2)) == 2);
    CHECK(rank(Matrix(f3, 3, 3)) == 0);
    // det = 1*3 + 2*2 = 0 in GF(4), so the rank drops to 1.
    Field f4(2, 2);
    Matrix m = Matrix::from_rows(f4, {{1, 2}, {2, 3}});
    CHECK(rank(m) == 1);
    CHECK(oracle_rank_minors(m) == 1);
}

TEST_CASE("rank agrees with the minor oracle on random matrices") {
    std::mt19937 rng(7);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Field f = Field::of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const int p = 1 + static_cast<int>(rng() % 4);
            Matrix m = random_matrix(rng, f, n, p);
            CHECK(rank(m) == oracle_rank_minors(m));
        }
    }
}

TEST_CASE("rank is invariant under equivalence") {
    std::mt19937 rng(11);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Field f = Field::of_order(q);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const int p = 1 + static_cast<int>(rng() % 4);
            Matrix m = random_matrix(rng, f, n, p);
            Matrix pm = random_invertible(rng, f, n);
            Matrix qm = random_invertible(rng, f, p);
            CHECK(rank(pm * m * qm) == rank(m));
        }
    }
}

TEST_CASE("rank decomposition reaches the normal form") {
    Field f3(3, 1);
    {
        Matrix m = Matrix::from_rows(f3, {{0, 1}, {0, 0}});
        auto [p, q] = rank_decomposition(m);
        CHECK(p * m * q == Matrix::j_r(f3, 2, 2, 1));
    }
    {
        Matrix m = Matrix::j_r(f3, 3, 3, 2);
        auto [p, q] = rank_decomposition(m);
        CHECK(p * m * q == Matrix::j_r(f3, 3, 3, 2));
    }
}

TEST_CASE("rank decomposition round trip in bulk") {
    std::mt19937 rng(13);
    for (std::uint64_t qo : {2, 3, 4, 5}) {
        Field f = Field::of_order(qo);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const int p = 1 + static_cast<int>(rng() % 4);
            Matrix m = random_matrix(rng, f, n, p);
            auto [pm, qm] = rank_decomposition(m);
            REQUIRE(is_invertible(pm));
            REQUIRE(is_invertible(qm));
            REQUIRE(pm * m * qm == Matrix::j_r(f, n, p, rank(m)));
        }
    }
}

TEST_CASE("determinant and inverse") {
    std::mt19937 rng(17);
    for (std::uint64_t q : {2, 3, 5}) {
        Field f = Field::of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 3);
            Matrix m = random_matrix(rng, f, n, n);
            CHECK(determinant(m) == laplace_det(m));
            auto inv = inverse(m);
            CHECK(inv.has_value() == (rank(m) == n));
            if (inv) CHECK(*inv * m == Matrix::identity(f, n));
        }
    }
}

TEST_CASE("subspace span, sum, membership") {
    Field f3(3, 1);
    VectorSubspace s = VectorSubspace::span(f3, 3, {{1, 0, 0}, {2, 0, 0}});
    CHECK(s.dim() == 1);
    Field f5(5, 1);
    VectorSubspace e1 = VectorSubspace::span(f5, 3, {{1, 0, 0}});
    VectorSubspace e2 = VectorSubspace::span(f5, 3, {{0, 1, 0}});
    CHECK(e1.sum(e2).dim() == 2);
    CHECK(e1.sum(e2).contains(std::vector<Elt>{3, 4, 0}));
    CHECK_FALSE(e1.sum(e2).contains(std::vector<Elt>{0, 0, 1}));
    CHECK_THROWS_AS((void)e1.contains(std::vector<Elt>{1, 0}), UsageError);
}

TEST_CASE("membership agrees with coefficient enumeration") {
    std::mt19937 rng(19);
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            const int m = 2 + static_cast<int>(rng() % 2);
            const int k = 1 + static_cast<int>(rng() % 3);
            std::vector<std::vector<Elt>> gens;
            for (int i = 0; i < k; ++i) gens.push_back(random_matrix(rng, f, 1, m).flatten());
            VectorSubspace s = VectorSubspace::span(f, m, gens);
            std::vector<Elt> v = random_matrix(rng, f, 1, m).flatten();
            CHECK(s.contains(v) == oracle_membership(f, gens, v));
        }
    }
}

TEST_CASE("hyperplane envelope") {
    Field f3(3, 1);
    VectorSubspace v = VectorSubspace::span(f3, 3, {{1, 0, 0}, {1, 1, 0}});
    auto h = hyperplane_envelope(v);
    REQUIRE(h.has_value());
    CHECK(h->dim() == 2);
    CHECK(h->contains(std::vector<Elt>{1, 0, 0}));
    CHECK(h->contains(std::vector<Elt>{1, 1, 0}));
    // Spanning input has no envelope.
    VectorSubspace full = VectorSubspace::span(f3, 2, {{1, 0}, {0, 1}});
    CHECK_FALSE(hyperplane_envelope(full).has_value());
    // A dim m-1 input envelopes itself.
    VectorSubspace hp = VectorSubspace::span(f3, 3, {{1, 0, 2}, {0, 1, 1}});
    auto h2 = hyperplane_envelope(hp);
    REQUIRE(h2.has_value());
    CHECK(*h2 == hp);
}

TEST_CASE("subspace enumeration counts match the Gaussian binomial") {
    CHECK(gaussian_binomial(2, 2, 1) == 3);
    CHECK(gaussian_binomial(3, 4, 2) == 130);
    for (std::uint64_t q : {2, 3, 4}) {
        Field f = Field::of_order(q);
        for (int m = 1; m <= 5; ++m) {
            for (int d = 0; d <= m; ++d) {
                long long count = 0;
                std::set<std::vector<std::vector<Elt>>> distinct;
                for_each_subspace(f, m, d, [&](const VectorSubspace& s) {
                    ++count;
                    distinct.insert(s.basis());
                    CHECK(s.dim() == d);
                    return true;
                });
                CAPTURE(q);
                CAPTURE(m);
                CAPTURE(d);
                CHECK(count == gaussian_binomial(q, m, d));
                CHECK(static_cast<long long>(distinct.size()) == count);
            }
        }
    }
}

TEST_CASE("subspace enumeration agrees with the direct span count") {
    Field f3(3, 1);
    CHECK(oracle_count_subspaces(f3, 4, 2) == 130);
    Field f2(2, 1);
    CHECK(oracle_count_subspaces(f2, 2, 1) == 3);
    CHECK(gaussian_binomial(3, 3, 3) == 1);
}

TEST_CASE("enumerate_subspaces honors the cap") {
    Field f3(3, 1);
    CHECK(enumerate_subspaces(f3, 3, 3, 10).size() == 1);
    CHECK_THROWS_AS((void)enumerate_subspaces(f3, 4, 2, 10), ResourceError);
}

TEST_CASE("solver and kernel") {
    std::mt19937 rng(23);
    Field f5(5, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        Matrix a = random_matrix(rng, f5, n, m);
        // Consistent system: b = A x0.
        Matrix x0 = random_matrix(rng, f5, m, 1);
        std::vector<Elt> b = (a * x0).flatten();
        auto x = solve_linear(a, b);
        REQUIRE(x.has_value());
        Matrix xm(f5, m, 1);
        for (int i = 0; i < m; ++i) xm.set(i, 0, (*x)[static_cast<std::size_t>(i)]);
        CHECK((a * xm).flatten() == b);
        const auto kernel = kernel_basis(a);
        CHECK(static_cast<int>(kernel.size()) == m - rank(a));
        for (const auto& k : kernel) {
            Matrix km(f5, m, 1);
            for (int i = 0; i < m; ++i) km.set(i, 0, k[static_cast<std::size_t>(i)]);
            CHECK((a * km).is_zero());
        }
    }
}

TEST_CASE("vector_at is lexicographic with the first coordinate most significant") {
    Field f5(5, 1);
    CHECK(vector_at(f5, 2, 0) == std::vector<Elt>{0, 0});
    CHECK(vector_at(f5, 2, 1) == std::vector<Elt>{0, 1});
    CHECK(vector_at(f5, 2, 7) == std::vector<Elt>{1, 2});
    CHECK(vector_at(f5, 2, 24) == std::vector<Elt>{4, 4});
}
