#include <catch2/catch_amalgamated.hpp>

#include "homcx/sparse.hpp"

#include <random>

using namespace homcx;

namespace {

template <CoefficientField F>
SparseMatrix<F> from_rows(const F& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::int32_t r = std::int32_t(rows.size());
    std::int32_t c = rows.empty() ? 0 : std::int32_t(rows[0].size());
    SparseMatrix<F> m(r, c);
    for (std::int32_t i = 0; i < r; ++i)
        for (std::int32_t j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.set(f, i, j, f.from_int(rows[i][j]));
    return m;
}

template <CoefficientField F>
SparseMatrix<F> random_matrix(const F& f, std::mt19937_64& rng, std::int32_t r, std::int32_t c,
                              double fill) {
    SparseMatrix<F> m(r, c);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> val(-20, 20);
    for (std::int32_t i = 0; i < r; ++i)
        for (std::int32_t j = 0; j < c; ++j)
            if (u(rng) < fill) m.set(f, i, j, f.from_int(val(rng)));
    return m;
}

} // namespace

TEST_CASE("rank on fixed matrices") {
    PrimeField f(101);
    CHECK(rank(f, from_rows(f, {{1, 0}, {0, 1}})) == 2);
    CHECK(rank(f, SparseMatrix<PrimeField>(3, 5)) == 0);

    RationalField q;
    CHECK(rank(q, from_rows(q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel bases on fixed matrices") {
    PrimeField f(101);
    CHECK(kernel_basis(f, from_rows(f, {{1, 0}, {0, 1}})).empty());

    auto k1 = kernel_basis(f, from_rows(f, {{1, -1}}));
    REQUIRE(k1.size() == 1);
    // (1,1) up to scaling
    REQUIRE(k1[0].nnz() == 2);
    CHECK(f.sub(k1[0].ent[0].second, k1[0].ent[1].second) == 0);

    RationalField q;
    auto k2 = kernel_basis(q, from_rows(q, {{1, 2}, {2, 4}}));
    REQUIRE(k2.size() == 1);
    // proportional to (2, -1): 1*v0 + 2*v1 == 0
    Rational s = k2[0].ent.size() == 2
                     ? coeff_at(q, k2[0], 0) + 2 * coeff_at(q, k2[0], 1)
                     : Rational(1);
    CHECK(s == 0);
}

TEST_CASE("column reduction against pivots") {
    PrimeField f(101);
    auto m = from_rows(f, {{1, 1}, {0, 1}});
    auto red = column_reduce_against(f, m, {0});
    CHECK(red.reduced.equals(f, from_rows(f, {{1, 0}, {0, 1}})));
    CHECK(m.multiply(f, red.transform).equals(f, red.reduced));

    SparseMatrix<PrimeField> z(2, 3);
    auto rz = column_reduce_against(f, z, std::vector<std::int32_t>{});
    CHECK(rz.reduced.equals(f, z));

    CHECK_THROWS_AS(column_reduce_against(f, z, {1}), std::invalid_argument);
}

TEST_CASE("full column reduction of random invertible matrices over F101") {
    PrimeField f(101);
    std::mt19937_64 rng(20240517);
    int done = 0;
    while (done < 5) {
        auto m = random_matrix(f, rng, 3, 3, 0.9);
        if (rank(f, m) != 3) continue;
        ++done;
        auto red = full_column_reduce(f, m);
        CHECK(red.reduced.equals(f, SparseMatrix<PrimeField>::identity(f, 3)));
        // transform is the inverse: m * t == id
        CHECK(m.multiply(f, red.transform).equals(f, SparseMatrix<PrimeField>::identity(f, 3)));
    }
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
    PrimeField f(101);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::int32_t r = std::int32_t(rng() % 8);
        std::int32_t c = std::int32_t(rng() % 8);
        double fill = trial % 2 == 0 ? 0.2 : 0.8; // exercise sparse and dense paths
        auto m = random_matrix(f, rng, r, c, fill);
        auto ker = kernel_basis(f, m);
        CHECK(rank(f, m) + std::int32_t(ker.size()) == c);
        for (const auto& v : ker) {
            CHECK_FALSE(v.empty());
            CHECK(m.apply(f, v).empty());
        }
        // rank is invariant under recorded invertible column transformations
        if (c > 0) {
            std::vector<std::int32_t> piv;
            for (std::int32_t j = 0; j < c; ++j)
                if (!m.column(j).empty()) { piv.push_back(j); break; }
            auto red = column_reduce_against(f, m, piv);
            CHECK(rank(f, red.reduced) == rank(f, m));
            CHECK(m.multiply(f, red.transform).equals(f, red.reduced));
        }
    }
}

TEST_CASE("rank-nullity over the rationals") {
    RationalField q;
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(q, rng, 5, 6, 0.5);
        auto ker = kernel_basis(q, m);
        CHECK(rank(q, m) + std::int32_t(ker.size()) == 6);
        for (const auto& v : ker) CHECK(m.apply(q, v).empty());
    }
}

TEST_CASE("subspace reducer canonical forms") {
    PrimeField f(101);
    SubspaceReducer<PrimeField> red(f);
    SparseVec<PrimeField> a, b;
    a.push(0, 1); a.push(2, 5);
    b.push(0, 3); b.push(1, 1);
    CHECK(red.insert(a));
    CHECK(red.insert(b));
    CHECK_FALSE(red.insert(a));
    CHECK(red.rank() == 2);

    SparseVec<PrimeField> c;
    c.push(0, 2); c.push(1, 7); c.push(3, 1);
    auto canon = red.reduce_full(c);
    for (const auto& [i, x] : canon.ent) CHECK_FALSE(red.has_pivot(i));
    // reducing again is a no-op
    auto canon2 = red.reduce_full(canon);
    CHECK(canon2.nnz() == canon.nnz());
}

TEST_CASE("span solver expresses members and rejects outsiders") {
    PrimeField f(101);
    SpanSolver<PrimeField> span(f);
    SparseVec<PrimeField> a, b;
    a.push(0, 1); a.push(1, 1);
    b.push(1, 2);
    span.insert_basis_vector(a);
    span.insert_basis_vector(b);

    SparseVec<PrimeField> v; // 3*a + 2*b = (3, 7)
    v.push(0, 3); v.push(1, 7);
    auto coords = span.express(v);
    REQUIRE(coords.has_value());
    CHECK(coeff_at(f, *coords, 0) == 3);
    CHECK(coeff_at(f, *coords, 1) == 2);

    SparseVec<PrimeField> w;
    w.push(2, 1);
    CHECK_FALSE(span.express(w).has_value());
}
