#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhcat/qmatrix.hpp"
#include "oracle.hpp"

#include <random>

using namespace mhcat;

static QMatrix from_rows(const std::vector<std::vector<int>>& rows)
{
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

TEST_CASE("rational parsing round trip")
{
    CHECK(rat_str(rat_parse("3/2")) == "3/2");
    CHECK(rat_str(rat_parse("-4/6")) == "-2/3");
    CHECK(rat_str(rat_parse("0")) == "0");
    CHECK(rat_parse("2/4") == rat_parse("1/2"));
    CHECK_THROWS(rat_parse("1/0"));
    CHECK_THROWS(rat_parse("abc"));
}

TEST_CASE("rank basics")
{
    CHECK(rank(QMatrix(0, 0)) == 0);
    CHECK(rank(QMatrix::identity(3)) == 3);
    // row reduction by hand: second row is twice the first
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis canonical form")
{
    CHECK(kernel_basis(QMatrix::identity(2)).cols == 0);
    CHECK(kernel_basis(QMatrix(2, 2)) == QMatrix::identity(2));

    // solve x + y = 0, free variable y = 1
    QMatrix k = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k.cols == 1);
    CHECK(k.at(0, 0) == -1);
    CHECK(k.at(1, 0) == 1);
}

TEST_CASE("solve")
{
    QVec b{rat_parse("5"), rat_parse("-1/3")};
    auto x = solve(QMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto none = solve(from_rows({{1, 0}, {0, 0}}), QVec{Rat(0), Rat(1)});
    CHECK(!none.has_value());

    // direct division: 2x = 3
    auto half = solve(from_rows({{2}}), QVec{Rat(3)});
    REQUIRE(half.has_value());
    CHECK((*half)[0] == rat_parse("3/2"));

    CHECK_THROWS(solve(QMatrix::identity(2), QVec{Rat(1)}));
}

TEST_CASE("rank-nullity on randomized matrices, against the oracle")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(0, 6), val(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        oracle::Mat om(static_cast<size_t>(r), std::vector<oracle::Frac>(static_cast<size_t>(c)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = val(rng);
                m.at(i, j) = v;
                om[static_cast<size_t>(i)][static_cast<size_t>(j)] = oracle::Frac(v);
            }
        int rk = rank(m);
        CHECK(rk == oracle::rank(om));
        QMatrix k = kernel_basis(m);
        CHECK(rk + k.cols == c);
        if (k.cols > 0)
            CHECK((m * k).is_zero());
    }
}

TEST_CASE("solve agrees with oracle solvability and is exact")
{
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(1, 5), val(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        oracle::Mat om(static_cast<size_t>(r), std::vector<oracle::Frac>(static_cast<size_t>(c)));
        QVec b(static_cast<size_t>(r));
        std::vector<oracle::Frac> ob(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) {
                int v = val(rng);
                m.at(i, j) = v;
                om[static_cast<size_t>(i)][static_cast<size_t>(j)] = oracle::Frac(v);
            }
            int v = val(rng);
            b[static_cast<size_t>(i)] = v;
            ob[static_cast<size_t>(i)] = oracle::Frac(v);
        }
        auto x = solve(m, b);
        CHECK(x.has_value() == oracle::solvable(om, ob));
        if (x) {
            QVec mx = m.apply(*x);
            CHECK(mx == b);
        }
    }
}

TEST_CASE("kernel basis idempotent under re-canonicalization")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 5), val(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        int r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = val(rng);
        QMatrix k = kernel_basis(m);
        // the canonical column basis of span(k) is k itself
        if (k.cols > 0) {
            ColBasis cb = column_basis(k);
            CHECK(cb.basis.cols == k.cols);
            QMatrix diff = quotient_basis(k, cb.basis);
            CHECK(diff.cols == 0);
        }
    }
}

TEST_CASE("column basis and quotient basis")
{
    QMatrix m = from_rows({{1, 2, 3}, {0, 0, 1}});
    ColBasis cb = column_basis(m);
    CHECK(cb.basis.cols == 2);
    CHECK(cb.pivot_rows == std::vector<int>{0, 1});

    // quotient of Q^2 by the first coordinate line
    QMatrix sub = from_rows({{1}, {0}});
    QMatrix whole = QMatrix::identity(2);
    QMatrix q = quotient_basis(sub, whole);
    REQUIRE(q.cols == 1);
    CHECK(q.at(0, 0) == 0);
    CHECK(q.at(1, 0) == 1);
}

TEST_CASE("inverse")
{
    QMatrix m = from_rows({{2, 1}, {1, 1}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK(!inverse(from_rows({{1, 1}, {1, 1}})).has_value());
}
