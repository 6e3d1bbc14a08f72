#include <doctest.h>

#include "helpers.hpp"
#include "pencils/matrix.hpp"
#include "pencils/polymatrix.hpp"

using namespace pencils;
using namespace testhelp;

TEST_CASE("scalar matrix rank on pinned examples") {
    CHECK(rank(M({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(M({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(Mat(3, 4)) == 0);
    CHECK(rank(M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);

    Mat c(2, 2);
    c.at(0, 0) = Scalar(1);
    c.at(0, 1) = Scalar::i();
    c.at(1, 0) = Scalar::i();
    c.at(1, 1) = Scalar(-1);
    CHECK(rank(c) == 1);
    c.at(1, 1) = Scalar(1);
    CHECK(rank(c) == 2);
}

TEST_CASE("scalar matrix rank matches the minor oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = rng.uniform(1, 4);
        const int cols = rng.uniform(1, 4);
        Mat m = random_matrix(rng, rows, cols, 2);
        if (trial % 3 == 0 && rows > 1) {
            // Force deficiency: duplicate a row.
            for (int j = 0; j < cols; ++j) m.at(rows - 1, j) = m.at(0, j);
        }
        CHECK(rank(m) == brute_rank(to_polymatrix(m)));
    }
}

TEST_CASE("determinant on pinned examples and against cofactor expansion") {
    CHECK(det(M({{2}})) == Scalar(2));
    CHECK(det(M({{1, 2}, {3, 4}})) == Scalar(-2));
    CHECK(det(M({{0, 1}, {1, 0}})) == Scalar(-1));
    CHECK(det(M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == Scalar(0));

    Rng rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.uniform(1, 4);
        const Mat m = random_matrix(rng, n, n, 3);
        const Poly d = laplace_det(to_polymatrix(m));
        CHECK(det(m) == (d.is_zero() ? Scalar(0) : d.coeff(0)));
    }
}

TEST_CASE("matrix product and outer product") {
    const Mat a = M({{1, 2}, {3, 4}});
    const Mat b = M({{0, 1}, {1, 0}});
    CHECK(a * b == M({{2, 1}, {4, 3}}));
    CHECK(outer({Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}) == M({{3, 4}, {6, 8}}));
    CHECK(invertible(b));
    CHECK_FALSE(invertible(M({{1, 2}, {2, 4}})));
}

TEST_CASE("polynomial matrix rank on pinned examples") {
    CHECK(exact_rank(PM({{{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}})) == 1);
    CHECK(exact_rank(PolyMatrix(3, 2)) == 0);
    // det = l^2 - 1, nonzero, so full rank despite every entry being nonconstant or 1.
    CHECK(exact_rank(PM({{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}})) == 2);
}

TEST_CASE("polynomial matrix rank matches the minor oracle") {
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = rng.uniform(1, 3);
        const int cols = rng.uniform(1, 4);
        PolyMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = Poly{Scalar(rng.uniform(-2, 2)), Scalar(rng.uniform(-1, 1))};
        CHECK(exact_rank(m) == brute_rank(m));
    }
}

TEST_CASE("smith form on pinned examples") {
    // Jordan block at 0 paired with the identity: one invariant factor jumps to l^2.
    const auto s1 = smith_form(PM({{{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}}));
    REQUIRE(s1.size() == 2);
    CHECK(s1[0] == P({1}));
    CHECK(s1[1] == P({0, 0, 1}));

    const auto s2 = smith_form(PM({{{1, 0}, {0, 0}, {0, 0}},
                                   {{0, 0}, {1, 0}, {0, 0}},
                                   {{0, 0}, {0, 0}, {1, 0}}}));
    REQUIRE(s2.size() == 3);
    for (const Poly& p : s2) CHECK(p == P({1}));

    // Wide full-row-rank pencil block: no finite structure at all.
    const auto s3 = smith_form(PM({{{0, 1}, {1, 0}, {0, 0}}, {{0, 0}, {0, 1}, {1, 0}}}));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == P({1}));
    CHECK(s3[1] == P({1}));

    CHECK(smith_form(PolyMatrix(2, 3)).empty());
}

TEST_CASE("smith form matches determinantal divisors and divisibility chain") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = rng.uniform(1, 3);
        const int cols = rng.uniform(1, 3);
        PolyMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = Poly{Scalar(rng.uniform(-2, 2)), Scalar(rng.uniform(-1, 1))};
        const auto factors = smith_form(m);
        CHECK(static_cast<int>(factors.size()) == brute_rank(m));
        Poly prev = P({1});
        Poly partial = P({1});
        for (std::size_t k = 0; k < factors.size(); ++k) {
            CHECK(factors[k].lead() == Scalar(1));
            CHECK(divmod(factors[k], prev).remainder.is_zero());
            prev = factors[k];
            partial = partial * factors[k];
            // Product of the first k invariant factors equals the k-th determinantal divisor.
            CHECK(partial == determinantal_divisor(m, static_cast<int>(k) + 1));
        }
    }
}
