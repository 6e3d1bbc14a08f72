#include <doctest.h>

#include "helpers.hpp"
#include "pencils/errors.hpp"
#include "pencils/pencil.hpp"

using namespace pencils;
using namespace testhelp;

TEST_CASE("pencil construction validates shapes") {
    CHECK_THROWS_AS(Pencil(Mat(2, 2), Mat(2, 3)), PreconditionError);
    CHECK_THROWS_AS(Pencil(Mat(0, 2), Mat(0, 2)), PreconditionError);
    const Pencil p(M({{1, 0}}), M({{0, 1}}));
    CHECK(p.entry(0, 0) == P({1}));
    CHECK(p.entry(0, 1) == P({0, 1}));
}

TEST_CASE("singular block literals") {
    const Pencil l2 = block_pencil(CanonicalBlock::right(2));
    CHECK(l2.m == 2);
    CHECK(l2.n == 3);
    CHECK(l2.A == M({{0, 1, 0}, {0, 0, 1}}));
    CHECK(l2.B == M({{1, 0, 0}, {0, 1, 0}}));

    const Pencil l3t = block_pencil(CanonicalBlock::left(3));
    CHECK(l3t.m == 4);
    CHECK(l3t.n == 3);
    CHECK(l3t.A == transpose(block_pencil(CanonicalBlock::right(3))).A);
    CHECK(l3t.B == transpose(block_pencil(CanonicalBlock::right(3))).B);
}

TEST_CASE("regular block literals") {
    const Pencil j1 = block_pencil(CanonicalBlock::finite(1, Scalar(0)));
    CHECK(j1.m == 1);
    CHECK(j1.entry(0, 0) == P({0, 1}));

    const Pencil j2 = block_pencil(CanonicalBlock::finite(2, Scalar(-3)));
    CHECK(j2.A == M({{-3, 1}, {0, -3}}));
    CHECK(j2.B == M({{1, 0}, {0, 1}}));

    const Pencil n2 = block_pencil(CanonicalBlock::infinite(2));
    CHECK(n2.A == M({{1, 0}, {0, 1}}));
    CHECK(n2.B == M({{0, 1}, {0, 0}}));

    const Pencil j2i = block_pencil(CanonicalBlock::finite(2, Scalar::i()));
    CHECK(j2i.entry(0, 0) == (Poly::lambda() + Poly(Scalar::i())));
}

TEST_CASE("block constructors reject bad orders") {
    CHECK_THROWS_AS(CanonicalBlock::right(-1), PreconditionError);
    CHECK_THROWS_AS(CanonicalBlock::finite(0, Scalar(1)), PreconditionError);
    CHECK_THROWS_AS(CanonicalBlock::infinite(0), PreconditionError);
    // Order-0 singular blocks are fine on their own terms...
    const CanonicalBlock z = CanonicalBlock::right(0);
    CHECK(z.rows() == 0);
    CHECK(z.cols() == 1);
    // ...but a form consisting only of them has an empty dimension.
    CHECK_THROWS_AS(realize(CanonicalForm{{CanonicalBlock::right(0)}, {}, {}}), PreconditionError);
    CHECK_THROWS_AS(realize(CanonicalForm{{CanonicalBlock::left(0)}, {}, {}}), PreconditionError);
    CHECK_THROWS_AS(realize(CanonicalForm{{}, {}, {}}), PreconditionError);
}

namespace {

Pencil worked_k() {
    return direct_sum_blocks({CanonicalBlock::right(2), CanonicalBlock::left(3)});
}

Pencil worked_k_tilde() {
    return direct_sum_blocks({CanonicalBlock::right(1), CanonicalBlock::right(3),
                              CanonicalBlock::left(0), CanonicalBlock::left(0)});
}

} // namespace

TEST_CASE("direct sums produce the frozen worked matrices") {
    const Pencil k = worked_k();
    CHECK(k.m == 6);
    CHECK(k.n == 6);
    CHECK(k.A == M({{0, 1, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 1}}));
    CHECK(k.B == M({{1, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0}}));

    const Pencil kt = worked_k_tilde();
    CHECK(kt.m == 6);
    CHECK(kt.n == 6);
    CHECK(kt.A == M({{0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 1},
                     {0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0}}));
    CHECK(kt.B == M({{1, 0, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0, 0},
                     {0, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0}}));
}

TEST_CASE("order-zero singular blocks add zero columns and rows") {
    const Pencil p = direct_sum_blocks({CanonicalBlock::finite(1, Scalar(2)),
                                        CanonicalBlock::right(0),
                                        CanonicalBlock::left(0)});
    CHECK(p.m == 2);
    CHECK(p.n == 2);
    CHECK(p.A == M({{2, 0}, {0, 0}}));
    CHECK(p.B == M({{1, 0}, {0, 0}}));
}

TEST_CASE("equivalence transforms validate and compose") {
    const Pencil p = worked_k();
    Rng rng(3);
    const Mat e = random_invertible(rng, 6, 2);
    const Mat f = random_invertible(rng, 6, 2);
    const Pencil q = apply_equivalence(e, p, f);
    CHECK(q.A == e * p.A * f);
    CHECK(q.B == e * p.B * f);

    CHECK_THROWS_AS(apply_equivalence(Mat::identity(5), p, Mat::identity(6)), PreconditionError);
    CHECK_THROWS_AS(apply_equivalence(M({{1, 2, 3, 4, 5, 6},
                                         {1, 2, 3, 4, 5, 6},
                                         {0, 0, 1, 0, 0, 0},
                                         {0, 0, 0, 1, 0, 0},
                                         {0, 0, 0, 0, 1, 0},
                                         {0, 0, 0, 0, 0, 1}}),
                                      p, Mat::identity(6)),
                    PreconditionError);
}

TEST_CASE("transpose and reversal are involutions that commute with structure") {
    Rng rng(9);
    const Pencil p = random_pencil(rng, 3, 4, 3);
    const Pencil pt = transpose(p);
    CHECK(pt.m == 4);
    CHECK(pt.n == 3);
    CHECK(transpose(pt) == p);
    CHECK(reversal(reversal(p)) == p);

    // Reversal turns the infinite block into a nilpotent finite one.
    const Pencil n2 = block_pencil(CanonicalBlock::infinite(2));
    const Pencil j2 = block_pencil(CanonicalBlock::finite(2, Scalar(0)));
    CHECK(reversal(n2) == j2);
}

TEST_CASE("realize applies stored transforms") {
    CanonicalForm cf;
    cf.blocks = {CanonicalBlock::right(1), CanonicalBlock::left(1)};
    const Pencil bare = realize(cf);
    CHECK(bare.m == 3);
    CHECK(bare.n == 3);

    Rng rng(17);
    cf.E = random_invertible(rng, 3, 2);
    cf.F = random_invertible(rng, 3, 2);
    const Pencil dressed = realize(cf);
    CHECK(dressed == apply_equivalence(*cf.E, bare, *cf.F));

    cf.E = Mat(3, 3);
    CHECK_THROWS_AS(realize(cf), PreconditionError);
}
