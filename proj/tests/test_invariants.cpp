#include <doctest.h>

#include "helpers.hpp"
#include "pencils/invariants.hpp"

using namespace pencils;
using namespace testhelp;

namespace {

const std::vector<CanonicalBlock> k_blocks = {CanonicalBlock::right(2), CanonicalBlock::left(3)};
const std::vector<CanonicalBlock> kt_blocks = {CanonicalBlock::right(1), CanonicalBlock::right(3),
                                               CanonicalBlock::left(0), CanonicalBlock::left(0)};

} // namespace

TEST_CASE("normal rank on pinned pencils") {
    CHECK(normal_rank(direct_sum_blocks(k_blocks)) == 5);
    CHECK(normal_rank(direct_sum_blocks(kt_blocks)) == 4);
    CHECK(normal_rank(block_pencil(CanonicalBlock::right(2))) == 2);
    CHECK(normal_rank(block_pencil(CanonicalBlock::finite(2, Scalar(0)))) == 2);
    CHECK(normal_rank(block_pencil(CanonicalBlock::infinite(3))) == 3);
    CHECK(normal_rank(Pencil(Mat(2, 3), Mat(2, 3))) == 0);
}

TEST_CASE("minimal indices on pinned pencils") {
    CHECK(right_minimal_indices(block_pencil(CanonicalBlock::right(2))) == std::vector<int>{2});
    CHECK(left_minimal_indices(block_pencil(CanonicalBlock::right(2))).empty());

    CHECK(right_minimal_indices(block_pencil(CanonicalBlock::left(3))).empty());
    CHECK(left_minimal_indices(block_pencil(CanonicalBlock::left(3))) == std::vector<int>{3});

    const Pencil kt = direct_sum_blocks(kt_blocks);
    CHECK(right_minimal_indices(kt) == std::vector<int>{1, 3});
    CHECK(left_minimal_indices(kt) == std::vector<int>{0, 0});

    const Pencil k = direct_sum_blocks(k_blocks);
    CHECK(right_minimal_indices(k) == std::vector<int>{2});
    CHECK(left_minimal_indices(k) == std::vector<int>{3});

    CHECK(right_minimal_indices(block_pencil(CanonicalBlock::finite(2, Scalar(5)))).empty());
    CHECK(right_minimal_indices(Pencil(Mat(2, 3), Mat(2, 3))) == std::vector<int>{0, 0, 0});
}

TEST_CASE("eigenstructure on pinned pencils") {
    const Eigenstructure j2 = eigenstructure(block_pencil(CanonicalBlock::finite(2, Scalar(0))));
    REQUIRE(j2.finite.size() == 1);
    CHECK(j2.finite[0].cls == P({0, 1}));
    CHECK(j2.finite[0].segre == std::vector<int>{2});
    CHECK(j2.infinite.empty());

    const Eigenstructure n2 = eigenstructure(block_pencil(CanonicalBlock::infinite(2)));
    CHECK(n2.finite.empty());
    CHECK(n2.infinite == std::vector<int>{2});

    const Eigenstructure j11 = eigenstructure(block_pencil(CanonicalBlock::finite(1, Scalar(1))));
    REQUIRE(j11.finite.size() == 1);
    CHECK(j11.finite[0].cls == P({1, 1}));
    CHECK(j11.finite[0].segre == std::vector<int>{1});

    const Eigenstructure j3i = eigenstructure(block_pencil(CanonicalBlock::finite(3, Scalar::i())));
    REQUIRE(j3i.finite.size() == 1);
    CHECK(j3i.finite[0].cls == (Poly::lambda() + Poly(Scalar::i())));
    CHECK(j3i.finite[0].segre == std::vector<int>{3});

    // Singular parts contribute nothing to the eigenstructure.
    const Eigenstructure sing = eigenstructure(direct_sum_blocks(kt_blocks));
    CHECK(sing.finite.empty());
    CHECK(sing.infinite.empty());
}

TEST_CASE("repeated eigenvalue collects a Segre partition") {
    const std::vector<CanonicalBlock> blocks = {CanonicalBlock::finite(2, Scalar(0)),
                                                CanonicalBlock::finite(1, Scalar(0)),
                                                CanonicalBlock::right(1)};
    const KroneckerStructure s = kronecker_structure(direct_sum_blocks(blocks));
    CHECK(s.nrank == 4);
    CHECK(s.right == std::vector<int>{1});
    CHECK(s.left.empty());
    REQUIRE(s.finite.size() == 1);
    CHECK(s.finite[0].cls == P({0, 1}));
    CHECK(s.finite[0].segre == std::vector<int>{2, 1});
    CHECK(equivalent_structures(s, structure_of_blocks(blocks)));
}

TEST_CASE("computed structure matches the block-list oracle") {
    const std::vector<std::vector<CanonicalBlock>> cases = {
        k_blocks,
        kt_blocks,
        {CanonicalBlock::finite(1, Scalar(0)), CanonicalBlock::finite(1, Scalar(-1))},
        {CanonicalBlock::infinite(2), CanonicalBlock::infinite(1), CanonicalBlock::finite(2, Scalar(3))},
        {CanonicalBlock::right(0), CanonicalBlock::left(2), CanonicalBlock::finite(1, Scalar::i())},
        {CanonicalBlock::right(1), CanonicalBlock::right(1), CanonicalBlock::left(0),
         CanonicalBlock::infinite(1)},
    };
    for (const auto& blocks : cases) {
        const KroneckerStructure direct = kronecker_structure(direct_sum_blocks(blocks));
        const KroneckerStructure oracle = structure_of_blocks(blocks);
        CHECK(equivalent_structures(direct, oracle));
        CHECK(direct.right == oracle.right);
        CHECK(direct.left == oracle.left);
        CHECK(direct.infinite == oracle.infinite);
    }
}

TEST_CASE("structure is invariant under strict equivalence") {
    Rng rng(2024);
    const std::vector<std::vector<CanonicalBlock>> cases = {
        kt_blocks,
        {CanonicalBlock::right(1), CanonicalBlock::finite(2, Scalar(1)), CanonicalBlock::left(1)},
        {CanonicalBlock::infinite(2), CanonicalBlock::right(0), CanonicalBlock::right(2)},
    };
    for (const auto& blocks : cases) {
        const Pencil p = direct_sum_blocks(blocks);
        for (int trial = 0; trial < 3; ++trial) {
            const Mat e = random_invertible(rng, p.m, 2);
            const Mat f = random_invertible(rng, p.n, 2);
            const KroneckerStructure s = kronecker_structure(apply_equivalence(e, p, f));
            CHECK(equivalent_structures(s, structure_of_blocks(blocks)));
        }
    }
}

TEST_CASE("distinct eigenvalues may share a class divisor yet compare equal") {
    const std::vector<CanonicalBlock> blocks = {CanonicalBlock::finite(1, Scalar(0)),
                                                CanonicalBlock::finite(1, Scalar(1))};
    const KroneckerStructure direct = kronecker_structure(direct_sum_blocks(blocks));
    // The Smith form sees one invariant factor l^2 + l, hence one merged class.
    REQUIRE(direct.finite.size() == 1);
    CHECK(direct.finite[0].cls == P({0, 1, 1}));
    CHECK(direct.finite[0].segre == std::vector<int>{1});

    const KroneckerStructure oracle = structure_of_blocks(blocks);
    REQUIRE(oracle.finite.size() == 2);
    CHECK(equivalent_structures(direct, oracle));
    CHECK(equivalent_structures(oracle, direct));
}

TEST_CASE("inequivalent structures are told apart") {
    const auto s1 = structure_of_blocks({CanonicalBlock::finite(2, Scalar(0)), CanonicalBlock::right(0)});
    const auto s2 = structure_of_blocks({CanonicalBlock::finite(1, Scalar(0)),
                                         CanonicalBlock::finite(1, Scalar(0)), CanonicalBlock::right(0)});
    CHECK_FALSE(equivalent_structures(s1, s2)); // Segre (2) vs (1,1)

    const auto s3 = structure_of_blocks({CanonicalBlock::finite(2, Scalar(0)), CanonicalBlock::right(0)});
    const auto s4 = structure_of_blocks({CanonicalBlock::finite(2, Scalar(1)), CanonicalBlock::right(0)});
    CHECK_FALSE(equivalent_structures(s3, s4)); // different eigenvalue

    const auto s5 = structure_of_blocks(k_blocks);
    const auto s6 = structure_of_blocks(kt_blocks);
    CHECK_FALSE(equivalent_structures(s5, s6)); // different minimal indices
}

TEST_CASE("conjugate partition") {
    CHECK(conjugate_partition({2, 1}) == std::vector<int>{2, 1});
    CHECK(conjugate_partition({3, 1}) == std::vector<int>{2, 1, 1});
    CHECK(conjugate_partition({4}) == std::vector<int>{1, 1, 1, 1});
    CHECK(conjugate_partition({1, 1, 1}) == std::vector<int>{3});
    CHECK(conjugate_partition({}).empty());
    // Involution on partitions sorted descending.
    CHECK(conjugate_partition(conjugate_partition({4, 2, 1})) == std::vector<int>{4, 2, 1});
}

TEST_CASE("invariant count lists on the worked pair") {
    const InvariantLists lk = invariant_lists(structure_of_blocks(k_blocks));
    CHECK(lk.R == std::vector<int>{1, 1, 1});
    CHECK(lk.L == std::vector<int>{1, 1, 1, 1});
    CHECK(lk.J.empty());

    const InvariantLists lkt = invariant_lists(structure_of_blocks(kt_blocks));
    CHECK(lkt.R == std::vector<int>{2, 2, 1, 1});
    CHECK(lkt.L == std::vector<int>{2});
    CHECK(lkt.J.empty());
}

TEST_CASE("invariant lists carry Weyr data per class") {
    const auto s = structure_of_blocks({CanonicalBlock::finite(2, Scalar(0)),
                                        CanonicalBlock::finite(1, Scalar(0)),
                                        CanonicalBlock::infinite(2), CanonicalBlock::right(0)});
    const InvariantLists l = invariant_lists(s);
    REQUIRE(l.J.size() == 2);
    REQUIRE(l.J[0].cls.has_value());
    CHECK(*l.J[0].cls == P({0, 1}));
    CHECK(l.J[0].weyr == std::vector<int>{2, 1}); // conjugate of Segre (2,1)
    CHECK_FALSE(l.J[1].cls.has_value());
    CHECK(l.J[1].weyr == std::vector<int>{1, 1});
}

TEST_CASE("index sums account for the normal rank") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<CanonicalBlock> blocks;
        const int count = rng.uniform(1, 4);
        for (int t = 0; t < count; ++t) {
            switch (rng.uniform(0, 3)) {
                case 0: blocks.push_back(CanonicalBlock::right(rng.uniform(0, 2))); break;
                case 1: blocks.push_back(CanonicalBlock::left(rng.uniform(0, 2))); break;
                case 2: blocks.push_back(CanonicalBlock::finite(rng.uniform(1, 2), Scalar(rng.uniform(-1, 1)))); break;
                default: blocks.push_back(CanonicalBlock::infinite(rng.uniform(1, 2))); break;
            }
        }
        Pencil p = Pencil(Mat(1, 1), Mat(1, 1));
        try {
            p = direct_sum_blocks(blocks);
        } catch (const PreconditionError&) {
            continue; // all blocks degenerate in one direction
        }
        const KroneckerStructure s = kronecker_structure(p);
        int regular = 0;
        for (const auto& fc : s.finite) {
            int sum = 0;
            for (int e : fc.segre) sum += e;
            regular += fc.cls.degree() * sum;
        }
        for (int e : s.infinite) regular += e;
        CHECK(s.nrank == epsilon_sum(s) + eta_sum(s) + regular);
        CHECK(static_cast<int>(s.right.size()) == s.n - s.nrank);
        CHECK(static_cast<int>(s.left.size()) == s.m - s.nrank);
    }
}
