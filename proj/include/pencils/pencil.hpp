#pragma once

#include <optional>
#include <vector>

#include "pencils/matrix.hpp"
#include "pencils/polymatrix.hpp"

namespace pencils {

// Matrix pencil A + lambda*B with m x n coefficients over Q(i), m,n >= 1.
struct Pencil {
    int m = 0;
    int n = 0;
    Mat A;
    Mat B;

    Pencil() = default;
    Pencil(Mat a, Mat b);

    Poly entry(int i, int j) const; // A_ij + lambda*B_ij
    PolyMatrix to_polymatrix() const;
};

bool operator==(const Pencil& a, const Pencil& b);
bool operator!=(const Pencil& a, const Pencil& b);

// Canonical block kinds:
//   RightSingular(e):  e x (e+1), lambda on the diagonal, 1 on the superdiagonal
//   LeftSingular(e):   transpose shape, (e+1) x e
//   FiniteJordan(k,mu): J_k(mu) + lambda*I_k, k >= 1
//   InfiniteJordan(u): I_u + lambda*J_u(0), u >= 1
// Order-0 singular blocks contribute one zero column (resp. row) to a direct
// sum and cannot stand alone as a pencil.
struct CanonicalBlock {
    enum class Kind { RightSingular, LeftSingular, FiniteJordan, InfiniteJordan };

    Kind kind = Kind::RightSingular;
    int order = 0;
    Scalar mu; // FiniteJordan only

    static CanonicalBlock right(int eps);
    static CanonicalBlock left(int eta);
    static CanonicalBlock finite(int k, Scalar mu);
    static CanonicalBlock infinite(int u);

    int rows() const;
    int cols() const;
};

bool operator==(const CanonicalBlock& a, const CanonicalBlock& b);

// Ordered block list with an optional strict equivalence attached: the pencil
// it denotes is E * (direct sum of blocks) * F.
struct CanonicalForm {
    std::vector<CanonicalBlock> blocks;
    std::optional<Mat> E;
    std::optional<Mat> F;
};

// Single block as a pencil; rejects order-0 singular blocks (empty dimension).
Pencil block_pencil(const CanonicalBlock& b);

// Block-diagonal direct sum; at least one summand.
Pencil direct_sum(const std::vector<Pencil>& ps);

// Direct sum of a block list, order-0 singular blocks contributing their zero
// column/row. Total size must end up >= 1 in both dimensions.
Pencil direct_sum_blocks(const std::vector<CanonicalBlock>& blocks);

// direct_sum_blocks with E, F applied when present (both checked invertible).
Pencil realize(const CanonicalForm& cf);

// E * (A + lambda B) * F with E (m x m), F (n x n) invertible.
Pencil apply_equivalence(const Mat& E, const Pencil& p, const Mat& F);

Pencil transpose(const Pencil& p);
Pencil reversal(const Pencil& p); // swaps the roles of A and B

// Same blocks as multisets (mu compared exactly).
bool same_block_multiset(const std::vector<CanonicalBlock>& a, const std::vector<CanonicalBlock>& b);

} // namespace pencils
