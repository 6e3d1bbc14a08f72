#pragma once

#include <optional>
#include <vector>

#include "pencils/pencil.hpp"

namespace pencils {

// One eigenvalue class: a monic squarefree polynomial whose roots all carry the
// same elementary-divisor exponents, plus those exponents sorted descending.
struct FiniteClassDivisor {
    Poly cls;
    std::vector<int> segre;
};

// Complete strict-equivalence invariant data of a pencil.
struct KroneckerStructure {
    int m = 0;
    int n = 0;
    int nrank = 0;
    std::vector<int> right; // minimal column indices, ascending, size n - nrank
    std::vector<int> left;  // minimal row indices, ascending, size m - nrank
    std::vector<FiniteClassDivisor> finite;
    std::vector<int> infinite; // exponents at infinity, descending
};

// Rank over the rational function field.
int normal_rank(const Pencil& p);

// Minimal column indices from the rank sequence of block Toeplitz matrices:
// d_k = (k+1)n - rank(T_k) counts degree-<=k polynomial kernel vectors, and
// d_k - d_{k-1} counts indices <= k.
std::vector<int> right_minimal_indices(const Pencil& p);
std::vector<int> left_minimal_indices(const Pencil& p);

struct Eigenstructure {
    std::vector<FiniteClassDivisor> finite;
    std::vector<int> infinite;
};

// Finite part from the Smith form, grouped by a gcd-free basis of the
// nonconstant invariant factors; infinite part from the reversed pencil at 0.
Eigenstructure eigenstructure(const Pencil& p);

KroneckerStructure kronecker_structure(const Pencil& p);

// The structure a block list denotes, read off definitionally. Used as the
// independent oracle for kronecker_structure and to decide membership for
// inputs already in canonical form.
KroneckerStructure structure_of_blocks(const std::vector<CanonicalBlock>& blocks);

// Weyr characteristic: conjugate partition, w_j = #{i : part_i >= j}.
std::vector<int> conjugate_partition(const std::vector<int>& parts);

struct WeyrEntry {
    std::optional<Poly> cls; // nullopt marks the class at infinity
    std::vector<int> weyr;
};

struct InvariantLists {
    std::vector<int> R; // r_0 = n - nrank, r_i = #{right indices >= i}
    std::vector<int> L;
    std::vector<WeyrEntry> J;
};

InvariantLists invariant_lists(const KroneckerStructure& s);

int epsilon_sum(const KroneckerStructure& s); // sum of right indices
int eta_sum(const KroneckerStructure& s);     // sum of left indices

// Equality of invariants; finite parts are compared on a joint gcd-free
// refinement, so differently-grouped classes with the same roots agree.
bool equivalent_structures(const KroneckerStructure& a, const KroneckerStructure& b);

} // namespace pencils
