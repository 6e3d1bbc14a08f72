#pragma once

#include <vector>

#include "pencils/matrix.hpp"
#include "pencils/poly.hpp"

namespace pencils {

// Dense matrix over Q(i)[lambda], row-major.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> e;

    PolyMatrix() = default;
    PolyMatrix(int r, int c)
        : rows(r), cols(c), e(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    Poly& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    const Poly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }

    PolyMatrix transpose() const;
    bool is_zero() const;
};

bool operator==(const PolyMatrix& a, const PolyMatrix& b);
bool operator!=(const PolyMatrix& a, const PolyMatrix& b);

// Rank over the rational function field, exact (fraction-free elimination;
// entries stay polynomial throughout).
int exact_rank(const PolyMatrix& a);

// Nonzero invariant factors d_1 | d_2 | ... | d_rho, each monic.
std::vector<Poly> smith_form(const PolyMatrix& a);

} // namespace pencils
