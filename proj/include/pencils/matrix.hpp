#pragma once

#include <vector>

#include "pencils/scalar.hpp"

namespace pencils {

using ScalarVec = std::vector<Scalar>;

// Dense matrix over Q(i), row-major. Zero rows or columns are allowed (empty
// matrices show up as degenerate canonical blocks); Pencil enforces m,n >= 1.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    Scalar& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n);
    Mat transpose() const;
    bool is_zero() const;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
bool operator==(const Mat& a, const Mat& b);
bool operator!=(const Mat& a, const Mat& b);

// Exact rank by fraction-free elimination (denominators cleared per row first,
// so intermediate values stay Gaussian integers).
int rank(const Mat& a);

// Exact determinant of a square matrix.
Scalar det(const Mat& a);

bool invertible(const Mat& a);

// a * b^T for column vectors, as a rows x cols matrix.
Mat outer(const ScalarVec& a, const ScalarVec& b);

} // namespace pencils
