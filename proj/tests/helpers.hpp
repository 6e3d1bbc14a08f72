#pragma once

// Shared test fixtures: compact builders and independent brute-force oracles
// (cofactor determinants, minor-based rank, determinantal divisors) used to
// cross-check the elimination-based code paths.

#include <string>
#include <vector>

#include "pencils/pencil.hpp"
#include "pencils/polymatrix.hpp"
#include "pencils/rng.hpp"

namespace testhelp {

using namespace pencils;

inline Scalar sc(long v) { return Scalar(v); }
inline Scalar frac(long n, long d) { return Scalar(n, d); }

inline Poly P(std::initializer_list<long> coeffs_low_first) {
    std::vector<Scalar> c;
    for (long v : coeffs_low_first) c.push_back(Scalar(v));
    return Poly::from_coeffs(std::move(c));
}

inline Poly lam() { return Poly::lambda(); }

// Matrix from rows of integer pairs (a, b) meaning a + lambda*b.
struct PEntry {
    long a;
    long b;
};

inline PolyMatrix PM(std::initializer_list<std::initializer_list<PEntry>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    PolyMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const PEntry& e : row) {
            m.at(i, j) = Poly{Scalar(e.a), Scalar(e.b)};
            ++j;
        }
        ++i;
    }
    return m;
}

inline Mat M(std::initializer_list<std::initializer_list<long>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m.at(i, j++) = Scalar(v);
        ++i;
    }
    return m;
}

inline Pencil pencil(Mat a, Mat b) { return Pencil(std::move(a), std::move(b)); }

// Cofactor expansion determinant: division-free, independent of elimination.
inline Poly laplace_det(const PolyMatrix& m) {
    if (m.rows == 1) return m.at(0, 0);
    Poly acc;
    for (int i = 0; i < m.rows; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        PolyMatrix sub(m.rows - 1, m.cols - 1);
        for (int r = 0, sr = 0; r < m.rows; ++r) {
            if (r == i) continue;
            for (int c = 1; c < m.cols; ++c) sub.at(sr, c - 1) = m.at(r, c);
            ++sr;
        }
        const Poly term = m.at(i, 0) * laplace_det(sub);
        acc = i % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

// All k-subsets of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rs, const std::vector<int>& cs) {
    PolyMatrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) =
                m.at(rs[i], cs[j]);
    return out;
}

// Rank as the largest k with a nonzero k x k minor.
inline int brute_rank(const PolyMatrix& m) {
    for (int k = std::min(m.rows, m.cols); k >= 1; --k)
        for (const auto& rs : subsets(m.rows, k))
            for (const auto& cs : subsets(m.cols, k))
                if (!laplace_det(submatrix(m, rs, cs)).is_zero()) return k;
    return 0;
}

// Monic gcd of all k x k minors, zero polynomial if all vanish.
inline Poly determinantal_divisor(const PolyMatrix& m, int k) {
    Poly g;
    for (const auto& rs : subsets(m.rows, k))
        for (const auto& cs : subsets(m.cols, k)) {
            const Poly d = laplace_det(submatrix(m, rs, cs));
            if (d.is_zero()) continue;
            g = g.is_zero() ? d.monic() : poly_gcd(g, d);
        }
    return g;
}

inline PolyMatrix to_polymatrix(const Mat& m) {
    PolyMatrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = Poly(m.at(i, j));
    return out;
}

inline Mat random_matrix(Rng& rng, int rows, int cols, int height) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(rng.uniform(-height, height));
    return m;
}

inline Mat random_invertible(Rng& rng, int n, int height) {
    while (true) {
        Mat m = random_matrix(rng, n, n, height);
        if (invertible(m)) return m;
    }
}

inline Pencil random_pencil(Rng& rng, int m, int n, int height) {
    return Pencil(random_matrix(rng, m, n, height), random_matrix(rng, m, n, height));
}

} // namespace testhelp
