#include "pencils/matrix.hpp"

#include "pencils/errors.hpp"

namespace pencils {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Mat::is_zero() const {
    for (const Scalar& s : e)
        if (!s.is_zero()) return false;
    return true;
}

Mat operator+(const Mat& a, const Mat& b) {
    check_internal(a.rows == b.rows && a.cols == b.cols, "matrix add shape mismatch");
    Mat c(a.rows, a.cols);
    for (std::size_t k = 0; k < c.e.size(); ++k) c.e[k] = a.e[k] + b.e[k];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    check_internal(a.rows == b.rows && a.cols == b.cols, "matrix sub shape mismatch");
    Mat c(a.rows, a.cols);
    for (std::size_t k = 0; k < c.e.size(); ++k) c.e[k] = a.e[k] - b.e[k];
    return c;
}

Mat operator*(const Mat& a, const Mat& b) {
    check_internal(a.cols == b.rows, "matrix mul shape mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
        }
    return c;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] != b.e[k]) return false;
    return true;
}

bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

namespace {

// Multiply each row by the lcm of its entries' denominators (both parts).
// Rank-preserving; afterwards every entry is a Gaussian integer, so the
// fraction-free recurrence below divides exactly and stays integral.
void clear_denominators(Mat& m) {
    for (int i = 0; i < m.rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols; ++j) {
            const Scalar& s = m.at(i, j);
            mpz_class tmp;
            mpz_lcm(tmp.get_mpz_t(), l.get_mpz_t(), s.re.get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), tmp.get_mpz_t(), s.im.get_den().get_mpz_t());
        }
        if (l == 1) continue;
        const Scalar f((mpq_class(l)));
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = m.at(i, j) * f;
    }
}

Scalar exact_quot(const Scalar& num, const Scalar& den) {
    return num / den; // field division; exactness of the recurrence is structural
}

} // namespace

int rank(const Mat& a) {
    Mat m = a;
    clear_denominators(m);
    const int rmax = std::min(m.rows, m.cols);
    Scalar prev(1);
    int r = 0;
    for (int k = 0; k < rmax; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < m.rows && pi < 0; ++i)
            for (int j = k; j < m.cols; ++j)
                if (!m.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != k)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(k, j));
        if (pj != k)
            for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, k));
        for (int i = k + 1; i < m.rows; ++i) {
            for (int j = k + 1; j < m.cols; ++j)
                m.at(i, j) = exact_quot(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Scalar(0);
        }
        prev = m.at(k, k);
        ++r;
    }
    return r;
}

Scalar det(const Mat& a) {
    check_internal(a.rows == a.cols, "determinant of non-square matrix");
    const int n = a.rows;
    if (n == 0) return Scalar(1);
    Mat m = a;
    Scalar prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pi = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) {
                pi = i;
                break;
            }
        if (pi < 0) return Scalar(0);
        if (pi != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pi, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_quot(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Scalar(0);
        }
        prev = m.at(k, k);
    }
    const Scalar d = m.at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

bool invertible(const Mat& a) { return a.rows == a.cols && !det(a).is_zero(); }

Mat outer(const ScalarVec& a, const ScalarVec& b) {
    Mat m(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (int i = 0; i < m.rows; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return m;
}

} // namespace pencils
