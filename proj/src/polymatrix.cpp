#include "pencils/polymatrix.hpp"

#include <algorithm>
#include <bit>

#include "pencils/errors.hpp"

namespace pencils {

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool PolyMatrix::is_zero() const {
    for (const Poly& p : e)
        if (!p.is_zero()) return false;
    return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] != b.e[k]) return false;
    return true;
}

bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

int exact_rank(const PolyMatrix& a) {
    PolyMatrix m = a;
    const int rmax = std::min(m.rows, m.cols);
    Poly prev = Poly::one();
    int r = 0;
    for (int k = 0; k < rmax; ++k) {
        // Minimal-degree pivot keeps intermediate degrees down.
        int pi = -1, pj = -1, pd = -1;
        for (int i = k; i < m.rows; ++i)
            for (int j = k; j < m.cols; ++j) {
                const Poly& p = m.at(i, j);
                if (p.is_zero()) continue;
                if (pi < 0 || p.degree() < pd) {
                    pi = i;
                    pj = j;
                    pd = p.degree();
                }
            }
        if (pi < 0) break;
        if (pi != k)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(k, j));
        if (pj != k)
            for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, k));
        for (int i = k + 1; i < m.rows; ++i) {
            for (int j = k + 1; j < m.cols; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Poly::zero();
        }
        prev = m.at(k, k);
        ++r;
    }
    return r;
}

namespace {

// Monic gcd d_k of all k x k minors, for k = 1 up to the rank. Every value the
// table holds is itself a minor, so degrees stay at most k and coefficients
// stay minor-sized; elimination-style reduction blows both up on dense inputs.
// Layer k maps (row subset, column subset) masks of popcount k to the minor,
// built by Laplace expansion along the subset's top column against layer k-1.
std::vector<Poly> determinantal_divisors(const PolyMatrix& a) {
    const int rows = a.rows, cols = a.cols;
    const int rmax = std::min(rows, cols);
    if (rmax == 0) return {};
    check_internal(rows + cols <= 26, "minor table would be too large");

    // Clear denominators: a constant scaling multiplies every k x k minor by a
    // constant, which the monic normalization drops again.
    mpz_class den = 1;
    for (const Poly& p : a.e)
        for (const Scalar& s : p.coeffs()) {
            den = lcm(den, s.re.get_den());
            den = lcm(den, s.im.get_den());
        }
    PolyMatrix m = a;
    if (den != 1) {
        const Scalar sc{mpq_class(den)};
        for (Poly& p : m.e) p = sc * p;
    }

    const std::size_t cspan = std::size_t{1} << cols;
    const std::size_t rspan = std::size_t{1} << rows;
    std::vector<Poly> prev(rspan * cspan);
    prev[0] = Poly::one();

    std::vector<Poly> divisors;
    for (int k = 1; k <= rmax; ++k) {
        std::vector<Poly> cur(rspan * cspan);
        Poly g = Poly::zero();
        bool any = false;
        for (std::size_t cmask = 1; cmask < cspan; ++cmask) {
            if (std::popcount(cmask) != k) continue;
            const int c = std::bit_width(cmask) - 1;
            const std::size_t crest = cmask & ~(std::size_t{1} << c);
            for (std::size_t rmask = 1; rmask < rspan; ++rmask) {
                if (std::popcount(rmask) != k) continue;
                Poly acc;
                int pos = 0;
                for (int i = 0; i < rows; ++i) {
                    if (!(rmask >> i & 1)) continue;
                    const Poly& entry = m.at(i, c);
                    if (!entry.is_zero()) {
                        const Poly& sub = prev[(rmask & ~(std::size_t{1} << i)) * cspan + crest];
                        if (!sub.is_zero()) {
                            const Poly term = entry * sub;
                            acc = (pos + k - 1) % 2 ? acc - term : acc + term;
                        }
                    }
                    ++pos;
                }
                if (!acc.is_zero()) {
                    any = true;
                    if (g.is_zero())
                        g = acc;
                    else if (!g.is_constant())
                        g = poly_gcd(g, acc);
                }
                cur[rmask * cspan + cmask] = std::move(acc);
            }
        }
        if (!any) break; // every k x k minor vanishes: the rank is k - 1
        divisors.push_back(g.monic());
        prev = std::move(cur);
    }
    return divisors;
}

} // namespace

std::vector<Poly> smith_form(const PolyMatrix& a) {
    const std::vector<Poly> d = determinantal_divisors(a);
    std::vector<Poly> factors;
    Poly prev = Poly::one();
    for (const Poly& dk : d) {
        factors.push_back(exact_div(dk, prev).monic());
        prev = dk;
    }
    // Consecutive minor gcds divide each other, so the quotients line up into
    // the invariant factor chain; verify it anyway.
    for (std::size_t k = 1; k < factors.size(); ++k)
        check_internal(divmod(factors[k], factors[k - 1]).remainder.is_zero(),
                       "smith form divisibility chain broken");
    return factors;
}

} // namespace pencils
