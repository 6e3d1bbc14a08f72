#include "pencils/poly.hpp"

#include <algorithm>
#include <utility>

#include "pencils/errors.hpp"

namespace pencils {

namespace {
const Scalar kZero{};
} // namespace

Poly::Poly(Scalar constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Scalar> coeffs_low_first) : c_(coeffs_low_first) { normalize(); }

Poly Poly::from_coeffs(std::vector<Scalar> coeffs_low_first) {
    Poly p;
    p.c_ = std::move(coeffs_low_first);
    p.normalize();
    return p;
}

Poly Poly::lambda() { return Poly{Scalar(0), Scalar(1)}; }

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::degree() const {
    check_internal(!c_.empty(), "degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

const Scalar& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Scalar& Poly::lead() const {
    check_internal(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * c_[k]);
    return from_coeffs(std::move(d));
}

Poly Poly::monic() const {
    check_internal(!is_zero(), "monic of zero polynomial");
    const Scalar inv = Scalar(1) / lead();
    return inv * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    std::vector<Scalar> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = -a.coeffs()[k];
    return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
    return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& a) {
    std::vector<Scalar> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * a.coeffs()[k];
    return Poly::from_coeffs(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs().size() != b.coeffs().size()) return false;
    for (std::size_t k = 0; k < a.coeffs().size(); ++k)
        if (a.coeffs()[k] != b.coeffs()[k]) return false;
    return true;
}

bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

PolyDivision divmod(const Poly& num, const Poly& den) {
    require(!den.is_zero(), "polynomial division by zero");
    PolyDivision out;
    out.remainder = num;
    if (num.is_zero() || num.degree() < den.degree()) return out;
    std::vector<Scalar> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
    std::vector<Scalar> r = num.coeffs();
    const int dd = den.degree();
    for (int k = static_cast<int>(r.size()) - 1 - dd; k >= 0; --k) {
        const Scalar f = r[static_cast<std::size_t>(k + dd)] / den.lead();
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k + j)] = r[static_cast<std::size_t>(k + j)] - f * den.coeff(j);
    }
    out.quotient = Poly::from_coeffs(std::move(q));
    out.remainder = Poly::from_coeffs(std::move(r));
    return out;
}

Poly exact_div(const Poly& num, const Poly& den) {
    PolyDivision d = divmod(num, den);
    check_internal(d.remainder.is_zero(), "inexact polynomial division");
    return d.quotient;
}

Poly pow(const Poly& base, int e) {
    check_internal(e >= 0, "negative polynomial power");
    Poly acc = Poly::one();
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_internal(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = y;
        y = r.is_zero() ? r : r.monic(); // renormalize to tame coefficient growth
    }
    return x.monic();
}

int multiplicity(const Poly& p, const Poly& g) {
    check_internal(!p.is_zero(), "multiplicity in zero polynomial");
    check_internal(!g.is_constant(), "multiplicity of constant divisor");
    int e = 0;
    Poly rest = p;
    while (true) {
        PolyDivision d = divmod(rest, g);
        if (!d.remainder.is_zero()) break;
        rest = d.quotient;
        ++e;
    }
    return e;
}

bool poly_order_less(const Poly& a, const Poly& b) {
    const int da = a.is_zero() ? -1 : a.degree();
    const int db = b.is_zero() ? -1 : b.degree();
    if (da != db) return da < db;
    for (int k = da; k >= 0; --k) {
        const int c = compare_for_order(a.coeff(k), b.coeff(k));
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<Poly> gcd_free_basis(const std::vector<Poly>& ps) {
    std::vector<Poly> basis;
    auto insert = [&basis](Poly f) {
        // Keep the working set pairwise coprime: split f against each member.
        std::vector<Poly> queue{std::move(f)};
        while (!queue.empty()) {
            Poly cur = queue.back();
            queue.pop_back();
            if (cur.is_constant()) continue;
            bool split = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const Poly g = poly_gcd(cur, basis[k]);
                if (g.is_constant()) continue;
                if (g != basis[k]) {
                    // Refine the existing member into (g, basis[k]/g).
                    Poly rest = exact_div(basis[k], g);
                    basis[k] = g;
                    basis.push_back(rest.monic());
                }
                queue.push_back(exact_div(cur, g));
                split = true;
                break;
            }
            if (!split) basis.push_back(cur.monic());
        }
    };

    for (const Poly& p : ps) {
        require(!p.is_zero(), "gcd_free_basis input polynomial is zero");
        if (p.is_constant()) continue;
        // Squarefree decomposition p = c * prod a_i^i (characteristic 0), with
        // the a_i squarefree and pairwise coprime. Inserting every a_i keeps
        // irreducibles of different multiplicity in different members, so each
        // input is a constant times a product of powers of basis members.
        Poly g = poly_gcd(p, p.derivative());
        Poly w = exact_div(p, g);
        while (!w.is_constant()) {
            const Poly y = poly_gcd(w, g);
            const Poly a = exact_div(w, y);
            if (!a.is_constant()) insert(a.monic());
            w = y;
            g = exact_div(g, y);
        }
    }
    std::sort(basis.begin(), basis.end(), poly_order_less);
    return basis;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    auto coeff_text = [](const Scalar& s) {
        const bool bare = s.is_real() && s.re >= 0;
        return bare ? s.str() : "(" + s.str() + ")";
    };
    if (is_constant()) return coeff_text(c_[0]);
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& s = coeff(k);
        if (s.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += coeff_text(s);
        } else if (k == 1) {
            out += coeff_text(s) + "*l";
        } else {
            out += coeff_text(s) + "*l^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace pencils
