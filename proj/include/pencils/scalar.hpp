#pragma once

#include <gmpxx.h>

#include <string>

namespace pencils {

// Element of Q(i): exact complex number with rational real and imaginary parts.
// Both parts are kept canonical by mpq_class (reduced, positive denominator).
struct Scalar {
    mpq_class re;
    mpq_class im;

    Scalar() : re(0), im(0) {}
    Scalar(long r) : re(r), im(0) {} // NOLINT: implicit on purpose, mirrors numeric literals
    Scalar(const mpq_class& r) : re(r), im(0) {}
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long num, long den);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Scalar conj() const { return Scalar(re, -im); }
    mpq_class norm2() const { return re * re + im * im; } // |z|^2, exact

    double re_double() const { return re.get_d(); }
    double im_double() const { return im.get_d(); }

    // Text form: "p/q" (den 1 omitted) or "p/q+r/s*i" / "p/q-r/s*i".
    std::string str() const;
    static Scalar parse(const std::string& text);
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b); // throws PreconditionError on b == 0
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);

// Total order used only to fix deterministic output orderings.
int compare_for_order(const Scalar& a, const Scalar& b);

} // namespace pencils
