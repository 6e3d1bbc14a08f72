#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pencils/scalar.hpp"

namespace pencils {

// Univariate polynomial over Q(i), coefficients lowest degree first.
// Invariant: empty coefficient vector iff the polynomial is zero; otherwise the
// leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(Scalar constant);
    Poly(std::initializer_list<Scalar> coeffs_low_first);
    static Poly from_coeffs(std::vector<Scalar> coeffs_low_first);
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Scalar(1)); }
    static Poly lambda(); // the variable itself

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of a nonzero polynomial. The zero polynomial has no degree; callers
    // branch on is_zero() first (checked).
    int degree() const;
    const Scalar& coeff(int k) const; // 0 for k beyond the stored range
    const Scalar& lead() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& x) const;
    Poly derivative() const;
    Poly monic() const; // nonzero input

    // Text form, highest degree first: "1*l^2+(-1/2)". Constants print bare.
    std::string str() const;

private:
    std::vector<Scalar> c_;
    void normalize();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Scalar& s, const Poly& a);
bool operator==(const Poly& a, const Poly& b);
bool operator!=(const Poly& a, const Poly& b);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision divmod(const Poly& num, const Poly& den); // den nonzero
Poly exact_div(const Poly& num, const Poly& den);      // checked zero remainder
Poly pow(const Poly& base, int e);

// Monic gcd; inputs not both zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Largest e with g^e | p, for nonzero p and nonconstant g.
int multiplicity(const Poly& p, const Poly& g);

// Monic, squarefree, pairwise coprime g_1..g_k such that every root of every
// input is a root of exactly one g_j. Inputs nonzero; constants contribute
// nothing. Output sorted by (degree, text) for determinism.
std::vector<Poly> gcd_free_basis(const std::vector<Poly>& ps);

// Order used for deterministic class listings.
bool poly_order_less(const Poly& a, const Poly& b);

} // namespace pencils
