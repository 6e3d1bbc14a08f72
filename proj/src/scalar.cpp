#include "pencils/scalar.hpp"

#include <cstddef>

#include "pencils/errors.hpp"

namespace pencils {

Scalar::Scalar(long num, long den) : re(num, den), im(0) {
    if (den == 0) throw PreconditionError("scalar with zero denominator");
    re.canonicalize();
}

Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re + b.re, a.im + b.im); }
Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re - b.re, a.im - b.im); }
Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require(!b.is_zero(), "division by zero scalar");
    const mpq_class n2 = b.norm2();
    const Scalar num = a * b.conj();
    return Scalar(num.re / n2, num.im / n2);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

int compare_for_order(const Scalar& a, const Scalar& b) {
    const int cr = cmp(a.re, b.re);
    if (cr != 0) return cr;
    return cmp(a.im, b.im);
}

namespace {

bool valid_rational_text(const std::string& s) {
    std::size_t pos = 0;
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') { ++pos; ++digits; }
    if (digits == 0) return false;
    if (pos == s.size()) return true;
    if (s[pos] != '/') return false;
    ++pos;
    digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') { ++pos; ++digits; }
    return digits > 0 && pos == s.size();
}

mpq_class parse_rational(const std::string& s, const std::string& whole) {
    if (!valid_rational_text(s))
        throw ParseError("bad rational '" + s + "' in scalar '" + whole + "'");
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in scalar '" + whole + "'");
    q.canonicalize();
    return q;
}

} // namespace

std::string Scalar::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im == 0) return rat(re);
    if (re == 0) return (im < 0 ? "-" : "") + rat(abs(im)) + "*i";
    const std::string sign = im < 0 ? "-" : "+";
    return rat(re) + sign + rat(abs(im)) + "*i";
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    std::string s = text;
    bool has_im = false;
    std::string im_part;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
        has_im = true;
        s.resize(s.size() - 2);
        // The separator is the first sign past position 0; rational text has no
        // interior signs, so this split is unambiguous.
        std::size_t sep = std::string::npos;
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (s[k] == '+' || s[k] == '-') { sep = k; break; }
        }
        if (sep == std::string::npos) {
            im_part = s;
            s.clear();
        } else {
            im_part = s[sep] == '+' ? s.substr(sep + 1) : s.substr(sep);
            s.resize(sep);
        }
    }
    Scalar out;
    out.re = s.empty() ? mpq_class(0) : parse_rational(s, text);
    out.im = has_im ? parse_rational(im_part, text) : mpq_class(0);
    return out;
}

} // namespace pencils
