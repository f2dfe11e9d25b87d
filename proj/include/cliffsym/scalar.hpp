#pragma once

#include <gmpxx.h>

#include <string>

namespace cliffsym {

using Rational = mpq_class;

/// mpq_class(n, d) does not reduce; every Rational in the engine is kept
/// canonical, so construct fractions through this helper.
inline Rational make_ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact scalar: a rational, or a Gaussian rational a + b*i in complex mode.
/// All arithmetic is exact; there is no floating-point anywhere in the core.
struct Scalar {
    Rational re{0};
    Rational im{0};

    Scalar() = default;
    Scalar(long v) : re(v) {}
    Scalar(const Rational& r) : re(r) {}
    Scalar(const Rational& r, const Rational& i) : re(r), im(i) {}

    static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
    Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
};

std::string rational_to_string(const Rational& r);

/// Canonical text form: "1/2", "-3", "i", "-2/3*i", "(1+1/2*i)".
std::string scalar_to_string(const Scalar& s);

}  // namespace cliffsym
