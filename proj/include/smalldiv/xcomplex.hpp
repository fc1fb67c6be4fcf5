#pragma once

#include "smalldiv/xreal.hpp"

namespace smalldiv {

/// Complex number with extended-precision components.
struct XComplex {
    XReal re, im;

    explicit XComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
    XComplex(XReal r, XReal i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return re.prec(); }

    friend XComplex operator+(const XComplex& a, const XComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend XComplex operator-(const XComplex& a, const XComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend XComplex operator*(const XComplex& a, const XComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend XComplex operator*(const XComplex& a, const XReal& s) {
        return {a.re * s, a.im * s};
    }
    XComplex& operator+=(const XComplex& b) {
        re += b.re;
        im += b.im;
        return *this;
    }

    XComplex conj() const { return {re, -im}; }

    XReal abs2() const { return re * re + im * im; }
    XReal abs() const { return sqrt(abs2()); }

    bool is_finite() const { return re.is_finite() && im.is_finite(); }
};

/// e^{2 pi i t} at the precision of t.
inline XComplex unit_phase(const XReal& t) {
    XReal a = two_pi(t.prec()) * t;
    XComplex z(t.prec());
    mpfr_sin_cos(z.im.raw(), z.re.raw(), a.raw(), MPFR_RNDN);
    return z;
}

/// a / b for complex b != 0.
inline XComplex cdiv(const XComplex& a, const XComplex& b) {
    XReal d = b.abs2();
    if (d.is_zero()) throw domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

} // namespace smalldiv
