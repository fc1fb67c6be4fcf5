#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "smalldiv/errors.hpp"

namespace smalldiv {

/// Extended-precision real number backed by MPFR.  Every value carries its own
/// precision; binary operations produce results at the wider of the two operand
/// precisions, rounded to nearest.  NaN/Inf are treated as error states and are
/// never produced by the library on valid inputs.
class XReal {
public:
    explicit XReal(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    XReal(double d, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    XReal(long i, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, i, MPFR_RNDN);
    }
    static XReal parse(const std::string& s, mpfr_prec_t prec) {
        XReal r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw domain_error("XReal::parse: cannot parse \"" + s + "\"");
        return r;
    }

    XReal(const XReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    XReal(XReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    XReal& operator=(const XReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    XReal& operator=(XReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~XReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits) const;

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend XReal operator+(const XReal& a, const XReal& b) { return bin(a, b, mpfr_add); }
    friend XReal operator-(const XReal& a, const XReal& b) { return bin(a, b, mpfr_sub); }
    friend XReal operator*(const XReal& a, const XReal& b) { return bin(a, b, mpfr_mul); }
    friend XReal operator/(const XReal& a, const XReal& b) { return bin(a, b, mpfr_div); }
    friend XReal operator-(const XReal& a) {
        XReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    XReal& operator+=(const XReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    XReal& operator-=(const XReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    XReal& operator*=(const XReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    XReal& operator/=(const XReal& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend XReal operator*(const XReal& a, long b) {
        XReal r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend XReal operator/(const XReal& a, long b) {
        XReal r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const XReal& a, const XReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const XReal& a, const XReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const XReal& a, const XReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const XReal& a, const XReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const XReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator<=(const XReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>(const XReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator>=(const XReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

private:
    static XReal bin(const XReal& a, const XReal& b,
                     int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
        XReal r(a.prec() > b.prec() ? a.prec() : b.prec());
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

inline XReal abs(const XReal& a) {
    XReal r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal sqrt(const XReal& a) {
    if (a.sign() < 0) throw domain_error("sqrt of negative value");
    XReal r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal exp(const XReal& a) {
    XReal r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal log(const XReal& a) {
    if (a.sign() <= 0) throw domain_error("log of non-positive value");
    XReal r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal sin(const XReal& a) {
    XReal r(a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal cos(const XReal& a) {
    XReal r(a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal cosh(const XReal& a) {
    XReal r(a.prec());
    mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal pow(const XReal& a, const XReal& b) {
    XReal r(a.prec() > b.prec() ? a.prec() : b.prec());
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline XReal floor(const XReal& a) {
    XReal r(a.prec());
    mpfr_floor(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal round_nearest(const XReal& a) {
    XReal r(a.prec());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline XReal min(const XReal& a, const XReal& b) { return a <= b ? a : b; }
inline XReal max(const XReal& a, const XReal& b) { return a >= b ? a : b; }

inline XReal pi(mpfr_prec_t prec) {
    XReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline XReal two_pi(mpfr_prec_t prec) {
    XReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    mpfr_mul_ui(r.raw(), r.raw(), 2, MPFR_RNDN);
    return r;
}

/// Decimal working precision shared by a whole computation.  Immutable.
/// The MPFR bit count carries ~8 decimal guard digits over the requested count
/// and is rounded up to whole limbs.
struct PrecisionContext {
    explicit PrecisionContext(int decimal_digits = 30) : digits(decimal_digits) {
        if (digits < 15) throw domain_error("PrecisionContext: digits must be >= 15");
    }

    int digits;

    mpfr_prec_t bits() const {
        auto needed = static_cast<mpfr_prec_t>((digits + 8) * 3.3219280948873623 + 1);
        mpfr_prec_t p = ((needed + 63) / 64) * 64;
        return p < 128 ? 128 : p;
    }

    XReal real(double d) const { return XReal(d, bits()); }
    XReal real(long i) const { return XReal(i, bits()); }
    XReal real(const std::string& s) const { return XReal::parse(s, bits()); }
    XReal zero() const { return XReal(bits()); }
    XReal pi() const { return smalldiv::pi(bits()); }
    XReal two_pi() const { return smalldiv::two_pi(bits()); }

    /// 10^(-digits+offset), the tolerance unit used throughout.
    XReal eps(int offset = 0) const {
        XReal r(bits());
        mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(digits - offset), MPFR_RNDN);
        mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
        return r;
    }
};

} // namespace smalldiv
