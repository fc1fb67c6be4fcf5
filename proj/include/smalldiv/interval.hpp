#pragma once

#include "smalldiv/xreal.hpp"

namespace smalldiv {

/// Closed interval [lo, hi] with outward rounding: every operation rounds the
/// lower endpoint down and the upper endpoint up, so the result encloses the
/// exact image of the operand intervals.
class XInterval {
public:
    XInterval(XReal lo, XReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (!(lo_ <= hi_)) throw domain_error("XInterval: lo > hi");
    }

    /// Degenerate interval [x, x].
    static XInterval point(const XReal& x) { return XInterval(x, x); }

    /// [x, x] widened outward by `ulps` units in the last place on each side.
    static XInterval outward(const XReal& x, unsigned long ulps = 2) {
        XReal lo(x), hi(x);
        for (unsigned long i = 0; i < ulps; ++i) {
            mpfr_nextbelow(lo.raw());
            mpfr_nextabove(hi.raw());
        }
        return XInterval(std::move(lo), std::move(hi));
    }

    static XInterval zero(mpfr_prec_t prec) { return point(XReal(prec)); }

    const XReal& lo() const { return lo_; }
    const XReal& hi() const { return hi_; }

    XReal mid() const {
        XReal m = lo_ + hi_;
        mpfr_div_ui(m.raw(), m.raw(), 2, MPFR_RNDN);
        return m;
    }
    XReal width() const {
        XReal w(lo_.prec() > hi_.prec() ? lo_.prec() : hi_.prec());
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w;
    }
    bool contains(const XReal& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const XInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    friend XInterval operator+(const XInterval& a, const XInterval& b) {
        XReal lo(prec2(a, b)), hi(prec2(a, b));
        mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return XInterval(std::move(lo), std::move(hi));
    }
    friend XInterval operator-(const XInterval& a, const XInterval& b) {
        XReal lo(prec2(a, b)), hi(prec2(a, b));
        mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        return XInterval(std::move(lo), std::move(hi));
    }
    friend XInterval operator-(const XInterval& a) {
        XReal lo(a.lo_.prec()), hi(a.hi_.prec());
        mpfr_neg(lo.raw(), a.hi_.raw(), MPFR_RNDD);
        mpfr_neg(hi.raw(), a.lo_.raw(), MPFR_RNDU);
        return XInterval(std::move(lo), std::move(hi));
    }
    friend XInterval operator*(const XInterval& a, const XInterval& b);
    friend XInterval operator/(const XInterval& a, const XInterval& b);

    XInterval& operator+=(const XInterval& b) { *this = *this + b; return *this; }
    XInterval& operator*=(const XInterval& b) { *this = *this * b; return *this; }

private:
    static mpfr_prec_t prec2(const XInterval& a, const XInterval& b) {
        mpfr_prec_t p = a.lo_.prec();
        if (b.lo_.prec() > p) p = b.lo_.prec();
        return p;
    }
    XReal lo_, hi_;
};

/// Monotone increasing map applied to both endpoints with directed rounding.
XInterval exp(const XInterval& a);
XInterval sqrt(const XInterval& a);

/// k^t for integer k >= 1 and real t, as an enclosure.
XInterval pow_interval(long k, const XReal& t);

/// sin(pi * d) for d in [0, 1/2]; increasing on that range.
XInterval sin_pi_interval(const XInterval& d);

} // namespace smalldiv
