#include "smalldiv/interval.hpp"

#include <algorithm>

namespace smalldiv {

XInterval operator*(const XInterval& a, const XInterval& b) {
    mpfr_prec_t p = std::max(a.lo().prec(), b.lo().prec());
    // Sign-case analysis keeps this to two multiplications in the common
    // (sign-definite) cases and four in the mixed case.
    auto mul = [&](const XReal& x, const XReal& y, mpfr_rnd_t rnd) {
        XReal r(p);
        mpfr_mul(r.raw(), x.raw(), y.raw(), rnd);
        return r;
    };
    const XReal &al = a.lo(), &ah = a.hi(), &bl = b.lo(), &bh = b.hi();
    if (al.sign() >= 0 && bl.sign() >= 0)
        return XInterval(mul(al, bl, MPFR_RNDD), mul(ah, bh, MPFR_RNDU));
    if (ah.sign() <= 0 && bh.sign() <= 0)
        return XInterval(mul(ah, bh, MPFR_RNDD), mul(al, bl, MPFR_RNDU));
    if (al.sign() >= 0 && bh.sign() <= 0)
        return XInterval(mul(ah, bl, MPFR_RNDD), mul(al, bh, MPFR_RNDU));
    if (ah.sign() <= 0 && bl.sign() >= 0)
        return XInterval(mul(al, bh, MPFR_RNDD), mul(ah, bl, MPFR_RNDU));
    XReal lo = min(mul(al, bh, MPFR_RNDD), mul(ah, bl, MPFR_RNDD));
    XReal hi = max(mul(al, bl, MPFR_RNDU), mul(ah, bh, MPFR_RNDU));
    return XInterval(std::move(lo), std::move(hi));
}

XInterval operator/(const XInterval& a, const XInterval& b) {
    if (b.contains_zero()) throw domain_error("XInterval division by interval containing zero");
    mpfr_prec_t p = std::max(a.lo().prec(), b.lo().prec());
    auto div = [&](const XReal& x, const XReal& y, mpfr_rnd_t rnd) {
        XReal r(p);
        mpfr_div(r.raw(), x.raw(), y.raw(), rnd);
        return r;
    };
    const XReal &al = a.lo(), &ah = a.hi(), &bl = b.lo(), &bh = b.hi();
    if (bl.sign() > 0) {
        if (al.sign() >= 0) return XInterval(div(al, bh, MPFR_RNDD), div(ah, bl, MPFR_RNDU));
        if (ah.sign() <= 0) return XInterval(div(al, bl, MPFR_RNDD), div(ah, bh, MPFR_RNDU));
        return XInterval(div(al, bl, MPFR_RNDD), div(ah, bl, MPFR_RNDU));
    }
    // bh < 0
    if (al.sign() >= 0) return XInterval(div(ah, bh, MPFR_RNDD), div(al, bl, MPFR_RNDU));
    if (ah.sign() <= 0) return XInterval(div(ah, bl, MPFR_RNDD), div(al, bh, MPFR_RNDU));
    return XInterval(div(ah, bh, MPFR_RNDD), div(al, bh, MPFR_RNDU));
}

XInterval exp(const XInterval& a) {
    XReal lo(a.lo().prec()), hi(a.hi().prec());
    mpfr_exp(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return XInterval(std::move(lo), std::move(hi));
}

XInterval sqrt(const XInterval& a) {
    if (a.lo().sign() < 0) throw domain_error("XInterval sqrt of interval with negative part");
    XReal lo(a.lo().prec()), hi(a.hi().prec());
    mpfr_sqrt(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return XInterval(std::move(lo), std::move(hi));
}

XInterval pow_interval(long k, const XReal& t) {
    if (k < 1) throw domain_error("pow_interval: base must be >= 1");
    XReal lo(t.prec()), hi(t.prec());
    XReal base(k, t.prec());
    mpfr_pow(lo.raw(), base.raw(), t.raw(), MPFR_RNDD);
    mpfr_pow(hi.raw(), base.raw(), t.raw(), MPFR_RNDU);
    return XInterval(std::move(lo), std::move(hi));
}

XInterval sin_pi_interval(const XInterval& d) {
    if (d.lo().sign() < 0 || d.hi() > 0.5)
        throw domain_error("sin_pi_interval: argument must lie in [0, 1/2]");
    mpfr_prec_t p = d.lo().prec();
    // pi rounded both ways; sin(x) rounded both ways.  sin is increasing and
    // nonnegative here, so endpoint monotonicity gives the enclosure.
    XReal pi_lo(p), pi_hi(p), lo(p), hi(p);
    mpfr_const_pi(pi_lo.raw(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.raw(), MPFR_RNDU);
    mpfr_mul(lo.raw(), d.lo().raw(), pi_lo.raw(), MPFR_RNDD);
    mpfr_sin(lo.raw(), lo.raw(), MPFR_RNDD);
    if (lo.sign() < 0) mpfr_set_zero(lo.raw(), 1);
    if (mpfr_cmp_d(d.hi().raw(), 0.4999999) >= 0) {
        // the rounded-up argument may cross pi/2 where sin turns decreasing;
        // 1 is always a valid upper bound
        mpfr_set_ui(hi.raw(), 1, MPFR_RNDU);
    } else {
        mpfr_mul(hi.raw(), d.hi().raw(), pi_hi.raw(), MPFR_RNDU);
        mpfr_sin(hi.raw(), hi.raw(), MPFR_RNDU);
    }
    return XInterval(std::move(lo), std::move(hi));
}

} // namespace smalldiv
