#include "smalldiv/special.hpp"

#include <cmath>
#include <utility>

namespace smalldiv {

namespace {

// B_2, B_4, ..., B_16 as exact fractions.
constexpr long kBernoulliNum[] = {1, -1, 1, -1, 5, -691, 7, -3617};
constexpr long kBernoulliDen[] = {6, 30, 42, 30, 66, 2730, 6, 510};
constexpr int kBernoulliCount = 8;
// |B_18| = 43867/798, used for the remainder envelope.
constexpr long kBernoulliNextNum = 43867;
constexpr long kBernoulliNextDen = 798;

XInterval bernoulli_interval(int k, mpfr_prec_t p) {
    XReal lo(p), hi(p);
    mpfr_set_si(lo.raw(), kBernoulliNum[k], MPFR_RNDN);
    mpfr_set(hi.raw(), lo.raw(), MPFR_RNDN);
    mpfr_div_si(lo.raw(), lo.raw(), kBernoulliDen[k], MPFR_RNDD);
    mpfr_div_si(hi.raw(), hi.raw(), kBernoulliDen[k], MPFR_RNDU);
    return XInterval(std::move(lo), std::move(hi));
}

} // namespace

XInterval hurwitz_zeta2(const XReal& b, const PrecisionContext& ctx) {
    if (b < 1.0) throw domain_error("hurwitz_zeta2: requires b >= 1");
    const mpfr_prec_t p = ctx.bits();

    // Choose J so the Euler-Maclaurin remainder |B_18| (b+J)^{-19} falls below
    // 10^{-(digits+12)} zeta(2,b); zeta(2,b) >= 1/(b+1) handles the scale.
    long J = 256;
    {
        double need = (ctx.digits + 14) / 19.0;
        double j_est = std::pow(10.0, need);
        while (static_cast<double>(J) < j_est) J *= 2;
    }

    XInterval sum = XInterval::zero(p);
    XReal bj(p);
    for (long j = 0; j < J; ++j) {
        XReal lo(p), hi(p);
        mpfr_add_si(bj.raw(), b.raw(), j, MPFR_RNDD);
        mpfr_sqr(lo.raw(), bj.raw(), MPFR_RNDD);   // (b+j) >= 1 so RNDD on both is a lower bound
        mpfr_add_si(bj.raw(), b.raw(), j, MPFR_RNDU);
        mpfr_sqr(hi.raw(), bj.raw(), MPFR_RNDU);
        XReal tlo(p), thi(p);
        mpfr_ui_div(tlo.raw(), 1, hi.raw(), MPFR_RNDD);
        mpfr_ui_div(thi.raw(), 1, lo.raw(), MPFR_RNDU);
        sum += XInterval(std::move(tlo), std::move(thi));
    }

    // Tail from j = J:  1/(b+J) + (1/2)(b+J)^{-2} + sum_k B_2k (b+J)^{-(2k+1)},
    // remainder enclosed by +/- |B_18| (b+J)^{-19}.
    XReal a_lo(p), a_hi(p);
    mpfr_add_si(a_lo.raw(), b.raw(), J, MPFR_RNDD);
    mpfr_add_si(a_hi.raw(), b.raw(), J, MPFR_RNDU);
    XInterval a(a_lo, a_hi);
    XInterval inv_a = XInterval::point(XReal(1.0, p)) / a;
    XInterval inv_a2 = inv_a * inv_a;

    XInterval tail = inv_a;                                 // integral term
    XInterval half(XReal(0.5, p), XReal(0.5, p));
    tail += inv_a2 * half;                                  // f(J)/2
    XInterval apow = inv_a * inv_a2;                        // (b+J)^{-3}
    for (int k = 0; k < kBernoulliCount; ++k) {
        tail += bernoulli_interval(k, p) * apow;
        apow *= inv_a2;
    }
    // apow is now (b+J)^{-19}
    XReal env_hi(p);
    mpfr_mul_si(env_hi.raw(), apow.hi().raw(), kBernoulliNextNum, MPFR_RNDU);
    mpfr_div_si(env_hi.raw(), env_hi.raw(), kBernoulliNextDen, MPFR_RNDU);
    XReal env_lo = -env_hi;
    tail += XInterval(std::move(env_lo), std::move(env_hi));

    return sum + tail;
}

XReal zeta(const XReal& s, const PrecisionContext& ctx) {
    if (s <= 1.0) throw domain_error("zeta: requires s > 1");
    const mpfr_prec_t p = ctx.bits();
    // Euler-Maclaurin: sum_{k<=J} k^{-s} + J^{1-s}/(s-1) - J^{-s}/2
    //   + sum_m B_2m/(2m)! * (s)_{2m-1} J^{-s-2m+1}.
    double sd = s.to_double();
    long J = 64;
    {
        double need = (ctx.digits + 8) / (sd + 2.0 * kBernoulliCount + 1.0);
        double j_est = std::pow(10.0, need);
        while (static_cast<double>(J) < j_est && J < (1L << 24)) J *= 2;
    }
    XReal sum(p);
    XReal term(p), kk(p);
    XReal neg_s = -s;
    for (long k = 1; k <= J; ++k) {
        mpfr_set_si(kk.raw(), k, MPFR_RNDN);
        mpfr_pow(term.raw(), kk.raw(), neg_s.raw(), MPFR_RNDN);
        sum += term;
    }
    XReal Jx(J, p);
    XReal Jpow = pow(Jx, XReal(1.0, p) - s);                // J^{1-s}
    sum += Jpow / (s - XReal(1.0, p));
    XReal Jms = Jpow / Jx;                                  // J^{-s}
    sum -= Jms * XReal(0.5, p);
    // Bernoulli correction terms.
    XReal poch(p);
    mpfr_set(poch.raw(), s.raw(), MPFR_RNDN);               // (s)_1 = s
    XReal jfac = Jms / Jx;                                  // J^{-s-1}
    XReal fact(1.0, p);
    for (int m = 1; m <= kBernoulliCount; ++m) {
        // B_2m / (2m)! * (s)(s+1)...(s+2m-2) * J^{-s-2m+1}
        XReal b2m(p);
        mpfr_set_si(b2m.raw(), kBernoulliNum[m - 1], MPFR_RNDN);
        mpfr_div_si(b2m.raw(), b2m.raw(), kBernoulliDen[m - 1], MPFR_RNDN);
        fact = XReal(1.0, p);
        for (long i = 1; i <= 2 * m; ++i) mpfr_mul_si(fact.raw(), fact.raw(), i, MPFR_RNDN);
        sum += b2m / fact * poch * jfac;
        // advance pochhammer (s)_{2m-1} -> (s)_{2m+1} and J^{-s-2m+1} -> J^{-s-2m-1}
        XReal t1 = s + XReal(2 * m - 1, p);
        XReal t2 = s + XReal(2 * m, p);
        poch = poch * t1 * t2;
        jfac = jfac / (Jx * Jx);
    }
    return sum;
}

XReal polylog(const XReal& s, const XReal& z, const PrecisionContext& ctx) {
    const mpfr_prec_t p = ctx.bits();
    if (z.sign() < 0 || z > 1.0) throw domain_error("polylog: requires 0 <= z <= 1");
    if (z == XReal(1.0, p)) {
        if (s <= 1.0) throw domain_error("polylog: series diverges at z = 1 with s <= 1");
        return zeta(s, ctx);
    }
    if (z.is_zero()) return XReal(p);

    // Closed forms for the geometric cases.
    if (s.is_zero()) return z / (XReal(1.0, p) - z);
    if (s == XReal(-1.0, p)) {
        XReal om = XReal(1.0, p) - z;
        return z / (om * om);
    }

    // Direct series; for s < 0 the terms first grow up to k ~ -s / log(1/z).
    double k_peak = 1.0;
    if (s.sign() < 0) {
        double l = -std::log(z.to_double());
        if (l > 0) k_peak = -s.to_double() / l + 4.0;
    }
    XReal eps = ctx.eps(-2);
    XReal sum(p), zk(z), kk(p), kpow(p), term(p);
    XReal neg_s = -s;
    for (long k = 1; k < 100000000L; ++k) {
        if (k > 1) zk *= z;
        mpfr_set_si(kk.raw(), k, MPFR_RNDN);
        mpfr_pow(kpow.raw(), kk.raw(), neg_s.raw(), MPFR_RNDN);
        term = zk * kpow;
        sum += term;
        if (static_cast<double>(k) >= k_peak && abs(term) < eps * abs(sum)) break;
    }
    return sum;
}

XReal gamma_point(const XReal& x, const PrecisionContext& ctx) {
    if (x.sign() <= 0) throw domain_error("gamma_point: requires x > 0");
    XReal r(ctx.bits());
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

XInterval tail_gamma_bound(const XReal& x, const XReal& y) {
    if (!(x.sign() > 0) || !(y > x))
        throw domain_error("tail_gamma_bound: requires y > x > 0 (enlarge L)");
    const mpfr_prec_t p = std::max(x.prec(), y.prec());
    // (y/(y-x)) * y^x * e^{-y}, every factor rounded up.
    XReal d(p), f(p), yp(p), e(p);
    mpfr_sub(d.raw(), y.raw(), x.raw(), MPFR_RNDD);
    mpfr_div(f.raw(), y.raw(), d.raw(), MPFR_RNDU);
    mpfr_pow(yp.raw(), y.raw(), x.raw(), MPFR_RNDU);
    mpfr_neg(e.raw(), y.raw(), MPFR_RNDN);
    mpfr_exp(e.raw(), e.raw(), MPFR_RNDU);
    mpfr_mul(f.raw(), f.raw(), yp.raw(), MPFR_RNDU);
    mpfr_mul(f.raw(), f.raw(), e.raw(), MPFR_RNDU);
    return XInterval(XReal(p), std::move(f));
}

} // namespace smalldiv
