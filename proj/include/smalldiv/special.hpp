#pragma once

#include "smalldiv/interval.hpp"
#include "smalldiv/xreal.hpp"

namespace smalldiv {

/// Enclosure of the Hurwitz zeta value zeta(2, b) = sum_{j>=0} (b+j)^{-2}, b >= 1.
/// Finite part summed in interval arithmetic, tail by Euler-Maclaurin with an
/// enveloping Bernoulli remainder.  Relative width <= 10^(-digits+2).
XInterval hurwitz_zeta2(const XReal& b, const PrecisionContext& ctx);

/// Li_s(z) = sum_{k>=1} z^k / k^s for 0 <= z <= 1 (z = 1 requires s > 1).
/// Point value to relative accuracy 10^(-digits+2).
XReal polylog(const XReal& s, const XReal& z, const PrecisionContext& ctx);

/// Riemann zeta(s) for real s > 1 at context precision.
XReal zeta(const XReal& s, const PrecisionContext& ctx);

/// Gamma(x), x > 0.  Point value at working precision; not interval-rigorous.
XReal gamma_point(const XReal& x, const PrecisionContext& ctx);

/// Rigorous upper enclosure [0, (y/(y-x)) y^x e^{-y}] of int_y^inf u^x e^{-u} du,
/// valid for y > x > 0.
XInterval tail_gamma_bound(const XReal& x, const XReal& y);

} // namespace smalldiv
