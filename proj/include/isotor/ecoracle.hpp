#ifndef ISOTOR_ECORACLE_HPP
#define ISOTOR_ECORACLE_HPP

#include "isotor/series.hpp"

namespace isotor {

/// Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct CurveSpec {
    long a1, a2, a3, a4, a6;
    std::string label;

    Int discriminant() const;
};

/// The fixed conductor-49 model y^2 + x y = x^3 - x^2 - 2x - 1.
CurveSpec conductor49_curve();

/// a_q = q + 1 - #E(F_q) by exhaustive counting; Hasse bound enforced.
long curve_aq(const CurveSpec& curve, long q);

/// Multiplicative extension of the prime coefficients: a_1 = 1, Hecke
/// recursion at good prime powers, a_{q^r} = a_q^r at bad primes (a_q = 0 for
/// the additive prime 7 of the conductor-49 model). Level tag fixes the
/// q = e^{2 pi i z / level} convention.
UniSeriesQ coefficient_series(const CurveSpec& curve, long precision, long level_tag = 7);

} // namespace isotor

#endif
