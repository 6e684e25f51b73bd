#include "isotor/ecoracle.hpp"

#include "isotor/numtheory.hpp"

#include <stdexcept>

namespace isotor {

Int CurveSpec::discriminant() const {
    Int b2 = Int(a1) * a1 + 4 * a2;
    Int b4 = 2 * Int(a4) + Int(a1) * a3;
    Int b6 = Int(a3) * a3 + 4 * a6;
    Int b8 = Int(a1) * a1 * a6 + 4 * Int(a2) * a6 - Int(a1) * a3 * a4 + Int(a2) * a3 * a3 -
             Int(a4) * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

CurveSpec conductor49_curve() { return CurveSpec{1, -1, 0, -2, -1, "49a"}; }

long curve_aq(const CurveSpec& curve, long q) {
    if (!is_prime(q)) throw std::invalid_argument("curve_aq: q must be prime");
    if (curve.discriminant() % q == 0)
        throw std::invalid_argument("curve_aq: bad reduction prime");

    long count = 0; // affine points
    if (q == 2) {
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                long lhs = y * y + curve.a1 * x * y + curve.a3 * y;
                long rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
                if (mod_reduce(lhs - rhs, 2) == 0) ++count;
            }
    } else {
        // Complete the square: solutions in y correspond to square roots of
        // D(x) = (a1 x + a3)^2 + 4 f(x).
        for (long x = 0; x < q; ++x) {
            Int lin = Int(curve.a1) * x + curve.a3;
            Int f = ((Int(x) + curve.a2) * x + curve.a4) * x + curve.a6;
            Int D = lin * lin + 4 * f;
            count += 1 + mpz_legendre(D.get_mpz_t(), Int(q).get_mpz_t());
        }
    }
    long aq = q + 1 - (count + 1);
    if (static_cast<long long>(aq) * aq > 4LL * q)
        throw std::logic_error("curve_aq: Hasse bound violated");
    return aq;
}

UniSeriesQ coefficient_series(const CurveSpec& curve, long precision, long level_tag) {
    if (precision < 1) throw std::invalid_argument("coefficient_series: precision must be >= 1");
    UniSeriesQ out(level_tag, precision, 2);
    std::vector<Rat> a(precision + 1, Rat(0));
    a[1] = 1;
    Int disc = curve.discriminant();
    for (long q : primes_up_to(precision)) {
        bool bad = disc % q == 0;
        Rat aq = bad ? Rat(0) : Rat(curve_aq(curve, q));
        // prime powers
        std::vector<Rat> pw; // a_{q^r}, r = 0, 1, ...
        pw.push_back(Rat(1));
        pw.push_back(aq);
        for (long qe = q * q; qe <= precision; qe *= q) {
            if (bad) pw.push_back(pw.back() * aq);
            else pw.push_back(aq * pw[pw.size() - 1] - Rat(q) * pw[pw.size() - 2]);
        }
        long qe = q;
        for (std::size_t r = 1; r < pw.size(); ++r, qe *= q) a[qe] = pw[r];
    }
    // multiplicativity across coprime prime powers
    for (long m = 2; m <= precision; ++m) {
        long n = m, q = 2;
        while (q * q <= n && n % q != 0) ++q;
        if (q * q > n) continue; // m prime, already set
        long qe = 1;
        while (n % q == 0) { n /= q; qe *= q; }
        if (n > 1) a[m] = a[qe] * a[n];
    }
    for (long m = 1; m <= precision; ++m)
        if (a[m] != 0) out.set(m, a[m]);
    return out;
}

} // namespace isotor
