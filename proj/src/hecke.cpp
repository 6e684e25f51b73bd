#include "isotor/hecke.hpp"

#include "isotor/ecoracle.hpp"
#include "isotor/numtheory.hpp"

#include <stdexcept>

namespace isotor {

namespace {

void validate_table(const std::map<long, Rat>& table, long N, const char* which) {
    for (long a : units_mod(N)) {
        auto it = table.find(a);
        if (it == table.end())
            throw std::invalid_argument(std::string("twist table ") + which + " missing a unit entry");
        if (it->second == 0)
            throw std::invalid_argument(std::string("twist table ") + which + " has a zero scalar");
    }
    for (long a : units_mod(N))
        for (long b : units_mod(N))
            if (table.at(mod_reduce(a * b, N)) != table.at(a) * table.at(b))
                throw std::invalid_argument(std::string("twist table ") + which + " is not multiplicative");
}

} // namespace

TwistSystem make_cm_twist_system(TupleForm form) {
    std::map<long, Rat> ones;
    for (long a : units_mod(form.level)) ones[a] = 1;
    TwistSystem ts{std::move(form), ones, ones};
    return ts;
}

TwistSystem make_twist_system(TupleForm form, std::map<long, Rat> sigma1, std::map<long, Rat> sigma2) {
    validate_table(sigma1, form.level, "sigma1");
    validate_table(sigma2, form.level, "sigma2");
    return TwistSystem{std::move(form), std::move(sigma1), std::move(sigma2)};
}

TupleForm apply_T(const TwistSystem& ts, long n1, long n2) {
    const TupleForm& f = ts.form;
    const long N = f.level;
    if (n1 < 1 || n2 < 1 || std::gcd(n1, N) != 1 || std::gcd(n2, N) != 1)
        throw std::invalid_argument("apply_T: n_i must be positive and coprime to the level");
    validate_table(ts.sigma1, N, "sigma1");
    long big = std::max(n1, n2);
    long out_prec = f.precision / big;
    if (out_prec < 1) throw std::invalid_argument("apply_T: precision exhausted");

    TupleForm out(N, out_prec, f.weight1, f.weight2);
    std::map<long, BiSeries> parts;
    for (long m1 = 1; m1 <= out_prec; ++m1) {
        if (std::gcd(m1, N) != 1) continue;
        for (long m2 = 1; m2 <= out_prec; ++m2) {
            if (std::gcd(m2, N) != 1) continue;
            Rat d(0);
            for (long a1 : divisors(std::gcd(m1, n1))) {
                for (long a2 : divisors(std::gcd(m2, n2))) {
                    long i1 = m1 * n1 / (a1 * a1);
                    long i2 = m2 * n2 / (a2 * a2);
                    Rat c = f.coeff(i1, i2);
                    if (c == 0) continue;
                    Rat w(1);
                    for (long e = 1; e < f.weight1; ++e) w *= a1;
                    for (long e = 1; e < f.weight2; ++e) w *= a2;
                    long arg = mod_reduce(a1 * inv_mod(a2, N), N);
                    d += w * ts.sigma1.at(arg) * c;
                }
            }
            if (d == 0) continue;
            long eps = mod_reduce(-m2 * inv_mod(m1, N), N);
            auto it = parts.find(eps);
            if (it == parts.end())
                it = parts.emplace(eps, BiSeries(N, out_prec, f.weight1, f.weight2)).first;
            it->second.set(m1, m2, d);
        }
    }
    for (auto& [eps, s] : parts) out.set_component(eps, std::move(s));
    return out;
}

TupleForm diamond(const TwistSystem& ts, long a) {
    const long N = ts.form.level;
    if (!is_unit_mod(a, N)) throw std::invalid_argument("diamond: a must be a unit mod N");
    validate_table(ts.sigma2, N, "sigma2");
    // (<a> f)_eps = f_{a^2 eps} slashed by (1, sigma_a); the slash moves the
    // support pattern back from a^2 eps to eps, so on a twist-closed form the
    // component at eps ends up being sigma2(a) times the original one.
    return tuple_scale(ts.sigma2.at(mod_reduce(a, N)), ts.form);
}

EigenData eigen_extract(const TupleForm& f) {
    const long N = f.level;
    Rat c11 = f.coeff(1, 1);
    if (c11 == 0)
        throw std::domain_error("eigen_extract: c_{1,1} = 0, the form cannot be normalized");
    EigenData out;
    for (long n1 = 1; n1 <= f.precision; ++n1) {
        if (std::gcd(n1, N) != 1) continue;
        for (long n2 = 1; n2 <= f.precision; ++n2) {
            if (std::gcd(n2, N) != 1) continue;
            out.lambda[{n1, n2}] = f.coeff(n1, n2) / c11;
        }
    }
    return out;
}

EigenCertificate verify_eigenform(const TupleForm& f, const QuadraticCharacter& chi) {
    const long N = f.level;
    const long M = f.precision;
    if (chi.modulus() != N)
        throw std::invalid_argument("verify_eigenform: character modulus must equal the level");
    BiSeries sigma = sum_components(f);
    Rat c11 = sigma.coeff(1, 1);
    if (c11 == 0)
        throw std::domain_error("verify_eigenform: c_{1,1} = 0, the form cannot be normalized");

    // Rank-1 test through the first row and column.
    for (const auto& [mm, c] : sigma.coeffs)
        if (c * c11 != sigma.coeff(mm.first, 1) * sigma.coeff(1, mm.second))
            throw std::domain_error("verify_eigenform: coefficient matrix has rank > 1, not a pure tensor");

    EigenCertificate cert;
    cert.factor1 = UniSeriesQ(N, M, f.weight1);
    cert.factor2 = UniSeriesQ(N, M, f.weight2);
    for (long m = 1; m <= M; ++m) {
        if (std::gcd(m, N) != 1) continue;
        cert.factor1.set(m, sigma.coeff(m, 1) / c11);
        cert.factor2.set(m, sigma.coeff(1, m) / c11);
    }

    cert.ok = true;
    auto check_sequence = [&](const UniSeriesQ& g, long weight) {
        // multiplicativity at every coprime pair of coprime-to-N indices
        for (long m = 2; m <= M && cert.ok; ++m) {
            if (std::gcd(m, N) != 1) continue;
            for (long n = m; n <= M / m; ++n) {
                if (std::gcd(n, N) != 1 || std::gcd(m, n) != 1) continue;
                cert.mult_checked.emplace_back(m, n);
                if (g.coeff(m * n) != g.coeff(m) * g.coeff(n)) {
                    cert.ok = false;
                    cert.failure = "multiplicativity fails at (" + std::to_string(m) + "," +
                                   std::to_string(n) + ")";
                    break;
                }
            }
        }
        // prime power recursion for q not dividing N
        Rat qpow;
        for (long q : primes_up_to(M)) {
            if (!cert.ok) break;
            if (N % q == 0) continue;
            qpow = 1;
            for (long e = 1; e < weight; ++e) qpow *= q;
            long prev2 = 1, prev = q; // q^{r-1}, q^r
            while (prev <= M / q) {
                long cur = prev * q;
                cert.recursion_checked.emplace_back(q, cur);
                Rat expect = g.coeff(q) * g.coeff(prev) - Rat(chi(q)) * qpow * g.coeff(prev2);
                if (g.coeff(cur) != expect) {
                    cert.ok = false;
                    cert.failure = "prime power recursion fails at q^r = " + std::to_string(cur);
                    break;
                }
                prev2 = prev;
                prev = cur;
            }
        }
    };
    check_sequence(cert.factor1, f.weight1);
    if (cert.ok) check_sequence(cert.factor2, f.weight2);
    return cert;
}

KernelScan kernel_membership(const TupleForm& f, long eps) {
    const long N = f.level;
    const long M = f.precision;
    if (!is_unit_mod(eps, N)) throw std::invalid_argument("kernel_membership: eps not a unit");
    KernelScan scan;
    scan.bound = M;
    scan.passes = true;
    for (long n1 = 1; n1 <= M; ++n1) {
        if (std::gcd(n1, N) != 1) continue;
        long n2r = mod_reduce(-eps * n1, N);
        for (long n2 = n2r == 0 ? N : n2r; n2 <= M; n2 += N) {
            if (std::gcd(n2, N) != 1) continue;
            for (long m1 = 1; m1 <= M / n1; ++m1) {
                if (std::gcd(m1, N) != 1 || std::gcd(m1, n1) != 1) continue;
                for (long m2 = 1; m2 <= M / n2; ++m2) {
                    if (std::gcd(m2, N) != 1 || std::gcd(m2, n2) != 1) continue;
                    if (mod_reduce(n1 * m1 - n2 * m2, N) != 0) continue;
                    if (f.coeff(n1 * m1, n2 * m2) != 0) {
                        scan.passes = false;
                        scan.witness = {n1, n2, m1, m2};
                        return scan;
                    }
                }
            }
        }
    }
    return scan;
}

CmDetection cm_detect(const UniSeriesQ& f1, long p) {
    CmDetection out;
    out.bound = f1.precision;
    QuadraticCharacter chi = QuadraticCharacter::legendre_char(p);
    for (const auto& [m, c] : f1.coeffs) {
        (void)c;
        if (m % p == 0) continue;
        if (chi(m) != 1) return out; // support hits a non-residue: no CM character found
    }
    out.chi = chi;
    return out;
}

HSubgroup h_subgroup(const TupleForm& f) {
    const long N = f.level;
    HSubgroup out;
    for (long eps : units_mod(N))
        if (!f.component(mod_reduce(-eps, N)).is_zero()) out.elements.insert(eps);
    out.closed = true;
    for (long x : out.elements)
        for (long y : out.elements)
            if (!out.elements.count(mod_reduce(x * y, N))) out.closed = false;
    out.quotient_exponent_le_2 = true;
    if (!out.elements.empty()) {
        for (long u : units_mod(N))
            if (!out.elements.count(mod_reduce(u * u, N))) out.quotient_exponent_le_2 = false;
    }
    return out;
}

TwistSystem g7_lift(long precision) {
    UniSeriesQ f = coefficient_series(conductor49_curve(), precision);
    TupleForm lift = split_components(tensor(f, f));
    return make_cm_twist_system(std::move(lift));
}

} // namespace isotor
