#ifndef ISOTOR_NUMTHEORY_HPP
#define ISOTOR_NUMTHEORY_HPP

#include "isotor/rational.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace isotor {

inline bool is_prime(long n) {
    if (n < 2) return false;
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

/// Legendre symbol (a|p) for an odd prime p.
inline int legendre(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("legendre: modulus must be an odd prime >= 3");
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("legendre: modulus must be prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline int legendre(long a, long p) { return legendre(Int(a), Int(p)); }

inline long mod_reduce(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline long mul_mod(long a, long b, long n) {
    return static_cast<long>((static_cast<__int128>(a) * b) % n);
}

inline long inv_mod(long a, long n) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(mod_reduce(a, n)).get_mpz_t(), Int(n).get_mpz_t()) == 0)
        throw std::invalid_argument("inv_mod: not a unit");
    return r.get_si();
}

inline bool is_unit_mod(long a, long n) { return std::gcd(mod_reduce(a, n), n) == 1; }

inline std::vector<long> units_mod(long n) {
    std::vector<long> us;
    for (long a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) us.push_back(a);
    if (n == 1) us.push_back(0); // (Z/1)* is trivial
    return us;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<long> ps;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (long j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return ps;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace isotor

#endif
