#include "isotor/modgroup.hpp"

#include "isotor/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace isotor {

ModMatrix::ModMatrix(long N_, long a_, long b_, long c_, long d_) : N(N_) {
    if (N < 1) throw std::invalid_argument("ModMatrix: modulus must be positive");
    a = mod_reduce(a_, N);
    b = mod_reduce(b_, N);
    c = mod_reduce(c_, N);
    d = mod_reduce(d_, N);
}

long ModMatrix::det() const { return mod_reduce(a * d - b * c, N); }

ModMatrix ModMatrix::mul(const ModMatrix& o) const {
    if (N != o.N) throw std::invalid_argument("ModMatrix::mul: modulus mismatch");
    return ModMatrix(N, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

ModMatrix ModMatrix::inv_sl2() const {
    if (det() != 1 % N) throw std::invalid_argument("inv_sl2: determinant is not 1");
    return ModMatrix(N, d, -b, -c, a);
}

std::uint64_t ModMatrix::encode() const {
    std::uint64_t n = static_cast<std::uint64_t>(N);
    return ((static_cast<std::uint64_t>(a) * n + b) * n + c) * n + d;
}

ModMatrix ModMatrix::decode(long N, std::uint64_t code) {
    std::uint64_t n = static_cast<std::uint64_t>(N);
    long d = static_cast<long>(code % n); code /= n;
    long c = static_cast<long>(code % n); code /= n;
    long b = static_cast<long>(code % n); code /= n;
    long a = static_cast<long>(code);
    return ModMatrix(N, a, b, c, d);
}

ModMatrix tau(long N, long t) { return ModMatrix(N, 1, t, 0, 1); }

ModMatrix theta_eps(const ModMatrix& m, long eps) {
    if (!is_unit_mod(eps, m.N)) throw std::invalid_argument("theta_eps: eps not a unit");
    long ei = inv_mod(eps, m.N);
    return ModMatrix(m.N, m.a, ei * m.b, eps * m.c, m.d);
}

bool MatrixGroup::contains(const ModMatrix& m) const {
    return std::binary_search(elements.begin(), elements.end(), m.encode());
}

MatrixGroup enumerate_sl2(long N, long bound) {
    if (N < 2) throw std::invalid_argument("enumerate_sl2: N must be >= 2");
    if (N > bound) throw std::invalid_argument("enumerate_sl2: N exceeds the configured bound");
    MatrixGroup g;
    g.N = N;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d)
                    if (mod_reduce(a * d - b * c, N) == 1 % N)
                        g.elements.push_back(ModMatrix(N, a, b, c, d).encode());
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

MatrixGroup generated_subgroup(long N, const std::vector<ModMatrix>& gens) {
    // In a finite group the closure of a nonempty set under multiplication is
    // already a subgroup.
    std::unordered_set<std::uint64_t> seen;
    std::vector<ModMatrix> work;
    ModMatrix id(N, 1, 0, 0, 1);
    seen.insert(id.encode());
    work.push_back(id);
    while (!work.empty()) {
        ModMatrix x = work.back();
        work.pop_back();
        for (const ModMatrix& g : gens) {
            ModMatrix y = x.mul(g);
            if (seen.insert(y.encode()).second) work.push_back(y);
        }
    }
    MatrixGroup out;
    out.N = N;
    out.elements.assign(seen.begin(), seen.end());
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

MatrixGroup normal_closure(const MatrixGroup& G, const ModMatrix& g) {
    if (!G.contains(g)) throw std::invalid_argument("normal_closure: g is not an element of G");
    // The conjugate set of g is invariant under conjugation by G, so the
    // subgroup it generates is the smallest normal subgroup containing g.
    std::unordered_set<std::uint64_t> conj_codes;
    std::vector<ModMatrix> conjugates;
    for (std::uint64_t code : G.elements) {
        ModMatrix h = ModMatrix::decode(G.N, code);
        ModMatrix c = h.mul(g).mul(h.inv_sl2());
        if (conj_codes.insert(c.encode()).second) conjugates.push_back(c);
    }
    return generated_subgroup(G.N, conjugates);
}

MatrixGroup reduction_kernel(long N, long d, long bound) {
    if (d <= 1 || N % d != 0) throw std::invalid_argument("reduction_kernel: d must divide N, d > 1");
    long m = N / d;
    MatrixGroup full = enumerate_sl2(N, bound);
    MatrixGroup out;
    out.N = N;
    for (std::uint64_t code : full.elements) {
        ModMatrix x = ModMatrix::decode(N, code);
        bool one = (m == 1) || (mod_reduce(x.a - 1, m) == 0 && mod_reduce(x.b, m) == 0 &&
                                mod_reduce(x.c, m) == 0 && mod_reduce(x.d - 1, m) == 0);
        if (one) out.elements.push_back(code);
    }
    return out;
}

ModMatrix IntMatrix::reduce(long N) const {
    return ModMatrix(N, static_cast<long>(a % N), static_cast<long>(b % N),
                     static_cast<long>(c % N), static_cast<long>(d % N));
}

namespace {

// Representative of r mod n with the smallest absolute value, preferring the
// positive one on ties.
long long balanced_rep(long r, long n) {
    long x = mod_reduce(r, n);
    if (2 * x > n) return x - n;
    return x;
}

} // namespace

IntMatrix lift_sigma(long a, long N) {
    if (N < 1) throw std::invalid_argument("lift_sigma: bad modulus");
    if (!is_unit_mod(a, N)) throw std::invalid_argument("lift_sigma: a is not a unit mod N");
    if (N == 1) return IntMatrix{1, 0, 0, 1};
    long ai = inv_mod(a, N);
    long long alpha = balanced_rep(ai, N);
    // delta = a (mod N) is pinned mod N^2 by alpha * delta = 1 (mod N^2).
    long long n2 = static_cast<long long>(N) * N;
    long long alpha_mod = ((alpha % n2) + n2) % n2;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(static_cast<long>(alpha_mod)).get_mpz_t(),
                   Int(static_cast<long>(n2)).get_mpz_t()) == 0)
        throw std::logic_error("lift_sigma: alpha not invertible mod N^2");
    long long delta0 = inv.get_si(); // in [0, N^2)
    if (mod_reduce(static_cast<long>(delta0 % N), N) != mod_reduce(a, N))
        throw std::logic_error("lift_sigma: inconsistent congruence");
    long long delta = (2 * delta0 > n2) ? delta0 - n2 : delta0;
    long long k = (alpha * delta - 1) / n2;
    if (k == 0) return IntMatrix{alpha, 0, 0, delta};
    IntMatrix m{alpha, k * N, N, delta};
    if (m.det() != 1) throw std::logic_error("lift_sigma: completion failed");
    return m;
}

IntMatrix lift_sl2(const ModMatrix& m) {
    if (m.det() != 1 % m.N) throw std::invalid_argument("lift_sl2: not an SL2 element");
    long N = m.N;
    if (N == 1) return IntMatrix{1, 0, 0, 1};
    // Fix a bottom row congruent to (c, d) with gcd 1, then adjust the top row.
    long long c = 0, d = 0;
    bool found = false;
    for (long i = 0; i < 4 * N && !found; ++i)
        for (long j = 0; j < 4 * N && !found; ++j) {
            c = m.c + static_cast<long long>(i) * N;
            d = m.d + static_cast<long long>(j) * N;
            if (std::gcd(c, d) == 1) found = true;
        }
    if (!found) throw std::logic_error("lift_sl2: no coprime bottom row found");
    long long det0 = static_cast<long long>(m.a) * d - static_cast<long long>(m.b) * c;
    long long e = (det0 - 1) / N; // det0 = 1 (mod N)
    // Solve x d - y c = -e with extended gcd, then a += xN, b += yN.
    Int g, x0, y0;
    mpz_gcdext(g.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t(),
               Int(static_cast<long>(d)).get_mpz_t(), Int(static_cast<long>(-c)).get_mpz_t());
    Int xi = Int(static_cast<long>(-e)) * x0;
    Int yi = Int(static_cast<long>(-e)) * y0;
    long long x = xi.get_si();
    long long y = yi.get_si();
    IntMatrix out{m.a + x * N, m.b + y * N, c, d};
    if (out.det() != 1 || !(out.reduce(N) == m)) throw std::logic_error("lift_sl2: lift failed");
    return out;
}

std::vector<CosetRep> hecke_cosets(long n1, long n2, long N) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("hecke_cosets: n_i must be positive");
    if (std::gcd(n1, N) != 1 || std::gcd(n2, N) != 1)
        throw std::invalid_argument("hecke_cosets: n_i must be coprime to N");
    auto factor_reps = [N](long n) {
        std::vector<std::tuple<long, long, long, IntMatrix>> reps; // (a, b, d, matrix)
        for (long a : divisors(n)) {
            long d = n / a;
            IntMatrix sig = lift_sigma(mod_reduce(a, N), N);
            for (long b = 0; b < d; ++b) {
                IntMatrix upper{a, b * N, 0, d};
                reps.emplace_back(a, b, d, sig.mul(upper));
            }
        }
        return reps;
    };
    auto r1 = factor_reps(n1), r2 = factor_reps(n2);
    std::vector<CosetRep> out;
    out.reserve(r1.size() * r2.size());
    for (const auto& [a1, b1, d1, m1] : r1)
        for (const auto& [a2, b2, d2, m2] : r2)
            out.push_back(CosetRep{a1, b1, d1, a2, b2, d2, m1, m2});
    return out;
}

namespace {

// Left-reduce an integer matrix of determinant n > 0 to its Hermite form
// [[a, b],[0, d]], a > 0, 0 <= b < d. Returns (a, b, d).
std::tuple<long, long, long> hermite_form(const IntMatrix& x) {
    long long A = x.a, B = x.b, C = x.c, D = x.d;
    long long n = x.det();
    if (n <= 0) throw std::invalid_argument("hermite_form: determinant must be positive");
    // Euclidean elimination of the bottom-left entry by unimodular row ops.
    while (C != 0) {
        if (std::abs(A) < std::abs(C) || A == 0) {
            std::swap(A, C);
            std::swap(B, D);
            C = -C;
            D = -D;
        } else {
            long long q = A / C;
            A -= q * C;
            B -= q * D;
        }
    }
    if (A < 0) { A = -A; B = -B; D = -D; }
    long long d = n / A;
    long long b = ((B % d) + d) % d;
    return {static_cast<long>(A), static_cast<long>(b), static_cast<long>(d)};
}

// Index of (a, b) in the single-factor enumeration order of hecke_cosets.
std::size_t factor_index(long n, long a, long b) {
    std::size_t idx = 0;
    for (long da : divisors(n)) {
        long dd = n / da;
        if (da == a) return idx + static_cast<std::size_t>(b);
        idx += static_cast<std::size_t>(dd);
    }
    throw std::logic_error("factor_index: divisor not found");
}

long sigma_divisor_count(long n) {
    long s = 0;
    for (long d : divisors(n)) s += d;
    return s;
}

bool delta_pair_congruent(const IntMatrix& x, const IntMatrix& y, long N, long eps, long epsp) {
    return mod_reduce(static_cast<long>((x.a - y.a) % N), N) == 0 &&
           mod_reduce(static_cast<long>((x.b - epsp * y.b) % N), N) == 0 &&
           mod_reduce(static_cast<long>((eps * x.c - y.c) % N), N) == 0 &&
           mod_reduce(static_cast<long>((eps * x.d - epsp * y.d) % N), N) == 0;
}

} // namespace

CosetReduction reduce_to_coset(const IntMatrix& d1, const IntMatrix& d2, long n1, long n2, long N) {
    if (d1.det() != n1 || d2.det() != n2)
        throw std::invalid_argument("reduce_to_coset: determinants do not match (n1, n2)");
    if (std::gcd(n1, N) != 1 || std::gcd(n2, N) != 1)
        throw std::invalid_argument("reduce_to_coset: n_i must be coprime to N");
    bool congruent = false;
    for (long eps : units_mod(N)) {
        for (long epsp : units_mod(N))
            if (delta_pair_congruent(d1, d2, N, eps, epsp)) { congruent = true; break; }
        if (congruent) break;
    }
    if (!congruent)
        throw std::invalid_argument("reduce_to_coset: input violates the congruence conditions");

    auto reduce_factor = [N](const IntMatrix& x, long n) {
        auto [a, bh, d] = hermite_form(x);
        // The listed representative has upper-right b*N with 0 <= b < d; its
        // Hermite b-entry is (b*N) mod d, so invert N mod d.
        long b = (d == 1) ? 0 : mod_reduce(static_cast<long>((static_cast<long long>(bh) * inv_mod(N, d)) % d), d);
        IntMatrix rep = lift_sigma(mod_reduce(a, N), N).mul(IntMatrix{a, b * N, 0, d});
        // witness = rep * x^{-1} via the adjugate; entries must divide by n.
        IntMatrix adj{x.d, -x.b, -x.c, x.a};
        IntMatrix w = rep.mul(adj);
        if (w.a % n || w.b % n || w.c % n || w.d % n)
            throw std::logic_error("reduce_to_coset: witness is not integral");
        IntMatrix witness{w.a / n, w.b / n, w.c / n, w.d / n};
        if (witness.det() != 1) throw std::logic_error("reduce_to_coset: witness not unimodular");
        return std::tuple<long, long, long, IntMatrix>{a, b, d, witness};
    };

    auto [a1, b1, dd1, w1] = reduce_factor(d1, n1);
    auto [a2, b2, dd2, w2] = reduce_factor(d2, n2);
    (void)dd1; (void)dd2;

    std::size_t i1 = factor_index(n1, a1, b1);
    std::size_t i2 = factor_index(n2, a2, b2);
    std::size_t index = i1 * static_cast<std::size_t>(sigma_divisor_count(n2)) + i2;

    // The witness pair must lie in one of the congruence groups.
    long found_eps = -1;
    for (long eps : units_mod(N)) {
        ModMatrix r1 = w1.reduce(N);
        if (theta_eps(r1, eps) == w2.reduce(N)) { found_eps = eps; break; }
    }
    if (found_eps < 0)
        throw std::logic_error("reduce_to_coset: witness pair outside every congruence subgroup");
    return CosetReduction{index, w1, w2, found_eps};
}

} // namespace isotor
