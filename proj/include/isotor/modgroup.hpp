#ifndef ISOTOR_MODGROUP_HPP
#define ISOTOR_MODGROUP_HPP

#include <cstdint>
#include <vector>

namespace isotor {

inline constexpr long kDefaultGroupBound = 32;

/// 2x2 matrix over Z/N with entries stored as canonical residues.
struct ModMatrix {
    long N = 1;
    long a = 1, b = 0, c = 0, d = 1;

    ModMatrix() = default;
    ModMatrix(long N_, long a_, long b_, long c_, long d_);

    long det() const;
    ModMatrix mul(const ModMatrix& o) const;
    /// Inverse of an SL2 element (det must be 1).
    ModMatrix inv_sl2() const;
    std::uint64_t encode() const;
    static ModMatrix decode(long N, std::uint64_t code);

    bool operator==(const ModMatrix& o) const = default;
};

/// tau_t = [[1, t],[0, 1]] mod N.
ModMatrix tau(long N, long t);

/// The automorphism b -> eps^{-1} b, c -> eps c.
ModMatrix theta_eps(const ModMatrix& m, long eps);

/// Explicitly enumerated subgroup of SL2(Z/N); elements kept sorted by code.
struct MatrixGroup {
    long N = 1;
    std::vector<std::uint64_t> elements;

    bool contains(const ModMatrix& m) const;
    std::size_t size() const { return elements.size(); }
    ModMatrix element(std::size_t i) const { return ModMatrix::decode(N, elements[i]); }
    bool operator==(const MatrixGroup& o) const = default;
};

/// All of SL2(Z/N); N is capped because the order grows cubically.
MatrixGroup enumerate_sl2(long N, long bound = kDefaultGroupBound);

/// Smallest normal subgroup of G containing g (worklist saturation over the
/// conjugate set of g).
MatrixGroup normal_closure(const MatrixGroup& G, const ModMatrix& g);

/// Kernel of reduction SL2(Z/N) -> SL2(Z/(N/d)).
MatrixGroup reduction_kernel(long N, long d, long bound = kDefaultGroupBound);

/// Subgroup generated by a set of elements of SL2(Z/N).
MatrixGroup generated_subgroup(long N, const std::vector<ModMatrix>& gens);

/// Integer 2x2 matrix.
struct IntMatrix {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    IntMatrix mul(const IntMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    ModMatrix reduce(long N) const;
    bool operator==(const IntMatrix& o) const = default;
};

/// Determinant-one integer matrix congruent to diag(a^{-1}, a) mod N.
/// Deterministic: smallest-absolute-value representatives, extended-gcd completion.
IntMatrix lift_sigma(long a, long N);

/// Determinant-one integer lift of an arbitrary SL2(Z/N) element.
IntMatrix lift_sl2(const ModMatrix& m);

/// One left-coset representative pair of the T_{n1,n2} decomposition.
struct CosetRep {
    long a1, b1, d1;
    long a2, b2, d2;
    IntMatrix m1, m2;
};

/// The full list of representatives (sigma_{a1} [[a1, b1 N],[0, d1]], sigma_{a2} [[a2, b2 N],[0, d2]])
/// over a_i d_i = n_i, 0 <= b_i < d_i; length sigma(n1) * sigma(n2).
std::vector<CosetRep> hecke_cosets(long n1, long n2, long N);

struct CosetReduction {
    std::size_t index;
    IntMatrix witness1, witness2; // gamma_i with gamma_i * delta_i = representative_i
    long eps;                     // witness pair lies in the eps congruence family
};

/// Reduces a pair of integer matrices with determinants (n1, n2) onto the
/// unique listed coset representative (Hermite-style row reduction, then
/// upper-left normalization, then the b-shift).
CosetReduction reduce_to_coset(const IntMatrix& d1, const IntMatrix& d2, long n1, long n2, long N);

} // namespace isotor

#endif
