#ifndef ISOTOR_HECKE_HPP
#define ISOTOR_HECKE_HPP

#include "isotor/series.hpp"

#include <array>
#include <optional>
#include <set>

namespace isotor {

/// TupleForm together with the sigma_a scalar tables of its two tensor
/// factors: slot a holds the scalar by which the factor transforms under a
/// determinant-one lift of diag(a^{-1}, a). Tables must be multiplicative.
/// Forms without such twist data are outside the scope of T_{n1,n2}.
struct TwistSystem {
    TupleForm form;
    std::map<long, Rat> sigma1; // first factor
    std::map<long, Rat> sigma2; // second factor
};

/// Twist system with trivial sigma action on both factors, the case of every
/// theta-kernel form and of the level-7 example lift.
TwistSystem make_cm_twist_system(TupleForm form);
/// Validates table multiplicativity and coverage of all units.
TwistSystem make_twist_system(TupleForm form, std::map<long, Rat> sigma1, std::map<long, Rat> sigma2);

/// Eigenvalue table lambda(n1, n2) for gcd(n_i, N) = 1, n_i <= precision.
struct EigenData {
    std::map<std::pair<long, long>, Rat> lambda;
};

/// Coefficient action of T_{n1,n2}: d_{m1,m2} = sum over a_i | (m_i, n_i) of
/// a1^{k1-1} a2^{k2-1} sigma1(a1/a2) c_{m1 n1/a1^2, m2 n2/a2^2}; component eps of
/// the output is fed by component eps n2/n1 of the input. Output precision is
/// floor(M / max(n1, n2)).
TupleForm apply_T(const TwistSystem& f, long n1, long n2);

/// Diamond operator <a>: component relabelling by a^2 composed with the
/// second-factor sigma_a scalar. On twist-closed forms the net coefficient
/// action is the sigma2(a) scalar on every component.
TupleForm diamond(const TwistSystem& f, long a);

/// lambda(n1,n2) = c_{n1,n2}(f) / c_{1,1}(f); requires c_{1,1} != 0 (read from
/// component -1).
EigenData eigen_extract(const TupleForm& f);

struct EigenCertificate {
    bool ok = false;
    UniSeriesQ factor1, factor2;                    // normalized factor coefficient sequences
    std::vector<std::pair<long, long>> mult_checked; // coprime pairs (m, n)
    std::vector<std::pair<long, long>> recursion_checked; // (q, power index r+1)
    std::optional<std::string> failure;
};

/// Factor-sequence route: checks that the summed coefficients have rank 1
/// (pure tensor), then verifies coefficient multiplicativity and the
/// prime-power recursion a_{q^{r+1}} = a_q a_{q^r} - chi(q) q^{k-1} a_{q^{r-1}}
/// on both factor sequences, up to precision.
EigenCertificate verify_eigenform(const TupleForm& f, const QuadraticCharacter& chi);

struct KernelScan {
    bool passes = false;
    long bound = 0;
    std::optional<std::array<long, 4>> witness; // (n1, n2, m1, m2) with nonzero coefficient
};

/// Finite scan of the coefficient-vanishing characterization of the Hecke
/// kernel: c_{n1 m1, n2 m2}(f) = 0 whenever eps n1 + n2 = 0 (mod N),
/// n1 m1 = n2 m2 (mod N) and gcd(n_i, m_i) = 1, for indices up to precision.
KernelScan kernel_membership(const TupleForm& f, long eps);

struct CmDetection {
    std::optional<QuadraticCharacter> chi;
    long bound = 0;
};

/// Returns the quadratic character mod p when the coprime support of the
/// sequence lies in its kernel; labeled by the scanned bound.
CmDetection cm_detect(const UniSeriesQ& f1, long p);

struct HSubgroup {
    std::set<long> elements; // eps with component -eps nonzero
    bool closed = false;
    bool quotient_exponent_le_2 = false;
};

HSubgroup h_subgroup(const TupleForm& f);

/// The nontrivial weight-(2,2) form at level 7, lifted from the tensor square
/// of the conductor-49 point-count series.
TwistSystem g7_lift(long precision);

} // namespace isotor

#endif
