#ifndef ISOTOR_THETA_HPP
#define ISOTOR_THETA_HPP

#include "isotor/classgroup.hpp"
#include "isotor/series.hpp"

#include <optional>

namespace isotor {

/// Data of a weight-2 theta series: lattice points of I in the congruence
/// class of rho mod I sqrt(-p), weighted by mu itself.
struct ThetaSpec {
    long p;
    IdealClassRep I;
    QuadElem rho;
};

/// Coefficient at q-index m (q = e^{2 pi i z / p}) is the sum of mu over the
/// class elements with mu*conj(mu) = m * norm(I).
UniSeriesK theta_coeffs(const ThetaSpec& spec, long precision);

struct NonRationalWitness {
    long m;
    QuadElem value;
};

/// Legendre-weighted class sum over rho_a = a (a|p) alpha_I. `exact` always
/// carries the full maximal-order coefficients; `rational` is present exactly
/// when every coefficient has vanishing irrational part, otherwise `witness`
/// records the first failure. Non-rational coefficients are never truncated.
struct FIResult {
    UniSeriesK exact;
    std::optional<UniSeriesQ> rational;
    std::optional<NonRationalWitness> witness;
};

FIResult f_I(long p, const IdealClassRep& I, long precision);

/// The h(-p)^2 surface series built from coefficient products
/// c_{I1,m1} c_{I2,m2} on the diagonal m1 = m2 (mod p), in reduced-form order.
/// Conjugate class pairs are emitted as their rational real/imaginary parts so
/// every returned series has rational coefficients; ambiguous pairs are
/// rational as they stand. Each series is tagged component -1.
std::vector<BiSeries> kernel_basis(long p, long precision);

/// The same forms as full tuple lifts (components recovered from the
/// tensor-product support pattern).
std::vector<TupleForm> kernel_basis_tuples(long p, long precision);

/// h(-p)^2 for p = 3 mod 4, otherwise 0.
long predicted_kernel_dim(long p);
/// h(-p)(p-1)/2 for p = 3 mod 4, otherwise 0.
long predicted_cm_count(long p);

} // namespace isotor

#endif
