#ifndef ISOTOR_CLASSGROUP_HPP
#define ISOTOR_CLASSGROUP_HPP

#include "isotor/quad.hpp"

#include <map>
#include <vector>

namespace isotor {

/// Reduced binary quadratic form a x^2 + b x y + c y^2 of discriminant -p.
struct QuadForm {
    long a, b, c;
    long discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm& o) const = default;
};

/// Ideal class representative: the ideal I = Z a + Z (b + sqrt(-p))/2 of norm a,
/// whose norm form recovers (a, b, c) exactly.
struct IdealClassRep {
    long p;
    QuadForm form;
    QuadElem omega1; // a
    QuadElem omega2; // (b + sqrt(-p))/2
    long norm_a;
    QuadElem alpha;  // distinguished element of I \ I*sqrt(-p)
};

/// All reduced forms of discriminant -p, sorted by (a, b); the count is h(-p).
std::vector<QuadForm> reduced_forms(long p);

IdealClassRep ideal_class_rep(long p, const QuadForm& f);
std::vector<IdealClassRep> ideal_class_reps(long p);

/// Index of the conjugate class (a, -b, c) in the reduced_forms order.
std::size_t conjugate_class_index(const std::vector<QuadForm>& forms, std::size_t i);

/// Integer coordinates of x in the basis (omega1, omega2) of I, if x lies in I.
bool in_ideal(const IdealClassRep& I, const QuadElem& x);
/// Membership in I*sqrt(-p).
bool in_ideal_sqrt(const IdealClassRep& I, const QuadElem& x);

/// For each m <= bound, all mu in I with mu = rho (mod I sqrt(-p)) and
/// mu*conj(mu) = m * norm(I). Complete: the search box is derived from a lower
/// bound on the positive definite norm form.
std::map<long, std::vector<QuadElem>> enumerate_by_norm(const IdealClassRep& I, const QuadElem& rho,
                                                        long bound);

} // namespace isotor

#endif
