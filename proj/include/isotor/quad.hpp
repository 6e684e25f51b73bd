#ifndef ISOTOR_QUAD_HPP
#define ISOTOR_QUAD_HPP

#include "isotor/rational.hpp"

namespace isotor {

/// Element (u + v*sqrt(-p))/2 of the maximal order of Q(sqrt(-p)), p prime = 3 mod 4.
/// The half-integer encoding keeps the full ring Z[(1+sqrt(-p))/2] denominator-free;
/// the invariant u = v (mod 2) makes the element an algebraic integer.
struct QuadElem {
    long p = 7;
    Int u = 0;
    Int v = 0;

    QuadElem() = default;
    QuadElem(long p_, Int u_, Int v_);

    /// Embeds the rational integer n as (2n + 0*sqrt(-p))/2.
    static QuadElem from_integer(long p_, const Int& n) { return QuadElem(p_, 2 * n, 0); }

    bool is_zero() const { return u == 0 && v == 0; }
    bool is_rational() const { return v == 0; }
    /// Value u/2 when v = 0 (u is then even by the parity invariant).
    Rat rational_value() const;

    Int norm() const { return (u * u + p * v * v) / 4; }
    QuadElem conj() const { return QuadElem(p, u, -v); }
    QuadElem neg() const { return QuadElem(p, -u, -v); }

    bool operator==(const QuadElem& o) const { return p == o.p && u == o.u && v == o.v; }
    bool operator<(const QuadElem& o) const {
        if (u != o.u) return u < o.u;
        return v < o.v;
    }

    std::string to_string() const;
};

QuadElem quad_add(const QuadElem& x, const QuadElem& y);
QuadElem quad_sub(const QuadElem& x, const QuadElem& y);
QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_scale(const Int& n, const QuadElem& x);

} // namespace isotor

#endif
