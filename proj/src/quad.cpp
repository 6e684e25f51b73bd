#include "isotor/quad.hpp"

#include "isotor/numtheory.hpp"

#include <stdexcept>

namespace isotor {

QuadElem::QuadElem(long p_, Int u_, Int v_) : p(p_), u(std::move(u_)), v(std::move(v_)) {
    if (p <= 3 || p % 4 != 3 || !is_prime(p))
        throw std::invalid_argument("QuadElem: p must be a prime = 3 mod 4, p > 3");
    if (mpz_odd_p(Int(u - v).get_mpz_t()))
        throw std::invalid_argument("QuadElem: u and v must have equal parity");
}

Rat QuadElem::rational_value() const {
    if (v != 0) throw std::domain_error("QuadElem: not rational");
    Rat r(u, 2);
    r.canonicalize();
    return r;
}

std::string QuadElem::to_string() const {
    return "(" + u.get_str() + " + " + v.get_str() + "*sqrt(-" + std::to_string(p) + "))/2";
}

static void check_same_field(const QuadElem& x, const QuadElem& y) {
    if (x.p != y.p) throw std::invalid_argument("QuadElem: mismatched p");
}

QuadElem quad_add(const QuadElem& x, const QuadElem& y) {
    check_same_field(x, y);
    return QuadElem(x.p, x.u + y.u, x.v + y.v);
}

QuadElem quad_sub(const QuadElem& x, const QuadElem& y) {
    check_same_field(x, y);
    return QuadElem(x.p, x.u - y.u, x.v - y.v);
}

// ((u1 + v1 s)/2)((u2 + v2 s)/2) with s^2 = -p; both halves stay integral
// because the order is closed under multiplication.
QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
    check_same_field(x, y);
    Int nu = x.u * y.u - Int(x.p) * x.v * y.v;
    Int nv = x.u * y.v + x.v * y.u;
    return QuadElem(x.p, nu / 2, nv / 2);
}

QuadElem quad_scale(const Int& n, const QuadElem& x) {
    return QuadElem(x.p, n * x.u, n * x.v);
}

} // namespace isotor
