#include "isotor/classgroup.hpp"

#include "isotor/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace isotor {

std::vector<QuadForm> reduced_forms(long p) {
    if (p % 4 != 3)
        throw std::invalid_argument("reduced_forms: -p is not a discriminant (need p = 3 mod 4)");
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("reduced_forms: p must be a prime > 3");
    std::vector<QuadForm> forms;
    for (long a = 1; 3 * a * a <= p; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b + p) % (4 * a) != 0) continue;
            long c = (b * b + p) / (4 * a);
            if (c < a) continue;
            if ((std::abs(b) == a || a == c) && b < 0) continue;
            forms.push_back({a, b, c});
        }
    }
    std::sort(forms.begin(), forms.end(),
              [](const QuadForm& x, const QuadForm& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return forms;
}

IdealClassRep ideal_class_rep(long p, const QuadForm& f) {
    if (f.discriminant() != -p) throw std::invalid_argument("ideal_class_rep: wrong discriminant");
    IdealClassRep rep;
    rep.p = p;
    rep.form = f;
    rep.omega1 = QuadElem::from_integer(p, f.a);
    rep.omega2 = QuadElem(p, f.b, 1);
    rep.norm_a = f.a;
    rep.alpha = rep.omega1;
    if (in_ideal_sqrt(rep, rep.alpha)) rep.alpha = rep.omega2;
    if (in_ideal_sqrt(rep, rep.alpha))
        throw std::logic_error("ideal_class_rep: no basis vector outside I*sqrt(-p)");
    return rep;
}

std::vector<IdealClassRep> ideal_class_reps(long p) {
    std::vector<IdealClassRep> reps;
    for (const QuadForm& f : reduced_forms(p)) reps.push_back(ideal_class_rep(p, f));
    return reps;
}

std::size_t conjugate_class_index(const std::vector<QuadForm>& forms, std::size_t i) {
    QuadForm conj{forms[i].a, -forms[i].b, forms[i].c};
    for (std::size_t j = 0; j < forms.size(); ++j)
        if (forms[j] == conj) return j;
    return i; // boundary forms (b = a or a = c) represent self-conjugate classes
}

// x = s*omega1 + t*omega2 = ((2 a s + t b) + t sqrt(-p))/2.
bool in_ideal(const IdealClassRep& I, const QuadElem& x) {
    if (x.p != I.p) throw std::invalid_argument("in_ideal: field mismatch");
    Int t = x.v;
    Int num = x.u - t * I.form.b;
    return num % (2 * I.form.a) == 0;
}

// I*sqrt(-p) has basis (a sqrt(-p), (b sqrt(-p) - p)/2).
bool in_ideal_sqrt(const IdealClassRep& I, const QuadElem& x) {
    if (x.p != I.p) throw std::invalid_argument("in_ideal_sqrt: field mismatch");
    if (x.u % I.p != 0) return false;
    Int t = -x.u / I.p;
    Int num = x.v - t * I.form.b;
    return num % (2 * I.form.a) == 0;
}

std::map<long, std::vector<QuadElem>> enumerate_by_norm(const IdealClassRep& I, const QuadElem& rho,
                                                        long bound) {
    if (bound < 1) throw std::invalid_argument("enumerate_by_norm: bound must be >= 1");
    if (!in_ideal(I, rho)) throw std::invalid_argument("enumerate_by_norm: rho is not in I");

    const long p = I.p;
    const long a = I.form.a, b = I.form.b, c = I.form.c;
    const QuadElem eta1(p, 0, 2 * a);       // sqrt(-p) * omega1
    const QuadElem eta2(p, -p, b);          // sqrt(-p) * omega2

    // |mu| <= sqrt(bound * A) and |mu - rho| <= |mu| + |rho|; the quadratic part
    // satisfies norm(s eta1 + t eta2) = p A F(s,t) >= p A * (p / (4(a+c))) (s^2+t^2).
    Int S = isqrt(Int(bound) * a) + isqrt(rho.norm()) + 2;
    Int box2 = (S * S * 4 * (a + c)) / (Int(p) * p * a) + 1;
    long B = isqrt(box2).get_si() + 1;

    std::map<long, std::vector<QuadElem>> out;
    for (long s = -B; s <= B; ++s) {
        for (long t = -B; t <= B; ++t) {
            QuadElem mu = quad_add(rho, quad_add(quad_scale(s, eta1), quad_scale(t, eta2)));
            Int n = mu.norm();
            if (n == 0 || n % a != 0) continue;
            Int m = n / a;
            if (m < 1 || m > bound) continue;
            out[m.get_si()].push_back(mu);
        }
    }
    for (auto& [m, v] : out) std::sort(v.begin(), v.end());
    return out;
}

} // namespace isotor
