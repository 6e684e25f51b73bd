#include "isotor/theta.hpp"

#include "isotor/numtheory.hpp"

#include <stdexcept>

namespace isotor {

UniSeriesK theta_coeffs(const ThetaSpec& spec, long precision) {
    if (precision < 1) throw std::invalid_argument("theta_coeffs: precision must be >= 1");
    UniSeriesK out(spec.p, precision, 2);
    auto points = enumerate_by_norm(spec.I, spec.rho, precision);
    for (const auto& [m, mus] : points) {
        QuadElem sum(spec.p, 0, 0);
        for (const QuadElem& mu : mus) sum = quad_add(sum, mu);
        out.set(m, sum);
    }
    return out;
}

FIResult f_I(long p, const IdealClassRep& I, long precision) {
    if (p <= 3 || p % 4 != 3 || !is_prime(p))
        throw std::invalid_argument("f_I: p must be a prime = 3 mod 4, p > 3");
    UniSeriesK total(p, precision, 2);
    for (long a = 1; a < p; ++a) {
        QuadElem rho = quad_scale(Int(a) * legendre(a, p), I.alpha);
        total = uni_add_k(total, theta_coeffs(ThetaSpec{p, I, rho}, precision));
    }
    FIResult res;
    res.exact = total;
    for (const auto& [m, c] : total.coeffs) {
        if (!c.is_rational()) {
            res.witness = NonRationalWitness{m, c};
            return res;
        }
    }
    UniSeriesQ rat_series(p, precision, 2);
    for (const auto& [m, c] : total.coeffs) rat_series.set(m, c.rational_value());
    res.rational = std::move(rat_series);
    return res;
}

namespace {

// Real part u/2 and sqrt(-p)-part v/2 of a maximal-order series, as rational series.
BiSeries real_part(const BiSeriesK& f) {
    BiSeries out(f.level, f.precision, f.weight1, f.weight2);
    out.component_eps = f.component_eps;
    for (const auto& [mm, c] : f.coeffs) {
        Rat r(c.u, 2);
        r.canonicalize();
        out.set(mm.first, mm.second, r);
    }
    return out;
}

BiSeries imag_part(const BiSeriesK& f) {
    BiSeries out(f.level, f.precision, f.weight1, f.weight2);
    out.component_eps = f.component_eps;
    for (const auto& [mm, c] : f.coeffs) {
        Rat r(c.v, 2);
        r.canonicalize();
        out.set(mm.first, mm.second, r);
    }
    return out;
}

} // namespace

std::vector<TupleForm> kernel_basis_tuples(long p, long precision) {
    auto forms = reduced_forms(p);
    const std::size_t h = forms.size();
    std::vector<UniSeriesK> fi;
    fi.reserve(h);
    for (std::size_t i = 0; i < h; ++i)
        fi.push_back(f_I(p, ideal_class_rep(p, forms[i]), precision).exact);

    std::vector<TupleForm> out;
    out.reserve(h * h);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < h; ++j) {
            std::size_t ci = conjugate_class_index(forms, i);
            std::size_t cj = conjugate_class_index(forms, j);
            BiSeriesK prod = tensor(fi[i], fi[j]);
            auto parts = split_components_exact(prod);
            TupleForm tf(p, prod.precision, 2, 2);
            bool self_conjugate = (ci == i && cj == j);
            bool take_real = self_conjugate || std::make_pair(i, j) < std::make_pair(ci, cj);
            for (const auto& [eps, comp] : parts) {
                if (self_conjugate) {
                    for (const auto& [mm, c] : comp.coeffs) {
                        (void)mm;
                        if (!c.is_rational())
                            throw std::logic_error("kernel_basis: self-conjugate pair not rational");
                    }
                }
                BiSeries s = take_real ? real_part(comp) : imag_part(comp);
                if (!s.is_zero()) tf.set_component(eps, std::move(s));
            }
            out.push_back(std::move(tf));
        }
    }
    return out;
}

std::vector<BiSeries> kernel_basis(long p, long precision) {
    std::vector<BiSeries> out;
    for (const TupleForm& tf : kernel_basis_tuples(p, precision))
        out.push_back(tf.component(p - 1));
    return out;
}

long predicted_kernel_dim(long p) {
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("predicted_kernel_dim: p must be a prime > 3");
    if (p % 4 != 3) return 0;
    long h = static_cast<long>(reduced_forms(p).size());
    return h * h;
}

long predicted_cm_count(long p) {
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("predicted_cm_count: p must be a prime > 3");
    if (p % 4 != 3) return 0;
    long h = static_cast<long>(reduced_forms(p).size());
    return h * (p - 1) / 2;
}

} // namespace isotor
