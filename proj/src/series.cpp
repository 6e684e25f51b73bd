#include "isotor/series.hpp"

namespace isotor {

QuadraticCharacter QuadraticCharacter::trivial(long modulus) {
    std::vector<int> vals(modulus, 0);
    for (long a = 0; a < modulus; ++a)
        if (std::gcd(a, modulus) == 1) vals[a] = 1;
    return QuadraticCharacter(modulus, std::move(vals));
}

QuadraticCharacter QuadraticCharacter::legendre_char(long p) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("legendre_char: p must be an odd prime");
    std::vector<int> vals(p, 0);
    for (long a = 1; a < p; ++a) vals[a] = legendre(a, p);
    return QuadraticCharacter(p, std::move(vals));
}

QuadraticCharacter QuadraticCharacter::from_table(long modulus, std::vector<int> values) {
    if (modulus < 1 || static_cast<long>(values.size()) != modulus)
        throw std::invalid_argument("character table size must equal the modulus");
    for (long a = 0; a < modulus; ++a) {
        bool unit = std::gcd(a, modulus) == 1;
        if (!unit && values[a] != 0)
            throw std::invalid_argument("character must vanish off the units");
        if (unit && values[a] != 1 && values[a] != -1)
            throw std::invalid_argument("non-quadratic character requested");
    }
    for (long a = 0; a < modulus; ++a)
        for (long b = 0; b < modulus; ++b) {
            if (std::gcd(a, modulus) != 1 || std::gcd(b, modulus) != 1) continue;
            if (values[mod_reduce(a * b, modulus)] != values[a] * values[b])
                throw std::invalid_argument("character table is not multiplicative");
        }
    return QuadraticCharacter(modulus, std::move(values));
}

BiSeries TupleForm::component(long eps) const {
    if (!is_unit_mod(eps, level))
        throw std::invalid_argument("TupleForm::component: eps not a unit");
    auto it = components.find(mod_reduce(eps, level));
    if (it != components.end()) return it->second;
    BiSeries zero(level, precision, weight1, weight2);
    zero.component_eps = mod_reduce(eps, level);
    return zero;
}

void TupleForm::set_component(long eps, BiSeries s) {
    long e = mod_reduce(eps, level);
    if (!is_unit_mod(e, level))
        throw std::invalid_argument("TupleForm::set_component: eps not a unit");
    s.component_eps = e;
    if (s.is_zero()) components.erase(e);
    else components[e] = std::move(s);
}

Rat TupleForm::coeff(long m1, long m2) const {
    if (!is_unit_mod(m1, level) || !is_unit_mod(m2, level))
        throw std::invalid_argument("TupleForm::coeff: indices must be coprime to the level");
    long eps = mod_reduce(-m2 * inv_mod(m1, level), level);
    auto it = components.find(eps);
    if (it == components.end()) return Rat(0);
    return it->second.coeff(m1, m2);
}

bool TupleForm::validate() const {
    for (const auto& [eps, s] : components)
        if (!check_vanishing(s, eps)) return false;
    return true;
}

TupleForm tuple_add(const TupleForm& f, const TupleForm& g) {
    if (f.level != g.level || f.weight1 != g.weight1 || f.weight2 != g.weight2)
        throw std::invalid_argument("tuple_add: shape mismatch");
    TupleForm out(f.level, std::min(f.precision, g.precision), f.weight1, f.weight2);
    for (long eps : units_mod(f.level)) {
        BiSeries a = f.component(eps), b = g.component(eps);
        BiSeries s(out.level, out.precision, out.weight1, out.weight2);
        for (const auto& [mm, c] : a.coeffs)
            if (mm.first <= out.precision && mm.second <= out.precision) s.set(mm.first, mm.second, c);
        for (const auto& [mm, c] : b.coeffs)
            if (mm.first <= out.precision && mm.second <= out.precision)
                s.set(mm.first, mm.second, s.coeff(mm.first, mm.second) + c);
        if (!s.is_zero()) out.set_component(eps, std::move(s));
    }
    return out;
}

TupleForm tuple_scale(const Rat& c, const TupleForm& f) {
    TupleForm out(f.level, f.precision, f.weight1, f.weight2);
    if (c == 0) return out;
    for (const auto& [eps, s] : f.components) out.set_component(eps, bi_scale(c, s));
    return out;
}

TupleForm split_components(const BiSeries& f) {
    TupleForm out(f.level, f.precision, f.weight1, f.weight2);
    std::map<long, BiSeries> parts;
    for (const auto& [mm, c] : f.coeffs) {
        auto [m1, m2] = mm;
        if (std::gcd(m1, f.level) != 1 || std::gcd(m2, f.level) != 1) continue;
        long eps = mod_reduce(-m2 * inv_mod(m1, f.level), f.level);
        auto it = parts.find(eps);
        if (it == parts.end())
            it = parts.emplace(eps, BiSeries(f.level, f.precision, f.weight1, f.weight2)).first;
        it->second.set(m1, m2, c);
    }
    for (auto& [eps, s] : parts) out.set_component(eps, std::move(s));
    return out;
}

std::map<long, BiSeriesK> split_components_exact(const BiSeriesK& f) {
    std::map<long, BiSeriesK> parts;
    for (const auto& [mm, c] : f.coeffs) {
        auto [m1, m2] = mm;
        if (std::gcd(m1, f.level) != 1 || std::gcd(m2, f.level) != 1) continue;
        long eps = mod_reduce(-m2 * inv_mod(m1, f.level), f.level);
        auto it = parts.find(eps);
        if (it == parts.end())
            it = parts.emplace(eps, BiSeriesK(f.level, f.precision, f.weight1, f.weight2)).first;
        it->second.component_eps = eps;
        it->second.set(m1, m2, c);
    }
    return parts;
}

BiSeries sum_components(const TupleForm& f) {
    BiSeries out(f.level, f.precision, f.weight1, f.weight2);
    for (const auto& [eps, s] : f.components) {
        (void)eps;
        for (const auto& [mm, c] : s.coeffs) {
            if (out.coeffs.count(mm))
                throw std::logic_error("sum_components: overlapping component supports");
            out.set(mm.first, mm.second, c);
        }
    }
    return out;
}

BiSeries i_d(const BiSeries& f, long d) {
    if (d < 1 || f.level % d != 0) throw std::invalid_argument("i_d: d must divide the level");
    BiSeries out(f.level, f.precision, f.weight1, f.weight2);
    for (const auto& [mm, c] : f.coeffs)
        if (mm.first % d == 0 && mm.second % d == 0) out.set(mm.first, mm.second, c);
    return out;
}

UniSeriesQ twist(const UniSeriesQ& f, const QuadraticCharacter& psi) {
    if (psi.modulus() != f.level)
        throw std::invalid_argument("twist: character modulus must equal the series level");
    UniSeriesQ out(f.level, f.precision, f.weight);
    for (const auto& [m, c] : f.coeffs) {
        int v = psi(m);
        if (v != 0) out.set(m, v * c);
    }
    return out;
}

UniSeriesQ uni_add(const UniSeriesQ& f, const UniSeriesQ& g) {
    if (f.level != g.level || f.weight != g.weight)
        throw std::invalid_argument("uni_add: shape mismatch");
    UniSeriesQ out(f.level, std::min(f.precision, g.precision), f.weight);
    for (const auto& [m, c] : f.coeffs)
        if (m <= out.precision) out.set(m, c);
    for (const auto& [m, c] : g.coeffs)
        if (m <= out.precision) out.set(m, out.coeff(m) + c);
    return out;
}

UniSeriesQ uni_scale(const Rat& c, const UniSeriesQ& f) {
    UniSeriesQ out(f.level, f.precision, f.weight);
    if (c == 0) return out;
    for (const auto& [m, v] : f.coeffs) out.set(m, c * v);
    return out;
}

UniSeriesK uni_add_k(const UniSeriesK& f, const UniSeriesK& g) {
    if (f.level != g.level || f.weight != g.weight)
        throw std::invalid_argument("uni_add_k: shape mismatch");
    UniSeriesK out(f.level, std::min(f.precision, g.precision), f.weight);
    for (const auto& [m, c] : f.coeffs)
        if (m <= out.precision) out.set(m, c);
    for (const auto& [m, c] : g.coeffs) {
        if (m > out.precision) continue;
        auto it = out.coeffs.find(m);
        if (it == out.coeffs.end()) out.set(m, c);
        else out.set(m, quad_add(it->second, c));
    }
    return out;
}

BiSeries bi_add(const BiSeries& f, const BiSeries& g) {
    if (f.level != g.level) throw std::invalid_argument("bi_add: level mismatch");
    BiSeries out(f.level, std::min(f.precision, g.precision), f.weight1, f.weight2);
    for (const auto& [mm, c] : f.coeffs)
        if (mm.first <= out.precision && mm.second <= out.precision) out.set(mm.first, mm.second, c);
    for (const auto& [mm, c] : g.coeffs)
        if (mm.first <= out.precision && mm.second <= out.precision)
            out.set(mm.first, mm.second, out.coeff(mm.first, mm.second) + c);
    return out;
}

BiSeries bi_scale(const Rat& c, const BiSeries& f) {
    BiSeries out(f.level, f.precision, f.weight1, f.weight2);
    out.component_eps = f.component_eps;
    if (c == 0) return out;
    for (const auto& [mm, v] : f.coeffs) out.set(mm.first, mm.second, c * v);
    return out;
}

} // namespace isotor
