#ifndef ISOTOR_SERIES_HPP
#define ISOTOR_SERIES_HPP

#include "isotor/numtheory.hpp"
#include "isotor/quad.hpp"
#include "isotor/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isotor {

/// Rational-valued character of (Z/N)^* (orders 1 and 2 only); value 0 off the units.
class QuadraticCharacter {
public:
    static QuadraticCharacter trivial(long modulus);
    /// The Legendre character a -> (a|p) for prime p.
    static QuadraticCharacter legendre_char(long p);
    /// Validates a raw value table indexed by residue 0..N-1.
    static QuadraticCharacter from_table(long modulus, std::vector<int> values);

    long modulus() const { return modulus_; }
    int operator()(long m) const { return values_[mod_reduce(m, modulus_)]; }
    bool operator==(const QuadraticCharacter& o) const {
        return modulus_ == o.modulus_ && values_ == o.values_;
    }

private:
    QuadraticCharacter(long modulus, std::vector<int> values)
        : modulus_(modulus), values_(std::move(values)) {}
    long modulus_;
    std::vector<int> values_;
};

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const QuadElem& c) { return c.is_zero(); }

/// Truncated q-expansion sum_{1<=m<=precision} c_m q^m with q = e^{2 pi i z / level}.
/// Absent keys are zero; zero coefficients are never stored.
template <class C>
struct UniSeries {
    long level = 1;
    long precision = 0;
    long weight = 2;
    std::map<long, C> coeffs;

    UniSeries() = default;
    UniSeries(long level_, long precision_, long weight_)
        : level(level_), precision(precision_), weight(weight_) {
        if (level < 1 || precision < 1 || weight < 1)
            throw std::invalid_argument("UniSeries: level, precision, weight must be positive");
    }

    void set(long m, const C& c) {
        if (m < 1 || m > precision) throw std::out_of_range("UniSeries::set: index out of range");
        if (coeff_is_zero(c)) coeffs.erase(m);
        else coeffs[m] = c;
    }

    C coeff(long m) const {
        if (m < 1 || m > precision) throw std::out_of_range("UniSeries::coeff: index beyond precision");
        auto it = coeffs.find(m);
        return it == coeffs.end() ? C{} : it->second;
    }

    bool is_zero() const { return coeffs.empty(); }
    std::vector<long> support() const {
        std::vector<long> s;
        for (const auto& [m, c] : coeffs) s.push_back(m);
        return s;
    }
};

using UniSeriesQ = UniSeries<Rat>;
using UniSeriesK = UniSeries<QuadElem>;

/// Truncated two-variable expansion, coefficients exact for 1 <= m1, m2 <= precision.
/// A component tag eps means the series is asserted to satisfy the vanishing
/// pattern eps*m1 + m2 = 0 (mod level).
template <class C>
struct BiSeriesT {
    long level = 1;
    long precision = 0;
    long weight1 = 2;
    long weight2 = 2;
    std::optional<long> component_eps;
    std::map<std::pair<long, long>, C> coeffs;

    BiSeriesT() = default;
    BiSeriesT(long level_, long precision_, long k1, long k2)
        : level(level_), precision(precision_), weight1(k1), weight2(k2) {
        if (level < 1 || precision < 1 || k1 < 1 || k2 < 1)
            throw std::invalid_argument("BiSeries: level, precision, weight must be positive");
    }

    void set(long m1, long m2, const C& c) {
        if (m1 < 1 || m1 > precision || m2 < 1 || m2 > precision)
            throw std::out_of_range("BiSeries::set: index out of range");
        if (coeff_is_zero(c)) coeffs.erase({m1, m2});
        else coeffs[{m1, m2}] = c;
    }

    C coeff(long m1, long m2) const {
        if (m1 < 1 || m1 > precision || m2 < 1 || m2 > precision)
            throw std::out_of_range("BiSeries::coeff: index beyond precision");
        auto it = coeffs.find({m1, m2});
        return it == coeffs.end() ? C{} : it->second;
    }

    bool is_zero() const { return coeffs.empty(); }

    bool operator==(const BiSeriesT& o) const {
        return level == o.level && precision == o.precision && weight1 == o.weight1 &&
               weight2 == o.weight2 && coeffs == o.coeffs;
    }
};

using BiSeries = BiSeriesT<Rat>;
using BiSeriesK = BiSeriesT<QuadElem>;

/// Family eps -> component series; one form per component surface.
/// Only nonzero components are stored.
struct TupleForm {
    long level = 1;
    long precision = 0;
    long weight1 = 2;
    long weight2 = 2;
    std::map<long, BiSeries> components;

    TupleForm() = default;
    TupleForm(long level_, long precision_, long k1, long k2)
        : level(level_), precision(precision_), weight1(k1), weight2(k2) {}

    BiSeries component(long eps) const;
    void set_component(long eps, BiSeries s);
    /// c_{m1,m2} read from the unique component eps = -m2/m1 (mod level);
    /// both indices must be coprime to the level.
    Rat coeff(long m1, long m2) const;
    bool is_zero() const { return components.empty(); }
    /// Checks every stored component against its vanishing pattern.
    bool validate() const;
};

TupleForm tuple_add(const TupleForm& f, const TupleForm& g);
TupleForm tuple_scale(const Rat& c, const TupleForm& f);

// --- operations on series ---

inline Rat quad_or_rat_mul(const Rat& a, const Rat& b) { return a * b; }
inline QuadElem quad_or_rat_mul(const QuadElem& a, const QuadElem& b) { return quad_mul(a, b); }

/// (f1 tensor f2)(z1,z2) = f1(z1) f2(z2): coefficient product grid.
template <class C>
BiSeriesT<C> tensor(const UniSeries<C>& f1, const UniSeries<C>& f2) {
    if (f1.level != f2.level) throw std::invalid_argument("tensor: level mismatch");
    BiSeriesT<C> out(f1.level, std::min(f1.precision, f2.precision), f1.weight, f2.weight);
    for (const auto& [m1, c1] : f1.coeffs) {
        if (m1 > out.precision) break;
        for (const auto& [m2, c2] : f2.coeffs) {
            if (m2 > out.precision) break;
            out.set(m1, m2, quad_or_rat_mul(c1, c2));
        }
    }
    return out;
}

/// True iff every stored nonzero coefficient satisfies eps*m1 + m2 = 0 (mod level).
template <class C>
bool check_vanishing(const BiSeriesT<C>& f, long eps) {
    if (!is_unit_mod(eps, f.level))
        throw std::invalid_argument("check_vanishing: eps is not a unit mod level");
    for (const auto& [mm, c] : f.coeffs) {
        (void)c;
        if (mod_reduce(eps * mm.first + mm.second, f.level) != 0) return false;
    }
    return true;
}

/// Component recovery: keeps coefficients with gcd(m_i, N) = 1, bucketed by
/// the unique eps with eps*m1 + m2 = 0 (mod N). Indices sharing a factor with
/// N are dropped (the quotient-space convention).
TupleForm split_components(const BiSeries& f);
std::map<long, BiSeriesK> split_components_exact(const BiSeriesK& f);

/// Sums all components (their supports are disjoint by the vanishing pattern).
BiSeries sum_components(const TupleForm& f);

/// Keeps exactly the coefficients with d | m1 and d | m2.
BiSeries i_d(const BiSeries& f, long d);

/// c_m -> psi(m) c_m, with psi(m) = 0 when gcd(m, N) > 1.
UniSeriesQ twist(const UniSeriesQ& f, const QuadraticCharacter& psi);

UniSeriesQ uni_add(const UniSeriesQ& f, const UniSeriesQ& g);
UniSeriesQ uni_scale(const Rat& c, const UniSeriesQ& f);
UniSeriesK uni_add_k(const UniSeriesK& f, const UniSeriesK& g);
BiSeries bi_add(const BiSeries& f, const BiSeries& g);
BiSeries bi_scale(const Rat& c, const BiSeries& f);

} // namespace isotor

#endif
