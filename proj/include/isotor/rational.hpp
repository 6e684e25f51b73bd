#ifndef ISOTOR_RATIONAL_HPP
#define ISOTOR_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace isotor {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical "num/den" encoding, always with an explicit denominator.
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace isotor

#endif
