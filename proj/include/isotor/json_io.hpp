#ifndef ISOTOR_JSON_IO_HPP
#define ISOTOR_JSON_IO_HPP

#include "isotor/matrix.hpp"
#include "isotor/series.hpp"

#include <json.hpp>

namespace isotor {

using Json = nlohmann::ordered_json;

// Integers are encoded as decimal strings; rationals as "num/den".
Json int_to_json(const Int& n);
Json rat_to_json(const Rat& r);
Json quad_to_json(const QuadElem& x);
QuadElem quad_from_json(const Json& j);

/// {"level":N,"precision":M,"weight":[k1,k2],"coeffs":[[m1,m2,"num/den"],...]},
/// coeffs sorted lexicographically.
Json biseries_to_json(const BiSeries& f);
BiSeries biseries_from_json(const Json& j);

Json uniseries_to_json(const UniSeriesQ& f);
Json uniseries_to_json(const UniSeriesK& f);

Json tupleform_to_json(const TupleForm& f);

} // namespace isotor

#endif
