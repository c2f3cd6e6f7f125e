#pragma once

// JSON encoding of the exact types. Rationals are [num, den] pairs whose
// entries are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; polyhedral cells are {id, dim, vertices, rays, faces} objects,
// where faces lists the ids of codimension-1 faces inside a complex. The
// geometric types round-trip bit-exactly; the report types (homology,
// flats, nerves) are export-only.

#include <json.hpp>

#include "popdec/chain.hpp"
#include "popdec/matroid.hpp"
#include "popdec/sign_nerve.hpp"
#include "popdec/subdivision.hpp"

namespace popdec {

using Json = nlohmann::json;

void to_json(Json& j, const Integer& z);
void to_json(Json& j, const Rational& q);
void to_json(Json& j, const ZVector& v);
void to_json(Json& j, const QVector& v);
// A standalone cell has no faces entry; complexes add one per cell.
void to_json(Json& j, const PolyCell& cell);
void to_json(Json& j, const PolyComplex& pc);
// [{dim, rank, torsion}], one entry per degree.
void to_json(Json& j, const Homology& h);
void to_json(Json& j, const Flat& f);
void to_json(Json& j, const SimplicialComplex& sc);
void to_json(Json& j, const SignNerve& nerve);

void from_json(const Json& j, Integer& z);
void from_json(const Json& j, Rational& q);
void from_json(const Json& j, ZVector& v);
void from_json(const Json& j, QVector& v);
void from_json(const Json& j, PolyCell& cell);
void from_json(const Json& j, PolyComplex& pc);

// All flats with their Moebius numbers, in the matroid's flat order.
Json flats_json(const Matroid& m);

}  // namespace popdec
