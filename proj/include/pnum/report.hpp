#pragma once

// JSON forms of the library values. Rationals are strings "p" or "p/q";
// polynomials in c are coefficient maps {"3": "30"} next to a readable
// string. No floating point is ever emitted.

#include "pnum/bordism.hpp"
#include "pnum/charclass.hpp"
#include "pnum/genus.hpp"
#include "pnum/witness.hpp"

#include <json.hpp>

namespace pnum {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
/// {"3": "30"}
Json poly_coefficients(const PolyC& p);
/// Rational string when constant, readable polynomial otherwise.
Json poly_value(const PolyC& p);
Json to_json(const GenusValue& g);
Json to_json(const PNumberVector& v);
Json to_json(const BordismElement& e);
Json to_json(const WitnessReport& r);

}  // namespace pnum
