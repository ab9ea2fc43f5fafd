#pragma once

#include <json.hpp>

#include "ftau/characters.hpp"
#include "ftau/golden_int.hpp"
#include "ftau/pl_homeo.hpp"
#include "ftau/sigma.hpp"
#include "ftau/subgroups.hpp"
#include "ftau/words.hpp"

// JSON records. Integers that fit in 64 bits are written as JSON numbers,
// larger ones as decimal strings; readers accept both.
namespace ftau::json {

using nlohmann::json;

json big_int(const BigInt& v);
BigInt big_int_from(const json& j);

/// [a, b]
json golden(const GoldenInt& x);
GoldenInt golden_from(const json& j);

/// {"schema": "ftau.plhomeo/1", "pieces": [{"left": [a,b], "value": [a,b],
///  "slope_exponent": k}, ...]}
json pl_homeo(const PLHomeo& f);
/// Validates through PLHomeo::from_pieces; throws DomainError on bad input.
PLHomeo pl_homeo_from(const json& j);

/// {"positive": [[k, i_k, e_k], ...], "negative": [[k, j_k], ...]}
json normal_form(const NormalForm& nf);
/// {"a": .., "core": "<word>", "b": ..}
json hnn(const HnnForm& h);
/// [u, v, z]
json abel(const AbelElt& e);

}  // namespace ftau::json
