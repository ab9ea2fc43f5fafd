#include "ftau/json_io.hpp"

#include <limits>

namespace ftau::json {

json big_int(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt big_int_from(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw DomainError("malformed integer string '" + s + "'");
    }
    return BigInt(s);
  }
  throw DomainError("expected an integer, got " + j.dump());
}

json golden(const GoldenInt& x) { return json::array({big_int(x.a()), big_int(x.b())}); }

GoldenInt golden_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("expected an [a, b] pair, got " + j.dump());
  return GoldenInt(big_int_from(j[0]), big_int_from(j[1]));
}

json pl_homeo(const PLHomeo& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back({{"left", golden(p.left)}, {"value", golden(p.value)}, {"slope_exponent", p.slope_exponent}});
  }
  return {{"schema", "ftau.plhomeo/1"}, {"pieces", std::move(pieces)}};
}

PLHomeo pl_homeo_from(const json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array()) {
    throw DomainError("expected an object with a 'pieces' array");
  }
  std::vector<Piece> pieces;
  for (const auto& p : j["pieces"]) {
    if (!p.is_object() || !p.contains("left") || !p.contains("value") || !p.contains("slope_exponent") ||
        !p["slope_exponent"].is_number_integer()) {
      throw DomainError("malformed piece " + p.dump());
    }
    pieces.push_back(Piece{golden_from(p["left"]), golden_from(p["value"]), p["slope_exponent"].get<std::int64_t>()});
  }
  return PLHomeo::from_pieces(std::move(pieces));
}

json normal_form(const NormalForm& nf) {
  json pos = json::array();
  for (const auto& e : nf.positive) pos.push_back({e.index, e.x_exponent, e.y_flag ? 1 : 0});
  json neg = json::array();
  for (const auto& e : nf.negative) neg.push_back({e.index, e.x_exponent});
  return {{"positive", std::move(pos)}, {"negative", std::move(neg)}};
}

json hnn(const HnnForm& h) { return {{"a", h.a}, {"core", format_word(h.core)}, {"b", h.b}}; }

json abel(const AbelElt& e) { return json::array({e.u, e.v, e.z ? 1 : 0}); }

}  // namespace ftau::json
