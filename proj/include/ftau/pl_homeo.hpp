#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ftau/golden_int.hpp"

namespace ftau {

// One linear piece: on [left, next left) the map is
// x -> value + t^slope_exponent * (x - left).
struct Piece {
  GoldenInt left;
  GoldenInt value;
  std::int64_t slope_exponent = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Orientation-preserving PL homeomorphism of [0, 1] with breakpoints in
// Z[t] and slopes in <t>. Always held in canonical form: first piece starts
// at 0 with value 0, the last piece reaches 1 at 1, and adjacent pieces have
// distinct slopes. Equality is equality of canonical forms.
//
// Products act left to right: compose(f, g) is x -> g(f(x)).
class PLHomeo {
 public:
  PLHomeo();  // identity

  /// Validates endpoints and continuity, then merges redundant breakpoints.
  /// Pieces with an empty interval are dropped. Throws DomainError.
  static PLHomeo from_pieces(std::vector<Piece> pieces);

  static const PLHomeo& identity();

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  bool is_identity() const noexcept;

  /// f(x) for 0 <= x <= 1; DomainError otherwise.
  GoldenInt operator()(const GoldenInt& x) const;

  PLHomeo inverse() const;

  /// log_t f'(0) and log_t f'(1).
  std::int64_t slope_exponent_at_zero() const noexcept { return pieces_.front().slope_exponent; }
  std::int64_t slope_exponent_at_one() const noexcept { return pieces_.back().slope_exponent; }

  /// Smallest closed interval containing {x : f(x) != x}; nullopt for the
  /// identity.
  std::optional<std::pair<GoldenInt, GoldenInt>> support_bounds() const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

 private:
  explicit PLHomeo(std::vector<Piece> canonical) : pieces_(std::move(canonical)) {}

  std::vector<Piece> pieces_;
};

/// x -> g(f(x)).
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);
PLHomeo invert(const PLHomeo& f);
GoldenInt eval(const PLHomeo& f, const GoldenInt& x);

/// The standard generators x_i and y_i.
PLHomeo generator_x(std::uint32_t i);
PLHomeo generator_y(std::uint32_t i);

/// Conjugation by t -> 1 - t: nu(f)(t) = 1 - f(1 - t).
PLHomeo nu(const PLHomeo& f);

/// Points (x, f(x)) at every breakpoint, plus `depth` levels of golden
/// subdivision inside each piece (each interval of length L is split at
/// left + t*L). Includes both endpoints 0 and 1.
std::vector<std::pair<GoldenInt, GoldenInt>> sample_graph(const PLHomeo& f, int depth);

}  // namespace ftau
