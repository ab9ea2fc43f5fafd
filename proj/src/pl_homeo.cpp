#include "ftau/pl_homeo.hpp"

#include <algorithm>

#include "ftau/errors.hpp"

namespace ftau {

namespace {

GoldenInt value_on(const Piece& p, const GoldenInt& x) {
  return p.value + GoldenInt::tau_pow(p.slope_exponent) * (x - p.left);
}

// Drops repeated slopes; assumes the input is already continuous.
std::vector<Piece> merge_redundant(std::vector<Piece> pieces) {
  std::vector<Piece> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!out.empty() && out.back().slope_exponent == p.slope_exponent) continue;
    out.push_back(std::move(p));
  }
  return out;
}

// Index of the piece whose half-open interval contains x (the last piece
// also owns 1).
std::size_t locate(std::span<const Piece> pieces, const GoldenInt& x) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), x,
                             [](const GoldenInt& v, const Piece& p) { return v < p.left; });
  return static_cast<std::size_t>(std::distance(pieces.begin(), it)) - 1;
}

}  // namespace

PLHomeo::PLHomeo() : pieces_{Piece{GoldenInt::zero(), GoldenInt::zero(), 0}} {}

const PLHomeo& PLHomeo::identity() {
  static const PLHomeo id;
  return id;
}

PLHomeo PLHomeo::from_pieces(std::vector<Piece> pieces) {
  if (pieces.empty()) throw DomainError("a PL homeomorphism needs at least one piece");
  std::vector<Piece> kept;
  kept.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i + 1 < pieces.size() && pieces[i].left == pieces[i + 1].left) continue;
    kept.push_back(std::move(pieces[i]));
  }
  if (kept.front().left != GoldenInt::zero()) throw DomainError("first piece must start at 0");
  if (kept.front().value != GoldenInt::zero()) throw DomainError("f(0) must be 0");
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    if (!(kept[i].left < kept[i + 1].left)) {
      throw DomainError("piece endpoints must be strictly increasing (piece " +
                        std::to_string(i + 1) + ")");
    }
    if (value_on(kept[i], kept[i + 1].left) != kept[i + 1].value) {
      throw DomainError("discontinuity at the left endpoint of piece " + std::to_string(i + 1));
    }
  }
  if (!(kept.back().left < GoldenInt::one())) throw DomainError("breakpoints must lie below 1");
  if (value_on(kept.back(), GoldenInt::one()) != GoldenInt::one()) {
    throw DomainError("f(1) must be 1");
  }
  return PLHomeo(merge_redundant(std::move(kept)));
}

bool PLHomeo::is_identity() const noexcept {
  return pieces_.size() == 1 && pieces_.front().slope_exponent == 0;
}

GoldenInt PLHomeo::operator()(const GoldenInt& x) const {
  if (x.sign() < 0 || x > GoldenInt::one()) {
    throw DomainError("point " + x.format() + " lies outside [0, 1]");
  }
  return value_on(pieces_[locate(pieces_, x)], x);
}

GoldenInt eval(const PLHomeo& f, const GoldenInt& x) { return f(x); }

PLHomeo PLHomeo::inverse() const {
  std::vector<Piece> inv;
  inv.reserve(pieces_.size());
  for (const auto& p : pieces_) inv.push_back(Piece{p.value, p.left, -p.slope_exponent});
  return PLHomeo(std::move(inv));
}

PLHomeo invert(const PLHomeo& f) { return f.inverse(); }

std::optional<std::pair<GoldenInt, GoldenInt>> PLHomeo::support_bounds() const {
  auto moves = [](const Piece& p) { return p.slope_exponent != 0 || p.value != p.left; };
  std::optional<std::size_t> first;
  std::size_t last = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!moves(pieces_[i])) continue;
    if (!first) first = i;
    last = i;
  }
  if (!first) return std::nullopt;
  GoldenInt right = last + 1 < pieces_.size() ? pieces_[last + 1].left : GoldenInt::one();
  return std::make_pair(pieces_[*first].left, std::move(right));
}

// Walks the pieces of f and, in lockstep, the pieces of g over the image of
// the current f-piece. Every g-breakpoint met inside an f-piece is pulled
// back to the domain.
PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  const auto fp = f.pieces();
  const auto gp = g.pieces();
  std::vector<Piece> out;
  out.reserve(fp.size() + gp.size());

  std::size_t i = 0;
  std::size_t j = 0;
  GoldenInt x = GoldenInt::zero();
  GoldenInt fx = GoldenInt::zero();
  while (i < fp.size()) {
    while (j + 1 < gp.size() && !(fx < gp[j + 1].left)) ++j;
    out.push_back(Piece{x, value_on(gp[j], fx), fp[i].slope_exponent + gp[j].slope_exponent});

    const bool last_f = i + 1 == fp.size();
    const GoldenInt& f_end_value = last_f ? GoldenInt::one() : fp[i + 1].value;
    if (j + 1 < gp.size() && gp[j + 1].left < f_end_value) {
      x = fp[i].left + GoldenInt::tau_pow(-fp[i].slope_exponent) * (gp[j + 1].left - fp[i].value);
      fx = gp[j + 1].left;
      ++j;
    } else {
      if (last_f) break;
      x = fp[i + 1].left;
      fx = fp[i + 1].value;
      ++i;
    }
  }
  return PLHomeo::from_pieces(merge_redundant(std::move(out)));
}

PLHomeo generator_x(std::uint32_t i) {
  const std::int64_t n = i;
  const GoldenInt start = GoldenInt::one() - GoldenInt::tau_pow(n);
  const GoldenInt flat = start + GoldenInt::tau_pow(n + 4);
  const GoldenInt tail = GoldenInt::one() - GoldenInt::tau_pow(n + 1);
  return PLHomeo::from_pieces({
      Piece{GoldenInt::zero(), GoldenInt::zero(), 0},
      Piece{start, start, -2},
      Piece{flat, flat + GoldenInt::tau_pow(n + 3), 0},
      Piece{tail, GoldenInt::tau_pow(1) * tail + GoldenInt::tau_pow(2), 1},
  });
}

// The middle piece starts at (1 - t^i, 1 - t^i) with slope t^-1, which makes
// the map continuous for every i.
PLHomeo generator_y(std::uint32_t i) {
  const std::int64_t n = i;
  const GoldenInt start = GoldenInt::one() - GoldenInt::tau_pow(n);
  const GoldenInt tail = GoldenInt::one() - GoldenInt::tau_pow(n + 1);
  return PLHomeo::from_pieces({
      Piece{GoldenInt::zero(), GoldenInt::zero(), 0},
      Piece{start, start, -1},
      Piece{tail, GoldenInt::tau_pow(1) * tail + GoldenInt::tau_pow(2), 1},
  });
}

PLHomeo nu(const PLHomeo& f) {
  const auto fp = f.pieces();
  std::vector<Piece> out;
  out.reserve(fp.size());
  for (std::size_t k = fp.size(); k-- > 0;) {
    const GoldenInt& right = k + 1 < fp.size() ? fp[k + 1].left : GoldenInt::one();
    const GoldenInt& right_value = k + 1 < fp.size() ? fp[k + 1].value : GoldenInt::one();
    out.push_back(Piece{GoldenInt::one() - right, GoldenInt::one() - right_value,
                        fp[k].slope_exponent});
  }
  return PLHomeo::from_pieces(std::move(out));
}

std::vector<std::pair<GoldenInt, GoldenInt>> sample_graph(const PLHomeo& f, int depth) {
  const auto fp = f.pieces();
  std::vector<std::pair<GoldenInt, GoldenInt>> points;
  for (std::size_t k = 0; k < fp.size(); ++k) {
    const GoldenInt& right = k + 1 < fp.size() ? fp[k + 1].left : GoldenInt::one();
    std::vector<GoldenInt> xs{fp[k].left, right};
    for (int level = 0; level < depth; ++level) {
      std::vector<GoldenInt> refined;
      refined.reserve(2 * xs.size());
      for (std::size_t m = 0; m + 1 < xs.size(); ++m) {
        refined.push_back(xs[m]);
        refined.push_back(xs[m] + GoldenInt::tau_pow(1) * (xs[m + 1] - xs[m]));
      }
      refined.push_back(xs.back());
      xs = std::move(refined);
    }
    xs.pop_back();  // the next piece (or the final point) adds it
    for (auto& x : xs) points.emplace_back(x, value_on(fp[k], x));
  }
  points.emplace_back(GoldenInt::one(), GoldenInt::one());
  return points;
}

}  // namespace ftau
