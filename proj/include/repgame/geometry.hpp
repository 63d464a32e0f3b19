#pragma once

// Exact planar convex geometry over rationals: hulls of payoff points and
// their intersection with axis-parallel quadrants.

#include "repgame/rational.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace repgame {

struct PayoffPoint {
  Rational x;  // P1 payoff
  Rational y;  // P2 payoff

  friend bool operator==(const PayoffPoint&, const PayoffPoint&) = default;
  friend bool operator<(const PayoffPoint& a, const PayoffPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

inline std::string to_string(const PayoffPoint& p) { return to_string(p.x) + " " + to_string(p.y); }

/// Twice the signed area of (o, a, b); positive for a left turn.
inline Rational cross(const PayoffPoint& o, const PayoffPoint& a, const PayoffPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

enum class RegionKind { Empty, Point, Segment, Polygon };

inline const char* region_kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::Empty: return "empty";
    case RegionKind::Point: return "point";
    case RegionKind::Segment: return "segment";
    case RegionKind::Polygon: return "polygon";
  }
  return "?";
}

/// Vertices are the extreme points: none for Empty, one for Point, the two
/// endpoints (lexicographically ordered) for Segment, and a counter-clockwise
/// cycle without collinear triples for Polygon, starting at the
/// lexicographically least vertex.
struct ConvexRegion {
  RegionKind kind = RegionKind::Empty;
  std::vector<PayoffPoint> vertices;

  bool empty() const { return kind == RegionKind::Empty; }
  friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;
};

namespace detail {

inline ConvexRegion hull_of(std::vector<PayoffPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {};
  if (pts.size() == 1) return {RegionKind::Point, pts};

  // Andrew's monotone chain; `<= 0` drops collinear points.
  std::vector<PayoffPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2) return {RegionKind::Segment, {pts.front(), pts.back()}};
  return {RegionKind::Polygon, std::move(h)};
}

}  // namespace detail

inline ConvexRegion convex_hull(const std::vector<PayoffPoint>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: no points");
  return detail::hull_of(points);
}

/// Exact membership, boundary included.
inline bool contains(const ConvexRegion& r, const PayoffPoint& p) {
  const auto& v = r.vertices;
  switch (r.kind) {
    case RegionKind::Empty: return false;
    case RegionKind::Point: return v[0] == p;
    case RegionKind::Segment:
      return cross(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
             std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    case RegionKind::Polygon:
      for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
      return true;
  }
  return false;
}

namespace detail {

// One Sutherland-Hodgman pass against {coord(p) >= bound}, coord being x or
// y. The cut points of axis-parallel rational lines with rational edges are
// rational, so no precision is ever lost.
template <class Coord>
std::vector<PayoffPoint> clip_pass(const std::vector<PayoffPoint>& ring, const Rational& bound, Coord coord) {
  std::vector<PayoffPoint> out;
  if (ring.empty()) return out;
  auto inside = [&](const PayoffPoint& p) { return coord(p) >= bound; };
  auto cut = [&](const PayoffPoint& s, const PayoffPoint& e) {
    Rational t = (bound - coord(s)) / (coord(e) - coord(s));
    return PayoffPoint{s.x + t * (e.x - s.x), s.y + t * (e.y - s.y)};
  };
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const PayoffPoint& s = ring[(i + ring.size() - 1) % ring.size()];
    const PayoffPoint& e = ring[i];
    if (inside(e)) {
      if (!inside(s)) out.push_back(cut(s, e));
      out.push_back(e);
    } else if (inside(s)) {
      out.push_back(cut(s, e));
    }
  }
  return out;
}

}  // namespace detail

/// region ∩ {x >= x0, y >= y0}, re-normalized to its true kind.
inline ConvexRegion clip_to_rational_quadrant(const ConvexRegion& region, const Rational& x0, const Rational& y0) {
  std::vector<PayoffPoint> ring = region.vertices;
  ring = detail::clip_pass(ring, x0, [](const PayoffPoint& p) -> const Rational& { return p.x; });
  ring = detail::clip_pass(ring, y0, [](const PayoffPoint& p) -> const Rational& { return p.y; });
  return detail::hull_of(std::move(ring));
}

}  // namespace repgame
