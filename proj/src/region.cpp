#include "sperner/region.hpp"

#include <algorithm>
#include <set>

#include "sperner/error.hpp"

namespace sperner {

std::vector<Point> enumerate_vertices(std::size_t dim, std::span<const Hyperplane> halfspaces) {
  std::set<Point> found;
  const int m = static_cast<int>(halfspaces.size());
  for (const auto& subset : combinations(m, static_cast<int>(dim))) {
    Matrix a;
    std::vector<Rational> b;
    a.reserve(dim);
    for (int i : subset) {
      a.push_back(halfspaces[i].normal);
      b.push_back(halfspaces[i].offset);
    }
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x) continue;
    Point p(std::move(*x));
    if (found.count(p)) continue;
    bool feasible = true;
    for (const auto& h : halfspaces) {
      if (h.side(p) > 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) found.insert(std::move(p));
  }
  return {found.begin(), found.end()};
}

std::vector<Hyperplane> simplex_halfspaces(std::span<const Point> simplex) {
  std::vector<Hyperplane> out;
  const std::size_t k = simplex.size();
  for (std::size_t skip = 0; skip < k; ++skip) {
    std::vector<Point> facet;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != skip) facet.push_back(simplex[i]);
    }
    auto h = oriented_hyperplane(facet, simplex[skip]);
    if (!h) throw InvalidInput("degenerate simplex has no facet halfspaces");
    out.push_back(std::move(*h));
  }
  return out;
}

namespace {

// Extreme points of a full-dimensional point set: those that appear as an
// isolated intersection of supporting hyperplanes.
std::vector<Point> extreme_points(std::span<const Point> points) {
  const std::size_t d = points[0].dim();
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> facets;
  std::set<std::vector<int>> seen;
  for (const auto& subset : combinations(n, static_cast<int>(d))) {
    std::vector<Point> pts;
    for (int i : subset) pts.push_back(points[i]);
    auto h = hyperplane_through(pts);
    if (!h) continue;
    bool pos = false, neg = false;
    std::vector<int> tight;
    for (int i = 0; i < n; ++i) {
      const int s = h->side(points[i]);
      pos |= s > 0;
      neg |= s < 0;
      if (s == 0) tight.push_back(i);
    }
    if (pos && neg) continue;
    if (seen.insert(tight).second) facets.push_back(tight);
  }
  std::vector<std::vector<int>> faces = facets;
  std::set<std::vector<int>> all(seen);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& f : facets) {
      std::vector<int> inter;
      std::set_intersection(faces[i].begin(), faces[i].end(), f.begin(), f.end(),
                            std::back_inserter(inter));
      if (inter.empty() || !all.insert(inter).second) continue;
      faces.push_back(inter);
    }
  }
  // Tight sets may contain non-extreme points; vertices are the singletons.
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    if (all.count({i})) out.push_back(points[i]);
  }
  return out;
}

}  // namespace

Rational hull_volume(std::span<const Point> points) {
  if (points.empty()) return 0;
  const std::size_t d = points[0].dim();
  if (affine_rank(points) < static_cast<int>(d)) return 0;
  if (d > 3) throw InvalidInput("hull volume supported for dimension <= 3 only");
  std::set<Point> distinct(points.begin(), points.end());
  std::vector<Point> pts(distinct.begin(), distinct.end());
  auto ext = extreme_points(pts);
  auto lattice = face_lattice(ext);
  Rational vol = 0;
  for (const auto& s : pulling_triangulation(lattice)) {
    std::vector<Point> simplex;
    for (int i : s) simplex.push_back(ext[i]);
    vol += simplex_volume(simplex);
  }
  return vol;
}

ConvexRegion::ConvexRegion(std::size_t dim, std::vector<Hyperplane> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  vertices_ = enumerate_vertices(dim_, halfspaces_);
}

ConvexRegion ConvexRegion::from_simplex(std::span<const Point> simplex) {
  return ConvexRegion(simplex[0].dim(), simplex_halfspaces(simplex));
}

ConvexRegion ConvexRegion::clipped(const Hyperplane& h) const {
  std::vector<Hyperplane> hs = halfspaces_;
  hs.push_back(h);
  ConvexRegion next(dim_, std::move(hs));
  if (!next.full_dimensional()) return next;
  // Keep only facet-defining constraints, one per distinct tight set.
  std::vector<Hyperplane> kept;
  std::set<std::vector<int>> tight_sets;
  for (const auto& c : next.halfspaces_) {
    std::vector<int> tight;
    std::vector<Point> tight_pts;
    for (std::size_t i = 0; i < next.vertices_.size(); ++i) {
      if (c.side(next.vertices_[i]) == 0) {
        tight.push_back(static_cast<int>(i));
        tight_pts.push_back(next.vertices_[i]);
      }
    }
    if (affine_rank(tight_pts) != static_cast<int>(dim_) - 1) continue;
    if (tight_sets.insert(tight).second) kept.push_back(c);
  }
  next.halfspaces_ = std::move(kept);
  return next;
}

}  // namespace sperner
