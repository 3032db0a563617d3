#include "sperner/polytope.hpp"

#include <algorithm>

#include "sperner/error.hpp"

namespace sperner {

Polytope Polytope::from_vertices(std::vector<Point> vertices) {
  auto lattice = face_lattice(vertices);
  return Polytope(std::move(vertices), std::move(lattice));
}

Polytope Polytope::from_vertices_and_faces(std::vector<Point> vertices,
                                           const std::vector<std::vector<int>>& faces) {
  auto lattice = check_face_lattice(vertices, faces);
  return Polytope(std::move(vertices), std::move(lattice));
}

Polytope Polytope::standard_simplex(int dim) {
  if (dim < 1) throw InvalidInput("simplex dimension must be at least 1");
  std::vector<Point> vertices;
  vertices.emplace_back(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    Point e(static_cast<std::size_t>(dim));
    e[k] = 1;
    vertices.push_back(std::move(e));
  }
  if (dim <= 3) return from_vertices(std::move(vertices));
  std::vector<std::vector<int>> faces;
  for (int k = 1; k <= dim; ++k) {
    for (auto& c : combinations(dim + 1, k)) faces.push_back(std::move(c));
  }
  return from_vertices_and_faces(std::move(vertices), faces);
}

bool Polytope::contains(const Point& p) const {
  if (p.dim() != static_cast<std::size_t>(dim())) throw InvalidInput("point dimension mismatch");
  for (auto f : facets()) {
    if (face(f).support.side(p) > 0) return false;
  }
  return true;
}

bool Polytope::strictly_inside(const Point& p) const {
  if (p.dim() != static_cast<std::size_t>(dim())) throw InvalidInput("point dimension mismatch");
  for (auto f : facets()) {
    if (face(f).support.side(p) >= 0) return false;
  }
  return true;
}

std::optional<std::size_t> Polytope::carrier(const Point& p) const {
  if (p.dim() != static_cast<std::size_t>(dim())) throw InvalidInput("point dimension mismatch");
  std::vector<int> meet;
  bool on_boundary = false;
  for (auto f : facets()) {
    const int s = face(f).support.side(p);
    if (s > 0) throw InvalidInput("point " + to_string(p) + " lies outside the polytope");
    if (s < 0) continue;
    const auto& vs = face(f).vertices;
    if (!on_boundary) {
      meet = vs;
      on_boundary = true;
    } else {
      std::vector<int> next;
      std::set_intersection(meet.begin(), meet.end(), vs.begin(), vs.end(), std::back_inserter(next));
      meet = std::move(next);
    }
  }
  if (!on_boundary) return std::nullopt;
  auto idx = lattice_.find(meet);
  if (!idx) throw ConsistencyError("carrier is not a face of the lattice");
  return idx;
}

std::optional<std::size_t> Polytope::join(const std::vector<int>& vertices) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < lattice_.faces().size(); ++i) {
    const auto& f = lattice_.face(i);
    bool all = std::all_of(vertices.begin(), vertices.end(), [&](int v) {
      return std::binary_search(f.vertices.begin(), f.vertices.end(), v);
    });
    if (!all) continue;
    if (!best || f.dim < lattice_.face(*best).dim) best = i;
  }
  return best;
}

int Polytope::join_dim(const std::vector<int>& vertices) const {
  auto j = join(vertices);
  return j ? face(*j).dim : dim();
}

std::vector<int> Polytope::face_vertices(std::optional<std::size_t> f) const {
  if (f) return face(*f).vertices;
  std::vector<int> all(num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

Rational Polytope::volume() const {
  Rational vol = 0;
  for (const auto& s : triangulation()) {
    std::vector<Point> pts;
    for (int i : s) pts.push_back(vertices_[i]);
    vol += simplex_volume(pts);
  }
  return vol;
}

Point Polytope::centroid() const {
  Point c(static_cast<std::size_t>(dim()));
  for (const auto& v : vertices_) c += v;
  c *= ratio(1, static_cast<long>(vertices_.size()));
  return c;
}

}  // namespace sperner
