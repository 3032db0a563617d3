#include "sperner/exactgeom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sperner/error.hpp"

namespace sperner {

Point& Point::operator+=(const Point& other) {
  if (other.dim() != dim()) throw InvalidInput("point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  if (other.dim() != dim()) throw InvalidInput("point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

std::string to_string(const Point& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out << ',';
    out << to_string(p[i]);
  }
  out << ')';
  return out.str();
}

Rational dot(const std::vector<Rational>& a, const Point& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
  return s;
}

namespace {

// Reduces m to row echelon form in place; returns rank and the sign/scale
// bookkeeping needed for the determinant.
int eliminate(Matrix& m, Rational* det_out) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      det = -det;
    }
    const Rational p = m[rank][col];
    det *= p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col] / p;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  if (rank < rows) det = 0;
  if (det_out) *det_out = det;
  return static_cast<int>(rank);
}

void require_same_dim(std::span<const Point> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.dim() != dim) throw InvalidInput("point dimension mismatch");
  }
}

Matrix difference_rows(std::span<const Point> points) {
  Matrix m;
  m.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) m.push_back((points[i] - points[0]).coords());
  return m;
}

std::vector<std::size_t> independent_subset(std::span<const Point> points) {
  std::vector<std::size_t> chosen;
  if (points.empty()) return chosen;
  chosen.push_back(0);
  Matrix rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Matrix trial = rows;
    trial.push_back((points[i] - points[0]).coords());
    if (matrix_rank(trial) == static_cast<int>(trial.size())) {
      rows = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

}  // namespace

Rational determinant(Matrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw InvalidInput("determinant of a non-square matrix");
  Rational det;
  eliminate(m, &det);
  return det;
}

int matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  return eliminate(m, nullptr);
}

std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

int affine_rank(std::span<const Point> points) {
  if (points.empty()) return -1;
  require_same_dim(points, points[0].dim());
  if (points.size() == 1) return 0;
  return matrix_rank(difference_rows(points));
}

Rational simplex_determinant(std::span<const Point> points) {
  if (points.empty()) throw InvalidInput("empty simplex");
  const std::size_t d = points[0].dim();
  require_same_dim(points, d);
  if (points.size() != d + 1) throw InvalidInput("simplex needs dimension + 1 points");
  return determinant(difference_rows(points));
}

int orientation(std::span<const Point> points) { return sgn(simplex_determinant(points)); }

Rational simplex_volume(std::span<const Point> points) {
  Rational det = abs(simplex_determinant(points));
  mpz_class fact = 1;
  for (std::size_t k = 2; k < points.size(); ++k) fact *= static_cast<unsigned long>(k);
  return det / Rational(fact);
}

std::optional<std::vector<Rational>> barycentric_coords(std::span<const Point> simplex,
                                                        const Point& p) {
  if (simplex.empty()) throw InvalidInput("empty simplex");
  const std::size_t d = simplex[0].dim();
  require_same_dim(simplex, d);
  if (p.dim() != d) throw InvalidInput("point dimension mismatch");
  if (simplex.size() != d + 1) throw InvalidInput("simplex needs dimension + 1 points");
  Matrix a(d + 1, std::vector<Rational>(d + 1));
  std::vector<Rational> b(d + 1);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t j = 0; j <= d; ++j) a[row][j] = simplex[j][row];
    b[row] = p[row];
  }
  for (std::size_t j = 0; j <= d; ++j) a[d][j] = 1;
  b[d] = 1;
  return solve_linear(std::move(a), std::move(b));
}

std::optional<std::vector<Rational>> affine_coords(std::span<const Point> points,
                                                   const Point& p) {
  if (points.empty()) return std::nullopt;
  const std::size_t d = points[0].dim();
  require_same_dim(points, d);
  const std::size_t k = points.size();
  // Rows: d coordinate equations plus the affine constraint; k unknowns.
  Matrix aug(d + 1, std::vector<Rational>(k + 1));
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t j = 0; j < k; ++j) aug[row][j] = points[j][row];
    aug[row][k] = p[row];
  }
  for (std::size_t j = 0; j < k; ++j) aug[d][j] = 1;
  aug[d][k] = 1;

  // Gauss-Jordan on the augmented system.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && rank <= d; ++col) {
    std::size_t pivot = rank;
    while (pivot <= d && sgn(aug[pivot][col]) == 0) ++pivot;
    if (pivot > d) return std::nullopt;  // dependent columns
    std::swap(aug[pivot], aug[rank]);
    for (std::size_t r = 0; r <= d; ++r) {
      if (r == rank || sgn(aug[r][col]) == 0) continue;
      const Rational factor = aug[r][col] / aug[rank][col];
      for (std::size_t c = col; c <= k; ++c) aug[r][c] -= factor * aug[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < k) return std::nullopt;
  for (std::size_t r = rank; r <= d; ++r) {
    if (sgn(aug[r][k]) != 0) return std::nullopt;  // inconsistent: p off the hull
  }
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][k] / aug[r][pivot_col[r]];
  return x;
}

Hyperplane Hyperplane::flipped() const {
  Hyperplane h{normal, -offset};
  for (auto& c : h.normal) c = -c;
  return h;
}

std::optional<Hyperplane> hyperplane_through(std::span<const Point> points) {
  if (points.empty()) throw InvalidInput("hyperplane through no points");
  const std::size_t d = points[0].dim();
  require_same_dim(points, d);
  if (points.size() != d) throw InvalidInput("hyperplane needs exactly dimension points");
  Matrix rows = difference_rows(points);
  Hyperplane h;
  h.normal.resize(d);
  bool nonzero = false;
  for (std::size_t j = 0; j < d; ++j) {
    Matrix minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<Rational> m;
      m.reserve(d - 1);
      for (std::size_t c = 0; c < d; ++c) {
        if (c != j) m.push_back(r[c]);
      }
      minor.push_back(std::move(m));
    }
    Rational cof = determinant(std::move(minor));
    h.normal[j] = (j % 2 == 0) ? cof : Rational(-cof);
    if (sgn(h.normal[j]) != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  h.offset = dot(h.normal, points[0]);
  return h;
}

std::optional<Hyperplane> oriented_hyperplane(std::span<const Point> points, const Point& inside) {
  if (points.empty()) return std::nullopt;
  const std::size_t d = points[0].dim();
  auto idx = independent_subset(points);
  if (idx.size() != d) return std::nullopt;
  std::vector<Point> basis;
  for (auto i : idx) basis.push_back(points[i]);
  auto h = hyperplane_through(basis);
  if (!h) return std::nullopt;
  for (const auto& p : points) {
    if (h->side(p) != 0) return std::nullopt;
  }
  const int s = h->side(inside);
  if (s == 0) return std::nullopt;
  if (s > 0) return h->flipped();
  return h;
}

FaceLattice::FaceLattice(int dim, int num_vertices, std::vector<Face> faces)
    : dim_(dim), num_vertices_(num_vertices), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == k) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> FaceLattice::find(const std::vector<int>& vertices) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].vertices == vertices) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

int permutation_sign(std::vector<int> values) {
  int s = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[j] < values[i]) s = -s;
    }
  }
  return s;
}

namespace {

std::vector<Point> gather(std::span<const Point> vertices, const std::vector<int>& idx) {
  std::vector<Point> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(vertices[i]);
  return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes_sorted(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Sum of the supporting inequalities of all facets containing the face; its
// tight set among the vertices is exactly the intersection of those facets.
Hyperplane witness_for(const std::vector<int>& face, const std::vector<Face>& facets,
                       std::size_t dim) {
  Hyperplane w{std::vector<Rational>(dim), 0};
  for (const auto& f : facets) {
    if (!includes_sorted(f.vertices, face)) continue;
    for (std::size_t j = 0; j < dim; ++j) w.normal[j] += f.support.normal[j];
    w.offset += f.support.offset;
  }
  return w;
}

std::vector<int> tight_set(const Hyperplane& h, std::span<const Point> vertices) {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (h.side(vertices[i]) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

FaceLattice close_lattice(std::span<const Point> vertices, std::vector<Face> facets) {
  const std::size_t d = vertices[0].dim();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> order;
  for (const auto& f : facets) {
    if (seen.insert(f.vertices).second) order.push_back(f.vertices);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& f : facets) {
      auto inter = intersect_sorted(order[i], f.vertices);
      if (inter.empty()) continue;
      if (seen.insert(inter).second) order.push_back(inter);
    }
  }
  std::vector<Face> faces;
  for (const auto& vs : order) {
    Face face;
    face.vertices = vs;
    auto pts = gather(vertices, vs);
    face.dim = affine_rank(pts);
    face.support = witness_for(vs, facets, d);
    faces.push_back(std::move(face));
  }
  const int n = static_cast<int>(vertices.size());
  for (int v = 0; v < n; ++v) {
    if (!seen.count({v})) {
      throw InvalidInput("vertex " + std::to_string(v) + " " + to_string(vertices[v]) +
                         " is not an extreme point (points not in convex position)");
    }
  }
  return FaceLattice(static_cast<int>(d), n, std::move(faces));
}

void require_full_dimensional(std::span<const Point> vertices) {
  if (vertices.empty()) throw InvalidInput("polytope without vertices");
  const std::size_t d = vertices[0].dim();
  require_same_dim(vertices, d);
  if (d == 0) throw InvalidInput("dimension must be at least 1");
  if (affine_rank(vertices) != static_cast<int>(d)) {
    throw InvalidInput("affine hull dimension differs from ambient dimension " +
                       std::to_string(d));
  }
  std::set<Point> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) throw InvalidInput("repeated polytope vertex");
}

}  // namespace

FaceLattice face_lattice(std::span<const Point> vertices) {
  require_full_dimensional(vertices);
  const std::size_t d = vertices[0].dim();
  if (d > 3) {
    throw InvalidInput("face lattice is computed only for dimension <= 3; supply faces explicitly");
  }
  const int n = static_cast<int>(vertices.size());
  std::map<std::vector<int>, Face> facets;
  for (const auto& subset : combinations(n, static_cast<int>(d))) {
    auto pts = gather(vertices, subset);
    auto h = hyperplane_through(pts);
    if (!h) continue;
    bool has_pos = false, has_neg = false;
    for (const auto& v : vertices) {
      const int s = h->side(v);
      has_pos |= s > 0;
      has_neg |= s < 0;
    }
    if (has_pos && has_neg) continue;
    if (has_pos) h = h->flipped();
    auto tight = tight_set(*h, vertices);
    if (!facets.count(tight)) {
      facets.emplace(tight, Face{tight, static_cast<int>(d) - 1, *h});
    }
  }
  std::vector<Face> list;
  for (auto& [k, f] : facets) list.push_back(std::move(f));
  return close_lattice(vertices, std::move(list));
}

FaceLattice check_face_lattice(std::span<const Point> vertices,
                               const std::vector<std::vector<int>>& supplied) {
  require_full_dimensional(vertices);
  const std::size_t d = vertices[0].dim();
  const int n = static_cast<int>(vertices.size());
  std::set<std::vector<int>> faces;
  for (auto f : supplied) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw InvalidInput("empty face in supplied lattice");
    for (int v : f) {
      if (v < 0 || v >= n) throw InvalidInput("face vertex index out of range");
    }
    if (static_cast<int>(f.size()) == n) continue;  // the polytope itself
    faces.insert(f);
  }
  Point centroid(d);
  for (const auto& v : vertices) centroid += v;
  centroid *= ratio(1, n);

  std::vector<Face> facets;
  std::map<std::vector<int>, int> dims;
  for (const auto& f : faces) {
    auto pts = gather(vertices, f);
    const int k = affine_rank(pts);
    if (k >= static_cast<int>(d)) throw InvalidInput("supplied face is full-dimensional");
    dims[f] = k;
    if (k == static_cast<int>(d) - 1) {
      auto h = oriented_hyperplane(pts, centroid);
      if (!h) throw InvalidInput("supplied facet is not planar");
      if (tight_set(*h, vertices) != f) {
        throw InvalidInput("supplied facet does not match its supporting hyperplane");
      }
      for (const auto& v : vertices) {
        if (h->side(v) > 0) throw InvalidInput("supplied facet hyperplane does not support the polytope");
      }
      facets.push_back(Face{f, k, *h});
    }
  }
  for (const auto& a : faces) {
    for (const auto& b : faces) {
      auto inter = intersect_sorted(a, b);
      if (!inter.empty() && !faces.count(inter)) {
        throw InvalidInput("supplied lattice is not closed under intersection");
      }
    }
    if (dims[a] > 0) {
      bool has_lower = false;
      for (const auto& b : faces) {
        if (dims[b] == dims[a] - 1 && includes_sorted(a, b)) has_lower = true;
      }
      if (!has_lower) throw InvalidInput("supplied lattice is not graded");
    }
  }
  auto lattice = close_lattice(vertices, facets);
  if (lattice.faces().size() != faces.size()) {
    throw InvalidInput("supplied faces are not exactly the intersections of the facets");
  }
  for (const auto& face : lattice.faces()) {
    if (tight_set(face.support, vertices) != face.vertices) {
      throw InvalidInput("supplied face inconsistent with vertex coordinates");
    }
  }
  return lattice;
}

}  // namespace sperner

namespace sperner {

namespace {

using FaceKey = std::vector<int>;

std::vector<std::vector<int>> pull(const FaceLattice& lattice, const FaceKey& face, int dim,
                                   std::map<FaceKey, std::vector<std::vector<int>>>& memo) {
  if (auto it = memo.find(face); it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (dim == 0) {
    out.push_back({face.front()});
  } else {
    const int apex = face.front();
    for (const auto& sub : lattice.faces()) {
      if (sub.dim != dim - 1) continue;
      if (!std::includes(face.begin(), face.end(), sub.vertices.begin(), sub.vertices.end())) continue;
      if (std::binary_search(sub.vertices.begin(), sub.vertices.end(), apex)) continue;
      for (auto s : pull(lattice, sub.vertices, dim - 1, memo)) {
        s.insert(s.begin(), apex);
        out.push_back(std::move(s));
      }
    }
  }
  memo.emplace(face, out);
  return out;
}

}  // namespace

std::vector<std::vector<int>> pulling_triangulation(const FaceLattice& lattice,
                                                    const std::vector<int>& face) {
  std::map<FaceKey, std::vector<std::vector<int>>> memo;
  int dim = lattice.dim();
  if (static_cast<int>(face.size()) != lattice.num_vertices()) {
    auto idx = lattice.find(face);
    if (!idx) throw InvalidInput("not a face of the lattice");
    dim = lattice.face(*idx).dim;
  }
  return pull(lattice, face, dim, memo);
}

std::vector<std::vector<int>> pulling_triangulation(const FaceLattice& lattice) {
  std::vector<int> all(lattice.num_vertices());
  for (int i = 0; i < lattice.num_vertices(); ++i) all[i] = i;
  return pulling_triangulation(lattice, all);
}

}  // namespace sperner
