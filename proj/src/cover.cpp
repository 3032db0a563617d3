#include "sperner/cover.hpp"

#include <algorithm>
#include <random>

#include "sperner/error.hpp"
#include "sperner/region.hpp"

namespace sperner {

namespace {

ConvexRegion as_region(const Polytope& p) {
  std::vector<Hyperplane> hs;
  for (auto f : p.facets()) hs.push_back(p.face(f).support);
  return ConvexRegion(static_cast<std::size_t>(p.dim()), std::move(hs));
}

// P \ S = union over j of P & {h_1 <= 0, ..., h_{j-1} <= 0, h_j >= 0}; the
// pieces are interior-disjoint, so volumes add.
std::vector<ConvexRegion> subtract(const std::vector<ConvexRegion>& pieces, const Simplex& s) {
  const auto hs = simplex_halfspaces(s);
  std::vector<ConvexRegion> out;
  for (const auto& piece : pieces) {
    ConvexRegion inside = piece;
    for (const auto& h : hs) {
      auto outside = inside.clipped(h.flipped());
      if (outside.full_dimensional()) out.push_back(std::move(outside));
      inside = inside.clipped(h);
      if (!inside.full_dimensional()) break;
    }
  }
  return out;
}

Rational residual(const ConvexRegion& whole, const std::vector<Simplex>& simplices) {
  std::vector<ConvexRegion> pieces{whole};
  for (const auto& s : simplices) {
    if (affine_rank(s) < static_cast<int>(whole.dim())) continue;
    pieces = subtract(pieces, s);
    if (pieces.empty()) break;
  }
  Rational total;
  for (const auto& piece : pieces) total += piece.volume();
  return total;
}

Simplex gather(const Polytope& p, const std::vector<int>& idx) {
  Simplex s;
  for (int i : idx) s.push_back(p.vertex(i));
  return s;
}

}  // namespace

CoverCheck is_cover(const Polytope& p, const std::vector<Simplex>& simplices) {
  const int d = p.dim();
  if (d > 3) throw InvalidInput("cover checks need dimension at most 3");
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& s = simplices[i];
    if (s.size() != static_cast<std::size_t>(d) + 1) {
      throw InvalidInput("simplex " + std::to_string(i) + " needs " + std::to_string(d + 1) + " points");
    }
    for (const auto& pt : s) {
      if (pt.dim() != static_cast<std::size_t>(d)) throw InvalidInput("simplex point dimension mismatch");
      if (!p.contains(pt)) {
        throw InvalidInput("simplex " + std::to_string(i) + " leaves the polytope at " + to_string(pt));
      }
    }
  }
  CoverCheck out;
  out.uncovered = residual(as_region(p), simplices);
  out.covers = sgn(out.uncovered) == 0;
  return out;
}

std::vector<std::vector<int>> vertex_spanned_simplices(const Polytope& p) {
  std::vector<std::vector<int>> out;
  for (auto& c : combinations(static_cast<int>(p.num_vertices()), p.dim() + 1)) {
    if (affine_rank(gather(p, c)) == p.dim()) out.push_back(std::move(c));
  }
  return out;
}

CoverCertificate min_vertex_spanned_cover(const Polytope& p, std::size_t budget, Exec exec) {
  const int d = p.dim();
  if (d > 3) throw InvalidInput("cover search needs dimension at most 3");
  const std::size_t n = p.num_vertices();
  const auto candidates = vertex_spanned_simplices(p);
  std::vector<Simplex> simplex(candidates.size());
  std::vector<Rational> volume(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    simplex[i] = gather(p, candidates[i]);
    volume[i] = simplex_volume(simplex[i]);
  }
  const ConvexRegion whole = as_region(p);
  const Rational total = p.volume();

  Rational best = total;
  const std::size_t top = std::min(budget, candidates.size());
  for (std::size_t k = 1; k <= top; ++k) {
    const auto subsets = combinations(static_cast<int>(candidates.size()), static_cast<int>(k));
    // Chunks are scanned in order so the first cover found is the
    // lexicographically smallest; an empty optional means pruned.
    const std::size_t chunk = 256 * static_cast<std::size_t>(exec == Exec::parallel ? worker_count() : 1);
    for (std::size_t start = 0; start < subsets.size(); start += chunk) {
      const std::size_t stop = std::min(subsets.size(), start + chunk);
      std::vector<std::optional<Rational>> res(stop - start);
      for_each_index(exec, stop - start, [&](std::size_t i) {
        const auto& subset = subsets[start + i];
        std::vector<char> seen(n, 0);
        Rational vol;
        for (int c : subset) {
          for (int v : candidates[c]) seen[v] = 1;
          vol += volume[c];
        }
        // Extreme points are never interior to an inscribed simplex.
        if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n) || vol < total) return;
        std::vector<Simplex> chosen;
        for (int c : subset) chosen.push_back(simplex[c]);
        res[i] = residual(whole, chosen);
      });
      for (std::size_t i = 0; i < res.size(); ++i) {
        if (!res[i]) continue;
        if (*res[i] < best) best = *res[i];
        if (sgn(*res[i]) != 0) continue;
        CoverCertificate cert;
        for (int c : subsets[start + i]) {
          cert.vertex_sets.push_back(candidates[c]);
          cert.simplices.push_back(simplex[c]);
        }
        cert.covers = true;
        cert.size = k;
        cert.lower_bound = n - static_cast<std::size_t>(d);
        return cert;
      }
    }
  }
  // Pruned subsets were never clipped; score the last level when it is small.
  const auto last = combinations(static_cast<int>(candidates.size()), static_cast<int>(top));
  if (top > 0 && last.size() <= 20000) {
    std::vector<Rational> res(last.size());
    for_each_index(exec, last.size(), [&](std::size_t s) {
      std::vector<Simplex> chosen;
      for (int c : last[s]) chosen.push_back(simplex[c]);
      res[s] = residual(whole, chosen);
    });
    for (const auto& r : res) best = std::min(best, r);
  }
  throw CoverBudgetExhausted("no vertex-spanned cover with at most " + std::to_string(budget) +
                                 " simplices; best residual " + to_string(best),
                             best);
}

StackedPolytope stacked_polytope(int dim, int n, std::uint64_t seed) {
  if (dim < 1 || dim > 3) throw InvalidInput("stacked polytopes need dimension 1..3");
  if (n < dim + 1) throw InvalidInput("stacked polytope needs n >= d + 1");
  if (dim == 1 && n > 2) throw InvalidInput("a segment cannot be stacked");

  const Polytope base = Polytope::standard_simplex(dim);
  std::vector<Point> vertices = base.vertices();
  std::vector<Cell> cells{Cell{}};
  for (int i = 0; i <= dim; ++i) cells[0].push_back(i);

  struct Facet {
    std::vector<int> vertices;
    Hyperplane outward;
  };
  auto facet_of = [&](std::vector<int> fv, int opposite) {
    std::vector<Point> pts;
    for (int v : fv) pts.push_back(vertices[v]);
    return Facet{std::move(fv), *oriented_hyperplane(pts, vertices[opposite])};
  };
  std::vector<Facet> boundary;
  for (int skip = 0; skip <= dim; ++skip) {
    std::vector<int> fv;
    for (int i = 0; i <= dim; ++i) {
      if (i != skip) fv.push_back(i);
    }
    boundary.push_back(facet_of(std::move(fv), skip));
  }

  std::mt19937_64 rng(seed);
  while (static_cast<int>(vertices.size()) < n) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, boundary.size() - 1)(rng);
    const Facet chosen = boundary[pick];
    Point centre(static_cast<std::size_t>(dim));
    for (int v : chosen.vertices) centre += vertices[v];
    centre *= ratio(1, dim);
    const Point normal(chosen.outward.normal);

    std::optional<Point> apex;
    Rational h(1);
    for (int attempt = 0; attempt < 64 && !apex; ++attempt, h /= 2) {
      Point q = centre + normal * h;
      bool beneath = true;
      for (std::size_t f = 0; f < boundary.size() && beneath; ++f) {
        if (f != pick) beneath = boundary[f].outward.side(q) < 0;
      }
      if (beneath) apex = std::move(q);
    }
    if (!apex) throw InvalidInput("could not stack beyond facet while keeping convexity");

    const int a = static_cast<int>(vertices.size());
    vertices.push_back(*apex);
    Cell cell = chosen.vertices;
    cell.push_back(a);
    cells.push_back(cell);
    boundary.erase(boundary.begin() + static_cast<long>(pick));
    for (std::size_t skip = 0; skip < chosen.vertices.size(); ++skip) {
      std::vector<int> fv;
      for (std::size_t i = 0; i < chosen.vertices.size(); ++i) {
        if (i != skip) fv.push_back(chosen.vertices[i]);
      }
      fv.push_back(a);
      boundary.push_back(facet_of(std::move(fv), chosen.vertices[skip]));
    }
  }

  Polytope poly = Polytope::from_vertices(vertices);
  if (poly.num_vertices() != static_cast<std::size_t>(n)) {
    throw ConsistencyError("stacked polytope lost an extreme point");
  }
  Decomposition decomposition(poly, vertices, cells);
  return {std::move(poly), std::move(decomposition)};
}

}  // namespace sperner
