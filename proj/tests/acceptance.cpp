// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "sperner/cover.hpp"
#include "sperner/fixedpoint.hpp"

using namespace sperner;
using testgen::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t instances = 0;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    note = what;
  }
};

bool run(int number, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) out.require(seconds < limit_seconds, "over the time limit");
  char timing[64];
  if (limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.1f s, limit %.0f s", seconds, limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.1f s", seconds);
  }
  std::cout << (out.pass ? "PASS" : "FAIL") << " " << number << " " << name << " (" << out.instances
            << " instances, " << timing << ")";
  if (!out.note.empty()) std::cout << ": " << out.note;
  std::cout << std::endl;
  return out.pass;
}

long sum(const std::vector<int>& xs) { return std::accumulate(xs.begin(), xs.end(), 0L); }

// Instances reused by the degree and oracle criteria.
std::vector<testgen::AtanassovCase> atanassov_corpus;
std::vector<testgen::SpernerCase> planar_sperner;
std::vector<Realization> planar_realizations;
std::vector<testgen::NeighborCase> neighbor_corpus;

void sperner_parity(Outcome& out) {
  Rng rng(1001);
  for (int d = 1; d <= 3; ++d) {
    for (int refinement = 1; refinement <= 4; ++refinement) {
      const int reps = d == 3 && refinement == 3 ? 10 : 20;
      for (int rep = 0; rep < reps; ++rep) {
        auto c = testgen::sperner_case(rng, d, refinement);
        out.require(validate_sperner(c.decomposition, c.labeling).ok(), "generator produced an invalid labeling");
        out.require(check_sperner_parity(c.decomposition, c.labeling).odd, "even count on " + c.description);
        ++out.instances;
        if (d == 2 && c.decomposition.cells().size() <= 50) planar_sperner.push_back(std::move(c));
      }
    }
  }
  out.require(out.instances >= 200, "too few instances");
}

void atanassov_bound(Outcome& out) {
  Rng rng(1002);
  for (int n = 4; n <= 8; ++n) {
    for (int rep = 0; rep < 16; ++rep) atanassov_corpus.push_back(testgen::atanassov_case(rng, 2, n, rep % 3));
  }
  for (int n = 5; n <= 6; ++n) {
    for (int rep = 0; rep < 12; ++rep) atanassov_corpus.push_back(testgen::atanassov_case(rng, 3, n, rep % 2));
  }
  for (const auto& c : atanassov_corpus) {
    out.require(validate_atanassov(c.decomposition, c.labeling).ok(), "generator produced an invalid labeling");
    auto b = check_atanassov_bound(c.decomposition, c.labeling);
    const std::size_t n = c.decomposition.host().num_vertices();
    out.require(b.bound == n - static_cast<std::size_t>(c.decomposition.dim()), "wrong bound");
    out.require(b.count >= b.bound, "count below n-d on " + c.description);
    ++out.instances;
  }
  out.require(out.instances >= 100, "too few instances");
}

void degree_identities(Outcome& out) {
  for (const auto& c : atanassov_corpus) {
    auto r = Realization::onto_host(c.decomposition, c.labeling);
    auto ids = verify_degree_identities(r);
    out.require(ids.consistent && ids.degree == 1 && ids.boundary_degree == 1 && ids.cell_sum == 1,
                "degree identities fail on " + c.description);
    const auto values = pick_regular_values(r, 3);
    out.require(values.size() == 3, "fewer than 3 regular values");
    for (const auto& p : values) out.require(sum(cell_signs_at(r, p)) == 1, "degree depends on the regular value");
    if (c.decomposition.dim() == 2 && c.decomposition.cells().size() <= 50) planar_realizations.push_back(r);
    ++out.instances;
  }
}

void generalized_bound(Outcome& out) {
  Rng rng(1004);
  for (int rep = 0; rep < 24; ++rep) {
    auto c = testgen::mirrored_case(rng, 2 + rep % 3, rep % 3 == 2 ? 2 : rep % 2);
    out.require(validate_decomposition(c.realization.source()).ok(), "mirrored decomposition invalid");
    auto ids = verify_degree_identities(c.realization);
    out.require(ids.consistent && ids.boundary_degree == 0, "boundary degree not 0 on " + c.description);
    auto g = check_generalized_bound(c.realization);
    out.require(g.parity_checked && g.parity_ok && g.count % 2 == 0, "odd count on " + c.description);
    if (c.realization.source().cells().size() <= 50) planar_realizations.push_back(c.realization);
    ++out.instances;
  }
  out.require(out.instances >= 20, "too few instances");
}

Point pt(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

// No k-subset of vertex-spanned simplices covers p, for every k < limit.
bool no_smaller_cover(const Polytope& p, std::size_t limit) {
  const auto all = vertex_spanned_simplices(p);
  for (std::size_t k = 1; k < limit; ++k) {
    for (const auto& pick : combinations(static_cast<int>(all.size()), static_cast<int>(k))) {
      std::vector<Simplex> family;
      for (int i : pick) {
        Simplex s;
        for (int v : all[i]) s.push_back(p.vertex(v));
        family.push_back(std::move(s));
      }
      if (is_cover(p, family).covers) return false;
    }
  }
  return true;
}

void covering_numbers(Outcome& out) {
  std::vector<std::pair<std::string, Polytope>> cases{
      {"triangle", Polytope::standard_simplex(2)},
      {"quadrilateral", Polytope::from_vertices({pt(0, 0), pt(2, 0), pt(3, 2), pt(0, 1)})},
      {"pentagon", Polytope::from_vertices({pt(0, 0), pt(2, 0), pt(3, 2), pt(1, 4), pt(-1, 2)})},
      {"hexagon", Polytope::from_vertices({pt(0, 0), pt(2, 0), pt(3, 2), pt(2, 4), pt(0, 4), pt(-1, 2)})},
  };
  for (std::uint64_t seed : {11u, 12u}) {
    cases.emplace_back("stacked n=5 seed=" + std::to_string(seed), stacked_polytope(3, 5, seed).polytope);
    cases.emplace_back("stacked n=6 seed=" + std::to_string(seed), stacked_polytope(3, 6, seed).polytope);
  }
  for (const auto& [name, p] : cases) {
    const std::size_t target = p.num_vertices() - static_cast<std::size_t>(p.dim());
    auto cert = min_vertex_spanned_cover(p, target + 1);
    out.require(cert.covers && cert.size == target, name + ": cover size " + std::to_string(cert.size));
    out.require(is_cover(p, cert.simplices).covers, name + ": certificate does not cover");
    out.require(no_smaller_cover(p, target), name + ": brute force found a smaller cover");
    ++out.instances;
  }
}

void neighbor_lemma(Outcome& out) {
  Rng rng(1006);
  for (int attempt = 0; attempt < 2000 && neighbor_corpus.size() < 60; ++attempt) {
    auto c = testgen::neighbor_case(rng, 3 + attempt % 4);
    if (c) neighbor_corpus.push_back(std::move(*c));
  }
  for (const auto& c : neighbor_corpus) {
    auto e = check_neighbor_lemma(c.decomposition, c.labeling, SimilaritySpec::from_host(c.decomposition, c.labeling));
    out.require(e.count >= 1, "no complete cell on " + c.description);
    ++out.instances;
  }
  out.require(out.instances >= 50, "too few valid neighbor instances");
}

void fixed_point(Outcome& out) {
  const auto f = SelfMap::parse("(x1 + 1/3)/2; (x2 + 1/3)/2; (x3 + 1/3)/2");
  auto r = find_fixed_point(f, 10, 2, ratio(1, 1L << 40));
  Rational dist;
  for (const auto& x : r.witness) dist = std::max(dist, Rational(abs(x - ratio(1, 3))));
  out.require(r.depth == 10, "stopped early");
  out.require(dist <= ratio(1, 512), "witness at distance " + to_string(dist));
  ++out.instances;

  const auto simplex = Decomposition::triangulated(Polytope::standard_simplex(2));
  for (int depth = 0; depth <= 6; ++depth) {
    const int n = 1 << depth;
    auto grid = n == 1 ? simplex : edgewise_subdivide(simplex, n);
    auto phi = induced_labeling(f, grid);
    const auto complete = completely_labeled_cells(grid, phi, CompleteMode::simplex);
    const auto walk = door_to_door_search(grid, phi);
    out.require(std::binary_search(complete.begin(), complete.end(), walk.cell),
                "walk ends off the enumeration at depth " + std::to_string(depth));
    ++out.instances;
  }
}

void oracle_equivalence(Outcome& out) {
  for (const auto& c : planar_sperner) {
    auto r = Realization::onto_host(c.decomposition, c.labeling);
    planar_realizations.push_back(r);
  }
  for (const auto& r : planar_realizations) {
    const auto rep = degree(r);
    out.require(rep.degree == oracle::winding_number(r, rep.regular_value), "counting and winding disagree");
    const auto& d = r.source();
    for (auto mode : {CompleteMode::simplex, CompleteMode::full}) {
      out.require(completely_labeled_cells(d, r.labeling(), mode) == oracle::complete_cells(d, r.labeling(), mode),
                  "complete cells differ from the naive scan");
    }
    ++out.instances;
  }
  for (const auto& c : neighbor_corpus) {
    if (c.decomposition.cells().size() > 50) continue;
    out.require(completely_labeled_cells(c.decomposition, c.labeling, CompleteMode::full) ==
                    oracle::complete_cells(c.decomposition, c.labeling, CompleteMode::full),
                "complete cells differ from the naive scan");
    ++out.instances;
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "sperner_parity", 60, sperner_parity);
  ok &= run(2, "atanassov_bound", 120, atanassov_bound);
  ok &= run(3, "degree_identities", 120, degree_identities);
  ok &= run(4, "generalized_bound_parity", 0, generalized_bound);
  ok &= run(5, "covering_numbers", 300, covering_numbers);
  ok &= run(6, "neighbor_lemma", 0, neighbor_lemma);
  ok &= run(7, "fixed_point", 60, fixed_point);
  ok &= run(8, "oracle_equivalence", 0, oracle_equivalence);
  return ok ? 0 : 1;
}
