#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "sperner/error.hpp"

using namespace sperner;
using testgen::Rng;

namespace {

Point pt(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

Polytope unit_square() { return Polytope::from_vertices({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}); }

Labeling labels(std::vector<int> ls, int count) {
  Labeling phi;
  phi.labels = std::move(ls);
  phi.label_count = count;
  return phi;
}

// Pool: corners 0..2, then midpoints of {0,1}, {1,2}, {0,2}.
Decomposition midpoint_triangle() {
  return Decomposition(Polytope::standard_simplex(2),
                       {pt(0, 0), pt(1, 0), pt(0, 1), pt(ratio(1, 2), 0), pt(ratio(1, 2), ratio(1, 2)),
                        pt(0, ratio(1, 2))},
                       {{0, 3, 5}, {3, 1, 4}, {5, 4, 2}, {3, 4, 5}});
}

// Pool: corners 0..3, bottom midpoint 4, center 5.
Decomposition square_star() {
  return Decomposition(unit_square(), {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), pt(ratio(1, 2), 0),
                                       pt(ratio(1, 2), ratio(1, 2))},
                       {{0, 4, 5}, {4, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 0, 5}});
}

// Three vertical strips; pool 4, 5 on the bottom edge and 6, 7 above them.
Decomposition square_strips() {
  return Decomposition(unit_square(),
                       {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), pt(ratio(1, 3), 0), pt(ratio(2, 3), 0),
                        pt(ratio(1, 3), 1), pt(ratio(2, 3), 1)},
                       {{0, 4, 6, 3}, {4, 5, 7, 6}, {5, 1, 2, 7}});
}

bool has_kind(const LabelingReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("carrier examples") {
  auto sq = unit_square();
  auto v = sq.carrier(pt(0, 0));
  REQUIRE(v);
  CHECK(sq.face(*v).vertices == std::vector<int>{0});
  auto e = sq.carrier(pt(ratio(1, 2), 0));
  REQUIRE(e);
  CHECK(sq.face(*e).vertices == std::vector<int>{0, 1});
  CHECK_FALSE(sq.carrier(pt(ratio(1, 2), ratio(1, 2))));
  CHECK_THROWS_AS(sq.carrier(pt(2, 0)), InvalidInput);
}

TEST_CASE("validate_sperner examples") {
  auto d = midpoint_triangle();
  CHECK(validate_sperner(d, labels({1, 2, 3, 1, 2, 3}, 3)).ok());
  auto bad = validate_sperner(d, labels({1, 2, 3, 3, 2, 3}, 3));
  CHECK(has_kind(bad, "label_not_on_carrier"));
  CHECK(bad.violations.size() == 1);
  CHECK(bad.violations.front().vertices == std::vector<int>{3});

  auto fan = Decomposition(Polytope::standard_simplex(2),
                           {pt(0, 0), pt(1, 0), pt(0, 1), pt(ratio(1, 4), ratio(1, 4))},
                           {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
  for (int l = 1; l <= 3; ++l) CHECK(validate_sperner(fan, labels({1, 2, 3, l}, 3)).ok());
  CHECK_FALSE(validate_sperner(fan, labels({1, 1, 3, 2}, 3)).ok());
  CHECK_FALSE(validate_sperner(Decomposition::triangulated(unit_square()), labels({1, 2, 3, 4}, 4)).ok());
}

TEST_CASE("validate_atanassov examples") {
  auto d = square_star();
  CHECK(validate_atanassov(d, labels({1, 2, 3, 4, 2, 1}, 4)).ok());
  CHECK(validate_atanassov(d, labels({1, 2, 3, 4, 1, 4}, 4)).ok());
  CHECK(has_kind(validate_atanassov(d, labels({1, 2, 3, 4, 4, 1}, 4)), "label_not_on_carrier"));
  CHECK(has_kind(validate_atanassov(d, labels({1, 1, 3, 4, 1, 1}, 4)), "host_labels"));
}

TEST_CASE("validate_nondegenerate examples") {
  auto d = square_star();
  CHECK(validate_nondegenerate(d, labels({1, 2, 3, 4, 2, 3}, 4)).ok());
  auto bad = validate_nondegenerate(d, labels({1, 2, 3, 4, 3, 1}, 4));
  CHECK(has_kind(bad, "degenerate_facet"));
}

TEST_CASE("validate_neighbor_labeling examples") {
  auto tri = Decomposition::single_cell(Polytope::standard_simplex(2));
  auto id = labels({1, 2, 3}, 3);
  CHECK(validate_neighbor_labeling(tri, id, SimilaritySpec::from_host(tri, id)).ok());

  auto d = square_strips();
  auto good = labels({1, 2, 3, 4, 1, 2, 4, 3}, 4);
  auto sim = SimilaritySpec::from_host(d, good);
  CHECK(validate_neighbor_labeling(d, good, sim).ok());
  auto bad = labels({1, 2, 3, 4, 1, 3, 4, 3}, 4);
  auto r = validate_neighbor_labeling(d, bad, sim);
  CHECK_FALSE(r.ok());
  CHECK(has_kind(r, "labels_not_similar"));

  CHECK(sim.level(1, 2) == 1);
  CHECK(sim.level(1, 3) == 2);
  CHECK(sim.level(2, 2) == 0);
  CHECK(sim.similar(4, 1, 1));
  CHECK_FALSE(sim.similar(2, 4, 1));
}

TEST_CASE("completely labeled cell examples") {
  auto d = midpoint_triangle();
  auto phi = labels({1, 2, 3, 1, 2, 3}, 3);
  CHECK(completely_labeled_cells(d, phi, CompleteMode::simplex) == std::vector<std::size_t>{3});
  auto parity = check_sperner_parity(d, phi);
  CHECK(parity.count == 1);
  CHECK(parity.odd);

  auto single = Decomposition::triangulated(Polytope::standard_simplex(3));
  auto p1 = check_sperner_parity(single, labels({1, 2, 3, 4}, 4));
  CHECK(p1.count == 1);
  CHECK(p1.odd);

  auto sq = Decomposition::triangulated(unit_square());
  auto sq_phi = labels({1, 2, 3, 4}, 4);
  CHECK(completely_labeled_cells(sq, sq_phi, CompleteMode::simplex).size() == 2);
  auto b = check_atanassov_bound(sq, sq_phi);
  CHECK(b.count == 2);
  CHECK(b.bound == 2);
  CHECK(b.satisfied);

  auto repeated = labels({1, 2, 3, 1, 1, 3}, 3);
  for (auto c : completely_labeled_cells(d, repeated, CompleteMode::simplex)) {
    std::set<int> seen;
    for (int v : d.cells()[c]) seen.insert(repeated.labels[v]);
    CHECK(seen.size() == 3);
  }
  CHECK_THROWS_AS(check_sperner_parity(d, labels({1, 2, 3, 3, 2, 3}, 3)), InvalidInput);
}

TEST_CASE("pentagon fan meets the bound exactly") {
  auto pent = Polytope::from_vertices({pt(0, 0), pt(2, 0), pt(3, 2), pt(1, 4), pt(-1, 2)});
  auto d = Decomposition::triangulated(pent);
  REQUIRE(d.cells().size() == 3);
  auto b = check_atanassov_bound(d, labels({1, 2, 3, 4, 5}, 5));
  CHECK(b.count == 3);
  CHECK(b.bound == 3);
  CHECK(b.satisfied);
  auto tri = Decomposition::triangulated(Polytope::standard_simplex(2));
  CHECK(check_atanassov_bound(tri, labels({2, 3, 1}, 3)).bound == 1);
}

TEST_CASE("neighbor lemma examples") {
  auto sq = Decomposition::single_cell(unit_square());
  auto id = labels({1, 2, 3, 4}, 4);
  auto e = check_neighbor_lemma(sq, id, SimilaritySpec::from_host(sq, id));
  CHECK(e.count == 1);
  CHECK(e.satisfied);

  auto d = square_strips();
  auto phi = labels({1, 2, 3, 4, 1, 2, 4, 3}, 4);
  CHECK(completely_labeled_cells(d, phi, CompleteMode::full) == std::vector<std::size_t>{1});
  CHECK(check_neighbor_lemma(d, phi, SimilaritySpec::from_host(d, phi)).count == 1);
  auto bad = labels({1, 2, 3, 4, 1, 3, 4, 3}, 4);
  CHECK_THROWS_AS(check_neighbor_lemma(d, bad, SimilaritySpec::from_host(d, bad)), InvalidInput);
}

TEST_CASE("labeling checks reject malformed labelings") {
  Labeling phi = labels({1, 2, 5}, 3);
  CHECK_THROWS_AS(phi.check(3), InvalidInput);
  phi = labels({1, 2}, 3);
  CHECK_THROWS_AS(phi.check(3), InvalidInput);
  phi = labels({1, 2, 3}, 3);
  phi.target_assignment = {0, 1, 1};
  CHECK_THROWS_AS(phi.check(3), InvalidInput);
}

TEST_CASE("property: carriers of relative-interior points") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto poly = testgen::circle_polygon(rng, testgen::uniform(rng, 3, 7));
    const auto& faces = poly.lattice().faces();
    const auto& f = faces[testgen::uniform(rng, 0, static_cast<int>(faces.size()) - 1)];
    Point p(2);
    Rational total;
    for (int v : f.vertices) {
      Rational w = testgen::uniform(rng, 1, 9);
      p += poly.vertex(v) * w;
      total += w;
    }
    p = p * (1 / total);
    auto c = poly.carrier(p);
    REQUIRE(c);
    CHECK(poly.face(*c).vertices == f.vertices);
  }
}

TEST_CASE("property: Sperner parity is odd on random instances") {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 3;
    auto c = testgen::sperner_case(rng, d, trial % 5 == 4 ? 4 : 1 + trial % (d == 3 ? 2 : 3));
    REQUIRE(validate_sperner(c.decomposition, c.labeling).ok());
    auto r = check_sperner_parity(c.decomposition, c.labeling);
    CHECK_MESSAGE(r.odd, c.description);
    CHECK(r.count == oracle::complete_cells(c.decomposition, c.labeling, CompleteMode::simplex).size());
  }
}

TEST_CASE("property: Atanassov-valid labelings are nondegenerate and meet the bound") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const bool polygon = trial % 4 != 3;
    const int n = polygon ? testgen::uniform(rng, 4, 8) : testgen::uniform(rng, 5, 6);
    auto c = testgen::atanassov_case(rng, polygon ? 2 : 3, n, polygon ? 1 : 0);
    REQUIRE(validate_atanassov(c.decomposition, c.labeling).ok());
    CHECK_MESSAGE(validate_nondegenerate(c.decomposition, c.labeling).ok(), c.description);
    auto b = check_atanassov_bound(c.decomposition, c.labeling);
    CHECK(b.bound == static_cast<std::size_t>(n - c.decomposition.dim()));
    CHECK_MESSAGE(b.satisfied, c.description);
  }
}

TEST_CASE("property: label permutations preserve complete cells") {
  Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = testgen::atanassov_case(rng, 2, testgen::uniform(rng, 4, 7), 1);
    std::vector<int> sigma(c.labeling.label_count);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Labeling renamed = c.labeling;
    for (auto& l : renamed.labels) l = sigma[l - 1];
    for (auto mode : {CompleteMode::simplex, CompleteMode::full}) {
      CHECK(completely_labeled_cells(c.decomposition, c.labeling, mode) ==
            completely_labeled_cells(c.decomposition, renamed, mode));
    }
    CHECK(validate_atanassov(c.decomposition, renamed).ok());
  }
}

TEST_CASE("property: serial and parallel complete-cell scans agree") {
  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = testgen::sperner_case(rng, 2 + trial % 2, 2);
    for (auto& l : c.labeling.labels) {
      if (testgen::uniform(rng, 0, 3) == 0) l = testgen::uniform(rng, 1, c.labeling.label_count);
    }
    for (auto mode : {CompleteMode::simplex, CompleteMode::full}) {
      auto serial = completely_labeled_cells(c.decomposition, c.labeling, mode, Exec::serial);
      CHECK(serial == completely_labeled_cells(c.decomposition, c.labeling, mode, Exec::parallel));
      CHECK(serial == oracle::complete_cells(c.decomposition, c.labeling, mode));
    }
  }
}

TEST_CASE("property: similarity is symmetric and graded") {
  Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = Decomposition::triangulated(testgen::circle_polygon(rng, testgen::uniform(rng, 3, 8)));
    auto phi = testgen::random_admissible(rng, d);
    auto sim = SimilaritySpec::from_host(d, phi);
    const int n = sim.label_count();
    for (int a = 1; a <= n; ++a) {
      CHECK(sim.level(a, a) == 0);
      for (int b = 1; b <= n; ++b) {
        CHECK(sim.level(a, b) == sim.level(b, a));
        if (a != b) CHECK(sim.level(a, b) >= 1);
        for (int k = 0; k < 2; ++k) {
          if (sim.similar(a, b, k)) CHECK(sim.similar(a, b, k + 1));
        }
      }
    }
  }
}

TEST_CASE("property: random neighbor instances have a complete cell") {
  Rng rng(37);
  int accepted = 0;
  for (int trial = 0; trial < 60 && accepted < 15; ++trial) {
    auto c = testgen::neighbor_case(rng, testgen::uniform(rng, 3, 6));
    if (!c) continue;
    ++accepted;
    auto e = check_neighbor_lemma(c->decomposition, c->labeling,
                                  SimilaritySpec::from_host(c->decomposition, c->labeling));
    CHECK_MESSAGE(e.count >= 1, c->description);
  }
  CHECK(accepted >= 5);
}
