#include <doctest.h>

#include <regex>

#include "generators.hpp"
#include "sperner/error.hpp"
#include "sperner/instance.hpp"

using namespace sperner;
using testgen::Rng;

namespace {

std::string data(const std::string& name) { return std::string(SPERNER_TEST_DATA) + "/" + name; }

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("instance files load") {
  auto sq = read_instance_file(data("square_diagonal.json"));
  CHECK(sq.dimension == 2);
  auto d = sq.decomposition();
  CHECK(d.cells().size() == 2);
  CHECK(validate_decomposition(d).ok());
  CHECK(sq.labeling().label_count == 4);

  auto mid = read_instance_file(data("triangle_midpoint.json"));
  CHECK(mid.decomposition().pool().size() == 6);
  CHECK(check_sperner_parity(mid.decomposition(), mid.labeling()).odd);

  CHECK_THROWS_AS(read_instance_file(data("missing.json")), ParseError);
}

TEST_CASE("instance parse errors") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"dimension": 2})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"dimension": 1, "polytope": {"vertices": [["0"], ["1/0"]]},
                                     "pool": [["0"], ["1"]], "cells": [[0, 1]], "labels": [1, 2]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"dimension": 1, "polytope": {"vertices": [["0"], ["1"]]},
                                     "pool": [["0"], ["1"]], "cells": [[0, "a"]], "labels": [1, 2]})"),
                  ParseError);
  auto ok = parse_instance(R"({"dimension": 1, "polytope": {"vertices": [[0], ["1"]]},
                                "pool": [[0], ["1"]], "cells": [[0, 1]], "labels": [1, 2]})");
  CHECK(ok.vertices.size() == 2);
}

TEST_CASE("property: instances round-trip through JSON") {
  Rng rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = testgen::atanassov_case(rng, trial % 3 == 2 ? 3 : 2, 5, 1);
    auto inst = make_instance(c.decomposition, c.labeling);
    const auto text = serialize_instance(inst);
    auto back = parse_instance(text);
    CHECK(serialize_instance(back) == text);
    CHECK(back.pool == c.decomposition.pool());
    CHECK(back.cells == c.decomposition.cells());
    CHECK(back.labels == c.labeling.labels);
    CHECK(completely_labeled_cells(back.decomposition(), back.labeling(), CompleteMode::simplex) ==
          completely_labeled_cells(c.decomposition, c.labeling, CompleteMode::simplex));
  }
}

TEST_CASE("svg rendering") {
  auto mid = read_instance_file(data("triangle_midpoint.json"));
  const auto svg = render_svg(mid.decomposition(), mid.labeling());
  CHECK(svg == render_svg(mid.decomposition(), mid.labeling()));
  CHECK(occurrences(svg, "<polygon") == 4);
  CHECK(occurrences(svg, "<circle") == 6);
  CHECK(occurrences(svg, "<text") == 6);
  CHECK(occurrences(svg, "class=\"cell complete\"") == 1);
  CHECK(std::regex_search(svg, std::regex("viewBox=\"0 0 400 400\"")));

  auto sq = read_instance_file(data("square_diagonal.json"));
  CHECK(occurrences(render_svg(sq.decomposition(), sq.labeling()), "class=\"cell complete\"") == 2);

  auto tet = Decomposition::triangulated(Polytope::standard_simplex(3));
  Labeling phi;
  phi.labels = {1, 2, 3, 4};
  phi.label_count = 4;
  CHECK_THROWS_AS(render_svg(tet, phi), InvalidInput);
}
