#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qholonomy/goldman.hpp"
#include "qholonomy/io.hpp"
#include "qholonomy/verify.hpp"

using namespace qholo;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

QLaurent qpow(long n, long d = 1) { return QLaurent::monomial(make_rational(n, d)); }

}  // namespace

TEST_CASE("rational and path JSON") {
  CHECK(to_json(q(-3, 2)).dump() == "[-3,2]");
  CHECK(rational_from_json(Json::parse("[6,4]")) == q(3, 2));
  CHECK_THROWS_AS(rational_from_json(Json::parse("5")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json::parse("[1,0]")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json::parse("\"x\"")), std::invalid_argument);

  const PLPath p({{0, 0}, {q(1, 2), q(-3, 2)}, {2, 1}});
  CHECK(to_json(p).dump() == "[[[0,1],[0,1]],[[1,2],[-3,2]],[[2,1],[1,1]]]");
  CHECK(path_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(path_from_json(Json::parse("[[0,0]]")), std::invalid_argument);
}

TEST_CASE("word and element JSON round trips") {
  const HolonomyWord w{q(1, 2), 3, q(-1, 3)};
  CHECK(word_from_json(to_json(w)) == w);

  const AlgebraElement e = commutator_straight(1, 2, 2, 1) + qpow(1, 3) * t_straight(0, 0);
  CHECK(element_from_json(to_json(e)) == e);
  CHECK(to_json(AlgebraElement{}).dump() == "[]");

  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const PLPath r = random_lattice_path(rng);
    REQUIRE(path_from_json(Json::parse(to_json(r).dump())) == r);
  }
}

TEST_CASE("intersections JSON") {
  const auto pts = enumerate_points({1, 2}, {2, 1});
  const Json j = intersections_to_json(pts, -3);
  CHECK(j["total"] == -3);
  CHECK(j["points"].size() == 3);
  CHECK(intersections_from_json(j) == pts);
}

TEST_CASE("command-line parsers") {
  CHECK(parse_path("0,0 1/2,1 2,1") == PLPath({{0, 0}, {q(1, 2), 1}, {2, 1}}));
  CHECK(parse_loop("-1,2") == StraightLoop(-1, 2));
  CHECK(parse_matrix("S") == ModularMatrix::S());
  CHECK(parse_matrix("T") == ModularMatrix::T());
  CHECK(parse_matrix("I") == ModularMatrix::identity());
  CHECK(parse_matrix("2,1,1,1") == ModularMatrix(2, 1, 1, 1));
  CHECK_THROWS_AS(parse_path("0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("0,0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_loop("1/2,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_loop("0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("2,0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix("X"), std::invalid_argument);
}

TEST_CASE("LaTeX forms") {
  CHECK(to_latex(qpow(-3, 2) - qpow(3, 2)) == "q^{-3/2}-q^{3/2}");
  CHECK(to_latex(LoopClass{3, 3}) == "T(3,3)");
  const AlgebraElement c = commutator_straight(1, 2, 2, 1);
  const LoopClass order[] = {LoopClass{3, 3}, LoopClass{-1, 1}};
  CHECK(to_latex_factored(c, order) == "(q^{-3/2}-q^{3/2})(T(3,3)-T(-1,1))");
  CHECK(to_latex(AlgebraElement{}) == "0");
}

TEST_CASE("text output is deterministic") {
  const BracketReport r = verify_bracket_equality({1, 2}, {2, 1});
  CHECK(to_text(r) == to_text(verify_bracket_equality({1, 2}, {2, 1})));
  CHECK(to_json(r).dump() == to_json(verify_bracket_equality({1, 2}, {2, 1})).dump());
  CHECK(to_text(PLPath({{0, 0}, {q(1, 2), 1}})) == "(0,0) -> (1/2,1)");
}
