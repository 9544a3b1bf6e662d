#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "invol/errors.hpp"
#include "invol/expr.hpp"
#include "invol/gallery.hpp"
#include "invol/involution.hpp"

using namespace invol;

TEST_CASE("verify_involution") {
  const InvolutionVerdict a1 = verify_involution(parse("(x - y^3, -y)"), Region{}, 1e-9);
  CHECK(a1.pass);
  CHECK(a1.max_residual == 0.0);

  const InvolutionVerdict shift = verify_involution(parse("(x + 1, y)"), Region{}, 1e-9);
  CHECK_FALSE(shift.pass);
  // |(2, 0)| / (1 + |p|) is largest at the origin.
  CHECK(shift.max_residual == doctest::Approx(2.0));
  CHECK(shift.worst_point == Point{0.0, 0.0});

  CHECK(verify_involution(gallery::get("B").map, Region{-3.0, 3.0, -3.0, 3.0, 41}, 1e-9).pass);
  CHECK_THROWS_AS(verify_involution(parse("(x, y)"), Region{1.0, 0.0, 0.0, 1.0, 5}, 1e-9), ConfigurationError);
}

TEST_CASE("verify_involution reports an undefined map") {
  CHECK_THROWS_AS(verify_involution(parse("(1/x, y)"), Region{-1.0, 1.0, -1.0, 1.0, 3}, 1e-9), EvaluationError);
}

TEST_CASE("orientation") {
  CHECK(orientation(parse("(x - y^3, -y)"), Region{}).kind == Orientation::Reversing);
  CHECK(orientation(parse("(-x + y^2, -y)"), Region{}).kind == Orientation::Preserving);
  const OrientationClass id = orientation(parse("(x, y)"), Region{});
  CHECK(id.kind == Orientation::Preserving);
  CHECK(id.min_abs_det == 1.0);
  CHECK_THROWS_AS(orientation(parse("(x^3, y)"), Region{}), DegeneracyError);
  try {
    orientation(parse("(x^2 - 1, y)"), Region{-2.0, 2.0, -1.0, 1.0, 5});
    FAIL("mixed signs not detected");
  } catch (const DegeneracyError& e) {
    CHECK(std::abs(e.witness().x) <= 1.0);
  }
}

TEST_CASE("fixed points") {
  SUBCASE("isolated FixMinus at the origin") {
    const FixedPointSet s = find_fixed_points(parse("(-x + y^2, -y)"), Region{-4.0, 4.0, -4.0, 4.0, 41});
    REQUIRE(s.points.size() == 1);
    CHECK(norm(s.points[0].location) <= 1e-10);
    CHECK(s.points[0].classification == FixClass::FixMinus);
    CHECK_FALSE(s.curve);
  }
  SUBCASE("minus identity") {
    const FixedPointSet s = find_fixed_points(parse("(-x, -y)"), Region{});
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].location == Point{0.0, 0.0});
    CHECK(s.points[0].classification == FixClass::FixMinus);
  }
  SUBCASE("fixed curve of a reflection") {
    const PlanarMap a1 = parse("(x - y^3, -y)");
    const FixedPointSet s = find_fixed_points(a1, Region{});
    CHECK(s.curve);
    CHECK(s.points.size() > 2);
    for (const auto& fp : s.points) {
      CHECK(std::abs(fp.location.y) <= 1e-8);
      CHECK(norm(a1(fp.location) - fp.location) <= 1e-10);
      CHECK(fp.classification == FixClass::Curve);
    }
  }
  SUBCASE("no fixed point") {
    const FixedPointSet s = find_fixed_points(parse("(x + 1, y)"), Region{-2.0, 2.0, -2.0, 2.0, 9});
    CHECK(s.points.empty());
  }
  SUBCASE("every root is a fixed point and classified consistently") {
    const PlanarMap a4 = gallery::get("A4", 1).map;
    const FixedPointSet s = find_fixed_points(a4, Region{});
    for (const auto& fp : s.points) {
      CHECK(norm(a4(fp.location) - fp.location) <= 1e-10);
      if (fp.classification == FixClass::FixMinus) CHECK(max_abs(fp.jacobian + Mat2::identity()) <= 1e-6);
      if (fp.classification == FixClass::FixPlus) CHECK(max_abs(fp.jacobian - Mat2::identity()) <= 1e-6);
    }
  }
}

TEST_CASE("classify_fixed_point") {
  CHECK(classify_fixed_point(gallery::get("A4", 1).map, {0.0, 0.0}) == FixClass::FixMinus);
  CHECK(classify_fixed_point(parse("(x, y)"), {2.0, 7.0}) == FixClass::FixPlus);
  CHECK(classify_fixed_point(parse("(x - y^3, -y)"), {1.0, 0.0}) == FixClass::Unclassified);
}
