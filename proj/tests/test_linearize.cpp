#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "invol/errors.hpp"
#include "invol/expr.hpp"
#include "invol/gallery.hpp"
#include "invol/linearize.hpp"
#include "support.hpp"

using namespace invol;

TEST_CASE("standard map of A1") {
  const StandardMap h(parse("(x - y^3, -y)"));
  CHECK(h.linear_part() == Mat2::diagonal(1.0, -1.0));
  for (const Point& p : testing::random_points(Region{}, 500)) {
    const Point want{p.x - p.y * p.y * p.y / 2.0, p.y};
    CHECK(norm(h(p) - want) <= 1e-12);
    CHECK(norm(h.as_map()(p) - want) <= 1e-12);
    const Mat2 dh{1.0, -1.5 * p.y * p.y, 0.0, 1.0};
    CHECK(max_abs(h.evaluate_with_jacobian(p).jacobian - dh) <= 1e-12);
    CHECK(max_abs(h.as_map().evaluate_with_jacobian(p).jacobian - dh) <= 1e-12);
  }
  CHECK(h({2.0, -1.0}) == Point{2.5, -1.0});
  CHECK(conjugacy_residual(h, {2.0, -1.0}) == 0.0);
}

TEST_CASE("local behaviour at the origin") {
  for (const auto& name : gallery::list_entries()) {
    const gallery::Entry e = gallery::get_spec(name);
    const StandardMap h(e.map);
    CHECK(norm(h({0.0, 0.0})) <= 1e-12);
    CHECK(max_abs(h.evaluate_with_jacobian({0.0, 0.0}).jacobian - Mat2::identity()) <= 1e-9);
  }
}

TEST_CASE("minus identity gives the identity") {
  const StandardMap h(parse("(-x, -y)"));
  for (const Point& p : testing::random_points(Region{}, 50)) CHECK(h(p) == p);
}

TEST_CASE("precondition") {
  CHECK_THROWS_AS(StandardMap(parse("(-x + 2, -y)")), PreconditionError);
}

TEST_CASE("conjugacy residual") {
  const StandardMap b(gallery::get("B").map);
  for (const Point& p : testing::random_points(Region{-3.0, 3.0, -3.0, 3.0, 2}, 100))
    CHECK(conjugacy_residual(b, p) <= 1e-9);
  const StandardMap shear(parse("(x + y^2, y)"));
  CHECK(conjugacy_residual(shear, {0.3, 1.0}) > 0.1);
}

TEST_CASE("example C is constant on the flat ball") {
  const StandardMap h(gallery::example_c_map());
  for (const Point& q : testing::random_points(Region{-1.0, 1.0, -1.0, 1.0, 2}, 400)) {
    if (norm(q) > 1.0) continue;
    CHECK(norm(h(Point{3.0, 3.0} + q) - Point{3.0, 3.0}) <= 1e-9);
  }
}

TEST_CASE("injectivity scan") {
  const StandardMap a1(parse("(x - y^3, -y)"));
  const InjectivityCertificate ok = injectivity_scan(a1, Region{});
  CHECK(ok.status == InjectivityStatus::NoCollisionFound);
  CHECK_FALSE(ok.witness);
  CHECK(ok.cells_checked > 0);

  const StandardMap c(gallery::example_c_map());
  const InjectivityCertificate bad = injectivity_scan(c, Region{0.0, 6.0, 0.0, 6.0, 41}, 201, 1e-6, 0.1);
  REQUIRE(bad.status == InjectivityStatus::Collision);
  REQUIRE(bad.witness);
  CHECK(norm(bad.witness->first - Point{3.0, 3.0}) <= 1.0);
  CHECK(norm(bad.witness->second - Point{3.0, 3.0}) <= 1.0);
  CHECK(norm(bad.witness->first - bad.witness->second) >= 0.1);
  CHECK(norm(c(bad.witness->first) - c(bad.witness->second)) <= 1e-6);

  const InjectivityCertificate flat = injectivity_scan(parse("(0*x, 0*y)"), Region{-1.0, 1.0, -1.0, 1.0, 2}, 11, 1e-6, 0.1);
  CHECK(flat.status == InjectivityStatus::Collision);
  CHECK_THROWS_AS(injectivity_scan(a1, Region{}, 1), ConfigurationError);
}

TEST_CASE("spectrum shift") {
  CHECK(spectrum_shift_check(parse("(-x + y^2, -y)"), Region{}) == 0.0);
  CHECK(spectrum_shift_check(gallery::get("A4", 1).map, Region{}) <= 1e-12);
  CHECK_THROWS_AS(spectrum_shift_check(parse("(x - y^3, -y)"), Region{}), NotApplicableError);
  const StandardMap h(parse("(-x + y^2, -y)"));
  const PlanarMap g = auxiliary_map(h);
  CHECK(g.evaluate_with_jacobian({0.0, 1.5}).jacobian == Mat2{-2.0, 3.0, 0.0, -2.0});
  for (const Mat2& m : testing::random_matrices(10000)) {
    const Spectrum shifted_direct = eigenvalues(m - Mat2::identity());
    CHECK(set_distance(shifted_direct, shifted(eigenvalues(m), -1.0)) <= 1e-9);
  }
}

TEST_CASE("jacobian bounds") {
  const JacobianBounds a1 = theorem_B_jacobian_check(StandardMap(parse("(x - y^3, -y)")), Region{});
  CHECK(a1.min_trace == 2.0);
  CHECK(a1.min_det == 1.0);
  const JacobianBounds b = theorem_B_jacobian_check(StandardMap(gallery::get("B").map), {-3.0, 3.0, -3.0, 3.0, 41});
  CHECK(b.min_trace > 0.5);
  CHECK(b.min_det > 0.0);
  const JacobianBounds flip = theorem_B_jacobian_check(StandardMap(parse("(x, -y)")), Region{});
  CHECK(flip.min_trace == 2.0);
  CHECK(flip.min_det == 1.0);
}
