#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/errors.hpp"
#include "invol/expr.hpp"
#include "invol/gallery.hpp"
#include "invol/spectral.hpp"

using namespace invol;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("sampled spectra") {
  const Region w{};
  for (const auto& s : sample_spectrum(parse("(-x + y^2, -y)"), w)) {
    CHECK(s.spectrum.lambda1 == -1.0);
    CHECK(s.spectrum.lambda2 == -1.0);
  }
  for (const auto& s : sample_spectrum(parse("(x - y^3, -y)"), w)) CHECK(s.trace_product == 2.0);
  for (const auto& s : sample_spectrum(parse("(x, y)"), w)) {
    CHECK(s.spectrum.lambda1 == 1.0);
    CHECK(s.spectrum.lambda2 == 1.0);
  }
  CHECK(sample_spectrum(parse("(x, y)"), w.with_grid(5)).size() == 25);
}

TEST_CASE("base point selection") {
  CHECK(select_base_point(parse("(-x, -y)")).location == Point{0.0, 0.0});
  CHECK_THROWS_AS(select_base_point(parse("(-x + 2, -y)")), ConfigurationError);
  const FixedPoint fp{{1.0, 0.0}, FixClass::FixMinus, {}};
  const BasePoint b = select_base_point(parse("(-x + 2, -y)"), {fp});
  CHECK(b.location == Point{1.0, 0.0});
  CHECK(b.linear_part == Mat2{-1.0, 0.0, 0.0, -1.0});
}

TEST_CASE("condition A") {
  const Region w{};
  SUBCASE("A2 with eps 0.5") {
    const ConditionA a = check_condition_A(sample_spectrum(parse("(-x + y^2, -y)"), w), 0.5);
    CHECK_FALSE(a.a.holds_on_window);
    REQUIRE(a.a.witness);
    CHECK(a.b.holds_on_window);
    CHECK(a.b.margin == doctest::Approx(2.0));
    CHECK(a.c.holds_on_window);
  }
  SUBCASE("identity") {
    const ConditionA a = check_condition_A(sample_spectrum(parse("(x, y)"), w));
    CHECK(a.a.holds_on_window);
    CHECK_FALSE(a.b.holds_on_window);
    CHECK(a.c.holds_on_window);
  }
  SUBCASE("example C meets the flat ball") {
    const ConditionA a = check_condition_A(sample_spectrum(gallery::example_c_map(), {-6.0, 6.0, -6.0, 6.0, 41}));
    CHECK_FALSE(a.a.holds_on_window);
    CHECK_FALSE(a.b.holds_on_window);
    CHECK_FALSE(a.c.holds_on_window);
    REQUIRE(a.b.witness);
    CHECK(std::abs(a.b.witness->spectrum.lambda1 - 1.0) <= 1e-9);
    CHECK(std::abs(a.b.witness->spectrum.lambda2 - 1.0) <= 1e-9);
    REQUIRE(a.c.witness);
    CHECK(std::abs(a.c.witness->spectrum.lambda1.imag()) > 1e-9);
  }
  SUBCASE("real eigenvalues near the band") {
    const ConditionA inside = check_condition_A(sample_spectrum(parse("(1.05*x, y/1.05)"), w.with_grid(3)), 0.1);
    CHECK_FALSE(inside.b.holds_on_window);
    CHECK(inside.b.margin == doctest::Approx(-0.05));
    const ConditionA above = check_condition_A(sample_spectrum(parse("(1.2*x, y/1.2)"), w.with_grid(3)), 0.1);
    CHECK(above.b.holds_on_window);
    CHECK(above.b.margin == doctest::Approx(0.1));
  }
  CHECK_THROWS_AS(check_condition_A({}, 0.0), ConfigurationError);
}

TEST_CASE("condition B") {
  const Region w{};
  const ConditionVerdict a1 = check_condition_B(sample_spectrum(parse("(x - y^3, -y)"), w));
  CHECK(a1.holds_on_window);
  CHECK(a1.margin == 3.0);
  const ConditionVerdict b = check_condition_B(sample_spectrum(gallery::get("B").map, {-3.0, 3.0, -3.0, 3.0, 41}));
  CHECK(b.holds_on_window);
  CHECK(b.margin > 1.0);
  const ConditionVerdict flip = check_condition_B(sample_spectrum(parse("(x, -y)"), w));
  CHECK(flip.holds_on_window);
  CHECK(flip.margin == 3.0);
}

TEST_CASE("verdict text") {
  const Region w{};
  const TheoremVerdict a3 = theorem_verdict(gallery::get("A3", 1).map, w);
  CHECK(starts_with(a3.text, "Theorem B applies (trace condition, margin 3)"));
  CHECK(a3.theorem == "B");
  const TheoremVerdict a4 = theorem_verdict(gallery::get("A4", 1).map, w);
  CHECK(starts_with(a4.text, "Theorem A(c) applies (Spc ⊂ ℝ)"));
  const TheoremVerdict id = theorem_verdict(parse("(x, y)"), w);
  CHECK(starts_with(id.text, "Theorem A(a): φ = I"));
  const Region c_window{-6.0, 6.0, -6.0, 6.0, 41};
  const TheoremVerdict c = theorem_verdict(gallery::example_c_map(), c_window);
  CHECK(starts_with(c.text, "no hypothesis verified; Theorem A(b) violated at witness"));
  CHECK_FALSE(c.linearizable_on_window);
  CHECK(c.text.find(describe_window(c_window)) != std::string::npos);
}
