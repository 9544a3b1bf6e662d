#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/errors.hpp"
#include "invol/linalg2.hpp"
#include "support.hpp"

using namespace invol;

TEST_CASE("trace, det and products") {
  const Mat2 m{1.0, 2.0, 3.0, 4.0};
  CHECK(m.trace() == 5.0);
  CHECK(m.det() == -2.0);
  const Mat2 l{1.0, 0.0, 0.0, -1.0};
  const Mat2 d{1.0, -3.0, 0.0, -1.0};
  CHECK(l * d == Mat2{1.0, -3.0, 0.0, 1.0});
  CHECK((l * d).trace() == 2.0);
  CHECK(apply(scale(-1.0, Mat2::identity()), {2.0, -7.0}) == Point{-2.0, 7.0});
  CHECK(add(l, Mat2::identity()) == Mat2{2.0, 0.0, 0.0, 0.0});
}

TEST_CASE("inverse") {
  CHECK(inverse(Mat2::diagonal(2.0, 4.0)) == Mat2{0.5, 0.0, 0.0, 0.25});
  const Mat2 m{3.0, 1.0, -2.0, 5.0};
  CHECK(max_abs(m * m.inverse() - Mat2::identity()) < 1e-15);
  CHECK_THROWS_AS(Mat2({1.0, 2.0, 2.0, 4.0}).inverse(), SingularMatrixError);
  CHECK_THROWS_AS(Mat2{}.inverse(), SingularMatrixError);
}

TEST_CASE("eigenvalues of fixed matrices") {
  SUBCASE("upper triangular with double root") {
    const Spectrum s = eigenvalues({-1.0, 4.0, 0.0, -1.0});
    CHECK(s.real);
    CHECK(s.lambda1 == std::complex<double>(-1.0, 0.0));
    CHECK(s.lambda2 == std::complex<double>(-1.0, 0.0));
  }
  SUBCASE("identity") {
    const Spectrum s = eigenvalues(Mat2::identity());
    CHECK(s.lambda1 == 1.0);
    CHECK(s.lambda2 == 1.0);
  }
  SUBCASE("rotation by a right angle") {
    const Spectrum s = eigenvalues({0.0, -1.0, 1.0, 0.0});
    CHECK_FALSE(s.real);
    CHECK(s.lambda1 == std::complex<double>(0.0, -1.0));
    CHECK(s.lambda2 == std::complex<double>(0.0, 1.0));
  }
  SUBCASE("minus branch first") {
    const Spectrum s = eigenvalues(Mat2::diagonal(3.0, -2.0));
    CHECK(s.lambda1 == -2.0);
    CHECK(s.lambda2 == 3.0);
  }
  SUBCASE("degenerate shear reports a zero discriminant") {
    const Spectrum s = eigenvalues({-1.5, 0.5, -0.5, -0.5});
    CHECK(s.discriminant == 0.0);
    CHECK(s.lambda1.imag() == 0.0);
  }
}

TEST_CASE("eigenvalues against characteristic polynomial and long double roots") {
  for (const Mat2& m : testing::random_matrices(20000, 5.0)) {
    const Spectrum s = eigenvalues(m);
    CHECK(testing::charpoly_residual(m, s.lambda1) <= 1e-9);
    CHECK(testing::charpoly_residual(m, s.lambda2) <= 1e-9);
    const double scale = std::max(1.0, std::abs(m.trace()));
    CHECK(std::abs((s.lambda1 + s.lambda2).real() - m.trace()) <= 1e-12 * scale);
    CHECK(std::abs((s.lambda1 * s.lambda2).real() - m.det()) <= 1e-12 * std::max(1.0, std::abs(m.det())) * 10);
    if (s.discriminant >= 0.0) {
      CHECK(s.lambda1.imag() == 0.0);
      CHECK(s.lambda2.imag() == 0.0);
    }
    const auto [r1, r2] = testing::roots_long(m);
    const Spectrum ref{std::complex<double>(r1), std::complex<double>(r2), true, 0.0};
    // Near-double roots are ill-conditioned: the error scales like sqrt(eps).
    CHECK(set_distance(s, ref) <= 1e-6 * std::max(1.0, std::abs(s.lambda2)));
  }
}

TEST_CASE("set distance and shift") {
  const Spectrum a{{1.0, 0.0}, {2.0, 0.0}, true, 1.0};
  const Spectrum b{{2.0, 0.0}, {1.0, 0.0}, true, 1.0};
  CHECK(set_distance(a, b) == 0.0);
  const Spectrum c = shifted(a, -1.0);
  CHECK(c.lambda1 == 0.0);
  CHECK(c.lambda2 == 1.0);
  CHECK(set_distance(a, c) == doctest::Approx(1.0));
}

TEST_CASE("linear involutions") {
  CHECK(is_linear_involution(scale(-1.0, Mat2::identity()), 1e-12));
  CHECK(is_linear_involution({0.5, 0.5, 1.5, -0.5}, 1e-12));
  CHECK_FALSE(is_linear_involution(Mat2::diagonal(2.0, 2.0), 1e-9));
  CHECK(is_linear_involution(Mat2::diagonal(1.0, -1.0), 0.0));
}
