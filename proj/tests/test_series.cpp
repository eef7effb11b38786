#include <doctest.h>

#include <cmath>

#include "econlab/series.hpp"
#include "oracles.hpp"

using namespace econlab;

TEST_SUITE("series") {

TEST_CASE("reduce_angle maps into (-pi, pi]") {
  CHECK(reduce_angle(0.0) == 0.0);
  CHECK(reduce_angle(3.0 * M_PI) == doctest::Approx(M_PI));
  CHECK(reduce_angle(-M_PI) == doctest::Approx(M_PI));
  oracle::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-100.0, 100.0);
    const double r = reduce_angle(x);
    CHECK(r > -M_PI);
    CHECK(r <= M_PI);
    CHECK(std::sin(r) == doctest::Approx(std::sin(x)).epsilon(1e-9));
  }
}

TEST_CASE("series match the standard library") {
  oracle::Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    const double x = rng.uniform(-20.0, 20.0);
    CHECK(std::abs(sin_taylor(x, {}) - std::sin(x)) < 1e-12);
    CHECK(std::abs(cos_taylor(x, {}) - std::cos(x)) < 1e-12);
  }
}

TEST_CASE("few terms give the truncated polynomial") {
  CHECK(sin_taylor(0.5, {1}) == 0.5);
  CHECK(sin_taylor(0.5, {2}) == doctest::Approx(0.5 - 0.125 / 6.0));
  CHECK(cos_taylor(0.5, {2}) == doctest::Approx(1.0 - 0.125));
  const MatrixComplex e = exp_i_taylor(0.5, {1});
  CHECK(e.re == 1.0);
  CHECK(e.im == 0.5);
}

TEST_CASE("sine difference identity") {
  CHECK(sin_diff_identity_residual(0.3, 1.1) < 1e-14);
}

}
