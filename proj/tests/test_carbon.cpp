#include <doctest.h>

#include <cmath>

#include "econlab/carbon.hpp"

using namespace econlab;

TEST_SUITE("carbon") {

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(CarbonParams::make(0.0, 30.0, 10.0, 0.02, 600.0), DomainError);
  CHECK_THROWS_AS(CarbonParams::make(30.0, 30.0, 10.0, 0.02, -1.0), DomainError);
  CHECK(CarbonParams::defaults().c() == doctest::Approx(1.0 / 15.0));
}

TEST_CASE("closed form solves the ODE") {
  const CarbonParams p = CarbonParams::defaults();
  for (double t : {0.0, 1.0, 17.0, 80.0}) {
    const double h = 1e-3;
    const double dx = (concentration_closed(p, t + h) - concentration_closed(p, t > 0 ? t - h : t)) / (t > 0 ? 2 * h : h);
    CHECK(dx == doctest::Approx(emissions(p, t) - p.c() * concentration_closed(p, t)).epsilon(1e-4));
  }
  CHECK(concentration_closed(p, 0.0) == p.x0);
}

TEST_CASE("airborne fraction is dx/dt over emissions") {
  const CarbonParams p = CarbonParams::defaults();
  for (double t : {0.0, 10.0, 50.0}) {
    const double dx = emissions(p, t) - p.c() * concentration_closed(p, t);
    CHECK(airborne_fraction(p, t) == doctest::Approx(dx / emissions(p, t)).epsilon(1e-12));
  }
}

TEST_CASE("table rows include the final node") {
  const std::vector<CarbonRow> rows = carbon_table(CarbonParams::defaults(), Grid(0.0, 10.0, 7), 3);
  REQUIRE(rows.size() == 4);
  CHECK(rows.back().t == 10.0);
  CHECK_THROWS_AS(carbon_table(CarbonParams::defaults(), Grid(1.0, 10.0, 7), 3), DomainError);
  CHECK_THROWS_AS(emissions(CarbonParams::defaults(), -1.0), DomainError);
}

}
