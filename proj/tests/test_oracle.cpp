#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spdc/oracle.hpp"

using namespace spdc;

namespace {

const PumpSpec pump;
const GaussianAperture pupil{0.884e-3, 0.884e-3};

}  // namespace

TEST_CASE("quadrature spec validation") {
  QuadratureSpec bad;
  bad.points_per_axis = 8;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("oracle matches n_gauss on mixed distances") {
  QuadratureSpec quad;
  quad.points_per_axis = 16384;
  const double w = 3.5e-5;
  for (double z0x : {-2.0 * w, 0.0, 1.5 * w}) {
    for (double Zx : {-2.0 * w, 1.0 * w}) {
      NKernelArgs args{{z0x, 0.4 * w}, {Zx, -0.7 * w}, 0.7675, 0.75};
      const Complex analytic = n_gauss(args, pump, pupil);
      const Complex numeric = oracle_n_function(args, pump, pupil, quad);
      CHECK(std::abs(analytic - numeric) < 1e-5);
    }
  }
}

TEST_CASE("oracle matches n_gauss at equal distances") {
  QuadratureSpec quad;
  quad.points_per_axis = 65536;
  NKernelArgs args{{1.2e-5, 0.0}, {-6e-5, 2e-5}, 0.75, 0.75};
  const Complex analytic = n_gauss(args, pump, pupil);
  const Complex numeric = oracle_n_function(args, pump, pupil, quad);
  CHECK(std::abs(analytic - numeric) < 1e-5);
}

TEST_CASE("oracle matches n_small through the pupil regulator") {
  QuadratureSpec quad;
  quad.points_per_axis = 70000;
  quad.domain_halfwidth = 6.0;
  NKernelArgs args{{-1.5e-5, 1e-5}, {4e-5, 0.0}, 0.7675, 0.75};
  const Complex analytic = n_small(args, pump);
  const Complex numeric =
      oracle_n_function(args, pump, DeltaAperture{}, quad);
  CHECK(std::abs(analytic - numeric) < 1e-5);
}

TEST_CASE("oracle refuses undersampled requests") {
  QuadratureSpec quad;
  quad.points_per_axis = 64;
  NKernelArgs args{{0.0, 0.0}, {0.0, 0.0}, 0.7675, 0.75};
  CHECK_THROWS_AS(oracle_n_function(args, pump, DeltaAperture{}, quad),
                  OracleError);
}

TEST_CASE("oracle visibility agrees with the analytic assembly") {
  TwoCrystalSystem sys;
  sys.axes = Axes::antiparallel;
  sys.gap.length_d = 2e-3;
  sys.gap.delta_prime = default_air_delta_prime(sys.pump);
  sys.geometry = {0.75, 1.0, 0.25};
  sys.aperture = CircularAperture{2.5e-3, 2.5e-3};
  const double tau = 0.5e-3 * 185e-12;
  QuadratureSpec quad;
  quad.points_per_axis = 16384;
  const double analytic = visibility_tau(tau, sys, 32);
  const double numeric = oracle_visibility(tau, sys, quad, 32);
  CHECK(std::abs(analytic - numeric) < 1e-4);
}
