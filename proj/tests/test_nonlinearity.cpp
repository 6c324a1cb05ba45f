#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spdc/nonlinearity.hpp"
#include "spdc/quadrature.hpp"

using namespace spdc;

namespace {

CascadeProfile two_crystal(double L1, double L2, double d, double dp = 0.0,
                           int eps2 = +1) {
  CascadeProfile p;
  CrystalSpec c;
  c.thickness_L = L1;
  p.crystals.push_back(c);
  c.thickness_L = L2;
  c.epsilon = eps2;
  p.crystals.push_back(c);
  GapSpec g;
  g.length_d = d;
  g.delta_prime = dp;
  p.gaps.push_back(g);
  return p;
}

}  // namespace

TEST_CASE("bulk transform") {
  const double L = 0.5e-3;
  CHECK(std::abs(chi_tilde_bulk(0.0, L, 1.0) - Complex{L, 0.0}) < 1e-18);
  // zeros at delta = 2 pi m / L, m != 0
  for (int m : {1, 2, 5, -3}) {
    CHECK(std::abs(chi_tilde_bulk(2.0 * pi * m / L, L, 1.0)) < 1e-18);
  }
  // |chi~|^2 at the first sidelobe peak vs main peak: ~(2/3pi)^2
  const double side = std::norm(chi_tilde_bulk(3.0 * pi / L, L, 1.0));
  CHECK(side / (L * L) == doctest::Approx(4.0 / (9.0 * pi * pi)).epsilon(1e-12));
  CHECK(chi_tilde_bulk(1e4, L, 2.0) == 2.0 * chi_tilde_bulk(1e4, L, 1.0));
}

TEST_CASE("sinusoidal transform peaks at +-K") {
  const double L = 0.5e-3, Lambda = 0.1e-3;
  const double K = 2.0 * pi / Lambda;
  const double at_K = std::abs(chi_tilde_sinusoidal(K, L, Lambda, 1.0));
  const double at_0 = std::abs(chi_tilde_sinusoidal(0.0, L, Lambda, 1.0));
  CHECK(at_K == doctest::Approx(0.5 * L).epsilon(1e-9));
  CHECK(at_0 < 0.05 * at_K);
  CHECK(std::abs(chi_tilde_sinusoidal(-K, L, Lambda, 1.0)) ==
        doctest::Approx(at_K).epsilon(1e-12));
}

TEST_CASE("periodic profile with one harmonic equals cosine grating") {
  FourierPeriodicProfile p;
  p.thickness_L = 0.5e-3;
  p.period_Lambda = 0.1e-3;
  p.coefficients = {Complex{0.5, 0.0}, Complex{0.0, 0.0}, Complex{0.5, 0.0}};
  for (double delta : {-8e4, 0.0, 3e4, 6.3e4}) {
    const Complex a = chi_tilde_periodic(delta, p);
    const Complex b =
        chi_tilde_sinusoidal(delta, p.thickness_L, p.period_Lambda, 1.0);
    CHECK(std::abs(a - b) < 1e-16);
  }
}

TEST_CASE("cascade with zero gap equals one crystal of summed length") {
  const double L = 0.5e-3;
  const auto p = two_crystal(L, L, 0.0);
  for (int i = 0; i <= 1000; ++i) {
    const double delta = -1e5 + 2e5 * i / 1000.0;
    const Complex cascade = chi_tilde_cascade(delta, p);
    const Complex bulk = chi_tilde_bulk(delta, 2.0 * L, 1.0);
    CHECK(std::abs(std::abs(cascade) - std::abs(bulk)) < 1e-12);
    CHECK(std::abs(cascade - bulk) < 1e-12);
  }
}

TEST_CASE("cascade gap phase and inverted second crystal") {
  const double L = 0.5e-3;
  // delta' d adds a pure phase to the upstream crystal's contribution
  const auto with_gap = two_crystal(L, L, 5e-3, 2e3);
  const auto no_phase = two_crystal(L, L, 5e-3, 0.0);
  const double delta = 3e4;
  const Complex a = chi_tilde_cascade(delta, with_gap);
  const Complex up =
      chi_tilde_cascade(delta, no_phase) - chi_tilde_bulk(delta, L, 1.0);
  const Complex down = chi_tilde_bulk(delta, L, 1.0);
  CHECK(std::abs(a - (down + up * std::exp(-I * 2e3 * 5e-3))) < 1e-18);
  // epsilon = -1 flips the upstream sign
  const auto flipped = two_crystal(L, L, 0.0, 0.0, -1);
  CHECK(std::abs(chi_tilde_cascade(0.0, flipped)) < 1e-18);
}

TEST_CASE("closed forms match direct quadrature") {
  const double L = 0.5e-3;
  std::vector<NonlinearityProfile> profiles;
  profiles.push_back(BulkProfile{L, 1.0});
  profiles.push_back(SinusoidalProfile{L, 0.1e-3, 1.0});
  FourierPeriodicProfile fp;
  fp.thickness_L = L;
  fp.period_Lambda = 0.1e-3;
  fp.coefficients = {Complex{0.1, 0.05}, Complex{0.7, 0.0},
                     Complex{0.1, -0.05}};
  profiles.push_back(fp);
  // quadrature propagates e^{i delta z} through the gap: delta' = delta
  auto cascade = two_crystal(L, 0.25e-3, 5e-3);
  cascade.gaps[0].delta_prime_slope = 1.0;
  profiles.push_back(cascade);

  for (const auto& profile : profiles) {
    for (double delta : {-9.7e4, -2e4, 0.0, 1.3e4, 8.8e4}) {
      const Complex closed = chi_tilde(delta, profile);
      const Complex direct = chi_tilde_quadrature(delta, profile);
      CHECK(std::abs(closed - direct) < 1e-10);
    }
  }
}

TEST_CASE("parseval") {
  // integral of |chi~|^2 d delta / 2 pi = integral |chi|^2 dz = L
  const double L = 0.5e-3;
  const double lhs = integrate_composite(
                         [&](double delta) {
                           return std::norm(chi_tilde_bulk(delta, L, 1.0));
                         },
                         -6e6, 6e6, 400000) /
                     (2.0 * pi);
  CHECK(lhs == doctest::Approx(L).epsilon(1e-3));
}

TEST_CASE("sampling") {
  const auto s = sample_state_function(BulkProfile{0.5e-3, 1.0}, -1e5, 1e5, 5);
  CHECK(s.delta_grid.size() == 5);
  CHECK(s.delta_grid[2] == doctest::Approx(0.0));
  CHECK(s.magnitude_sq[2] == doctest::Approx(0.25e-6).epsilon(1e-12));
  CHECK_THROWS_AS(sample_state_function(BulkProfile{0.5e-3, 1.0}, 1.0, -1.0, 5),
                  ConfigError);
}
