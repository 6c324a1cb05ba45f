#pragma once

#include <cmath>
#include <variant>

#include "spdc/dispersion.hpp"
#include "spdc/types.hpp"

namespace spdc {

// Detection apertures. Circular hard pupils of diameter b are mapped onto
// Gaussian pupils of 1/e width r = b/(2*sqrt(2)); Delta means point-like
// detectors (unit-magnitude kernel).

struct DeltaAperture {};

struct GaussianAperture {
  double r_a = 0.0;
  double r_b = 0.0;

  void validate() const {
    if (!(r_a > 0.0) || !(r_b > 0.0)) {
      throw ConfigError("gaussian aperture radii must be > 0");
    }
  }
  double rbar_sq() const { return 0.5 * (r_a * r_a + r_b * r_b); }
};

struct CircularAperture {
  double b_a = 0.0;
  double b_b = 0.0;

  void validate() const {
    if (!(b_a > 0.0) || !(b_b > 0.0)) {
      throw ConfigError("circular aperture diameters must be > 0");
    }
  }
  GaussianAperture to_gaussian() const {
    const double c = 2.0 * std::sqrt(2.0);
    return GaussianAperture{b_a / c, b_b / c};
  }
};

using ApertureModel =
    std::variant<DeltaAperture, GaussianAperture, CircularAperture>;

void validate(const ApertureModel& aperture);

/// Collection geometry: aperture at d1 behind the last crystal
/// face, detector at d2 behind a lens of focal length f. d2 and f cancel
/// from every normalized kernel; they are carried for completeness only.
struct OpticalGeometry {
  double d1 = 0.0;
  double d2 = 0.0;
  double f = 0.0;

  void validate() const {
    if (!(d1 > 0.0)) throw ConfigError("geometry d1 must be > 0");
  }
  double s1(double gap_d) const { return d1 + gap_d; }
  double s2() const { return d1; }
};

/// Arguments of the diffraction kernel N(z0, Z, s_k, s_n).
struct NKernelArgs {
  Vec2 z0;
  Vec2 Z;
  double s_k = 0.0;
  double s_n = 0.0;

  void validate() const {
    if (!(s_k > 0.0) || !(s_n > 0.0)) {
      throw ConfigError("kernel distances must be > 0");
    }
  }
};

/// gamma = (k_p r^2 / 4 d1) * d/(d1+d) with r^2 = (r_a^2 + r_b^2)/2.
double gamma_factor(const PumpSpec& pump, const GaussianAperture& aperture,
                    double d1, double d);

/// phi_gamma = -arctan(gamma).
double phi_gamma(double gamma);

/// Point-detector kernel: exp[-i (k_p/8)(|Z - z0|^2/s_n - |z0|^2/s_k)].
/// Unit magnitude for all arguments.
Complex n_small(const NKernelArgs& args, const PumpSpec& pump);

/// Gaussian-pupil kernel: attenuation / sqrt(1+gamma^2) times quadratic
/// phase; switches to the removable-singularity limit branch when
/// |s_k - s_n|/s_n < 1e-9. Magnitude <= 1.
Complex n_gauss(const NKernelArgs& args, const PumpSpec& pump,
                const GaussianAperture& aperture);

inline constexpr double n_gauss_branch_threshold = 1e-9;

/// Dispatch over the aperture model (Circular goes through its Gaussian
/// equivalent).
Complex n_kernel(const NKernelArgs& args, const PumpSpec& pump,
                 const ApertureModel& aperture);

}  // namespace spdc
