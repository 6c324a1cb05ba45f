#include "spdc/apertures.hpp"

#include <cmath>

namespace spdc {

void validate(const ApertureModel& aperture) {
  std::visit(
      [](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (!std::is_same_v<T, DeltaAperture>) a.validate();
      },
      aperture);
}

double gamma_factor(const PumpSpec& pump, const GaussianAperture& aperture,
                    double d1, double d) {
  if (!(d1 > 0.0)) throw ConfigError("gamma_factor: d1 must be > 0");
  if (d < 0.0) throw ConfigError("gamma_factor: d must be >= 0");
  // general form: gamma = (k_p/4) rbar^2 (1/s_n - 1/s_k) with s_n = d1,
  // s_k = d1 + d
  return pump.k_p() * aperture.rbar_sq() * d / (4.0 * d1 * (d1 + d));
}

double phi_gamma(double gamma) { return -std::atan(gamma); }

Complex n_small(const NKernelArgs& args, const PumpSpec& pump) {
  args.validate();
  const double phase =
      -(pump.k_p() / 8.0) * ((args.Z - args.z0).norm_sq() / args.s_n -
                             args.z0.norm_sq() / args.s_k);
  return std::exp(I * phase);
}

Complex n_gauss(const NKernelArgs& args, const PumpSpec& pump,
                const GaussianAperture& aperture) {
  args.validate();
  aperture.validate();
  const double kp = pump.k_p();
  const double rbar2 = aperture.rbar_sq();
  const double s_k = args.s_k, s_n = args.s_n;

  if (std::abs(s_k - s_n) / s_n < n_gauss_branch_threshold) {
    // removable singularity s_k -> s_n: pure Fresnel phase with a
    // Z-dependent pupil attenuation
    const double a = kp / (4.0 * s_n);
    const double atten =
        a * a * args.Z.norm_sq() * (aperture.r_a * aperture.r_a +
                                    aperture.r_b * aperture.r_b) / 4.0;
    const double phase = -(kp / (8.0 * s_n)) *
                         ((args.Z - args.z0).norm_sq() - args.z0.norm_sq());
    return std::exp(-atten) * std::exp(I * phase);
  }

  const double inv_dr = (s_k - s_n) / (s_k * s_n);  // 1/s_n - 1/s_k
  const double gamma = 0.25 * kp * rbar2 * inv_dr;
  const Vec2 w = args.z0 - (s_k / (s_k - s_n)) * args.Z;
  const double A = 0.125 * kp * inv_dr * w.norm_sq();
  const double g2 = 1.0 + gamma * gamma;
  // The |Z|^2/(s_k - s_n) phase cancels against the divergent part of A;
  // the cancellation is done algebraically so the branch limit is exact.
  const double phase = -0.125 * kp * inv_dr * args.z0.norm_sq() +
                       (kp / (4.0 * s_n)) * args.z0.dot(args.Z) -
                       (kp / (8.0 * s_n)) * args.Z.norm_sq() +
                       A * gamma * gamma / g2 - std::atan(gamma);
  const double magnitude = std::exp(-A * gamma / g2) / std::sqrt(g2);
  return magnitude * std::exp(I * phase);
}

Complex n_kernel(const NKernelArgs& args, const PumpSpec& pump,
                 const ApertureModel& aperture) {
  return std::visit(
      [&](const auto& a) -> Complex {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, DeltaAperture>) {
          return n_small(args, pump);
        } else if constexpr (std::is_same_v<T, GaussianAperture>) {
          return n_gauss(args, pump, a);
        } else {
          return n_gauss(args, pump, a.to_gaussian());
        }
      },
      aperture);
}

}  // namespace spdc
