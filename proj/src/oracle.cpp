#include "spdc/oracle.hpp"

#include <cmath>
#include <sstream>

#include "spdc/quadrature.hpp"

namespace spdc {

namespace {

constexpr double delta_pupil_regulator = 1e-4;  // m
constexpr double degenerate_s_offset = 5e-4;    // relative

// Non-degenerate Gaussian-pupil kernel by direct quadrature: the 2-D
// q-integral of W(q + aZ) P_A(-q) P_B(q) e^{-i q.z0} factorizes into two
// 1-D complex-Gaussian integrals along q_x and q_y.
Complex integrate_core(const NKernelArgs& args, const PumpSpec& pump,
                       double r_a, double r_b, const QuadratureSpec& quad) {
  const double kp = pump.k_p();
  const double rbar2 = 0.5 * (r_a * r_a + r_b * r_b);
  const double dr = args.s_k * args.s_n / (args.s_k - args.s_n);
  const double a = kp / (4.0 * args.s_n);
  const Complex c2{0.0, 2.0 * dr / kp};
  const Complex alpha = -0.5 * rbar2 + c2;
  const Complex b[2] = {
      2.0 * c2 * a * args.Z.x - I * args.z0.x,
      2.0 * c2 * a * args.Z.y - I * args.z0.y,
  };
  const double Q = quad.domain_halfwidth * std::sqrt(2.0 / rbar2);

  const double cycles =
      ((2.0 * std::abs(dr) / kp) * Q * Q +
       std::max(std::abs(b[0].imag()), std::abs(b[1].imag())) * Q) /
      (2.0 * pi);
  const double required = 6.0 * cycles;
  if (static_cast<double>(quad.points_per_axis) < required) {
    std::ostringstream msg;
    msg << "oracle refuses: " << quad.points_per_axis
        << " points per axis would undersample " << cycles
        << " phase cycles (need >= " << required << ")";
    throw OracleError(msg.str());
  }

  const Complex prefactor = std::exp(-I * (kp / (8.0 * args.s_n)) *
                                     args.Z.norm_sq()) *
                            Complex{0.0, -2.0 * dr / (pi * kp)} *
                            std::exp(c2 * (a * a * args.Z.norm_sq()));
  auto evaluate = [&](long n) {
    Complex result = prefactor;
    for (int w = 0; w < 2; ++w) {
      result *= integrate_composite(
          [&](double q) { return std::exp(alpha * (q * q) + b[w] * q); }, -Q,
          Q, n);
    }
    return result;
  };
  const Complex coarse = evaluate(quad.points_per_axis);
  const Complex fine = evaluate(2 * quad.points_per_axis);
  const double change =
      std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300);
  if (change > quad.target_rel_err) {
    std::ostringstream msg;
    msg << "oracle did not converge: " << quad.points_per_axis << " points ("
        << coarse << ") vs doubled (" << fine << "), relative change "
        << change;
    throw OracleError(msg.str());
  }
  return fine;
}

// Degenerate s_k = s_n pairs are a removable singularity of the Fresnel
// kernel; evaluate at relative offsets delta and delta/2 and extrapolate
// linearly to zero.
Complex gauss_oracle(const NKernelArgs& args, const PumpSpec& pump,
                     double r_a, double r_b, const QuadratureSpec& quad) {
  if (std::abs(args.s_k - args.s_n) / args.s_n < n_gauss_branch_threshold) {
    NKernelArgs offset = args;
    offset.s_k = args.s_n * (1.0 + degenerate_s_offset);
    const Complex far = integrate_core(offset, pump, r_a, r_b, quad);
    offset.s_k = args.s_n * (1.0 + 0.5 * degenerate_s_offset);
    const Complex near = integrate_core(offset, pump, r_a, r_b, quad);
    return 2.0 * near - far;
  }
  return integrate_core(args, pump, r_a, r_b, quad);
}

}  // namespace

Complex oracle_n_function(const NKernelArgs& args, const PumpSpec& pump,
                          const ApertureModel& aperture,
                          const QuadratureSpec& quad) {
  args.validate();
  quad.validate();
  return std::visit(
      [&](const auto& ap) -> Complex {
        using T = std::decay_t<decltype(ap)>;
        if constexpr (std::is_same_v<T, DeltaAperture>) {
          // Gaussian regulator; Richardson-extrapolate r^2 -> 0 with the
          // pair (r, r/sqrt(2)).
          const double r1 = delta_pupil_regulator;
          const Complex wide = gauss_oracle(args, pump, r1, r1, quad);
          const double r2 = r1 / std::sqrt(2.0);
          const Complex narrow = gauss_oracle(args, pump, r2, r2, quad);
          return 2.0 * narrow - wide;
        } else if constexpr (std::is_same_v<T, GaussianAperture>) {
          return gauss_oracle(args, pump, ap.r_a, ap.r_b, quad);
        } else {
          const GaussianAperture g = ap.to_gaussian();
          return gauss_oracle(args, pump, g.r_a, g.r_b, quad);
        }
      },
      aperture);
}

double oracle_visibility(double tau, const TwoCrystalSystem& system,
                         const QuadratureSpec& quad, int z_quadrature_order) {
  return visibility_tau_with_kernel(
      tau, system, z_quadrature_order, [&](const NKernelArgs& args) {
        return oracle_n_function(args, system.pump, system.aperture, quad);
      });
}

}  // namespace spdc
