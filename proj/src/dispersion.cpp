#include "spdc/dispersion.hpp"

namespace spdc {

double delta_mismatch(const Vec2& q, double nu, const CrystalSpec& crystal,
                      const PumpSpec& pump) {
  return -nu * crystal.dispersion_D + 2.0 * q.norm_sq() / pump.k_p() +
         crystal.walkoff_M.dot(q);
}

double default_air_index_difference(const PumpSpec& pump) {
  // slope = pi * 0.059 rad/mm = pi * 59 rad/m; n_p - n_d = slope / k_p
  return pi * 59.0 / pump.k_p();
}

double phi_disp(double d, const PumpSpec& pump, double index_pump,
                double index_degenerate) {
  if (d < 0.0) throw ConfigError("gap length must be >= 0");
  return pump.k_p() * (index_pump - index_degenerate) * d;
}

double phi_disp_air(double d, const PumpSpec& pump) {
  return phi_disp(d, pump, default_air_index_difference(pump), 0.0);
}

double default_air_delta_prime(const PumpSpec& pump) {
  return pump.k_p() * default_air_index_difference(pump);
}

double eta_tau(const Vec2& q, double nu, const DelayLineSpec& delay,
               const PumpSpec& pump) {
  const double l = delay.thickness_l_tau;
  return (-nu * delay.dispersion_D_tau + 2.0 * q.norm_sq() / pump.k_p() +
          delay.walkoff_M_tau.dot(q)) *
         l;
}

}  // namespace spdc
