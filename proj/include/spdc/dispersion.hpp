#pragma once

#include "spdc/types.hpp"

namespace spdc {

/// Monochromatic plane-wave pump.
struct PumpSpec {
  double wavelength = 351.1e-9;  // vacuum wavelength, m

  double k_p() const { return 2.0 * pi / wavelength; }

  static PumpSpec from_wavelength(double lambda) {
    if (!(lambda > 0.0)) throw ConfigError("pump wavelength must be > 0");
    return PumpSpec{lambda};
  }
};

/// One bulk nonlinear crystal.
///
/// dispersion_D = 1/u_o - 1/u_e at the degenerate frequency (s/m).
/// walkoff_M is the transverse walkoff vector (dimensionless); its sign
/// encodes the optical-axis orientation.
struct CrystalSpec {
  double thickness_L = 0.5e-3;
  double dispersion_D = 185e-12;  // reference BBO value, see docs
  Vec2 walkoff_M{0.07, 0.0};
  double chi0 = 1.0;
  int epsilon = +1;

  void validate() const {
    if (!(thickness_L > 0.0)) throw ConfigError("crystal thickness must be > 0");
    if (epsilon != +1 && epsilon != -1) throw ConfigError("epsilon must be +1 or -1");
  }
};

/// Linear (dispersive) gap between crystals.
/// delta_prime is the wave-vector mismatch in the gap medium, evaluated at
/// the degenerate frequency (rad/m). delta_prime_slope is d(delta')/d(delta),
/// used only when sampling cascade state functions across a mismatch sweep.
struct GapSpec {
  double length_d = 0.0;
  double delta_prime = 0.0;
  double delta_prime_slope = 0.0;

  void validate() const {
    if (length_d < 0.0) throw ConfigError("gap length must be >= 0");
  }
};

/// Birefringent delay line (z-cut quartz in the experiments: walkoff 0).
struct DelayLineSpec {
  double thickness_l_tau = 0.0;
  double dispersion_D_tau = 0.0;
  Vec2 walkoff_M_tau{0.0, 0.0};

  double tau() const { return -thickness_l_tau * dispersion_D_tau; }
};

/// Crystal wave-vector mismatch under the Fresnel + quasi-monochromatic
/// approximations: delta(q, nu) = -nu*D + 2|q|^2/k_p + M.q   (rad/m).
double delta_mismatch(const Vec2& q, double nu, const CrystalSpec& crystal,
                      const PumpSpec& pump);

/// Index difference n(lambda_p) - n(2 lambda_p) for the air gap, calibrated
/// so that phi_disp has slope pi*0.059 rad per mm of separation at
/// lambda_p = 351.1 nm. This is the only normative statement about air
/// dispersion; a user-supplied index pair overrides it.
double default_air_index_difference(const PumpSpec& pump);

/// Gap dispersion phase phi_disp = k_p * (n_pump - n_degenerate) * d.
double phi_disp(double d, const PumpSpec& pump, double index_pump,
                double index_degenerate);

/// phi_disp with the calibrated default air indices.
double phi_disp_air(double d, const PumpSpec& pump);

/// Gap mismatch delta' = phi_disp / d implied by the default air calibration.
double default_air_delta_prime(const PumpSpec& pump);

/// Delay-line phase eta_tau(q, nu).
///
/// The constant -(K_o + K_e) l_tau term is an overall phase common to every
/// amplitude and is dropped here; with q = 0 and M_tau = 0 the result
/// reduces to nu * tau.
double eta_tau(const Vec2& q, double nu, const DelayLineSpec& delay,
               const PumpSpec& pump);

}  // namespace spdc
