#pragma once

#include "spdc/apertures.hpp"
#include "spdc/interference.hpp"
#include "spdc/types.hpp"

namespace spdc {

/// Brute-force quadrature settings for the oracle paths.
struct QuadratureSpec {
  long points_per_axis = 4096;
  double domain_halfwidth = 8.0;  // in pupil-correlation Gaussian widths
  double target_rel_err = 1e-6;

  void validate() const {
    if (points_per_axis < 16) {
      throw ConfigError("oracle needs points_per_axis >= 16");
    }
    if (!(target_rel_err > 0.0)) {
      throw ConfigError("oracle target_rel_err must be > 0");
    }
  }
};

/// Raised when the oracle refuses (undersampled phase) or fails its
/// convergence self-check; the message carries both estimates.
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

/// Independent evaluation of the N-kernel by direct quadrature of the
/// pre-reduction Fresnel integral. The 2-D q-integral factorizes into two
/// 1-D complex-Gaussian integrals which are integrated numerically.
///
/// Delta pupils are handled with a small Gaussian regulator (r = 1e-4 m)
/// and Richardson extrapolation r^2 -> 0; degenerate s_k = s_n pairs via a
/// relative s-offset of 1e-3 extrapolated to zero. Every path self-checks
/// by doubling points_per_axis and refuses when the phase would be sampled
/// at fewer than 6 points per cycle.
Complex oracle_n_function(const NKernelArgs& args, const PumpSpec& pump,
                          const ApertureModel& aperture,
                          const QuadratureSpec& quad);

/// V(tau) assembled from oracle kernel evaluations instead of closed forms.
double oracle_visibility(double tau, const TwoCrystalSystem& system,
                         const QuadratureSpec& quad,
                         int z_quadrature_order = 32);

}  // namespace spdc
