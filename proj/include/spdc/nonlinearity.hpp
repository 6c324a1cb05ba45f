#pragma once

#include <span>
#include <variant>
#include <vector>

#include "spdc/dispersion.hpp"
#include "spdc/types.hpp"

namespace spdc {

// Longitudinal chi^(2) profiles and their transforms chi~(delta), i.e. the
// two-photon state function for a monochromatic plane-wave pump. The origin
// z = 0 sits at the output face of the last crystal; all phases follow from
// that convention.

struct BulkProfile {
  double thickness_L;
  double chi0 = 1.0;
};

struct SinusoidalProfile {
  double thickness_L;
  double period_Lambda;
  double chi0 = 1.0;
};

struct FourierPeriodicProfile {
  double thickness_L;
  double period_Lambda;
  // coefficients[m + m_max] = G_m for m in [-m_max, m_max]
  std::vector<Complex> coefficients;
  double chi0 = 1.0;

  int m_max() const { return (static_cast<int>(coefficients.size()) - 1) / 2; }
};

struct CascadeProfile {
  std::vector<CrystalSpec> crystals;
  std::vector<GapSpec> gaps;  // gaps[j] precedes crystals[j+1]; size = N-1

  void validate() const;
  double total_length() const;  // crystals + gaps
};

using NonlinearityProfile =
    std::variant<BulkProfile, SinusoidalProfile, FourierPeriodicProfile,
                 CascadeProfile>;

/// chi0 * L * sinc(L d/2) * exp(-i L d/2)
Complex chi_tilde_bulk(double delta, double L, double chi0);

/// Two shifted sinc terms at delta +/- 2 pi / Lambda.
Complex chi_tilde_sinusoidal(double delta, double L, double Lambda, double chi0);

/// Fourier-series profile: sum over m of G_m-weighted shifted sinc terms.
/// Truncation error is the magnitude of the largest dropped coefficient,
/// which is the caller's responsibility when building the series.
Complex chi_tilde_periodic(double delta, const FourierPeriodicProfile& profile);

/// N-crystal cascade. delta_prime_per_gap overrides the stored per-gap
/// mismatch; it must have size N-1 (or be empty to use the stored values).
Complex chi_tilde_cascade(double delta, const CascadeProfile& cascade,
                          std::span<const double> delta_prime_per_gap = {});

/// Dispatch on the variant. For cascades, each gap's mismatch is
/// gap.delta_prime + gap.delta_prime_slope * delta.
Complex chi_tilde(double delta, const NonlinearityProfile& profile);

/// Direct z-quadrature of the defining integral (1/2pi-free convention):
/// integral of chi(z) exp(i delta z) dz, composite Gauss-Legendre per
/// piecewise-smooth segment. Independent check of the closed forms; for
/// cascades it corresponds to delta' = delta in every gap.
Complex chi_tilde_quadrature(double delta, const NonlinearityProfile& profile,
                             int points_per_segment = 64);

struct StateFunctionSample {
  std::vector<double> delta_grid;
  std::vector<Complex> amplitude;
  std::vector<double> magnitude_sq;
};

StateFunctionSample sample_state_function(const NonlinearityProfile& profile,
                                          double delta_min, double delta_max,
                                          int n_points);

}  // namespace spdc
