#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spdc/apertures.hpp"
#include "spdc/dispersion.hpp"
#include "spdc/types.hpp"

namespace spdc {

/// Analyzer projections entering the interference term. The mu pair is the
/// primitive input; the preset below reproduces the 45/45 analyzer setting
/// with v_pol = -1.
struct AnalyzerSpec {
  double mu_AoBe = -0.5;
  double mu_BoAe = 0.5;

  void validate() const {
    if (std::abs(mu_AoBe) > 1.0 || std::abs(mu_BoAe) > 1.0) {
      throw ConfigError("analyzer projections must lie in [-1, 1]");
    }
    if (mu_AoBe == 0.0 && mu_BoAe == 0.0) {
      throw ConfigError("degenerate analyzers: both projections are zero");
    }
  }
  static AnalyzerSpec paper_45_45() { return {-0.5, 0.5}; }
};

/// v_pol = 2 mu1 mu2 / (mu1^2 + mu2^2), in [-1, 1].
double v_pol(const AnalyzerSpec& analyzers);

enum class Axes { parallel, antiparallel };

/// The two-crystal interferometer: equal crystals separated by a dispersive
/// gap, collection through a common aperture at d1.
struct TwoCrystalSystem {
  CrystalSpec crystal1;
  CrystalSpec crystal2;
  GapSpec gap;
  OpticalGeometry geometry;
  ApertureModel aperture = DeltaAperture{};
  DelayLineSpec delay;
  PumpSpec pump;
  Axes axes = Axes::parallel;

  double rho() const { return (geometry.d1 + gap.length_d) / geometry.d1; }
  double epsilon() const { return axes == Axes::parallel ? 1.0 : -1.0; }
  Vec2 M1() const { return crystal1.walkoff_M; }
  Vec2 M2() const { return axes == Axes::parallel ? M1() : -M1(); }
  /// Gap dispersion phase delta' * d applied to the collective term.
  double phi_disp() const { return gap.delta_prime * gap.length_d; }

  void validate() const;
  /// Additionally requires L1 = L2 and equal D (V(tau) preconditions).
  void validate_equal_thickness() const;
};

enum class GKind { G1, G2, G12 };

/// G-function: an N-kernel evaluation at the walkoff
/// arguments of term `kind`, with zeta = z/L and x = tau/LD. The gap phase
/// e^{-i delta' d} is applied at the V(tau) assembly layer, not here.
Complex g_function(GKind kind, double zeta, double x,
                   const TwoCrystalSystem& system);

/// V(tau): three rect-windowed z-integrals with weights s2^2/(s1^2+s2^2),
/// s1^2/(s1^2+s2^2) and 2 eps s1 s2/(s1^2+s2^2). Zero outside [0, 2LD].
double visibility_tau(double tau, const TwoCrystalSystem& system,
                      int quadrature_order = 64);

/// Same assembly with a caller-supplied N-kernel (used by the oracle to
/// substitute brute-force quadrature for the closed forms).
using NKernelFn = std::function<Complex(const NKernelArgs&)>;
double visibility_tau_with_kernel(double tau, const TwoCrystalSystem& system,
                                  int quadrature_order,
                                  const NKernelFn& kernel);

enum class CenterForm {
  auto_select,
  small_parallel,
  small_antiparallel,
  gauss_parallel,
  gauss_antiparallel,
};

/// V(LD) as the published 1-D zeta-integral of the selected form,
/// including the B, C, D, E coefficients, the 2 rho/(1+rho^2) prefactor,
/// 1/sqrt(1+gamma^2), and the phases phi_gamma and phi_disp.
double visibility_center(const TwoCrystalSystem& system,
                         CenterForm form = CenterForm::auto_select,
                         int quadrature_order = 64);

/// Single-crystal pattern (thickness L_c at effective distance s): the
/// d = 0 and d -> infinity limits of the two-crystal V(tau).
double visibility_single_crystal(double tau, double thickness, const Vec2& M,
                                 double dispersion_D, double s,
                                 const PumpSpec& pump,
                                 const ApertureModel& aperture,
                                 int quadrature_order = 64);

struct CoincidenceRate {
  double relative;    // shoulder-normalized: 1 + v_pol V(tau)
  double prefactor;   // unnormalized R0 scale
};

CoincidenceRate coincidence_rate(double tau, const TwoCrystalSystem& system,
                                 const AnalyzerSpec& analyzers,
                                 int quadrature_order = 64);

struct VisibilityCurve {
  std::string sweep_variable;  // "tau", "d" or "r"
  std::vector<double> abscissa;
  std::vector<double> value;
  std::vector<double> phi_disp;
  std::vector<double> phi_gamma;
  TwoCrystalSystem system;  // snapshot of the (template) system
};

/// V(LD) versus gap length; delta' is rescaled per d when the template
/// gap encodes a dispersive medium (delta_prime fixed per unit length).
VisibilityCurve visibility_vs_separation(const TwoCrystalSystem& system,
                                         const std::vector<double>& d_values,
                                         int quadrature_order = 64);

}  // namespace spdc
