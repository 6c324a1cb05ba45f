#include "spdc/interference.hpp"

#include <cmath>

#include "spdc/quadrature.hpp"

namespace spdc {

double v_pol(const AnalyzerSpec& analyzers) {
  analyzers.validate();
  const double a = analyzers.mu_AoBe, b = analyzers.mu_BoAe;
  return 2.0 * a * b / (a * a + b * b);
}

void TwoCrystalSystem::validate() const {
  pump.from_wavelength(pump.wavelength);
  crystal1.validate();
  crystal2.validate();
  gap.validate();
  geometry.validate();
  spdc::validate(aperture);
}

void TwoCrystalSystem::validate_equal_thickness() const {
  validate();
  if (crystal1.thickness_L != crystal2.thickness_L) {
    throw ConfigError("V(tau) requires equal crystal thicknesses");
  }
  if (crystal1.dispersion_D != crystal2.dispersion_D) {
    throw ConfigError("V(tau) requires equal dispersion coefficients");
  }
}

namespace {

struct Assembly {
  double L, D, s1, s2;
  Vec2 M1, M2, Lvec1, Lvec2;
};

Assembly make_assembly(const TwoCrystalSystem& sys) {
  Assembly a;
  a.L = sys.crystal1.thickness_L;
  a.D = sys.crystal1.dispersion_D;
  a.s1 = sys.geometry.s1(sys.gap.length_d);
  a.s2 = sys.geometry.s2();
  a.M1 = sys.M1();
  a.M2 = sys.M2();
  a.Lvec1 = a.M2 * a.L;  // delay-line walkoff M_tau = 0
  a.Lvec2 = Vec2{0.0, 0.0};
  return a;
}

NKernelArgs term_r_args(const Assembly& a, int r, double z, double tau_r) {
  const Vec2& M = (r == 1) ? a.M1 : a.M2;
  const Vec2& Lv = (r == 1) ? a.Lvec1 : a.Lvec2;
  const double s = (r == 1) ? a.s1 : a.s2;
  NKernelArgs args;
  args.z0 = -(M * z + Lv);
  args.Z = -2.0 * (M * (tau_r / a.D) + Lv);
  args.s_k = s;
  args.s_n = s;
  return args;
}

NKernelArgs term_12_args(const Assembly& a, double z, double tau) {
  NKernelArgs args;
  args.z0 = -(a.M1 * z + a.Lvec1);
  args.Z = -((a.M1 - a.M2) * z + a.M2 * (2.0 * tau / a.D - a.L) + a.Lvec1 +
             a.Lvec2);
  args.s_k = a.s1;
  args.s_n = a.s2;
  return args;
}

}  // namespace

Complex g_function(GKind kind, double zeta, double x,
                   const TwoCrystalSystem& system) {
  system.validate_equal_thickness();
  const Assembly a = make_assembly(system);
  const double tau = x * a.L * a.D;
  const double z = zeta * a.L;
  NKernelArgs args;
  switch (kind) {
    case GKind::G1: args = term_r_args(a, 1, z, tau - a.L * a.D); break;
    case GKind::G2: args = term_r_args(a, 2, z, tau); break;
    case GKind::G12: args = term_12_args(a, z, tau); break;
  }
  return n_kernel(args, system.pump, system.aperture);
}

double visibility_tau_with_kernel(double tau, const TwoCrystalSystem& system,
                                  int quadrature_order,
                                  const NKernelFn& kernel) {
  system.validate_equal_thickness();
  if (quadrature_order < 8) {
    throw ConfigError("visibility quadrature order must be >= 8");
  }
  const Assembly a = make_assembly(system);
  const double norm = a.s1 * a.s1 + a.s2 * a.s2;
  double V = 0.0;

  // direct terms r = 1, 2: window symmetric about tau_r/D makes them real
  for (int r : {1, 2}) {
    const double tau_r = (r == 1) ? tau - a.L * a.D : tau;
    const double lo = std::max(0.0, 2.0 * tau_r / a.D - a.L);
    const double hi = std::min(a.L, 2.0 * tau_r / a.D);
    if (hi <= lo) continue;
    const double s_other = (r == 1) ? a.s2 : a.s1;
    const double coeff = s_other * s_other / norm;
    V += coeff / a.L *
         integrate_gl(
             [&](double z) {
               return kernel(term_r_args(a, r, z, tau_r)).real();
             },
             lo, hi, quadrature_order);
  }

  // collective term with the gap phase e^{-i delta' d}
  {
    const double lo = std::max(0.0, 2.0 * tau / a.D - 2.0 * a.L);
    const double hi = std::min(a.L, 2.0 * tau / a.D - a.L);
    if (hi > lo) {
      const double coeff = 2.0 * system.epsilon() * a.s1 * a.s2 / norm;
      const Complex gap_phase = std::exp(-I * system.phi_disp());
      V += coeff / a.L *
           integrate_gl(
               [&](double z) {
                 return (kernel(term_12_args(a, z, tau)) * gap_phase).real();
               },
               lo, hi, quadrature_order);
    }
  }
  return V;
}

double visibility_tau(double tau, const TwoCrystalSystem& system,
                      int quadrature_order) {
  return visibility_tau_with_kernel(
      tau, system, quadrature_order, [&](const NKernelArgs& args) {
        return n_kernel(args, system.pump, system.aperture);
      });
}

namespace {

GaussianAperture require_gaussian(const ApertureModel& aperture) {
  if (const auto* g = std::get_if<GaussianAperture>(&aperture)) return *g;
  if (const auto* c = std::get_if<CircularAperture>(&aperture)) {
    return c->to_gaussian();
  }
  throw ConfigError("this visibility form requires a Gaussian-type aperture");
}

}  // namespace

double visibility_center(const TwoCrystalSystem& system, CenterForm form,
                         int quadrature_order) {
  system.validate_equal_thickness();
  if (form == CenterForm::auto_select) {
    const bool small = std::holds_alternative<DeltaAperture>(system.aperture);
    const bool par = system.axes == Axes::parallel;
    form = small ? (par ? CenterForm::small_parallel
                        : CenterForm::small_antiparallel)
                 : (par ? CenterForm::gauss_parallel
                        : CenterForm::gauss_antiparallel);
  }

  const double kp = system.pump.k_p();
  const double L = system.crystal1.thickness_L;
  const double d1 = system.geometry.d1;
  const double d = system.gap.length_d;
  const double ML2 = system.M1().norm_sq() * L * L;  // |ML|^2
  const double rho = system.rho();
  const double pre = 2.0 * rho / (1.0 + rho * rho);
  const double phid = system.phi_disp();

  switch (form) {
    case CenterForm::small_parallel: {
      const double c = kp * ML2 / (2.0 * (d1 + d));
      return pre * integrate_gl(
                       [&](double zeta) {
                         const double phase =
                             c * ((1.0 + zeta * zeta) * d / (4.0 * d1) -
                                  zeta * (1.0 + d / (2.0 * d1)));
                         return std::cos(phase + phid);
                       },
                       0.0, 1.0, quadrature_order);
    }
    case CenterForm::small_antiparallel: {
      const double c = kp * ML2 / (2.0 * (d1 + d)) * d / (4.0 * d1);
      return -pre * integrate_gl(
                        [&](double zeta) {
                          const double u = zeta - 1.0;
                          return std::cos(c * u * u + phid);
                        },
                        0.0, 1.0, quadrature_order);
    }
    case CenterForm::gauss_parallel:
    case CenterForm::gauss_antiparallel: {
      const GaussianAperture ap = require_gaussian(system.aperture);
      const double rbar2 = ap.rbar_sq();
      const double gamma = gamma_factor(system.pump, ap, d1, d);
      const double g2 = 1.0 + gamma * gamma;
      const double phig = phi_gamma(gamma);
      const double q = kp * std::sqrt(ML2 * rbar2) / (4.0 * (d1 + d));
      const double B =
          2.0 * q * q / g2 * std::pow(1.0 + d / (2.0 * d1), 2);
      const double E =
          (d == 0.0)
              ? 0.0
              : kp * ML2 / (8.0 * (d1 + d)) *
                    (d / d1 - 4.0 * gamma * gamma * (d1 + d) / d) / g2;
      if (form == CenterForm::gauss_parallel) {
        const double C = kp * ML2 / (8.0 * (d1 + d)) * (d / d1) / g2;
        const double Dc =
            -kp * ML2 / (2.0 * (d1 + d)) * (1.0 + d / (2.0 * d1)) / g2;
        const double w = d / (d + 2.0 * d1);
        return pre / std::sqrt(g2) *
               integrate_gl(
                   [&](double zeta) {
                     const double u = 1.0 - zeta * w;
                     return std::exp(-B * u * u) *
                            std::cos(C * zeta * zeta + Dc * zeta + E - phig +
                                     phid);
                   },
                   0.0, 1.0, quadrature_order);
      }
      return -pre / std::sqrt(g2) *
             integrate_gl(
                 [&](double zeta) {
                   const double u = 1.0 - zeta;
                   return std::exp(-B * u * u) *
                          std::cos(E * u * u - phig + phid);
                 },
                 0.0, 1.0, quadrature_order);
    }
    default:
      throw ConfigError("unknown visibility form");
  }
}

double visibility_single_crystal(double tau, double thickness, const Vec2& M,
                                 double dispersion_D, double s,
                                 const PumpSpec& pump,
                                 const ApertureModel& aperture,
                                 int quadrature_order) {
  const double L = thickness, D = dispersion_D;
  const double lo = std::max(0.0, 2.0 * tau / D - L);
  const double hi = std::min(L, 2.0 * tau / D);
  if (hi <= lo) return 0.0;
  NKernelArgs args;
  args.Z = -2.0 * M * (tau / D);
  args.s_k = s;
  args.s_n = s;
  return 1.0 / L *
         integrate_gl(
             [&](double z) {
               NKernelArgs az = args;
               az.z0 = -(M * z);
               return n_kernel(az, pump, aperture).real();
             },
             lo, hi, quadrature_order);
}

CoincidenceRate coincidence_rate(double tau, const TwoCrystalSystem& system,
                                 const AnalyzerSpec& analyzers,
                                 int quadrature_order) {
  const double V = visibility_tau(tau, system, quadrature_order);
  const double vp = v_pol(analyzers);
  const Assembly a = make_assembly(system);
  const double kp2 = std::pow(system.pump.k_p() / 2.0, 2);
  double pupil = 1.0;
  if (!std::holds_alternative<DeltaAperture>(system.aperture)) {
    const GaussianAperture ap = require_gaussian(system.aperture);
    pupil = (pi * ap.r_a * ap.r_a) * (pi * ap.r_b * ap.r_b);
  }
  const double prefactor =
      kp2 * (a.L / (a.D * a.s1 * a.s1) + a.L / (a.D * a.s2 * a.s2)) * pupil;
  return {1.0 + vp * V, prefactor};
}

VisibilityCurve visibility_vs_separation(const TwoCrystalSystem& system,
                                         const std::vector<double>& d_values,
                                         int quadrature_order) {
  if (d_values.empty()) throw ConfigError("empty separation sweep");
  VisibilityCurve curve;
  curve.sweep_variable = "d";
  curve.system = system;
  curve.abscissa = d_values;
  for (double d : d_values) {
    TwoCrystalSystem sys = system;
    sys.gap.length_d = d;
    curve.value.push_back(visibility_center(sys, CenterForm::auto_select,
                                            quadrature_order));
    curve.phi_disp.push_back(sys.phi_disp());
    double gamma = 0.0;
    if (!std::holds_alternative<DeltaAperture>(sys.aperture)) {
      gamma = gamma_factor(sys.pump, require_gaussian(sys.aperture),
                           sys.geometry.d1, d);
    }
    curve.phi_gamma.push_back(phi_gamma(gamma));
  }
  return curve;
}

}  // namespace spdc
