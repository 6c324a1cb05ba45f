#include "spdc/nonlinearity.hpp"

#include <cmath>

#include "spdc/quadrature.hpp"

namespace spdc {

void CascadeProfile::validate() const {
  if (crystals.empty()) throw ConfigError("cascade needs at least one crystal");
  if (gaps.size() + 1 != crystals.size()) {
    throw ConfigError("cascade needs exactly N-1 gaps for N crystals");
  }
  for (const auto& c : crystals) c.validate();
  for (const auto& g : gaps) g.validate();
}

double CascadeProfile::total_length() const {
  double total = 0.0;
  for (const auto& c : crystals) total += c.thickness_L;
  for (const auto& g : gaps) total += g.length_d;
  return total;
}

Complex chi_tilde_bulk(double delta, double L, double chi0) {
  // integral of chi0 e^{i delta z} over [-L, 0]
  const double x = 0.5 * L * delta;
  return chi0 * L * sinc(x) * std::exp(-I * x);
}

Complex chi_tilde_sinusoidal(double delta, double L, double Lambda,
                             double chi0) {
  const double K = 2.0 * pi / Lambda;
  return 0.5 * (chi_tilde_bulk(delta + K, L, chi0) +
                chi_tilde_bulk(delta - K, L, chi0));
}

Complex chi_tilde_periodic(double delta, const FourierPeriodicProfile& p) {
  const double K = 2.0 * pi / p.period_Lambda;
  const int m_max = p.m_max();
  Complex sum = 0.0;
  for (int m = -m_max; m <= m_max; ++m) {
    sum += p.coefficients[static_cast<size_t>(m + m_max)] *
           chi_tilde_bulk(delta + m * K, p.thickness_L, p.chi0);
  }
  return sum;
}

Complex chi_tilde_cascade(double delta, const CascadeProfile& cascade,
                          std::span<const double> delta_prime_per_gap) {
  cascade.validate();
  if (!delta_prime_per_gap.empty() &&
      delta_prime_per_gap.size() != cascade.gaps.size()) {
    throw ConfigError("delta_prime override must have one entry per gap");
  }
  // Crystals are entered in order; the last one ends at z = 0. Accumulate
  // the downstream phase L_k*delta (crystals) and d_k*delta'_k (gaps) from
  // the output backwards.
  const int n = static_cast<int>(cascade.crystals.size());
  Complex sum = 0.0;
  double phase_after = 0.0;  // sum of L*delta + d*delta' downstream of crystal j
  for (int j = n - 1; j >= 0; --j) {
    const auto& c = cascade.crystals[static_cast<size_t>(j)];
    sum += static_cast<double>(c.epsilon) *
           chi_tilde_bulk(delta, c.thickness_L, c.chi0) *
           std::exp(-I * phase_after);
    if (j > 0) {
      const auto& g = cascade.gaps[static_cast<size_t>(j - 1)];
      const double dp = delta_prime_per_gap.empty()
                            ? g.delta_prime
                            : delta_prime_per_gap[static_cast<size_t>(j - 1)];
      phase_after += c.thickness_L * delta + g.length_d * dp;
    }
  }
  return sum;
}

Complex chi_tilde(double delta, const NonlinearityProfile& profile) {
  return std::visit(
      [delta](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BulkProfile>) {
          return chi_tilde_bulk(delta, p.thickness_L, p.chi0);
        } else if constexpr (std::is_same_v<T, SinusoidalProfile>) {
          return chi_tilde_sinusoidal(delta, p.thickness_L, p.period_Lambda,
                                      p.chi0);
        } else if constexpr (std::is_same_v<T, FourierPeriodicProfile>) {
          return chi_tilde_periodic(delta, p);
        } else {
          std::vector<double> dp(p.gaps.size());
          for (size_t j = 0; j < p.gaps.size(); ++j) {
            dp[j] = p.gaps[j].delta_prime + p.gaps[j].delta_prime_slope * delta;
          }
          return chi_tilde_cascade(delta, p, dp);
        }
      },
      profile);
}

namespace {

// chi(z) on [-L, 0] for the single-segment profiles.
Complex quadrature_single(double delta, double L, int oscillations_extra,
                          int points_per_segment,
                          const std::function<double(double)>& chi) {
  const double cycles = std::abs(delta) * L / (2.0 * pi) + oscillations_extra;
  const long points =
      points_per_segment * (static_cast<long>(cycles) + 1);
  return integrate_composite(
      [&](double z) { return chi(z) * std::exp(I * delta * z); }, -L, 0.0,
      points);
}

}  // namespace

Complex chi_tilde_quadrature(double delta, const NonlinearityProfile& profile,
                             int points_per_segment) {
  return std::visit(
      [&](const auto& p) -> Complex {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BulkProfile>) {
          return quadrature_single(delta, p.thickness_L, 0, points_per_segment,
                                   [&](double) { return p.chi0; });
        } else if constexpr (std::is_same_v<T, SinusoidalProfile>) {
          const double K = 2.0 * pi / p.period_Lambda;
          const int extra =
              static_cast<int>(p.thickness_L / p.period_Lambda) + 1;
          return quadrature_single(
              delta, p.thickness_L, extra, points_per_segment,
              [&](double z) { return p.chi0 * std::cos(K * z); });
        } else if constexpr (std::is_same_v<T, FourierPeriodicProfile>) {
          const double K = 2.0 * pi / p.period_Lambda;
          const int m_max = p.m_max();
          const int extra = (static_cast<int>(p.thickness_L / p.period_Lambda) +
                             1) * std::max(1, m_max);
          const long cycles =
              static_cast<long>(std::abs(delta) * p.thickness_L / (2.0 * pi)) +
              extra;
          const long points = points_per_segment * (cycles + 1);
          return integrate_composite(
              [&](double z) {
                Complex chi = 0.0;
                for (int m = -m_max; m <= m_max; ++m) {
                  chi += p.coefficients[static_cast<size_t>(m + m_max)] *
                         std::exp(I * (m * K * z));
                }
                return p.chi0 * chi * std::exp(I * delta * z);
              },
              -p.thickness_L, 0.0, points);
        } else {
          // Direct quadrature treats the gaps as part of the e^{i delta z}
          // propagation, i.e. delta' = delta in every gap.
          p.validate();
          const int n = static_cast<int>(p.crystals.size());
          double z_end = 0.0;
          Complex sum = 0.0;
          for (int j = n - 1; j >= 0; --j) {
            const auto& c = p.crystals[static_cast<size_t>(j)];
            const double z_start = z_end - c.thickness_L;
            const double cycles =
                std::abs(delta) * c.thickness_L / (2.0 * pi);
            const long points =
                points_per_segment * (static_cast<long>(cycles) + 1);
            sum += static_cast<double>(c.epsilon) * c.chi0 *
                   integrate_composite(
                       [&](double z) { return std::exp(I * delta * z); },
                       z_start, z_end, points);
            if (j > 0) {
              z_end = z_start - p.gaps[static_cast<size_t>(j - 1)].length_d;
            }
          }
          return sum;
        }
      },
      profile);
}

StateFunctionSample sample_state_function(const NonlinearityProfile& profile,
                                          double delta_min, double delta_max,
                                          int n_points) {
  if (n_points < 2) throw ConfigError("state function needs >= 2 points");
  if (!(delta_max > delta_min)) {
    throw ConfigError("state function needs delta_max > delta_min");
  }
  StateFunctionSample sample;
  sample.delta_grid.resize(static_cast<size_t>(n_points));
  sample.amplitude.resize(static_cast<size_t>(n_points));
  sample.magnitude_sq.resize(static_cast<size_t>(n_points));
  const double h = (delta_max - delta_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double delta = delta_min + i * h;
    const Complex amp = chi_tilde(delta, profile);
    sample.delta_grid[static_cast<size_t>(i)] = delta;
    sample.amplitude[static_cast<size_t>(i)] = amp;
    sample.magnitude_sq[static_cast<size_t>(i)] = std::norm(amp);
  }
  return sample;
}

}  // namespace spdc
