#include "spdc/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "spdc/units.hpp"

namespace spdc {

using nlohmann::json;

namespace {

// Collects every violation with its field path instead of failing fast.
struct Diags {
  std::vector<std::string> items;

  void add(const std::string& path, const std::string& what) {
    items.push_back(path + ": " + what);
  }
  template <typename F>
  auto guard(const std::string& path, F&& f, decltype(f()) fallback)
      -> decltype(f()) {
    try {
      return f();
    } catch (const std::exception& e) {
      add(path, e.what());
      return fallback;
    }
  }
};

const json* find(const json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path + ": expected a string");
  return j.get<std::string>();
}

double parse_quantity(const json& j, const std::string& path,
                      double (*parser)(const std::string&)) {
  if (j.is_string()) return parser(j.get<std::string>());
  throw ConfigError(path + ": dimensioned quantities need a unit suffix");
}

Vec2 parse_walkoff(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError(path + ": expected a number or [x, y] pair");
}

CrystalSpec parse_crystal(const json& j, const std::string& path,
                          Diags& diags) {
  CrystalSpec c;
  if (const json* v = find(j, "thickness")) {
    diags.guard(path + ".thickness", [&] {
      c.thickness_L = parse_quantity(*v, path, units::parse_length);
      return 0;
    }, 0);
  }
  if (const json* v = find(j, "dispersion_D")) {
    diags.guard(path + ".dispersion_D", [&] {
      c.dispersion_D = parse_quantity(*v, path, units::parse_time_per_length);
      return 0;
    }, 0);
  }
  if (const json* v = find(j, "walkoff")) {
    diags.guard(path + ".walkoff", [&] {
      c.walkoff_M = parse_walkoff(*v, path + ".walkoff");
      return 0;
    }, 0);
  }
  if (const json* v = find(j, "chi0")) c.chi0 = v->get<double>();
  if (const json* v = find(j, "epsilon")) c.epsilon = v->get<int>();
  diags.guard(path, [&] { c.validate(); return 0; }, 0);
  return c;
}

ApertureModel parse_aperture(const json& j, const std::string& path) {
  const std::string model = require_string(
      find(j, "model") ? *find(j, "model") : json{}, path + ".model");
  if (model == "delta") return DeltaAperture{};
  if (model == "gaussian") {
    GaussianAperture g;
    if (const json* v = find(j, "r")) {
      g.r_a = g.r_b = parse_quantity(*v, path + ".r", units::parse_length);
    } else {
      if (const json* v = find(j, "r_a")) {
        g.r_a = parse_quantity(*v, path + ".r_a", units::parse_length);
      }
      if (const json* v = find(j, "r_b")) {
        g.r_b = parse_quantity(*v, path + ".r_b", units::parse_length);
      }
    }
    g.validate();
    return g;
  }
  if (model == "circular") {
    CircularAperture c;
    if (const json* v = find(j, "b")) {
      c.b_a = c.b_b = parse_quantity(*v, path + ".b", units::parse_length);
    } else {
      if (const json* v = find(j, "b_a")) {
        c.b_a = parse_quantity(*v, path + ".b_a", units::parse_length);
      }
      if (const json* v = find(j, "b_b")) {
        c.b_b = parse_quantity(*v, path + ".b_b", units::parse_length);
      }
    }
    c.validate();
    return c;
  }
  throw ConfigError(path + ".model: unknown aperture model '" + model + "'");
}

TwoCrystalSystem parse_system(const json& j, const std::string& path,
                              Diags& diags) {
  TwoCrystalSystem sys;
  if (const json* v = find(j, "pump_wavelength")) {
    diags.guard(path + ".pump_wavelength", [&] {
      sys.pump.wavelength =
          parse_quantity(*v, path + ".pump_wavelength", units::parse_length);
      return 0;
    }, 0);
  }
  if (const json* v = find(j, "crystal")) {
    sys.crystal1 = parse_crystal(*v, path + ".crystal", diags);
    sys.crystal2 = sys.crystal1;
  }
  if (const json* v = find(j, "gap")) {
    if (const json* g = find(*v, "length")) {
      diags.guard(path + ".gap.length", [&] {
        sys.gap.length_d =
            parse_quantity(*g, path + ".gap.length", units::parse_length);
        return 0;
      }, 0);
    }
    if (const json* g = find(*v, "delta_prime")) {
      diags.guard(path + ".gap.delta_prime", [&] {
        if (g->is_string() && g->get<std::string>() == "air") {
          sys.gap.delta_prime = default_air_delta_prime(sys.pump);
        } else {
          sys.gap.delta_prime = parse_quantity(*g, path + ".gap.delta_prime",
                                               units::parse_wavenumber);
        }
        return 0;
      }, 0);
    }
    diags.guard(path + ".gap", [&] { sys.gap.validate(); return 0; }, 0);
  }
  if (const json* v = find(j, "geometry")) {
    auto len = [&](const char* key, double& target) {
      if (const json* g = find(*v, key)) {
        diags.guard(path + ".geometry." + key, [&] {
          target = parse_quantity(*g, key, units::parse_length);
          return 0;
        }, 0);
      }
    };
    len("d1", sys.geometry.d1);
    len("d2", sys.geometry.d2);
    len("f", sys.geometry.f);
    diags.guard(path + ".geometry",
                [&] { sys.geometry.validate(); return 0; }, 0);
  }
  if (const json* v = find(j, "aperture")) {
    diags.guard(path + ".aperture", [&] {
      sys.aperture = parse_aperture(*v, path + ".aperture");
      return 0;
    }, 0);
  }
  if (const json* v = find(j, "axes")) {
    diags.guard(path + ".axes", [&] {
      const std::string axes = require_string(*v, path + ".axes");
      if (axes == "parallel") sys.axes = Axes::parallel;
      else if (axes == "antiparallel") sys.axes = Axes::antiparallel;
      else throw ConfigError("must be 'parallel' or 'antiparallel'");
      return 0;
    }, 0);
  }
  return sys;
}

NonlinearityProfile parse_profile(const json& j, const std::string& path,
                                  Diags& diags) {
  const std::string model = require_string(
      find(j, "model") ? *find(j, "model") : json{}, path + ".model");
  auto length = [&](const char* key, double fallback) {
    if (const json* v = find(j, key)) {
      return diags.guard(path + "." + key, [&] {
        return parse_quantity(*v, key, units::parse_length);
      }, fallback);
    }
    diags.add(path, std::string("missing required field '") + key + "'");
    return fallback;
  };
  if (model == "bulk") {
    BulkProfile p;
    p.thickness_L = length("thickness", 1e-3);
    if (const json* v = find(j, "chi0")) p.chi0 = v->get<double>();
    return p;
  }
  if (model == "sinusoidal") {
    SinusoidalProfile p;
    p.thickness_L = length("thickness", 1e-3);
    p.period_Lambda = length("period", 1e-4);
    if (const json* v = find(j, "chi0")) p.chi0 = v->get<double>();
    return p;
  }
  if (model == "periodic") {
    FourierPeriodicProfile p;
    p.thickness_L = length("thickness", 1e-3);
    p.period_Lambda = length("period", 1e-4);
    if (const json* v = find(j, "coefficients")) {
      for (const auto& c : *v) {
        p.coefficients.emplace_back(c[0].get<double>(), c[1].get<double>());
      }
    }
    if (p.coefficients.empty() || p.coefficients.size() % 2 == 0) {
      diags.add(path + ".coefficients",
                "need an odd number of [re, im] pairs (orders -m..m)");
      p.coefficients.assign(1, Complex{1.0, 0.0});
    }
    return p;
  }
  if (model == "cascade") {
    CascadeProfile p;
    if (const json* v = find(j, "crystals")) {
      int idx = 0;
      for (const auto& c : *v) {
        p.crystals.push_back(parse_crystal(
            c, path + ".crystals[" + std::to_string(idx++) + "]", diags));
      }
    }
    if (const json* v = find(j, "gaps")) {
      int idx = 0;
      for (const auto& g : *v) {
        const std::string gp = path + ".gaps[" + std::to_string(idx++) + "]";
        GapSpec gap;
        if (const json* w = find(g, "length")) {
          diags.guard(gp + ".length", [&] {
            gap.length_d = parse_quantity(*w, gp, units::parse_length);
            return 0;
          }, 0);
        }
        if (const json* w = find(g, "delta_prime")) {
          diags.guard(gp + ".delta_prime", [&] {
            gap.delta_prime = parse_quantity(*w, gp, units::parse_wavenumber);
            return 0;
          }, 0);
        }
        if (const json* w = find(g, "delta_prime_slope")) {
          gap.delta_prime_slope = w->get<double>();
        }
        p.gaps.push_back(gap);
      }
    }
    diags.guard(path, [&] { p.validate(); return 0; }, 0);
    return p;
  }
  throw ConfigError(path + ".model: unknown profile model '" + model + "'");
}

double (*sweep_parser(const std::string& variable))(const std::string&) {
  if (variable == "tau") return units::parse_time;
  if (variable == "delta") return units::parse_wavenumber;
  return units::parse_length;  // d, aperture_b, r
}

RunConfig parse_impl(const json& payload, Diags& diags) {
  RunConfig config;
  config.canonical = payload;
  if (const json* v = find(payload, "label")) {
    config.label = v->get<std::string>();
  }
  config.kind = "visibility";
  if (const json* v = find(payload, "kind")) {
    config.kind = require_string(*v, "kind");
  }
  if (config.kind != "visibility" && config.kind != "state_function") {
    diags.add("kind", "must be 'visibility' or 'state_function'");
  }

  if (config.kind == "state_function") {
    if (const json* v = find(payload, "profile")) {
      diags.guard("profile", [&] {
        config.profile = parse_profile(*v, "profile", diags);
        return 0;
      }, 0);
    } else {
      diags.add("profile", "state_function runs need a profile");
    }
  } else {
    const json* base = find(payload, "system");
    if (!base) {
      diags.add("system", "visibility runs need a system");
    } else {
      TwoCrystalSystem base_sys = parse_system(*base, "system", diags);
      const json* variants = find(payload, "variants");
      if (variants && variants->is_array() && !variants->empty()) {
        int idx = 0;
        for (const auto& v : *variants) {
          const std::string vp = "variants[" + std::to_string(idx++) + "]";
          std::string label = "v" + std::to_string(idx);
          if (const json* l = find(v, "label")) label = l->get<std::string>();
          json merged = *base;
          if (const json* o = find(v, "system")) {
            merged.merge_patch(*o);
          }
          config.variants.emplace_back(
              label, parse_system(merged, vp + ".system", diags));
        }
      } else {
        config.variants.emplace_back("V", base_sys);
      }
      for (auto& [label, sys] : config.variants) {
        diags.guard("system (" + label + ")", [&] {
          sys.validate_equal_thickness();
          return 0;
        }, 0);
      }
    }
    if (const json* v = find(payload, "analyzers")) {
      diags.guard("analyzers", [&] {
        if (const json* p = find(*v, "preset")) {
          if (p->get<std::string>() != "paper-45-45") {
            throw ConfigError("unknown analyzer preset");
          }
          config.analyzers = AnalyzerSpec::paper_45_45();
        } else {
          if (const json* m = find(*v, "mu_AoBe")) {
            config.analyzers.mu_AoBe = m->get<double>();
          }
          if (const json* m = find(*v, "mu_BoAe")) {
            config.analyzers.mu_BoAe = m->get<double>();
          }
          config.analyzers.validate();
        }
        return 0;
      }, 0);
    }
  }

  const json* sweep = find(payload, "sweep");
  if (!sweep) {
    diags.add("sweep", "missing sweep block");
  } else {
    if (const json* v = find(*sweep, "variable")) {
      diags.guard("sweep.variable", [&] {
        config.sweep.variable = require_string(*v, "sweep.variable");
        const bool known = config.sweep.variable == "tau" ||
                           config.sweep.variable == "d" ||
                           config.sweep.variable == "aperture_b" ||
                           config.sweep.variable == "r" ||
                           config.sweep.variable == "delta";
        if (!known) throw ConfigError("unknown sweep variable");
        const bool wants_delta = config.kind == "state_function";
        if (wants_delta != (config.sweep.variable == "delta")) {
          throw ConfigError(
              "state_function sweeps 'delta'; visibility sweeps "
              "tau/d/aperture_b/r");
        }
        return 0;
      }, 0);
    } else {
      diags.add("sweep.variable", "missing");
    }
    auto parser = sweep_parser(config.sweep.variable);
    if (const json* v = find(*sweep, "start")) {
      diags.guard("sweep.start", [&] {
        config.sweep.start = parse_quantity(*v, "sweep.start", parser);
        return 0;
      }, 0);
    }
    if (const json* v = find(*sweep, "stop")) {
      diags.guard("sweep.stop", [&] {
        config.sweep.stop = parse_quantity(*v, "sweep.stop", parser);
        return 0;
      }, 0);
    }
    if (const json* v = find(*sweep, "steps")) {
      config.sweep.steps = v->get<int>();
    }
    if (config.sweep.steps < 2) diags.add("sweep.steps", "must be >= 2");
    if (!(config.sweep.start < config.sweep.stop)) {
      diags.add("sweep", "start must be < stop");
    }
  }

  if (const json* v = find(payload, "quadrature")) {
    if (const json* o = find(*v, "order")) {
      config.quadrature_order = o->get<int>();
    }
  }
  if (config.quadrature_order < 8) {
    diags.add("quadrature.order", "must be >= 8");
  }

  if (const json* v = find(payload, "output")) {
    if (const json* c = find(*v, "csv")) {
      config.output.csv_path = c->get<std::string>();
    }
    if (const json* s = find(*v, "svg")) {
      config.output.svg_path = s->get<std::string>();
    }
  }
  if (config.output.csv_path.empty()) {
    diags.add("output.csv", "missing CSV output path");
  }
  return config;
}

// ---- presets -------------------------------------------------------------

json fig10_base_system() {
  return json{
      {"pump_wavelength", "351.1 nm"},
      {"crystal",
       {{"thickness", "0.5 mm"},
        {"dispersion_D", "185 fs/mm"},
        {"walkoff", 0.07}}},
      {"gap", {{"length", "2 mm"}, {"delta_prime", "air"}}},
      {"geometry", {{"d1", "750 mm"}, {"d2", "1 m"}, {"f", "250 mm"}}},
      {"aperture", {{"model", "circular"}, {"b", "2.5 mm"}}},
      {"axes", "parallel"},
  };
}

json make_preset(const std::string& name) {
  auto d_sweep = json{{"variable", "d"},
                      {"start", "2 mm"},
                      {"stop", "100 mm"},
                      {"steps", 197}};
  if (name == "fig1a") {
    return json{{"kind", "state_function"},
                {"label", "fig1a"},
                {"profile", {{"model", "bulk"}, {"thickness", "0.5 mm"}}},
                {"sweep",
                 {{"variable", "delta"},
                  {"start", "-100 rad/mm"},
                  {"stop", "100 rad/mm"},
                  {"steps", 1001}}},
                {"output", {{"csv", "fig1a.csv"}, {"svg", "fig1a.svg"}}}};
  }
  if (name == "fig1b") {
    return json{{"kind", "state_function"},
                {"label", "fig1b"},
                {"profile",
                 {{"model", "sinusoidal"},
                  {"thickness", "0.5 mm"},
                  {"period", "0.1 mm"}}},
                {"sweep",
                 {{"variable", "delta"},
                  {"start", "-150 rad/mm"},
                  {"stop", "150 rad/mm"},
                  {"steps", 1501}}},
                {"output", {{"csv", "fig1b.csv"}, {"svg", "fig1b.svg"}}}};
  }
  if (name == "fig2a" || name == "fig2b") {
    const char* l2 = (name == "fig2a") ? "0.25 mm" : "0.5 mm";
    return json{{"kind", "state_function"},
                {"label", name},
                {"profile",
                 {{"model", "cascade"},
                  {"crystals",
                   {{{"thickness", "0.5 mm"}}, {{"thickness", l2}}}},
                  {"gaps",
                   {{{"length", "5 mm"},
                     {"delta_prime", "0 rad/m"},
                     {"delta_prime_slope", 0.2}}}}}},
                {"sweep",
                 {{"variable", "delta"},
                  {"start", "-100 rad/mm"},
                  {"stop", "100 rad/mm"},
                  {"steps", 2001}}},
                {"output",
                 {{"csv", name + ".csv"}, {"svg", name + ".svg"}}}};
  }
  if (name == "fig7" || name == "fig11") {
    json cfg{{"kind", "visibility"},
             {"label", name},
             {"system", fig10_base_system()},
             {"variants",
              {{{"label", "b2.5mm"}, {"system", json::object()}},
               {{"label", "b4.0mm"},
                {"system",
                 {{"aperture", {{"model", "circular"}, {"b", "4 mm"}}}}}},
               {{"label", "b5.0mm"},
                {"system",
                 {{"aperture", {{"model", "circular"}, {"b", "5 mm"}}}}}}}},
             {"sweep", d_sweep},
             {"output", {{"csv", name + ".csv"}, {"svg", name + ".svg"}}}};
    if (name == "fig11") cfg["system"]["axes"] = "antiparallel";
    return cfg;
  }
  if (name == "fig8") {
    json base = fig10_base_system();
    base["geometry"]["d1"] = "1 m";
    base["gap"]["length"] = "0 mm";
    base["aperture"] = json{{"model", "gaussian"}, {"r", "0.5 mm"}};
    json variants = json::array();
    for (const char* axes : {"parallel", "antiparallel"}) {
      for (const char* L : {"0.5", "1.5", "5.0"}) {
        std::string label =
            std::string(axes[0] == 'p' ? "par" : "anti") + "_L" + L + "mm";
        variants.push_back(json{
            {"label", label},
            {"system",
             {{"axes", axes},
              {"crystal", {{"thickness", std::string(L) + " mm"}}}}}});
      }
    }
    return json{{"kind", "visibility"},
                {"label", "fig8"},
                {"system", base},
                {"variants", variants},
                {"sweep",
                 {{"variable", "r"},
                  {"start", "0.05 mm"},
                  {"stop", "2 mm"},
                  {"steps", 118}}},
                {"output", {{"csv", "fig8.csv"}, {"svg", "fig8.svg"}}}};
  }
  if (name == "fig10_parallel" || name == "fig10_antiparallel") {
    json base = fig10_base_system();
    base["axes"] =
        (name == "fig10_parallel") ? "parallel" : "antiparallel";
    return json{{"kind", "visibility"},
                {"label", name},
                {"system", base},
                {"sweep", d_sweep},
                {"output",
                 {{"csv", name + ".csv"}, {"svg", name + ".svg"}}}};
  }
  throw ConfigError("unknown preset '" + name + "'");
}

// ---- execution -----------------------------------------------------------

int worker_count() {
  if (const char* env = std::getenv("SPDC_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

template <typename F>
void parallel_for(int n, F&& body) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<double> linspace(double start, double stop, int steps) {
  std::vector<double> grid(static_cast<size_t>(steps));
  const double h = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<size_t>(i)] = start + i * h;
  return grid;
}

TwoCrystalSystem at_sweep_point(const TwoCrystalSystem& base,
                                const std::string& variable, double value) {
  TwoCrystalSystem sys = base;
  if (variable == "d") {
    sys.gap.length_d = value;
  } else if (variable == "aperture_b") {
    sys.aperture = CircularAperture{value, value};
  } else if (variable == "r") {
    sys.aperture = GaussianAperture{value, value};
  }
  return sys;
}

}  // namespace

RunConfig parse_config(const json& payload) {
  Diags diags;
  RunConfig config = parse_impl(payload, diags);
  if (!diags.items.empty()) {
    std::ostringstream msg;
    msg << "invalid configuration:";
    for (const auto& d : diags.items) msg << "\n  " << d;
    throw ConfigError(msg.str());
  }
  return config;
}

std::vector<std::string> validate_config(const json& payload) {
  Diags diags;
  try {
    parse_impl(payload, diags);
  } catch (const std::exception& e) {
    diags.items.push_back(e.what());
  }
  return diags.items;
}

std::vector<std::string> preset_names() {
  return {"fig1a", "fig1b", "fig2a",          "fig2b",
          "fig7",  "fig8",  "fig10_parallel", "fig10_antiparallel",
          "fig11"};
}

json preset_payload(const std::string& name) { return make_preset(name); }

RunResult execute(const RunConfig& config) {
  RunResult result;
  result.table.header_lines.push_back("config: " + config.canonical.dump());

  const auto grid =
      linspace(config.sweep.start, config.sweep.stop, config.sweep.steps);

  if (config.kind == "state_function") {
    const auto sample = sample_state_function(
        *config.profile, config.sweep.start, config.sweep.stop,
        config.sweep.steps);
    result.table.columns = {"delta", "re", "im", "magnitude_sq"};
    SvgSeries series{"|chi|^2", sample.delta_grid, sample.magnitude_sq};
    for (size_t i = 0; i < sample.delta_grid.size(); ++i) {
      result.table.rows.push_back(
          {sample.delta_grid[i], sample.amplitude[i].real(),
           sample.amplitude[i].imag(), sample.magnitude_sq[i]});
    }
    result.series.push_back(std::move(series));
    const auto [mn, mx] = std::minmax_element(sample.magnitude_sq.begin(),
                                              sample.magnitude_sq.end());
    std::ostringstream s;
    s << "state function: " << config.sweep.steps << " points, |chi|^2 in ["
      << *mn << ", " << *mx << "]";
    result.summary = s.str();
    return result;
  }

  const int n = config.sweep.steps;
  const size_t nv = config.variants.size();
  std::vector<std::vector<double>> values(nv,
                                          std::vector<double>(grid.size()));
  std::vector<double> phi_d(grid.size()), phi_g(grid.size());
  const bool is_tau = config.sweep.variable == "tau";

  parallel_for(n, [&](int i) {
    const double x = grid[static_cast<size_t>(i)];
    for (size_t v = 0; v < nv; ++v) {
      const auto& base = config.variants[v].second;
      if (is_tau) {
        values[v][static_cast<size_t>(i)] =
            visibility_tau(x, base, config.quadrature_order);
      } else {
        const TwoCrystalSystem sys =
            at_sweep_point(base, config.sweep.variable, x);
        values[v][static_cast<size_t>(i)] = visibility_center(
            sys, CenterForm::auto_select, config.quadrature_order);
      }
      if (v == 0) {
        const TwoCrystalSystem sys =
            is_tau ? base : at_sweep_point(base, config.sweep.variable, x);
        phi_d[static_cast<size_t>(i)] = sys.phi_disp();
        double gamma = 0.0;
        if (const auto* g = std::get_if<GaussianAperture>(&sys.aperture)) {
          gamma = gamma_factor(sys.pump, *g, sys.geometry.d1,
                               sys.gap.length_d);
        } else if (const auto* c =
                       std::get_if<CircularAperture>(&sys.aperture)) {
          gamma = gamma_factor(sys.pump, c->to_gaussian(), sys.geometry.d1,
                               sys.gap.length_d);
        }
        phi_g[static_cast<size_t>(i)] = phi_gamma(gamma);
      }
    }
  });

  result.table.columns.push_back(config.sweep.variable);
  for (const auto& [label, sys] : config.variants) {
    result.table.columns.push_back("V_" + label);
  }
  result.table.columns.push_back("phi_disp");
  result.table.columns.push_back("phi_gamma");
  for (size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (size_t v = 0; v < nv; ++v) row.push_back(values[v][i]);
    row.push_back(phi_d[i]);
    row.push_back(phi_g[i]);
    result.table.rows.push_back(std::move(row));
  }
  for (size_t v = 0; v < nv; ++v) {
    result.series.push_back(
        SvgSeries{config.variants[v].first, grid, values[v]});
  }

  double v_min = values[0][0], v_max = values[0][0];
  int crossings = 0;
  for (size_t v = 0; v < nv; ++v) {
    for (size_t i = 0; i < grid.size(); ++i) {
      v_min = std::min(v_min, values[v][i]);
      v_max = std::max(v_max, values[v][i]);
      if (i > 0 && values[v][i - 1] * values[v][i] < 0.0) ++crossings;
    }
  }
  std::ostringstream s;
  s << "V in [" << v_min << ", " << v_max << "], " << crossings
    << " zero crossings across " << nv << " variant(s)";
  result.summary = s.str();
  return result;
}

}  // namespace spdc
