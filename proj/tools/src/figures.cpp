#include "casimir/cli/figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/forces.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/numerics.hpp"
#include "casimir/cli/sweep.hpp"
#include "parallel.hpp"

namespace casimir::cli {
namespace {

using Row = std::vector<std::string>;

template <class F>
std::optional<double> attempt(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct Series {
  int column;
  std::string title;
};

std::string plot_script(const std::string& name, const std::string& xlabel,
                        const std::string& ylabel, const std::vector<Series>& series,
                        int xcolumn = 1) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel '" << xlabel << "'\n"
     << "set ylabel '" << ylabel << "'\n"
     << "set terminal pngcairo size 800,600\n"
     << "set output '" << name << ".png'\n"
     << "plot ";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i != 0) os << ", \\\n     ";
    os << "'" << name << ".csv' using " << xcolumn << ":" << series[i].column
       << " with lines title '" << series[i].title << "'";
  }
  os << "\n";
  return os.str();
}

// Scatter of column y against x, coloured by a third column (curve families).
std::string family_script(const std::string& name, const std::string& xlabel,
                          const std::string& ylabel, int x, int y, int family) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set xlabel '" << xlabel << "'\n"
     << "set ylabel '" << ylabel << "'\n"
     << "set terminal pngcairo size 800,600\n"
     << "set output '" << name << ".png'\n"
     << "plot '" << name << ".csv' using " << x << ":" << y << ":" << family
     << " every ::1 with points palette pointsize 0.5 notitle\n";
  return os.str();
}

struct Context {
  const RunOptions& opts;
  PhysicalParams params;

  int points(int fallback) const { return opts.points.value_or(fallback); }
  double kappa(double fallback) const { return opts.kappa.value_or(fallback); }
  double L(double fallback) const { return opts.L.value_or(fallback); }
  double R(double fallback) const { return opts.R.value_or(fallback); }
};

// Open interval (a, b) sampled without its ends.
std::vector<double> interior(double a, double b, int n) {
  const double pad = 1e-3 * (b - a);
  return numerics::linspace(a + pad, b - pad, static_cast<std::size_t>(n));
}

std::optional<CondensateSolution> robin_solution(double kappa, double L,
                                                 const PhysicalParams& p) {
  try {
    auto out = solve_robin(RobinDirichletModel{kappa, L}, p);
    if (auto* s = std::get_if<CondensateSolution>(&out)) return std::move(*s);
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::optional<double> robin_k(double kappa, double L, const PhysicalParams& p) {
  auto s = robin_solution(kappa, L, p);
  return s ? s->elliptic_k() : std::nullopt;
}

RobinThresholds thresholds(const Context& c, double kappa) {
  try {
    return robin_thresholds(kappa, c.params.m);
  } catch (const NoCriticalRegime& e) {
    throw UsageError(std::string("figure needs kappa > m: ") + e.what());
  }
}

double require_L2(const Context& c, double kappa) {
  const auto t = thresholds(c, kappa);
  if (!t.L2) throw UsageError("figure needs kappa >= sqrt(2) m for the upper branch");
  return *t.L2;
}

// --- Figure 1: delta model energies versus kappa ---------------------------

FigurePanel fig1(const Context& c) {
  FigurePanel p{"fig1", {{"kappa", "E_bs", "E_cond"}, {}}, {}};
  const double m = c.params.m;
  for (double kappa : numerics::linspace(1.05 * m, 3.0 * m, c.points(40))) {
    const ModelConfig cfg = DeltaModel{kappa};
    p.table.add_row({format_number(kappa),
                     format_number(meanfield_energy(bound_state(cfg, c.params))),
                     format_number(condensate_energy(solve_delta(cfg, c.params)))});
  }
  p.plot_script = plot_script(p.name, "kappa", "energy", {{2, "E_bs"}, {3, "E_cond"}});
  return p;
}

// --- Figure 2: Robin condensate force, hole modulus -------------------------

FigurePanel fig2_left(const Context& c) {
  const double kappa = c.kappa(2.0);
  const double L2 = require_L2(c, kappa);
  FigurePanel p{"fig2-left", {{"L", "F_cond", "error"}, {}}, {}};
  const auto t = thresholds(c, kappa);
  ForceOptions fopts;
  fopts.avoid = {t.L0, *t.L1, *t.L2};
  const auto energy = [&](double x) {
    return robin_condensate_energy(RobinDirichletModel{kappa, x}, c.params, Background::Exact);
  };
  for (double L : numerics::linspace(L2 + 0.02, 3.0, c.points(20))) {
    std::optional<ForceEstimate> f;
    try {
      f = force_of(energy, L, fopts);
    } catch (const Error&) {
    }
    p.table.add_row({format_number(L), f ? format_number(f->F) : kNA,
                     f ? format_number(f->error) : kNA});
  }
  p.plot_script = plot_script(p.name, "L", "F_cond", {{2, "F_cond"}});
  return p;
}

FigurePanel fig2_right(const Context& c) {
  const double R = c.R(1.0);
  const double U0c = hole_threshold(R, c.params.m);
  FigurePanel p{"fig2-right", {{"U0", "k"}, {}}, {}};
  for (double U0 : numerics::linspace(U0c + 0.05, 20.0, c.points(40))) {
    const auto k = attempt([&] {
      return *solve_hole(PotentialHoleModel{U0, R}, c.params).elliptic_k();
    });
    p.table.add_row({format_number(U0), format_optional(k)});
  }
  p.plot_script = plot_script(p.name, "U0", "k", {{2, "k"}});
  return p;
}

// --- Figures 3 and 5: matching condition and its roots ----------------------

FigurePanel residual_family(const Context& c, const std::string& name, double kappa,
                            const std::vector<double>& lengths) {
  FigurePanel p{name, {{"L", "k", "residual"}, {}}, {}};
  for (double L : lengths) {
    const ModelConfig cfg = RobinDirichletModel{kappa, L};
    for (double k : numerics::linspace(0.0, 1.0, c.points(101))) {
      const auto r = attempt([&] { return robin_matching_residual(k, cfg, c.params); });
      p.table.add_row({format_number(L), format_number(k), format_optional(r)});
    }
  }
  p.plot_script = family_script(name, "k", "kappa phi0(0) + phi0'(0)", 2, 3, 1);
  return p;
}

FigurePanel fig3_left(const Context& c) {
  const double kappa = c.kappa(2.0);
  const auto t = thresholds(c, kappa);
  const double L1 = t.L1.value_or(t.L0 + 0.01);
  const double w = L1 - t.L0;
  return residual_family(c, "fig3-left", kappa,
                         {t.L0 - 0.3 * w, t.L0 + 0.25 * w, t.L0 + 0.5 * w, t.L0 + 0.75 * w,
                          L1 + 0.3 * w});
}

FigurePanel k_versus_L(const Context& c, const std::string& name, double kappa,
                       const std::vector<double>& lengths) {
  FigurePanel p{name, {{"L", "k"}, {}}, {}};
  for (double L : lengths) {
    p.table.add_row({format_number(L), format_optional(robin_k(kappa, L, c.params))});
  }
  p.plot_script = plot_script(name, "L", "k", {{2, "k"}});
  return p;
}

FigurePanel fig3_right(const Context& c) {
  const double kappa = c.kappa(2.0);
  const auto t = thresholds(c, kappa);
  if (!t.L1) throw UsageError("figure 3 needs kappa >= sqrt(2) m");
  return k_versus_L(c, "fig3-right", kappa, interior(t.L0, *t.L1, c.points(30)));
}

FigurePanel fig5_left(const Context& c) {
  const double kappa = c.kappa(2.0);
  const auto t = thresholds(c, kappa);
  if (!t.L1) throw UsageError("figure 5 needs kappa >= sqrt(2) m");
  return residual_family(c, "fig5-left", kappa, interior(*t.L1, *t.L2, 5));
}

FigurePanel fig5_right(const Context& c) {
  const double kappa = c.kappa(2.0);
  const double L2 = require_L2(c, kappa);
  return k_versus_L(c, "fig5-right", kappa,
                    numerics::linspace(L2 + 0.01, 4.0, static_cast<std::size_t>(c.points(40))));
}

// --- Figures 4a and 7: Robin energies ---------------------------------------

FigurePanel robin_energies(const Context& c, const std::string& name, double kappa,
                           const std::vector<double>& lengths, bool difference) {
  FigurePanel p{name, {{"L", "E_cond", "E_bs"}, {}}, {}};
  if (difference) p.table.header.push_back("difference");
  for (double L : lengths) {
    const ModelConfig cfg = RobinDirichletModel{kappa, L};
    const auto sol = robin_solution(kappa, L, c.params);
    const std::optional<double> ec =
        sol ? std::optional<double>(condensate_energy(*sol)) : std::nullopt;
    const auto ebs = attempt([&] { return meanfield_energy(bound_state(cfg, c.params)); });
    Row row{format_number(L), format_optional(ec), format_optional(ebs)};
    if (difference) {
      row.push_back(ec && ebs ? format_number(*ec - *ebs) : std::string(kNA));
    }
    p.table.add_row(std::move(row));
  }
  if (difference) {
    p.plot_script = plot_script(name, "L", "E_cond - E_bs", {{4, "E_cond - E_bs"}});
  } else {
    p.plot_script = plot_script(name, "L", "energy", {{2, "E_cond"}, {3, "E_bs"}});
  }
  return p;
}

FigurePanel fig4a(const Context& c, bool right) {
  const double kappa = c.kappa(2.0);
  const auto t = thresholds(c, kappa);
  if (!t.L1) throw UsageError("figure 4a needs kappa >= sqrt(2) m");
  return robin_energies(c, right ? "fig4a-right" : "fig4a-left", kappa,
                        interior(t.L0, *t.L1, c.points(30)), right);
}

FigurePanel fig7_left(const Context& c) {
  const double kappa = c.kappa(2.0);
  const double L2 = require_L2(c, kappa);
  return robin_energies(c, "fig7-left", kappa,
                        numerics::linspace(L2 + 0.01, 4.0, static_cast<std::size_t>(c.points(40))),
                        false);
}

FigurePanel fig7_right(const Context& c) {
  const double m = c.params.m;
  FigurePanel p{"fig7-right", {{"kappa", "L0", "L1", "L2"}, {}}, {}};
  for (double kappa : numerics::linspace(1.05 * m, 4.0 * m, c.points(60))) {
    const auto t = robin_thresholds(kappa, m);
    p.table.add_row({format_number(kappa), format_number(t.L0), format_optional(t.L1),
                     format_optional(t.L2)});
  }
  p.plot_script =
      plot_script(p.name, "kappa", "L", {{2, "L0"}, {3, "L1"}, {4, "L2"}});
  return p;
}

// --- Figure Y: hole energies ------------------------------------------------

FigurePanel figY(const Context& c) {
  const double R = c.R(1.0);
  const double U0c = hole_threshold(R, c.params.m);
  FigurePanel p{"figY", {{"U0", "E_bs", "E_cond"}, {}}, {}};
  for (double U0 : numerics::linspace(U0c + 0.05, 20.0, c.points(40))) {
    const ModelConfig cfg = PotentialHoleModel{U0, R};
    const auto ebs = attempt([&] { return meanfield_energy(bound_state(cfg, c.params)); });
    const auto ec = attempt([&] { return condensate_energy(solve_hole(cfg, c.params)); });
    p.table.add_row({format_number(U0), format_optional(ebs), format_optional(ec)});
  }
  p.plot_script = plot_script(p.name, "U0", "energy", {{2, "E_bs"}, {3, "E_cond"}});
  return p;
}

// --- Figure fluc: vacuum energy and forces ----------------------------------

const std::vector<SweepOutput> kFlucOutputs = {SweepOutput::E0_ren, SweepOutput::E_cond,
                                               SweepOutput::F_fluct, SweepOutput::F_cond,
                                               SweepOutput::F_total};

Row fluc_row(const std::vector<std::string>& lead, const PointResult& r) {
  Row row = lead;
  row.push_back(r.status);
  for (const auto& v : r.values) row.push_back(format_optional(v));
  return row;
}

Row fluc_header(std::vector<std::string> lead) {
  lead.push_back("status");
  for (SweepOutput o : kFlucOutputs) lead.emplace_back(to_string(o));
  return lead;
}

FigurePanel fluc_kappa(const Context& c) {
  const double L = c.L(2.2);
  FigurePanel p{"fluc-kappa", {fluc_header({"kappa"}), {}}, {}};
  const auto grid = numerics::linspace(0.1, 3.0, static_cast<std::size_t>(c.points(30)));
  const auto vopts = vacuum_options(c.opts);
  const auto results = detail::parallel_map<PointResult>(grid.size(), c.opts.jobs, [&](std::size_t i) {
    return evaluate_point({RobinDirichletModel{grid[i], L}, c.params}, kFlucOutputs, vopts);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    p.table.add_row(fluc_row({format_number(grid[i])}, results[i]));
  }
  p.plot_script = plot_script(p.name, "kappa", "energy / force",
                              {{3, "E0_ren"}, {4, "E_cond"}, {5, "F_fluct"}, {6, "F_cond"}});
  return p;
}

FigurePanel fluc_L(const Context& c) {
  FigurePanel p{"fluc-L", {fluc_header({"kappa", "L"}), {}}, {}};
  const std::vector<double> kappas =
      c.opts.kappa ? std::vector<double>{*c.opts.kappa} : std::vector<double>{0.5, 2.0};
  std::vector<std::pair<double, double>> grid;
  for (double kappa : kappas) {
    for (double L : numerics::linspace(0.5, 4.0, static_cast<std::size_t>(c.points(15)))) {
      grid.emplace_back(kappa, L);
    }
  }
  const auto vopts = vacuum_options(c.opts);
  const auto results = detail::parallel_map<PointResult>(grid.size(), c.opts.jobs, [&](std::size_t i) {
    return evaluate_point({RobinDirichletModel{grid[i].first, grid[i].second}, c.params},
                          kFlucOutputs, vopts);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    p.table.add_row(fluc_row({format_number(grid[i].first), format_number(grid[i].second)},
                             results[i]));
  }
  p.plot_script = family_script(p.name, "L", "E0_ren", 2, 4, 1);
  return p;
}

// --- Figure fluc2: exact versus approximate background ----------------------

FigurePanel fluc2_left(const Context& c) {
  const double kappa = c.kappa(1.3);
  const double L = c.L(3.0);
  const ModelConfig cfg = RobinDirichletModel{kappa, L};
  const auto exact = FluctuationPotential::from_condensate(solve_condensate(cfg, c.params));
  const auto approx = FluctuationPotential::from_bound_state(bound_state(cfg, c.params));
  FigurePanel p{"fluc2-left", {{"x", "V_exact", "V_approx"}, {}}, {}};
  for (double x : numerics::linspace(0.0, L, static_cast<std::size_t>(c.points(121)))) {
    p.table.add_row({format_number(x), format_number(exact(x)), format_number(approx(x))});
  }
  p.plot_script = plot_script(p.name, "x", "V(x)", {{2, "exact"}, {3, "approximate"}});
  return p;
}

FigurePanel fluc2_right(const Context& c) {
  const double kappa = c.kappa(1.3);
  FigurePanel p{"fluc2-right", {{"L", "E0_exact", "E0_approx"}, {}}, {}};
  const auto grid = numerics::linspace(2.0, 4.0, static_cast<std::size_t>(c.points(11)));
  const auto vopts = vacuum_options(c.opts);
  using Pair = std::pair<std::optional<double>, std::optional<double>>;
  const auto results = detail::parallel_map<Pair>(grid.size(), c.opts.jobs, [&](std::size_t i) {
    const ModelConfig cfg = RobinDirichletModel{kappa, grid[i]};
    return Pair{
        attempt([&] { return robin_vacuum_energy(cfg, c.params, Background::Exact, vopts); }),
        attempt([&] { return robin_vacuum_energy(cfg, c.params, Background::Approx, vopts); })};
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    p.table.add_row({format_number(grid[i]), format_optional(results[i].first),
                     format_optional(results[i].second)});
  }
  p.plot_script = plot_script(p.name, "L", "E0_ren", {{2, "exact"}, {3, "approximate"}});
  return p;
}

using PanelFn = std::function<FigurePanel(const Context&)>;

const std::vector<std::pair<std::string, PanelFn>>& panel_table() {
  static const std::vector<std::pair<std::string, PanelFn>> table = {
      {"1", fig1},
      {"2-left", fig2_left},
      {"2-right", fig2_right},
      {"3-left", fig3_left},
      {"3-right", fig3_right},
      {"4a-left", [](const Context& c) { return fig4a(c, false); }},
      {"4a-right", [](const Context& c) { return fig4a(c, true); }},
      {"5-left", fig5_left},
      {"5-right", fig5_right},
      {"7-left", fig7_left},
      {"7-right", fig7_right},
      {"Y", figY},
      {"fluc-kappa", fluc_kappa},
      {"fluc-L", fluc_L},
      {"fluc2-left", fluc2_left},
      {"fluc2-right", fluc2_right},
  };
  return table;
}

std::vector<std::string> panels_of(const std::string& id) {
  std::vector<std::string> out;
  for (const auto& [name, fn] : panel_table()) {
    if (name == id || name.rfind(id + "-", 0) == 0) out.push_back(name);
  }
  return out;
}

}  // namespace

std::vector<std::string> figure_ids() {
  std::vector<std::string> ids = {"1", "2", "3", "4a", "5", "7", "Y", "fluc", "fluc2"};
  for (const auto& [name, fn] : panel_table()) {
    if (name.find('-') != std::string::npos) ids.push_back(name);
  }
  return ids;
}

std::vector<FigurePanel> run_figure(const std::string& id, const RunOptions& opts) {
  const auto names = panels_of(id);
  if (names.empty()) throw UsageError("unknown figure id '" + id + "'");
  const Context ctx{opts, resolve_params(opts)};
  std::vector<FigurePanel> out;
  for (const auto& name : names) {
    for (const auto& [key, fn] : panel_table()) {
      if (key == name) out.push_back(fn(ctx));
    }
  }
  return out;
}

std::vector<std::string> write_panels(const std::vector<FigurePanel>& panels,
                                      const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> paths;
  for (const auto& p : panels) {
    const fs::path csv = fs::path(dir) / (p.name + ".csv");
    std::ofstream(csv, std::ios::binary) << to_csv(p.table);
    std::ofstream(fs::path(dir) / (p.name + ".gp"), std::ios::binary) << p.plot_script;
    paths.push_back(csv.string());
  }
  return paths;
}

}  // namespace casimir::cli
