#include "casimir/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "casimir/cli/figures.hpp"
#include "casimir/cli/sweep.hpp"
#include "casimir/condensate.hpp"
#include "casimir/errors.hpp"
#include "casimir/meanfield.hpp"

namespace casimir::cli {
namespace {

using nlohmann::ordered_json;

std::optional<ModelSpec> load_config(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_model_config(text.str());
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid config: ") + e.what());
  }
}

// Full-precision numbers in the JSON output; NaN becomes null.
ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(); }

}  // namespace

std::string solve_json(const ModelSpec& spec) {
  ordered_json j;
  j["model"] = std::string(model_name(spec.model));
  j["config"] = ordered_json::parse(to_json(spec));
  std::string status = "ok";
  try {
    const auto bs = bound_state(spec.model, spec.params);
    j["bound_state"] = {{"epsilon", number(bs.epsilon())},
                        {"mu", number(bs.mu())},
                        {"a", number(bs.a())},
                        {"b", number(bs.b())},
                        {"E_bs", number(meanfield_energy(bs))}};
  } catch (const NoCriticalMode&) {
    status = "subcritical";
  }
  if (const auto* r = std::get_if<RobinDirichletModel>(&spec.model)) {
    ordered_json t;
    t["kappa_c"] = number(robin_critical_kappa(r->L, spec.params.m));
    try {
      const auto th = robin_thresholds(r->kappa, spec.params.m);
      t["L0"] = number(th.L0);
      t["L1"] = th.L1 ? number(*th.L1) : ordered_json();
      t["L2"] = th.L2 ? number(*th.L2) : ordered_json();
    } catch (const NoCriticalRegime&) {
    }
    j["thresholds"] = t;
  }
  if (const auto* h = std::get_if<PotentialHoleModel>(&spec.model)) {
    j["thresholds"] = {{"U0_c", number(hole_threshold(h->R, spec.params.m))}};
  }
  if (status == "ok") {
    try {
      const auto sol = solve_condensate(spec.model, spec.params);
      ordered_json c;
      if (auto k = sol.elliptic_k()) c["k"] = number(*k);
      if (const auto* d = std::get_if<DeltaDs>(&sol.kind())) c["x1"] = number(d->x1);
      if (const auto* h = std::get_if<HoleSnPlusTail>(&sol.kind())) c["x1"] = number(h->x1);
      c["E_cond"] = number(condensate_energy(sol));
      c["gp_residual"] = number(gp_residual(sol));
      c["accepted_roots"] = sol.diagnostics().accepted;
      c["rejected_roots"] = sol.diagnostics().rejected;
      j["condensate"] = c;
    } catch (const KGapError& e) {
      status = "kgap";
      j["condensate"] = {{"rejected_roots", e.rejected_roots()}};
    }
  }
  j["status"] = status;
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Condensates, vacuum energies and Casimir forces for exactly solvable models"};
  app.require_subcommand(1);
  RunOptions opts;
  std::string config;
  app.add_option("--m", opts.m, "mass (default 1)");
  app.add_option("--lambda", opts.lambda, "self-coupling (default 1)");
  app.add_option("--model", opts.model, "delta, robin or hole");
  app.add_option("--kappa", opts.kappa, "delta / Robin strength");
  app.add_option("--L", opts.L, "interval length");
  app.add_option("--U0", opts.U0, "hole depth");
  app.add_option("--R", opts.R, "hole width");
  app.add_option("--tol", opts.tol, "relative tolerance of the vacuum-energy quadrature")
      ->capture_default_str();
  app.add_option("--cutoff", opts.cutoff, "vacuum-energy cutoff in units of m")
      ->capture_default_str();
  app.add_option("--out", opts.out_dir, "output directory")->capture_default_str();
  app.add_option("--config", config, "JSON model configuration");
  app.add_option("--jobs", opts.jobs, "worker threads")->capture_default_str();

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "write the CSV panels of a figure");
  figure->add_option("id", figure_id, "figure id")->required();
  figure->add_option("--points", opts.points, "grid density override");
  figure->fallthrough();

  SweepSpec sweep;
  std::string var, outputs;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV sweep of one parameter");
  sweep_cmd->add_option("--var", var, "kappa, L or U0")->required();
  sweep_cmd->add_option("--from", sweep.from)->required();
  sweep_cmd->add_option("--to", sweep.to)->required();
  sweep_cmd->add_option("--points", sweep.points)->required();
  sweep_cmd->add_option("--outputs", outputs, "comma list of E_bs,E_cond,k,E0_ren,F_cond,F_fluct,F_total")
      ->required();
  sweep_cmd->fallthrough();

  auto* solve = app.add_subcommand("solve", "print the solution of one configuration as JSON");
  solve->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const auto base = load_config(config);
    if (opts.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (*figure) {
      const auto panels = run_figure(figure_id, opts);
      for (const auto& path : write_panels(panels, opts.out_dir)) out << path << "\n";
    } else if (*sweep_cmd) {
      sweep.variable = parse_variable(var);
      sweep.outputs = parse_outputs(outputs);
      // The swept parameter needs no fixed value of its own.
      auto& swept = sweep.variable == SweepVariable::Kappa ? opts.kappa
                    : sweep.variable == SweepVariable::L   ? opts.L
                                                           : opts.U0;
      if (!swept) swept = sweep.from;
      sweep.fixed = resolve_model(opts, base);
      const auto table = run_sweep(sweep, opts);
      write_csv(out, table);
    } else if (*solve) {
      out << solve_json(resolve_model(opts, base));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const casimir::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace casimir::cli
