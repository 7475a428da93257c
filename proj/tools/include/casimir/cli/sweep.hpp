#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/cli/csv.hpp"
#include "casimir/cli/options.hpp"
#include "casimir/models.hpp"
#include "casimir/spectrum.hpp"

namespace casimir::cli {

enum class SweepVariable { Kappa, L, U0 };
enum class SweepOutput { E_bs, E_cond, k, E0_ren, F_cond, F_fluct, F_total };

std::string_view to_string(SweepVariable v);
std::string_view to_string(SweepOutput o);
/// Throw UsageError on unknown names.
SweepVariable parse_variable(std::string_view name);
std::vector<SweepOutput> parse_outputs(std::string_view comma_list);

struct SweepSpec {
  SweepVariable variable = SweepVariable::Kappa;
  double from = 0.0;
  double to = 0.0;
  int points = 2;
  ModelSpec fixed;
  std::vector<SweepOutput> outputs;
};

/// from < to, points >= 2, the variable exists in the model, and vacuum
/// energies and forces are only requested for the Robin model.
void validate(const SweepSpec& spec);

/// One of "ok", "kgap", "subcritical", "error", with a value per requested
/// output (nullopt renders as NA).
struct PointResult {
  std::string status;
  std::vector<std::optional<double>> values;
};

/// Evaluates the outputs at one configuration. Computational failures are
/// reported through the status, never thrown.
PointResult evaluate_point(const ModelSpec& spec, const std::vector<SweepOutput>& outputs,
                           const VacuumEnergyOptions& vopts);

/// Header `<variable>,status,<outputs...>` and one row per grid point in
/// grid order; points are evaluated on up to opts.jobs threads.
CsvTable run_sweep(const SweepSpec& spec, const RunOptions& opts);

/// Vacuum-energy options derived from --tol and --cutoff.
VacuumEnergyOptions vacuum_options(const RunOptions& opts);

}  // namespace casimir::cli
