#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "casimir/models.hpp"

namespace casimir::cli {

/// Bad command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global flags shared by all subcommands. Unset optionals fall back to the
/// configuration file and then to the defaults of the command.
struct RunOptions {
  std::optional<double> m;
  std::optional<double> lambda;
  std::optional<std::string> model;
  std::optional<double> kappa;
  std::optional<double> L;
  std::optional<double> U0;
  std::optional<double> R;
  double tol = 1e-9;
  double cutoff = 200.0;
  std::string out_dir = ".";
  int jobs = 1;
  /// Grid density override for figure panels.
  std::optional<int> points;
};

/// m and lambda from the flags, else from `base`, else 1. Throws UsageError
/// unless both are positive.
PhysicalParams resolve_params(const RunOptions& opts,
                              const std::optional<ModelSpec>& base = std::nullopt);

/// Model assembled from --model/--kappa/--L/--U0/--R on top of an optional
/// base read from --config. Throws UsageError when a parameter is missing or
/// not positive.
ModelSpec resolve_model(const RunOptions& opts, const std::optional<ModelSpec>& base);

}  // namespace casimir::cli
