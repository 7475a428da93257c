#pragma once

#include <string>
#include <vector>

#include "casimir/cli/csv.hpp"
#include "casimir/cli/options.hpp"

namespace casimir::cli {

struct FigurePanel {
  /// File stem, e.g. "fig7-right".
  std::string name;
  CsvTable table;
  /// gnuplot script reading <name>.csv.
  std::string plot_script;
};

/// Figure ids accepted by run_figure: whole figures ("1", "7", "fluc", ...)
/// and single panels ("7-right", "fluc2-left", ...).
std::vector<std::string> figure_ids();

/// Panels of a figure, computed with their default parameters unless the
/// corresponding flag is set. Throws UsageError for an unknown id.
std::vector<FigurePanel> run_figure(const std::string& id, const RunOptions& opts);

/// Writes <dir>/<name>.csv and <dir>/<name>.gp for each panel and returns
/// the CSV paths.
std::vector<std::string> write_panels(const std::vector<FigurePanel>& panels,
                                      const std::string& dir);

}  // namespace casimir::cli
