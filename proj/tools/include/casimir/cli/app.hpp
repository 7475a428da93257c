#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "casimir/cli/options.hpp"
#include "casimir/models.hpp"

namespace casimir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// JSON document describing the condensate, mean-field and threshold data of
/// one configuration; deterministic for a fixed spec.
std::string solve_json(const ModelSpec& spec);

/// Entry point of the `casimir` tool. Writes results to `out` and
/// diagnostics to `err`; returns one of the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
