#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathmorph::cli {

enum class OutputFormat { Tuple, Jsonl, Json };

/// Shared configuration. Precedence, lowest to highest: built-in defaults,
/// key=value config file (--config PATH), PATHMORPH_* environment variables,
/// command-line flags.
struct Config {
  int exhaustive_limit = 12;
  OutputFormat output_format = OutputFormat::Tuple;
  int counterexample_cap = 10;
};

/// Routes argv (without the program name) to the subcommands. Data goes to
/// `out`, diagnostics to `err`; batch map mode reads `in`. Returns 0 on
/// success, 1 when a verify check fails, 2 on usage, parse, or domain errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace pathmorph::cli
