#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "starcolor/cactus.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/verifier.hpp"

namespace starcolor {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kUnknown = 3 };

/// Entry point of the `starcolor` binary; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Colors a unicyclic input (or a tree with a suitable centre edge) with the
/// single-block algorithm after padding it to `delta`-semiregular.
/// Throws InvalidInput when no block can serve as the centre.
EdgeColoring color_ucc_graph(const Graph& g, int delta);

}  // namespace starcolor
