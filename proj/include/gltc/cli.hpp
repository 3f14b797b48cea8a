#ifndef GLTC_CLI_HPP
#define GLTC_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gltc/instance.hpp"

namespace gltc {

/// Exit codes shared by every subcommand.
enum ExitCode { exit_yes = 0, exit_no = 1, exit_error = 2 };

/// Plain graph with optional per-vertex lists and per-edge weights, the input
/// of `gltc reduce`:
///
///     graph <n> <m>
///     v <id> <label>...      (one per vertex, may be omitted when a span is given)
///     e <u> <v> [<weight>]   (weight defaults to 1)
struct LabeledGraph {
    Graph graph;
    std::vector<LabelSet> lists;
    /// indexed by graph edge id
    std::vector<int> weights;
};

/// `span` > 0 replaces every list with {1..span} and makes vertex lines optional.
LabeledGraph parse_labeled_graph(std::string_view text, int span = 0);

/// Runs one invocation. `args` excludes the program name; "-" as a file
/// argument reads `in`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace gltc

#endif
