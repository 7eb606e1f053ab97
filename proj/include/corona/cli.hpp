#pragma once

#include <string>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// Graph argument grammar shared by every subcommand:
///   builder syntax   path:4  cycle:5  kpq:2,3  complete:4  empty:3  star:4
///                    rook:4  petersen  cube  shrikhande
///   named seeds      builtin:k14  builtin:c4uk1  builtin:shrikhande  builtin:rook4
///   disjoint union   union:cycle:4+empty:1
///   file             file:graph.json
Graph parse_graph_spec(const std::string& spec);

/// Entry point behind the binary. Exit codes: 0 success / all verified,
/// 1 a verification or certification failed (reports still emitted),
/// 2 invalid input or violated precondition.
int run_cli(const std::vector<std::string>& args);

}  // namespace corona
