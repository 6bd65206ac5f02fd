#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orient/digraph.hpp"
#include "orient/forbidden.hpp"
#include "orient/forcing.hpp"
#include "orient/tournament.hpp"

namespace orient {

// Text formats. Vertices are 1-based on disk, 0-based in memory.
//
//   tournament 3        |  3:101          (compact: bits in pair order)
//   1 2
//   2 3
//   3 1
//
//   digraph 4           |  graph 3        (graph: every line symmetric)
//   1 2                 |  1 2
//
// A forbidden-set file is a sequence of tournament blocks; '#' starts a
// comment line.

Tournament parse_tournament(const std::string& text);
std::string format_tournament(const Tournament& t, bool compact = false);

ForbiddenSet parse_forbidden_set(const std::string& text, std::vector<std::string>* warnings);

PartialDigraph parse_digraph(const std::string& text);
std::string format_digraph(const PartialDigraph& d);
std::string digraph_to_json(const PartialDigraph& d);
PartialDigraph digraph_from_json(const std::string& json_text);

NaeFormula parse_nae_formula(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace orient
