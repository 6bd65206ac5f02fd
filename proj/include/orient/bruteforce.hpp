#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/digraph.hpp"

namespace orient {

struct BruteForceBudget {
  std::size_t max_sym_edges = 30;
  std::uint64_t max_nodes = std::uint64_t{1} << 30;
};

// Exact backtracking over the undirected edges, pruning whenever an
// already-decided clique of size <= m_F embeds a forbidden tournament.
// Decided-all-but-one cliques force the remaining edge (unit propagation),
// which keeps the search exact. Deterministic: edges are tried in a static
// most-constrained-first order, orientation low -> high first.
// ResourceLimitError when the budget is exceeded.
std::optional<PartialDigraph> brute_force_complete(const PartialDigraph& d,
                                                   const ForbiddenSet& f,
                                                   const BruteForceBudget& budget = {});

std::uint64_t count_bruteforce(const PartialDigraph& d, const ForbiddenSet& f,
                               const BruteForceBudget& budget = {});

std::vector<PartialDigraph> enumerate_completions_bruteforce(
    const PartialDigraph& d, const ForbiddenSet& f, const BruteForceBudget& budget = {});

}  // namespace orient
