#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/classify.hpp"
#include "orient/digraph.hpp"
#include "orient/gf2.hpp"

namespace orient {

// The Boolean-CSP instance of a partially oriented digraph: one variable per
// symmetric-closure pair (in pair order restricted to the present pairs),
// a P_l constraint per semicomplete vertex subset of size <= m_F, and a
// unary fixing per one-directional arc.
struct OrientationInstance {
  int n = 0;
  std::vector<std::pair<int, int>> variables;  // pair (u < v) per variable
  struct Constraint {
    std::vector<int> vertices;   // sorted, size l
    int relation_size;           // l, tags P_l
    std::vector<int> var_index;  // the C(l,2) variables in encoding order
  };
  std::vector<Constraint> constraints;
  std::vector<std::pair<int, int>> unary_fixings;  // (variable, bit)

  int var_of(int u, int v) const;  // index of pair {u,v}, -1 if absent
};

// Subsets strictly contained in another constrained subset are pruned by
// default (their constraints are implied by projection).
OrientationInstance compile_instance(const PartialDigraph& d, const ForbiddenSet& f,
                                     bool prune_subsumed = true);

struct AffineSolveResult {
  std::optional<PartialDigraph> orientation;  // absent when infeasible
  std::optional<int> count_exponent;          // log2 of the completion count
};

// Exact solving through the GF(2) compilation. Precondition: the matching
// classification verdict (completion for inputs with fixed arcs, orientation
// for symmetric inputs) is PolyAffine or CliqueCheck; ContractError
// otherwise. Returned orientations are re-verified before being returned.
AffineSolveResult solve_affine(const PartialDigraph& d, const ForbiddenSet& f);

// Decode a variable assignment into an orientation of d (bit 1 on pair
// {u,v}, u < v, means arc u -> v).
PartialDigraph decode_orientation(const PartialDigraph& d, const OrientationInstance& inst,
                                  const std::vector<std::uint8_t>& assignment);

// The specialized systems. Sys3 is paper-faithful: one variable per ordered
// adjacent pair, complementarity rows, a fixing row per oriented arc, and a
// path-parity row per ordered triangle; its solutions are in bijection with
// the T_3-free completions. Sys4 / SysPlus instantiate the affine
// representation of P_4({T4,TC4}) resp. P_4({T4,TC4,C3-}) on every 4-clique
// over unordered pair variables.
struct Sys3System {
  GF2System system;
  std::vector<std::pair<int, int>> ordered_pairs;  // variable -> (u,v)
};
Sys3System build_Sys3(const PartialDigraph& d);

struct PairSystem {
  GF2System system;
  std::vector<std::pair<int, int>> pairs;  // variable -> (u < v)
};
PairSystem build_Sys4(const PartialDigraph& d);
PairSystem build_SysPlus(const PartialDigraph& d);

}  // namespace orient
