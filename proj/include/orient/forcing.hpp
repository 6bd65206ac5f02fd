#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orient/bruteforce.hpp"
#include "orient/digraph.hpp"

namespace orient {

// A partial digraph with named terminal vertices.
struct MarkedDigraph {
  PartialDigraph d;
  std::map<std::string, int> terminals;

  int terminal(const std::string& name) const;
};

// Whether d can be completed to an F-free oriented graph. Routes through the
// affine solver when the completion problem for F is PolyAffine, through
// bounded brute force otherwise.
bool completable(const PartialDigraph& d, const ForbiddenSet& f,
                 const BruteForceBudget& budget = {});

// Both one-direction fixings of the symmetric edge {x,y} leave d completable.
bool is_free_edge(const PartialDigraph& d, const ForbiddenSet& f, int x, int y,
                  const BruteForceBudget& budget = {});

// (x,y) forces (u,v): both edges are free and fixing x->y together with
// v->u makes d uncompletable.
bool forces(const PartialDigraph& d, const ForbiddenSet& f, std::pair<int, int> xy,
            std::pair<int, int> uv, const BruteForceBudget& budget = {});

// Two-copy identification turning a forcing pair sharing a vertex
// (|{x,y,u,v}| = 3) into one with four distinct terminals. Output terminals
// "x","y","u","v" with (x,y) forcing (u,v). ContractError when the
// precondition fails.
MarkedDigraph glue_separate(const PartialDigraph& d, const ForbiddenSet& f,
                            std::pair<int, int> xy, std::pair<int, int> uv,
                            const BruteForceBudget& budget = {});

// Chain of copies plus a doubled-copy identification: terminals "x","y",
// "u","v" where (x,y) and (u,v) force each other and every cross distance
// is at least k. Requires four distinct terminals with (x,y) forcing (u,v).
MarkedDigraph distance_amplify(const PartialDigraph& d, const ForbiddenSet& f,
                               std::pair<int, int> xy, std::pair<int, int> uv, int k,
                               const BruteForceBudget& budget = {});

// The three digraphs of the directed-triangle forcing family: D1 with
// terminals x,y(=v),u; D2 with four distinct terminals; D3 with cross
// distances >= 2.
MarkedDigraph forcing_d1();
MarkedDigraph forcing_d2();
MarkedDigraph forcing_d3();

// Not-all-equal 3-SAT. Literals are nonzero integers, negative = negated.
struct NaeClause {
  int lit[3];
};
struct NaeFormula {
  int num_vars = 0;
  std::vector<NaeClause> clauses;
};

bool nae_satisfiable(const NaeFormula& formula);

// The hardness gadget: a partial digraph completable to a directed-
// triangle-free oriented graph iff the formula is NAE-satisfiable. Terminal
// map holds one edge "v<i>" per variable (vertex pair, true = low -> high)
// and the clause triangles "c<j>:a/b/c".
struct NaeReduction {
  PartialDigraph d;
  std::vector<std::pair<int, int>> variable_edges;  // per variable 1..num_vars
  std::vector<std::array<int, 3>> clause_triangles;
};
NaeReduction nae3sat_reduce(const NaeFormula& formula);

}  // namespace orient
