#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orient/forbidden.hpp"
#include "orient/tournament.hpp"

namespace orient {

// A loopless digraph on vertices 0..n-1. A pair may carry one arc (a fixed
// orientation), both arcs (a symmetric edge awaiting orientation), or none.
// A graph is the special case where every present pair is symmetric.
class PartialDigraph {
 public:
  PartialDigraph() = default;
  explicit PartialDigraph(int n);

  int n() const { return n_; }
  bool arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  void add_arc(int u, int v);
  void add_edge(int u, int v);  // symmetric
  void remove_arc(int u, int v);

  bool adjacent(int u, int v) const { return arc(u, v) || arc(v, u); }
  bool symmetric_edge(int u, int v) const { return arc(u, v) && arc(v, u); }

  // pairs (u < v) present in both directions
  std::vector<std::pair<int, int>> sym_edges() const;
  // pairs present in exactly one direction, as oriented arcs
  std::vector<std::pair<int, int>> fixed_arcs() const;
  // all adjacent pairs (u < v)
  std::vector<std::pair<int, int>> underlying_edges() const;

  bool is_oriented() const;   // no symmetric edges
  bool is_symmetric() const;  // a graph: every present pair symmetric

  // disjoint-union / quotient helper: vertex v of this maps to map[v]
  static PartialDigraph merge(const std::vector<const PartialDigraph*>& parts,
                              const std::vector<std::vector<int>>& maps, int out_n);

  friend bool operator==(const PartialDigraph&, const PartialDigraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

PartialDigraph complete_graph(int n);

// cliques of the underlying graph with exactly the given size, as sorted
// vertex lists
std::vector<std::vector<int>> cliques_of_size(const PartialDigraph& d, int size);
bool has_clique(const PartialDigraph& d, int size);

// induced tournament on a clique of an oriented digraph
Tournament induced_tournament(const PartialDigraph& d, const std::vector<int>& verts);

// no <= m_F subset induces a tournament isomorphic to a member of F;
// DomainError if d still has symmetric edges
bool is_digraph_F_free(const PartialDigraph& d, const ForbiddenSet& f);

// BFS distance in the underlying graph; -1 when unreachable
int distance(const PartialDigraph& d, int a, int b);

// arcs low -> high on every symmetric edge; fixed arcs kept
PartialDigraph orient_acyclically(const PartialDigraph& d);

PartialDigraph flip_digraph(const PartialDigraph& d);

}  // namespace orient
