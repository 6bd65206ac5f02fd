#include "orient/bruteforce.hpp"

#include <algorithm>
#include <functional>

#include "orient/bits.hpp"
#include "orient/errors.hpp"

namespace orient {

namespace {

// One clique of a forbidden-member size. Pair t of the induced tournament
// is either a fixed bit or tracked through a search variable.
struct CliqueSlot {
  int size;
  std::uint32_t fixed_mask;            // bits decided by fixed arcs
  std::vector<std::pair<int, int>> var_bits;  // (edge variable, bit position)
};

struct Searcher {
  const PartialDigraph& d;
  const ForbiddenSet& f;
  std::uint64_t node_budget;

  std::vector<std::pair<int, int>> edges;  // sym edges, search order
  std::vector<int> value;                  // -1 / 0 / 1 per edge
  std::vector<CliqueSlot> cliques;
  std::vector<int> undecided;                   // per clique
  std::vector<std::vector<int>> edge_cliques;   // edge -> incident cliques
  std::uint64_t nodes = 0;
  bool root_infeasible = false;

  Searcher(const PartialDigraph& d_, const ForbiddenSet& f_, const BruteForceBudget& budget)
      : d(d_), f(f_), node_budget(budget.max_nodes) {
    edges = d.sym_edges();
    if (edges.size() > budget.max_sym_edges)
      throw ResourceLimitError("instance has " + std::to_string(edges.size()) +
                               " undirected edges, above the budget of " +
                               std::to_string(budget.max_sym_edges));
    std::vector<int> edge_index(static_cast<std::size_t>(d.n()) * d.n(), -1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      edge_index[static_cast<std::size_t>(edges[e].first) * d.n() + edges[e].second] =
          static_cast<int>(e);
      edge_index[static_cast<std::size_t>(edges[e].second) * d.n() + edges[e].first] =
          static_cast<int>(e);
    }
    edge_cliques.resize(edges.size());
    for (int s : f.member_sizes()) {
      for (const std::vector<int>& c : cliques_of_size(d, s)) {
        CliqueSlot slot{s, 0, {}};
        int und = 0;
        for (int a = 0; a < s; ++a)
          for (int b = a + 1; b < s; ++b) {
            int pos = pair_pos(s, a, b);
            int u = c[a], v = c[b];
            int e = edge_index[static_cast<std::size_t>(u) * d.n() + v];
            if (e >= 0 && d.symmetric_edge(u, v)) {
              // bit meaning: 1 iff arc lower-id -> higher-id of the edge,
              // which here is u -> v since both lists are sorted
              slot.var_bits.emplace_back(e, pos);
              ++und;
            } else if (d.arc(u, v)) {
              slot.fixed_mask |= std::uint32_t{1} << pos;
            }
          }
        int id = static_cast<int>(cliques.size());
        for (auto [e, pos] : slot.var_bits) edge_cliques[e].push_back(id);
        cliques.push_back(std::move(slot));
        undecided.push_back(und);
      }
    }
    // static most-constrained-first order: edges in many cliques first
    std::vector<int> order(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) order[e] = static_cast<int>(e);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return edge_cliques[a].size() > edge_cliques[b].size();
    });
    // re-index everything by the chosen order
    std::vector<int> rank(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> new_edges(edges.size());
    std::vector<std::vector<int>> new_ec(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      new_edges[rank[e]] = edges[e];
      new_ec[rank[e]] = std::move(edge_cliques[e]);
    }
    edges = std::move(new_edges);
    edge_cliques = std::move(new_ec);
    for (CliqueSlot& slot : cliques)
      for (auto& [e, pos] : slot.var_bits) e = rank[e];
    value.assign(edges.size(), -1);
    // fully fixed cliques are checked once up front
    for (const CliqueSlot& slot : cliques)
      if (slot.var_bits.empty() && forbidden(slot.size, slot.fixed_mask)) root_infeasible = true;
  }

  bool forbidden(int size, std::uint32_t mask) const {
    const std::vector<std::uint64_t>& bs = f.labeled_members(size);
    return (bs[mask >> 6] >> (mask & 63)) & 1u;
  }

  std::uint32_t clique_mask(const CliqueSlot& slot) const {
    std::uint32_t m = slot.fixed_mask;
    for (auto [e, pos] : slot.var_bits)
      if (value[e] == 1) m |= std::uint32_t{1} << pos;
    return m;
  }

  // assign edge e := bit, propagate unit cliques; record assignments on the
  // trail; false on conflict. Counters move at assignment time so undo stays
  // symmetric even when a conflict abandons the queue.
  bool assign(int e, int bit, std::vector<int>& trail) {
    std::vector<int> queue;
    auto set_value = [&](int x, int b) {
      value[x] = b;
      trail.push_back(x);
      queue.push_back(x);
      for (int ci : edge_cliques[x]) --undecided[ci];
    };
    set_value(e, bit);
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (int ci : edge_cliques[cur]) {
        CliqueSlot& slot = cliques[ci];
        if (undecided[ci] == 0) {
          if (forbidden(slot.size, clique_mask(slot))) return false;
        } else if (undecided[ci] == 1) {
          int last = -1, last_pos = -1;
          for (auto [e2, pos] : slot.var_bits)
            if (value[e2] < 0) {
              last = e2;
              last_pos = pos;
            }
          std::uint32_t base = clique_mask(slot);
          bool bad0 = forbidden(slot.size, base);
          bool bad1 = forbidden(slot.size, base | (std::uint32_t{1} << last_pos));
          if (bad0 && bad1) return false;
          if (bad0 || bad1) set_value(last, bad0 ? 1 : 0);
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int e = trail.back();
      trail.pop_back();
      value[e] = -1;
      for (int ci : edge_cliques[e]) ++undecided[ci];
    }
  }

  // visit every completion; returning false stops the search
  bool search(const std::function<bool()>& on_solution, std::vector<int>& trail) {
    if (++nodes > node_budget) throw ResourceLimitError("brute-force node budget exceeded");
    int e = -1;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (value[i] < 0) {
        e = static_cast<int>(i);
        break;
      }
    if (e < 0) return on_solution();
    for (int bit : {0, 1}) {
      std::size_t mark = trail.size();
      if (assign(e, bit, trail)) {
        if (!search(on_solution, trail)) return false;
      }
      undo(trail, mark);
    }
    return true;
  }

  PartialDigraph current_completion() const {
    PartialDigraph out = d;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      out.remove_arc(value[e] == 1 ? v : u, value[e] == 1 ? u : v);
    }
    return out;
  }
};

}  // namespace

std::optional<PartialDigraph> brute_force_complete(const PartialDigraph& d, const ForbiddenSet& f,
                                                   const BruteForceBudget& budget) {
  Searcher s(d, f, budget);
  if (s.root_infeasible) return std::nullopt;
  std::optional<PartialDigraph> found;
  std::vector<int> trail;
  s.search(
      [&]() {
        found = s.current_completion();
        return false;
      },
      trail);
  return found;
}

std::uint64_t count_bruteforce(const PartialDigraph& d, const ForbiddenSet& f,
                               const BruteForceBudget& budget) {
  Searcher s(d, f, budget);
  if (s.root_infeasible) return 0;
  std::uint64_t count = 0;
  std::vector<int> trail;
  s.search(
      [&]() {
        ++count;
        return true;
      },
      trail);
  return count;
}

std::vector<PartialDigraph> enumerate_completions_bruteforce(const PartialDigraph& d,
                                                             const ForbiddenSet& f,
                                                             const BruteForceBudget& budget) {
  Searcher s(d, f, budget);
  std::vector<PartialDigraph> out;
  if (s.root_infeasible) return out;
  std::vector<int> trail;
  s.search(
      [&]() {
        out.push_back(s.current_completion());
        return true;
      },
      trail);
  return out;
}

}  // namespace orient
