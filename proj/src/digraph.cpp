#include "orient/digraph.hpp"

#include <algorithm>
#include <deque>

#include "orient/errors.hpp"

namespace orient {

PartialDigraph::PartialDigraph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void PartialDigraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("arc endpoint out of range");
  if (u == v) throw DomainError("loops are not allowed");
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
}

void PartialDigraph::add_edge(int u, int v) {
  add_arc(u, v);
  add_arc(v, u);
}

void PartialDigraph::remove_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("arc endpoint out of range");
  adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
}

std::vector<std::pair<int, int>> PartialDigraph::sym_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (arc(u, v) && arc(v, u)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> PartialDigraph::fixed_arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && arc(u, v) && !arc(v, u)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<int, int>> PartialDigraph::underlying_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool PartialDigraph::is_oriented() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (arc(u, v) && arc(v, u)) return false;
  return true;
}

bool PartialDigraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && arc(u, v) != arc(v, u)) return false;
  return true;
}

PartialDigraph PartialDigraph::merge(const std::vector<const PartialDigraph*>& parts,
                                     const std::vector<std::vector<int>>& maps, int out_n) {
  PartialDigraph out(out_n);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const PartialDigraph& d = *parts[p];
    const std::vector<int>& map = maps[p];
    for (int u = 0; u < d.n(); ++u)
      for (int v = 0; v < d.n(); ++v)
        if (u != v && d.arc(u, v)) out.add_arc(map[u], map[v]);
  }
  return out;
}

PartialDigraph complete_graph(int n) {
  PartialDigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

namespace {

void cliques_rec(const PartialDigraph& d, int size, std::vector<int>& cur, int next,
                 std::vector<std::vector<int>>& out, bool stop_at_first) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = next; v < d.n(); ++v) {
    if (stop_at_first && !out.empty()) return;
    bool ok = true;
    for (int u : cur)
      if (!d.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    cliques_rec(d, size, cur, v + 1, out, stop_at_first);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> cliques_of_size(const PartialDigraph& d, int size) {
  std::vector<std::vector<int>> out;
  if (size < 1 || size > d.n()) return out;
  std::vector<int> cur;
  cliques_rec(d, size, cur, 0, out, false);
  return out;
}

bool has_clique(const PartialDigraph& d, int size) {
  if (size < 1) return true;
  if (size > d.n()) return false;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  cliques_rec(d, size, cur, 0, out, true);
  return !out.empty();
}

Tournament induced_tournament(const PartialDigraph& d, const std::vector<int>& verts) {
  int k = static_cast<int>(verts.size());
  Tournament t{k, 0};
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (!d.arc(verts[a], verts[b]) && !d.arc(verts[b], verts[a]))
        throw ContractError("vertex set does not induce a semicomplete subdigraph");
      t.bits = set_bit(t.bits, pair_pos(k, a, b), d.arc(verts[a], verts[b]));
    }
  return t;
}

bool is_digraph_F_free(const PartialDigraph& d, const ForbiddenSet& f) {
  if (!d.is_oriented()) throw DomainError("freeness check requires an oriented digraph");
  for (int s : f.member_sizes()) {
    const std::vector<std::uint64_t>& bs = f.labeled_members(s);
    for (const std::vector<int>& c : cliques_of_size(d, s)) {
      std::uint64_t m = induced_tournament(d, c).bits;
      if ((bs[m >> 6] >> (m & 63)) & 1u) return false;
    }
  }
  return true;
}

int distance(const PartialDigraph& d, int a, int b) {
  if (a == b) return 0;
  std::vector<int> dist(d.n(), -1);
  std::deque<int> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < d.n(); ++v)
      if (dist[v] < 0 && d.adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        if (v == b) return dist[v];
        queue.push_back(v);
      }
  }
  return -1;
}

PartialDigraph orient_acyclically(const PartialDigraph& d) {
  PartialDigraph out = d;
  for (auto [u, v] : d.sym_edges()) out.remove_arc(v, u);
  return out;
}

PartialDigraph flip_digraph(const PartialDigraph& d) {
  PartialDigraph out(d.n());
  for (int u = 0; u < d.n(); ++u)
    for (int v = 0; v < d.n(); ++v)
      if (u != v && d.arc(u, v)) out.add_arc(v, u);
  return out;
}

}  // namespace orient
