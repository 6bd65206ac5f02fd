#include "orient/forcing.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "orient/classify.hpp"
#include "orient/compiler.hpp"
#include "orient/errors.hpp"

namespace orient {

int MarkedDigraph::terminal(const std::string& name) const {
  auto it = terminals.find(name);
  if (it == terminals.end()) throw DomainError("unknown terminal: " + name);
  return it->second;
}

bool completable(const PartialDigraph& d, const ForbiddenSet& f,
                 const BruteForceBudget& budget) {
  if (f.empty()) return true;
  if (classify_completion(f).verdict == Verdict::PolyAffine)
    return solve_affine(d, f).orientation.has_value();
  return brute_force_complete(d, f, budget).has_value();
}

namespace {

PartialDigraph with_fixing(const PartialDigraph& d, int from, int to) {
  if (!d.symmetric_edge(from, to)) throw DomainError("fixing a non-symmetric edge");
  PartialDigraph out = d;
  out.remove_arc(to, from);
  return out;
}

}  // namespace

bool is_free_edge(const PartialDigraph& d, const ForbiddenSet& f, int x, int y,
                  const BruteForceBudget& budget) {
  if (!d.symmetric_edge(x, y)) throw DomainError("free-edge query on a non-symmetric edge");
  return completable(with_fixing(d, x, y), f, budget) &&
         completable(with_fixing(d, y, x), f, budget);
}

bool forces(const PartialDigraph& d, const ForbiddenSet& f, std::pair<int, int> xy,
            std::pair<int, int> uv, const BruteForceBudget& budget) {
  auto [x, y] = xy;
  auto [u, v] = uv;
  if (!is_free_edge(d, f, x, y, budget) || !is_free_edge(d, f, u, v, budget)) return false;
  if (xy == uv) return true;  // every free edge forces itself
  PartialDigraph fixed = with_fixing(d, x, y);
  if (fixed.symmetric_edge(v, u)) fixed = with_fixing(fixed, v, u);
  else if (!fixed.arc(v, u)) return false;  // x->y already forced u->v away
  return !completable(fixed, f, budget);
}

namespace {

// disjoint union of copies of d with vertex identifications; ids[c] maps a
// copy-c vertex to its output vertex
std::pair<PartialDigraph, std::vector<std::vector<int>>> glue_copies(
    const PartialDigraph& d, int copies,
    const std::vector<std::array<int, 4>>& identify /* {copy_a, v_a, copy_b, v_b} */) {
  int total = copies * d.n();
  std::vector<int> parent(total);
  for (int i = 0; i < total; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ca, va, cb, vb] : identify)
    parent[find(ca * d.n() + va)] = find(cb * d.n() + vb);
  std::vector<int> compact(total, -1);
  int next = 0;
  for (int i = 0; i < total; ++i)
    if (find(i) == i) compact[i] = next++;
  std::vector<std::vector<int>> maps(copies, std::vector<int>(d.n()));
  for (int c = 0; c < copies; ++c)
    for (int v = 0; v < d.n(); ++v) maps[c][v] = compact[find(c * d.n() + v)];
  std::vector<const PartialDigraph*> parts(copies, &d);
  return {PartialDigraph::merge(parts, maps, next), std::move(maps)};
}

}  // namespace

MarkedDigraph glue_separate(const PartialDigraph& d, const ForbiddenSet& f,
                            std::pair<int, int> xy, std::pair<int, int> uv,
                            const BruteForceBudget& budget) {
  auto [x, y] = xy;
  auto [u, v] = uv;
  std::vector<int> distinct{x, y, u, v};
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() != 3)
    throw ContractError("glue_separate needs exactly three distinct terminals");
  if (!forces(d, f, xy, uv, budget))
    throw ContractError("glue_separate requires (x,y) to force (u,v)");

  PartialDigraph merged;
  std::vector<std::vector<int>> maps;
  std::pair<int, int> t1, t2;
  if (y == v) {
    // (x,y) forces (u,y): chain through (y1~u2, u1~y2); output forces (y2,x2)
    std::tie(merged, maps) = glue_copies(d, 2, {{{0, y, 1, u}}, {{0, u, 1, y}}});
    t1 = {maps[0][x], maps[0][y]};
    t2 = {maps[1][y], maps[1][x]};
  } else if (y == u) {
    // (x,y) forces (y,v): chain through (y1~x2, v1~y2); output forces (y2,v2)
    std::tie(merged, maps) = glue_copies(d, 2, {{{0, y, 1, x}}, {{0, v, 1, y}}});
    t1 = {maps[0][x], maps[0][y]};
    t2 = {maps[1][y], maps[1][v]};
  } else if (x == u) {
    // (v,x) forces (y,x) by the reversal observation; reduce to the y == v
    // case on the renamed pairs
    std::tie(merged, maps) = glue_copies(d, 2, {{{0, x, 1, y}}, {{0, y, 1, x}}});
    t1 = {maps[0][v], maps[0][x]};
    t2 = {maps[1][x], maps[1][v]};
  } else {  // x == v
    // (x,y) forces (u,x); copy 2 contributes (x2,u2) forces (y2,x2)
    std::tie(merged, maps) = glue_copies(d, 2, {{{0, u, 1, x}}, {{0, x, 1, u}}});
    t1 = {maps[0][x], maps[0][y]};
    t2 = {maps[1][y], maps[1][x]};
  }
  MarkedDigraph out;
  out.d = std::move(merged);
  out.terminals = {{"x", t1.first}, {"y", t1.second}, {"u", t2.first}, {"v", t2.second}};
  return out;
}

MarkedDigraph distance_amplify(const PartialDigraph& d, const ForbiddenSet& f,
                               std::pair<int, int> xy, std::pair<int, int> uv, int k,
                               const BruteForceBudget& budget) {
  auto [x, y] = xy;
  auto [u, v] = uv;
  if (k < 1) throw DomainError("distance bound must be positive");
  std::vector<int> distinct{x, y, u, v};
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() != 4)
    throw ContractError("distance_amplify needs four distinct terminals");
  if (!forces(d, f, xy, uv, budget))
    throw ContractError("distance_amplify requires (x,y) to force (u,v)");

  // chain m copies (u_i ~ x_{i+1}, v_i ~ y_{i+1}), then glue a second chain
  // head-to-tail in both directions; two copies are the minimum for the
  // doubled identification to avoid collapsing the terminal edges
  int m = std::max(k, 2);
  std::vector<std::array<int, 4>> ids;
  for (int i = 0; i + 1 < m; ++i) {
    ids.push_back({i, u, i + 1, x});
    ids.push_back({i, v, i + 1, y});
  }
  // second chain occupies copies m..2m-1
  for (int i = 0; i + 1 < m; ++i) {
    ids.push_back({m + i, u, m + i + 1, x});
    ids.push_back({m + i, v, m + i + 1, y});
  }
  ids.push_back({m - 1, u, m, x});          // u_m' ~ x_1''
  ids.push_back({m - 1, v, m, y});          // v_m' ~ y_1''
  ids.push_back({2 * m - 1, u, 0, x});      // u_m'' ~ x_1'
  ids.push_back({2 * m - 1, v, 0, y});      // v_m'' ~ y_1'
  auto [merged, maps] = glue_copies(d, 2 * m, ids);
  MarkedDigraph out;
  out.d = std::move(merged);
  out.terminals = {{"x", maps[0][x]},
                   {"y", maps[0][y]},
                   {"u", maps[m - 1][u]},
                   {"v", maps[m - 1][v]}};
  return out;
}

MarkedDigraph forcing_d1() {
  // triangle on {x, y, u} with u -> x fixed and the other two pairs
  // symmetric; fixing x -> y forces u -> y (here v = y)
  PartialDigraph d(3);
  int x = 0, y = 1, u = 2;
  d.add_edge(x, y);
  d.add_edge(u, y);
  d.add_arc(u, x);
  MarkedDigraph out;
  out.d = std::move(d);
  out.terminals = {{"x", x}, {"y", y}, {"u", u}, {"v", y}};
  return out;
}

MarkedDigraph forcing_d2() {
  PartialDigraph d(4);
  int x = 0, y = 1, u = 2, v = 3;
  d.add_edge(x, y);
  d.add_edge(u, v);
  d.add_edge(u, y);
  d.add_arc(u, x);
  d.add_arc(y, v);
  MarkedDigraph out;
  out.d = std::move(d);
  out.terminals = {{"x", x}, {"y", y}, {"u", u}, {"v", v}};
  return out;
}

MarkedDigraph forcing_d3() {
  // eight vertices: x y u v and the four inner vertices 1 2 3 4 of the
  // doubled two-copy chain
  PartialDigraph d(8);
  int x = 0, y = 1, u = 2, v = 3, a1 = 4, a2 = 5, a3 = 6, a4 = 7;
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {a1, a2}, {a1, y}, {x, a4}, {a3, a4}, {a3, v}, {u, a2}, {x, y}, {u, v}})
    d.add_edge(p, q);
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {a1, x}, {y, a2}, {u, a1}, {a2, v}, {a3, u}, {x, a3}, {v, a4}, {a4, y}})
    d.add_arc(p, q);
  MarkedDigraph out;
  out.d = std::move(d);
  out.terminals = {{"x", x}, {"y", y}, {"u", u}, {"v", v}};
  return out;
}

bool nae_satisfiable(const NaeFormula& formula) {
  if (formula.num_vars > 25) throw ResourceLimitError("NAE truth-table check capped at 25 vars");
  for (std::uint32_t assign = 0; assign < (std::uint32_t{1} << formula.num_vars); ++assign) {
    bool ok = true;
    for (const NaeClause& c : formula.clauses) {
      std::array<bool, 3> val;
      for (int i = 0; i < 3; ++i) {
        int lit = c.lit[i];
        bool b = (assign >> (std::abs(lit) - 1)) & 1u;
        val[i] = lit > 0 ? b : !b;
      }
      if (val[0] == val[1] && val[1] == val[2]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

NaeReduction nae3sat_reduce(const NaeFormula& formula) {
  for (const NaeClause& c : formula.clauses)
    for (int lit : c.lit)
      if (lit == 0 || std::abs(lit) > formula.num_vars)
        throw FormatError("clause literal out of range");

  ForbiddenSet triangle({directed_triangle()});
  // mutual-forcing transfer gadget, built from the verified constructions
  MarkedDigraph d1 = forcing_d1();
  MarkedDigraph d2 = glue_separate(d1.d, triangle, {d1.terminal("x"), d1.terminal("y")},
                                   {d1.terminal("u"), d1.terminal("v")});
  MarkedDigraph m = distance_amplify(d2.d, triangle, {d2.terminal("x"), d2.terminal("y")},
                                     {d2.terminal("u"), d2.terminal("v")}, 2);
  const PartialDigraph& gadget = m.d;
  int gx = m.terminal("x"), gy = m.terminal("y");
  int gu = m.terminal("u"), gv = m.terminal("v");

  // layout: one symmetric edge per variable, one triangle per clause, one
  // transfer gadget per literal linking its variable edge to a triangle edge
  NaeReduction out;
  int n = 2 * formula.num_vars + 3 * static_cast<int>(formula.clauses.size()) +
          (gadget.n() - 4) * 3 * static_cast<int>(formula.clauses.size());
  out.d = PartialDigraph(n);
  for (int v = 0; v < formula.num_vars; ++v) {
    out.d.add_edge(2 * v, 2 * v + 1);
    out.variable_edges.emplace_back(2 * v, 2 * v + 1);
  }
  int next = 2 * formula.num_vars;
  for (const NaeClause& clause : formula.clauses) {
    int a = next, b = next + 1, c = next + 2;
    next += 3;
    out.d.add_edge(a, b);
    out.d.add_edge(b, c);
    out.d.add_edge(c, a);
    out.clause_triangles.push_back({a, b, c});
    // the cyclic orientations of {a,b,c} are exactly the all-equal patterns
    // of ([a->b],[b->c],[c->a])
    std::array<std::pair<int, int>, 3> tri_edge = {
        std::pair{a, b}, std::pair{b, c}, std::pair{c, a}};
    for (int i = 0; i < 3; ++i) {
      int lit = clause.lit[i];
      auto [w0, w1] = out.variable_edges[std::abs(lit) - 1];
      auto [p, q] = tri_edge[i];
      if (lit < 0) std::swap(p, q);
      // embed the gadget: x,y onto the variable edge, u,v onto the triangle
      // edge, interior vertices fresh
      std::vector<int> map(gadget.n());
      for (int gvert = 0; gvert < gadget.n(); ++gvert) {
        if (gvert == gx) map[gvert] = w0;
        else if (gvert == gy) map[gvert] = w1;
        else if (gvert == gu) map[gvert] = p;
        else if (gvert == gv) map[gvert] = q;
        else map[gvert] = next++;
      }
      for (int s = 0; s < gadget.n(); ++s)
        for (int t = 0; t < gadget.n(); ++t)
          if (s != t && gadget.arc(s, t)) out.d.add_arc(map[s], map[t]);
    }
  }
  return out;
}

}  // namespace orient
