#include "orient/compiler.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/errors.hpp"

namespace orient {

int OrientationInstance::var_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(variables.begin(), variables.end(), std::pair{u, v});
  if (it == variables.end() || *it != std::pair{u, v}) return -1;
  return static_cast<int>(it - variables.begin());
}

OrientationInstance compile_instance(const PartialDigraph& d, const ForbiddenSet& f,
                                     bool prune_subsumed) {
  OrientationInstance inst;
  inst.n = d.n();
  inst.variables = d.underlying_edges();
  for (auto [u, v] : d.fixed_arcs()) {
    int var = inst.var_of(u, v);
    inst.unary_fixings.emplace_back(var, u < v ? 1 : 0);
  }
  if (f.empty()) return inst;
  int mf = f.mF();
  for (int size = 2; size <= mf; ++size) {
    for (std::vector<int>& c : cliques_of_size(d, size)) {
      if (prune_subsumed && size < mf) {
        bool extendable = false;
        for (int v = 0; v < d.n() && !extendable; ++v) {
          if (std::binary_search(c.begin(), c.end(), v)) continue;
          bool all = true;
          for (int u : c)
            if (!d.adjacent(u, v)) {
              all = false;
              break;
            }
          extendable = all;
        }
        if (extendable) continue;  // implied by a larger constrained clique
      }
      OrientationInstance::Constraint con;
      con.relation_size = size;
      con.vertices = c;
      for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
          con.var_index.push_back(inst.var_of(c[a], c[b]));
      inst.constraints.push_back(std::move(con));
    }
  }
  return inst;
}

PartialDigraph decode_orientation(const PartialDigraph& d, const OrientationInstance& inst,
                                  const std::vector<std::uint8_t>& assignment) {
  PartialDigraph out = d;
  for (std::size_t i = 0; i < inst.variables.size(); ++i) {
    auto [u, v] = inst.variables[i];
    if (d.symmetric_edge(u, v)) {
      out.remove_arc(assignment[i] ? v : u, assignment[i] ? u : v);
    } else if (d.arc(u, v) != static_cast<bool>(assignment[i])) {
      throw std::logic_error("assignment contradicts a fixed arc");
    }
  }
  return out;
}

namespace {

// all relations below the clique threshold are full exactly when every
// member needs at least n_F vertices
bool sub_threshold_full(const ForbiddenSet& f, int clique_size) {
  return f.members().front().n >= clique_size;
}

AffineSolveResult solve_clique_check(const PartialDigraph& d, const ForbiddenSet& f,
                                     int clique_size) {
  AffineSolveResult res;
  if (has_clique(d, clique_size)) return res;  // infeasible
  PartialDigraph oriented = orient_acyclically(d);
  if (!is_digraph_F_free(oriented, f))
    throw std::logic_error("acyclic orientation failed the freeness re-check");
  res.orientation = std::move(oriented);
  // with no n_F-clique, constraints live on smaller cliques only; when those
  // relations are all full every orientation works and the count is exact
  if (sub_threshold_full(f, clique_size))
    res.count_exponent = static_cast<int>(d.sym_edges().size());
  return res;
}

}  // namespace

AffineSolveResult solve_affine(const PartialDigraph& d, const ForbiddenSet& f) {
  if (f.empty()) {
    AffineSolveResult res;
    res.orientation = orient_acyclically(d);
    res.count_exponent = static_cast<int>(d.sym_edges().size());
    return res;
  }
  ClassificationReport rep =
      d.is_symmetric() ? classify_orientation(f) : classify_completion(f);
  if (rep.verdict == Verdict::CliqueCheck)
    return solve_clique_check(d, f, *rep.clique_size);
  if (rep.verdict != Verdict::PolyAffine)
    throw ContractError("solve_affine requires a PolyAffine or CliqueCheck verdict, got " +
                        to_string(rep.verdict) + " for the " + to_string(rep.problem) +
                        " problem");

  OrientationInstance inst = compile_instance(d, f);
  GF2System sys(static_cast<int>(inst.variables.size()));
  for (const auto& con : inst.constraints) {
    const AffineRep& ar = rep.affine_reps[con.relation_size - 2];
    for (const AffineEquation& eq : ar.equations) {
      std::vector<int> vars;
      for (int t = 0; t < ar.arity; ++t)
        if ((eq.coeffs >> t) & 1u) vars.push_back(con.var_index[t]);
      sys.add_equation(vars, eq.rhs);
    }
  }
  for (auto [var, bit] : inst.unary_fixings) sys.add_equation({var}, bit);

  AffineSolveResult res;
  auto assignment = sys.solve();
  if (!assignment) return res;
  PartialDigraph oriented = decode_orientation(d, inst, *assignment);
  if (!is_digraph_F_free(oriented, f))
    throw std::logic_error("affine solution failed the freeness re-check");
  res.orientation = std::move(oriented);
  res.count_exponent = sys.count_exponent();
  return res;
}

Sys3System build_Sys3(const PartialDigraph& d) {
  std::vector<std::pair<int, int>> vars;
  std::vector<int> index(static_cast<std::size_t>(d.n()) * d.n(), -1);
  for (auto [u, v] : d.underlying_edges()) {
    index[static_cast<std::size_t>(u) * d.n() + v] = static_cast<int>(vars.size());
    vars.emplace_back(u, v);
    index[static_cast<std::size_t>(v) * d.n() + u] = static_cast<int>(vars.size());
    vars.emplace_back(v, u);
  }
  auto var_of = [&](int u, int v) { return index[static_cast<std::size_t>(u) * d.n() + v]; };
  Sys3System out{GF2System(static_cast<int>(vars.size())), vars};
  for (auto [u, v] : d.fixed_arcs()) out.system.add_equation({var_of(u, v)}, 1);
  for (auto [u, v] : d.underlying_edges())
    out.system.add_equation({var_of(u, v), var_of(v, u)}, 1);
  for (int a = 0; a < d.n(); ++a)
    for (int b = 0; b < d.n(); ++b)
      for (int c = 0; c < d.n(); ++c) {
        if (a == b || b == c || a == c) continue;
        if (d.adjacent(a, b) && d.adjacent(b, c) && d.adjacent(a, c))
          out.system.add_equation({var_of(a, b), var_of(b, c)}, 0);
      }
  return out;
}

namespace {

PairSystem build_four_clique_system(const PartialDigraph& d, const ForbiddenSet& f) {
  std::vector<std::pair<int, int>> pairs = d.underlying_edges();
  PairSystem out{GF2System(static_cast<int>(pairs.size())), pairs};
  auto var_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(out.pairs.begin(), out.pairs.end(), std::pair{u, v});
    return static_cast<int>(it - out.pairs.begin());
  };
  auto rep = affine_representation(build_Pn(f, 4));
  if (!std::holds_alternative<AffineRep>(rep))
    throw std::logic_error("P_4 of the specialized system is not affine");
  const AffineRep& ar = std::get<AffineRep>(rep);
  for (const std::vector<int>& c : cliques_of_size(d, 4)) {
    std::vector<int> cvars;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) cvars.push_back(var_of(c[a], c[b]));
    for (const AffineEquation& eq : ar.equations) {
      std::vector<int> rowvars;
      for (int t = 0; t < ar.arity; ++t)
        if ((eq.coeffs >> t) & 1u) rowvars.push_back(cvars[t]);
      out.system.add_equation(rowvars, eq.rhs);
    }
  }
  for (auto [u, v] : d.fixed_arcs()) out.system.add_equation({var_of(u, v)}, u < v ? 1 : 0);
  return out;
}

}  // namespace

PairSystem build_Sys4(const PartialDigraph& d) {
  ForbiddenSet f({transitive_tournament(4), tc4()});
  return build_four_clique_system(d, f);
}

PairSystem build_SysPlus(const PartialDigraph& d) {
  ForbiddenSet f({transitive_tournament(4), tc4(), c3_minus()});
  return build_four_clique_system(d, f);
}

}  // namespace orient
