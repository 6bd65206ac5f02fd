#include "orient/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "orient/errors.hpp"

namespace orient {

std::string to_string(Problem p) {
  return p == Problem::Orientation ? "orientation" : "completion";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TrivialAllOrientable: return "TrivialAllOrientable";
    case Verdict::CliqueCheck: return "CliqueCheck";
    case Verdict::PolyAffine: return "PolyAffine";
    case Verdict::NPComplete: return "NPComplete";
  }
  return "?";
}

namespace {

// bits of the transitive tournament whose linear order is the given sequence
std::uint32_t transitive_along(int n, const std::vector<int>& order) {
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rank[i] < rank[j]) bits |= std::uint32_t{1} << pair_pos(n, i, j);
  return bits;
}

// When T_n is F-free but P_n is not full, P_n cannot be preserved by
// minority: every single-bit mask is the XOR of two transitive labelings
// (swap two order-consecutive vertices), so any non-member decomposes into
// an odd chain of members. Reduce that chain to a violating triple.
MinorityWitnessTriple witness_below_transitive(const ForbiddenSet& f, int n,
                                               std::uint32_t nonmember) {
  std::vector<std::uint32_t> chain;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!((nonmember >> pair_pos(n, i, j)) & 1u)) continue;
      std::vector<int> order;
      for (int v = 0; v < n; ++v)
        if (v != j) {
          order.push_back(v);
          if (v == i) order.push_back(j);
        }
      chain.push_back(transitive_along(n, order));
      std::swap(order[std::find(order.begin(), order.end(), i) - order.begin()],
                order[std::find(order.begin(), order.end(), j) - order.begin()]);
      chain.push_back(transitive_along(n, order));
    }
  chain.push_back(0);  // reverse-transitive base; keeps the chain odd
  auto member = [&](std::uint32_t t) { return f.is_free(Tournament{n, t}); };
  while (true) {
    std::uint32_t img = chain[0] ^ chain[1] ^ chain[2];
    if (!member(img)) return MinorityWitnessTriple{chain[0], chain[1], chain[2], img};
    if (chain.size() == 3) throw std::logic_error("transitive witness chain collapsed");
    chain.erase(chain.begin(), chain.begin() + 3);
    chain.insert(chain.begin(), img);
  }
}

}  // namespace

PnMinorityResult analyze_Pn_minority(const ForbiddenSet& f, int n) {
  // Fast path when the transitive tournament is F-free: P_n is then either
  // full (no member fits into n vertices) or not minority-preserved.
  if (f.is_free(transitive_tournament(n))) {
    bool some_member_fits = false;
    for (int s : f.member_sizes())
      if (s <= n) some_member_fits = true;
    if (!some_member_fits)
      return PnMinorityResult{true, std::nullopt, AffineRep{pair_count(n), {}}};
    // some non-member exists: smallest member on the first vertices,
    // remaining pairs oriented low -> high
    const Tournament& m = f.members().front();
    std::uint32_t z = static_cast<std::uint32_t>(low_mask(pair_count(n)));
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.n; ++j)
        if (!get_bit(m.bits, pair_pos(m.n, i, j)))
          z &= ~(std::uint32_t{1} << pair_pos(n, i, j));
    return PnMinorityResult{false, witness_below_transitive(f, n, z), std::nullopt};
  }
  AffineHullAccumulator acc(pair_count(n));
  f.for_each_free_labeled(n, [&](std::uint64_t bits) {
    acc.add(static_cast<std::uint32_t>(bits));
    return true;
  });
  PnMinorityResult res{acc.is_affine(), std::nullopt, std::nullopt};
  if (res.preserved) {
    if (acc.count() == 0)
      res.rep = AffineRep{pair_count(n), {{0u, 1}}};
    else
      res.rep = acc.hull_equations();
  } else {
    res.witness = acc.witness(
        [&](std::uint32_t t) { return f.is_free(Tournament{n, t}); });
  }
  return res;
}

bool Pn_all_minority_preserved(const ForbiddenSet& f) {
  if (f.empty()) return true;
  for (int n = 2; n <= f.mF(); ++n)
    if (!analyze_Pn_minority(f, n).preserved) return false;
  return true;
}

bool Qn_all_minority_preserved(const ForbiddenSet& f) {
  if (f.empty()) return true;
  for (int n = 3; n <= f.mF(); ++n)
    if (!preserved_by(build_Qn(f, n), SchaeferOp::Minority)) return false;
  return true;
}

namespace {

int equivalence_case_of(const ForbiddenSet& f) {
  std::optional<int> nf = f.nF();
  if (nf && f.free_tournament_exists(*nf)) return 1;
  if (nf) {
    int min_size = f.members().front().n;  // members sorted by size
    if (min_size >= *nf) return 2;
  }
  return 3;
}

void fill_common(ClassificationReport& rep, const ForbiddenSet& f) {
  if (!f.empty()) {
    rep.n_F = f.nF();
    rep.m_F = f.mF();
    rep.k_F = f.kF();
    rep.equivalence_case = equivalence_case_of(f);
  }
}

// minority criterion shared by both classifiers: PolyAffine with reps for
// every n, or NPComplete with the first violating witness
void run_minority_cases(ClassificationReport& rep, const ForbiddenSet& f) {
  std::vector<AffineRep> reps;
  for (int n = 2; n <= f.mF(); ++n) {
    PnMinorityResult r = analyze_Pn_minority(f, n);
    if (!r.preserved) {
      rep.verdict = Verdict::NPComplete;
      rep.witness = MinorityViolation{n, pair_count(n), r.witness->a, r.witness->b,
                                      r.witness->c, r.witness->image};
      return;
    }
    reps.push_back(*r.rep);
  }
  rep.verdict = Verdict::PolyAffine;
  rep.affine_reps = std::move(reps);
}

}  // namespace

ClassificationReport classify_orientation(const ForbiddenSet& f) {
  ClassificationReport rep;
  rep.problem = Problem::Orientation;
  if (f.empty()) {
    rep.verdict = Verdict::TrivialAllOrientable;
    return rep;
  }
  fill_common(rep, f);
  std::optional<int> nf = f.nF();
  if (!nf) {
    rep.verdict = Verdict::TrivialAllOrientable;
    return rep;
  }
  if (!f.free_tournament_exists(*nf)) {
    rep.verdict = Verdict::CliqueCheck;
    rep.clique_size = *nf;
    return rep;
  }
  run_minority_cases(rep, f);
  return rep;
}

ClassificationReport classify_completion(const ForbiddenSet& f) {
  ClassificationReport rep;
  rep.problem = Problem::Completion;
  if (f.empty()) {
    rep.verdict = Verdict::TrivialAllOrientable;
    return rep;
  }
  fill_common(rep, f);
  run_minority_cases(rep, f);
  return rep;
}

int equivalence_report(const ForbiddenSet& f) {
  if (f.empty()) throw DomainError("equivalence case needs a nonempty forbidden set");
  int c = equivalence_case_of(f);
  ClassificationReport ori = classify_orientation(f);
  ClassificationReport com = classify_completion(f);
  bool ori_hard = ori.verdict == Verdict::NPComplete;
  bool com_hard = com.verdict == Verdict::NPComplete;
  if (c == 3) {
    if (!com_hard || ori_hard)
      throw std::logic_error("equivalence case 3 contradicts the classification verdicts");
  } else {
    if (ori_hard != com_hard)
      throw std::logic_error("equivalence cases 1/2 contradict the classification verdicts");
  }
  return c;
}

}  // namespace orient
