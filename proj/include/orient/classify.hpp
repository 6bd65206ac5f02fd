#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orient/forbidden.hpp"
#include "orient/relation.hpp"

namespace orient {

enum class Problem { Orientation, Completion };
enum class Verdict { TrivialAllOrientable, CliqueCheck, PolyAffine, NPComplete };

std::string to_string(Problem p);
std::string to_string(Verdict v);

// A violating triple in some P_n: three encodings of F-free tournaments
// whose coordinatewise minority is not F-free.
struct MinorityViolation {
  int n;
  int arity;
  std::uint32_t a, b, c;
  std::uint32_t image;
};

struct ClassificationReport {
  Problem problem;
  Verdict verdict;
  std::optional<int> clique_size;  // CliqueCheck(n)
  std::optional<int> n_F;
  std::optional<KFResult> k_F;
  std::optional<int> m_F;
  std::optional<MinorityViolation> witness;  // NPComplete
  std::vector<AffineRep> affine_reps;        // PolyAffine: one per n = 2..m_F
  int equivalence_case = 0;                  // which equivalence case applies
};

// Dichotomy for the F-free orientation problem. Cases, tested in order:
// no transitive member -> TrivialAllOrientable; no F-free tournament on
// n_F vertices -> CliqueCheck(n_F); every P_n minority-preserved ->
// PolyAffine; otherwise NPComplete with a verified witness.
ClassificationReport classify_orientation(const ForbiddenSet& f);

// Dichotomy for the completion problem: the single minority criterion.
// F = empty returns TrivialAllOrientable.
ClassificationReport classify_completion(const ForbiddenSet& f);

// Case 1: transitive member and some F-free tournament on n_F vertices
// (the two problems are polynomial-time equivalent). Case 2: transitive
// member and every member has at least n_F vertices (also equivalent).
// Case 3: otherwise: completion NP-complete, orientation in P. The tag is
// cross-checked against the two classify verdicts.
int equivalence_report(const ForbiddenSet& f);

// Streaming minority analysis of P_n (no relation materialized).
struct PnMinorityResult {
  bool preserved;
  std::optional<MinorityWitnessTriple> witness;  // when not preserved
  std::optional<AffineRep> rep;                  // when preserved
};
PnMinorityResult analyze_Pn_minority(const ForbiddenSet& f, int n);

// Q_n-side minority test; for switch-closed F it must agree with the
// P_n-side verdict.
bool Qn_all_minority_preserved(const ForbiddenSet& f);
bool Pn_all_minority_preserved(const ForbiddenSet& f);

}  // namespace orient
