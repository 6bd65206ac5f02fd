#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orient/relation.hpp"
#include "orient/tournament.hpp"

namespace orient {

inline constexpr int kMaxForbiddenVertices = 8;
inline constexpr int kDefaultKfCap = 10;

// Result of the k_F search: largest clique size admitting an F-free
// orientation. When the search hits the cap, value is a verified lower bound.
struct KFResult {
  int value = 0;
  bool exceeds_cap = false;
};

// A finite set F of finite tournaments (each on 2..8 vertices), deduplicated
// up to isomorphism, with the derived invariants the classification needs.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;  // F = empty set
  explicit ForbiddenSet(std::vector<Tournament> members,
                        std::vector<std::string>* warnings = nullptr);

  const std::vector<Tournament>& members() const { return members_; }
  bool empty() const { return members_.empty(); }

  // maximum member vertex count; DomainError when F is empty
  int mF() const;
  // least n with the transitive T_n a member, if any
  std::optional<int> nF() const;
  // largest k such that K_k has an F-free orientation (needs nF)
  std::optional<KFResult> kF(int cap = kDefaultKfCap) const;
  // canonical F-free tournaments on 2..mF vertices
  const std::vector<Tournament>& Ff() const;

  bool flip_closed() const;
  bool switch_closed() const;

  // no member embeds into t
  bool is_free(const Tournament& t) const;
  // is there any F-free tournament on n vertices? (pruned DFS; exact)
  bool free_tournament_exists(int n) const;

  // distinct member sizes, ascending
  const std::vector<int>& member_sizes() const { return sizes_; }
  // dense bitset over {0,1}^C(s,2) marking every labeled copy of a member
  // of size s; empty vector when no member has that size
  const std::vector<std::uint64_t>& labeled_members(int s) const;

  // Walk all F-free labeled tournaments on n vertices (pruned DFS over
  // one-vertex extensions). Returning false from the visitor stops the walk.
  void for_each_free_labeled(int n, const std::function<bool(std::uint64_t)>& visit) const;

 private:
  std::vector<Tournament> members_;
  std::vector<int> sizes_;
  std::vector<std::vector<std::uint64_t>> labeled_;  // by size
  mutable std::optional<std::vector<Tournament>> ff_cache_;
  mutable std::map<int, KFResult> kf_cache_;
};

// The relation P_n of B_F: encodings of the F-free labeled tournaments on
// n vertices. F = empty is allowed (explicit n, full relation).
BoolRelation build_Pn(const ForbiddenSet& f, int n);
// The relation Q_n of C_F: triple codes realized by F-free tournaments.
BoolRelation build_Qn(const ForbiddenSet& f, int n);

// Scan kernels behind build_Pn/build_Qn. The serial variant is the
// reference implementation the tests compare against.
std::vector<std::uint32_t> scan_free_masks_serial(const ForbiddenSet& f, int n);
std::vector<std::uint32_t> scan_free_masks_parallel(const ForbiddenSet& f, int n);

}  // namespace orient
