#include "orient/forbidden.hpp"

#include <algorithm>
#include <numeric>

#include "orient/enumeration.hpp"
#include "orient/errors.hpp"

namespace orient {

namespace {

// all (s-1)(s-2)/2 ... pair positions of a vertex subset, in encoding order
std::vector<int> subset_pair_positions(int n, const std::vector<int>& verts) {
  std::vector<int> pos;
  pos.reserve(pair_count(static_cast<int>(verts.size())));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      pos.push_back(pair_pos(n, verts[a], verts[b]));
  return pos;
}

void for_each_subset(int n, int s, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint32_t extract_mask(std::uint64_t bits, const std::vector<int>& positions) {
  std::uint32_t m = 0;
  for (std::size_t t = 0; t < positions.size(); ++t)
    if (get_bit(bits, positions[t])) m |= std::uint32_t{1} << t;
  return m;
}

}  // namespace

ForbiddenSet::ForbiddenSet(std::vector<Tournament> members, std::vector<std::string>* warnings) {
  for (const Tournament& t : members) {
    if (t.n < 2) throw DomainError("forbidden tournaments must have at least two vertices");
    if (t.n > kMaxForbiddenVertices)
      throw DomainError("forbidden tournaments capped at " +
                        std::to_string(kMaxForbiddenVertices) + " vertices");
    bool dup = false;
    for (const Tournament& m : members_)
      if (is_isomorphic(m, t)) {
        dup = true;
        break;
      }
    if (dup) {
      if (warnings)
        warnings->push_back("dropping duplicate forbidden tournament (isomorphic member)");
      continue;
    }
    members_.push_back(decode(t.n, canonical_form(t)));
  }
  std::sort(members_.begin(), members_.end(), [](const Tournament& a, const Tournament& b) {
    return a.n != b.n ? a.n < b.n : tuple_lex_less(a.bits, b.bits);
  });
  for (const Tournament& t : members_)
    if (sizes_.empty() || sizes_.back() != t.n) sizes_.push_back(t.n);
  labeled_.assign(kMaxForbiddenVertices + 1, {});
  for (int s : sizes_) {
    std::vector<std::uint64_t>& bs = labeled_[s];
    bs.assign((std::size_t{1} << pair_count(s)) / 64 + 1, 0);
    std::vector<int> perm(s);
    for (const Tournament& t : members_) {
      if (t.n != s) continue;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::uint64_t m = relabel(t, perm).bits;
        bs[m >> 6] |= std::uint64_t{1} << (m & 63);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

int ForbiddenSet::mF() const {
  if (members_.empty()) throw DomainError("m_F is undefined for the empty forbidden set");
  return members_.back().n;
}

std::optional<int> ForbiddenSet::nF() const {
  std::optional<int> best;
  for (const Tournament& t : members_)
    if (is_transitive(t) && (!best || t.n < *best)) best = t.n;
  return best;
}

const std::vector<std::uint64_t>& ForbiddenSet::labeled_members(int s) const {
  static const std::vector<std::uint64_t> kEmpty;
  if (s < 0 || s >= static_cast<int>(labeled_.size())) return kEmpty;
  return labeled_[s];
}

bool ForbiddenSet::is_free(const Tournament& t) const {
  for (int s : sizes_) {
    if (s > t.n) break;
    const std::vector<std::uint64_t>& bs = labeled_[s];
    bool hit = false;
    for_each_subset(t.n, s, [&](const std::vector<int>& verts) {
      if (hit) return;
      std::uint32_t m = extract_mask(t.bits, subset_pair_positions(t.n, verts));
      if ((bs[m >> 6] >> (m & 63)) & 1u) hit = true;
    });
    if (hit) return false;
  }
  return true;
}

void ForbiddenSet::for_each_free_labeled(int n,
                                         const std::function<bool(std::uint64_t)>& visit) const {
  if (n < 1) throw DomainError("vertex count must be positive");
  // DFS over one-vertex extensions; prune as soon as a member appears among
  // the subsets containing the newest vertex
  struct Frame {
    std::uint64_t bits;
    int k;  // vertices 0..k-1 are decided
  };
  std::vector<Frame> stack{{0, 1}};
  // per level k: the member-sized subsets that contain the newest vertex k-1
  std::vector<std::vector<std::pair<int, std::vector<int>>>> subset_cache(n + 1);
  for (int k = 2; k <= n; ++k)
    for (int s : sizes_) {
      if (s > k) break;
      for_each_subset(k - 1, s - 1, [&](const std::vector<int>& head) {
        std::vector<int> verts = head;
        verts.push_back(k - 1);
        subset_cache[k].emplace_back(s, subset_pair_positions(n, verts));
      });
    }
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.k == n) {
      if (!visit(f.bits)) return;
      continue;
    }
    int k = f.k + 1;
    // descending ext so the stack pops extensions in ascending mask order
    for (std::int64_t ext = (std::int64_t{1} << (k - 1)) - 1; ext >= 0; --ext) {
      std::uint64_t bits = f.bits;
      for (int i = 0; i < k - 1; ++i)
        bits = set_bit(bits, pair_pos(n, i, k - 1), (ext >> i) & 1);
      bool bad = false;
      for (const auto& [s, pos] : subset_cache[k]) {
        std::uint32_t m = extract_mask(bits, pos);
        const std::vector<std::uint64_t>& bs = labeled_[s];
        if ((bs[m >> 6] >> (m & 63)) & 1u) {
          bad = true;
          break;
        }
      }
      if (!bad) stack.push_back({bits, k});
    }
  }
}

bool ForbiddenSet::free_tournament_exists(int n) const {
  bool found = false;
  for_each_free_labeled(n, [&](std::uint64_t) {
    found = true;
    return false;
  });
  return found;
}

std::optional<KFResult> ForbiddenSet::kF(int cap) const {
  if (!nF()) return std::nullopt;
  auto it = kf_cache_.find(cap);
  if (it != kf_cache_.end()) return it->second;
  KFResult res;
  int k = 1;
  while (k + 1 <= cap && free_tournament_exists(k + 1)) ++k;
  // value is exact when the search stopped below the cap, otherwise a
  // verified lower bound
  res.value = k;
  res.exceeds_cap = (k == cap);
  kf_cache_[cap] = res;
  return res;
}

const std::vector<Tournament>& ForbiddenSet::Ff() const {
  if (!ff_cache_) {
    std::vector<Tournament> out;
    if (!members_.empty()) {
      for (int n = 2; n <= mF(); ++n)
        for (const Tournament& t : enumerate_up_to_iso(n, kMaxEnumCap))
          if (is_free(t)) out.push_back(t);
    }
    ff_cache_ = std::move(out);
  }
  return *ff_cache_;
}

bool ForbiddenSet::flip_closed() const {
  for (const Tournament& t : members_) {
    bool hit = false;
    Tournament ft = flip(t);
    for (const Tournament& m : members_)
      if (is_isomorphic(ft, m)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool ForbiddenSet::switch_closed() const {
  for (const Tournament& t : members_)
    for (int a = 0; a < t.n; ++a) {
      bool hit = false;
      Tournament st = switch_at(t, a);
      for (const Tournament& m : members_)
        if (is_isomorphic(st, m)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

namespace {

void check_relation_n(const ForbiddenSet& f, int n, int min_n) {
  if (n < min_n) throw DomainError("relation index n out of range");
  if (!f.empty() && n > f.mF()) throw DomainError("relation index n exceeds m_F");
  if (pair_count(n) > kMaxArity)
    throw DomainError("relation arity exceeds the cap of " + std::to_string(kMaxArity));
}

// per-mask freeness check used by the flat scans
bool mask_is_free(const ForbiddenSet& f, std::uint64_t bits,
                  const std::vector<std::pair<int, std::vector<int>>>& subset_positions) {
  for (const auto& [s, pos] : subset_positions) {
    std::uint32_t m = 0;
    for (std::size_t t = 0; t < pos.size(); ++t)
      if (get_bit(bits, pos[t])) m |= std::uint32_t{1} << t;
    const std::vector<std::uint64_t>& bs = f.labeled_members(s);
    if ((bs[m >> 6] >> (m & 63)) & 1u) return false;
  }
  return true;
}

std::vector<std::pair<int, std::vector<int>>> all_subset_positions(const ForbiddenSet& f, int n) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int s : f.member_sizes()) {
    if (s > n) break;
    for_each_subset(n, s, [&](const std::vector<int>& verts) {
      out.emplace_back(s, subset_pair_positions(n, verts));
    });
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> scan_free_masks_serial(const ForbiddenSet& f, int n) {
  check_relation_n(f, n, 2);
  auto subsets = all_subset_positions(f, n);
  std::vector<std::uint32_t> out;
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t m = 0; m < total; ++m)
    if (mask_is_free(f, m, subsets)) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

std::vector<std::uint32_t> scan_free_masks_parallel(const ForbiddenSet& f, int n) {
  check_relation_n(f, n, 2);
  auto subsets = all_subset_positions(f, n);
  std::int64_t total = std::int64_t{1} << pair_count(n);
  std::vector<std::uint8_t> flags(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t m = 0; m < total; ++m)
    flags[m] = mask_is_free(f, static_cast<std::uint64_t>(m), subsets);
  std::vector<std::uint32_t> out;
  for (std::int64_t m = 0; m < total; ++m)
    if (flags[m]) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

BoolRelation build_Pn(const ForbiddenSet& f, int n) {
  check_relation_n(f, n, 2);
  BoolRelation r(pair_count(n));
  if (pair_count(n) <= kDenseArityCap) {
    for (std::uint32_t m : scan_free_masks_parallel(f, n)) r.insert(m);
  } else {
    // sparse regime: walk free tournaments instead of all masks
    std::uint64_t guard = std::uint64_t{1} << 24;
    f.for_each_free_labeled(n, [&](std::uint64_t bits) {
      r.insert(static_cast<std::uint32_t>(bits));
      if (r.size() > guard)
        throw ResourceLimitError("P_n too large to materialize sparsely at n = " +
                                 std::to_string(n));
      return true;
    });
  }
  return r;
}

BoolRelation build_Qn(const ForbiddenSet& f, int n) {
  if (n < 3) throw DomainError("relation index n out of range");
  if (!f.empty() && n > f.mF()) throw DomainError("relation index n exceeds m_F");
  if (triple_count(n) > kMaxArity)
    throw DomainError("Q_n arity exceeds the cap of " + std::to_string(kMaxArity));
  BoolRelation r(triple_count(n));
  f.for_each_free_labeled(n, [&](std::uint64_t bits) {
    r.insert(static_cast<std::uint32_t>(triple_encode(Tournament{n, bits}).bits));
    return true;
  });
  return r;
}

}  // namespace orient
