#pragma once

#include <cstdint>
#include <vector>

#include "orient/tournament.hpp"

namespace orient {

inline constexpr int kDefaultEnumCap = 7;
inline constexpr int kMaxEnumCap = 8;

// All labeled tournaments on n vertices (2^C(n,2) of them), in mask order.
std::vector<Tournament> enumerate_labeled(int n, int cap = kDefaultEnumCap);

// One representative per isomorphism class, each in canonical form,
// sorted by canonical bit tuple. Orderly generation by one-vertex
// extension with canonical-form deduplication.
std::vector<Tournament> enumerate_up_to_iso(int n, int cap = kDefaultEnumCap);

std::vector<Tournament> enumerate_tournaments(int n, bool up_to_iso, int cap = kDefaultEnumCap);

// Kernel: canonical form of each mask, interpreted on n vertices.
// The serial variant is the reference implementation for the tests.
std::vector<std::uint64_t> canonical_batch_serial(int n, const std::vector<std::uint64_t>& masks);
std::vector<std::uint64_t> canonical_batch_parallel(int n, const std::vector<std::uint64_t>& masks);

// Sum over classes of n!/|Aut|; equals 2^C(n,2) when the class list is
// complete (orbit-counting cross-check). Serial reference + parallel kernel.
std::uint64_t labeled_count_from_classes_serial(const std::vector<Tournament>& classes);
std::uint64_t labeled_count_from_classes_parallel(const std::vector<Tournament>& classes);

}  // namespace orient
