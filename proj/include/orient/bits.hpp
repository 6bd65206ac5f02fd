#pragma once

#include <cstdint>
#include <bit>

namespace orient {

// Pair- and triple-subset indexing for tournaments on vertices 0..n-1.
// Pairs are ordered lexicographically: (0,1),(0,2),...,(0,n-1),(1,2),...
// so the tuple for n=3 reads (x_01, x_02, x_12).

constexpr int pair_count(int n) { return n * (n - 1) / 2; }
constexpr int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

// position of pair {i,j}, 0 <= i < j < n
constexpr int pair_pos(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// position of triple {i,j,k}, 0 <= i < j < k < n, lexicographic by (i,j,k)
constexpr int triple_pos(int n, int i, int j, int k) {
  // triples starting below i, then pairs (j,k) within the remaining suffix
  int before_i = triple_count(n) - triple_count(n - i);
  int jj = j - i - 1, kk = k - i - 1, m = n - i - 1;
  return before_i + pair_pos(m, jj, kk);
}

constexpr bool get_bit(std::uint64_t bits, int pos) { return (bits >> pos) & 1u; }
constexpr std::uint64_t set_bit(std::uint64_t bits, int pos, bool v) {
  return v ? (bits | (std::uint64_t{1} << pos)) : (bits & ~(std::uint64_t{1} << pos));
}
constexpr std::uint64_t low_mask(int k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Lexicographic order on bit tuples where position 0 is the first coordinate.
// Returns true iff tuple a precedes tuple b.
inline bool tuple_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  int p = std::countr_zero(d);
  return !get_bit(a, p);
}

}  // namespace orient
