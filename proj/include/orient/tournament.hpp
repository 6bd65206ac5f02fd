#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orient/bits.hpp"

namespace orient {

// A labeled tournament on vertices 0..n-1, stored as its pair-indexed bit
// tuple: bit pair_pos(n,i,j) is 1 iff the arc goes i -> j (for i < j).
// This is the coding that puts labeled tournaments in bijection with
// {0,1}^C(n,2).
struct Tournament {
  int n = 1;
  std::uint64_t bits = 0;

  bool arc(int i, int j) const;  // true iff arc i -> j, any i != j
  friend bool operator==(const Tournament&, const Tournament&) = default;
};

// Largest vertex count a Tournament value can hold (bit tuple fits a word).
inline constexpr int kMaxTournamentVertices = 11;
// Cap for canonical forms / isomorphism (exhaustive relabeling).
inline constexpr int kMaxCanonicalVertices = 8;

// Triangle parities: bit triple_pos(n,i,j,k) = x_ij ^ x_ik ^ x_jk.
struct TripleCode {
  int n = 1;
  std::uint64_t bits = 0;
  friend bool operator==(const TripleCode&, const TripleCode&) = default;
};

std::uint64_t encode(const Tournament& t);
Tournament decode(int n, std::uint64_t bits);
// Bit-tuple given as 0/1 vector, length-checked (FormatError on mismatch).
Tournament decode(int n, const std::vector<int>& bits);

TripleCode triple_encode(const Tournament& t);

// Transitive tournament given by the linear order 0 < 1 < ... < n-1
// (every arc low -> high; the all-ones tuple).
Tournament transitive_tournament(int n);
// The directed triangle 0 -> 1 -> 2 -> 0, tuple (1,0,1).
Tournament directed_triangle();
// The remaining 4-vertex classes: the strong tournament TC4, a dominating
// source over a directed triangle (C3-), and its flip (C3+).
Tournament tc4();
Tournament c3_minus();
Tournament c3_plus();
bool is_transitive(const Tournament& t);

// Relabel by perm: vertex v of t becomes vertex perm[v].
Tournament relabel(const Tournament& t, const std::vector<int>& perm);

// Lexicographic minimum of encode over all relabelings (n <= 8).
std::uint64_t canonical_form(const Tournament& t);
bool is_isomorphic(const Tournament& a, const Tournament& b);
// Number of relabelings fixing t, i.e. |Aut(t)|.
std::uint64_t automorphism_count(const Tournament& t);

// Reverse every arc.
Tournament flip(const Tournament& t);
// Reverse exactly the arcs incident to vertex a.
Tournament switch_at(const Tournament& t, int a);

// Induced sub-tournament on vertices 0..k-1.
Tournament restrict_to(const Tournament& t, int k);
// Coordinatewise minority vote on arcs after restricting all three inputs
// to the smallest vertex count; equals bitwise XOR of the encodings.
Tournament minority_tournament(const Tournament& a, const Tournament& b, const Tournament& c);

// True iff some injective vertex map carries s onto an induced
// sub-tournament of t.
bool embeds(const Tournament& s, const Tournament& t);

struct TournamentHash {
  std::size_t operator()(const Tournament& t) const {
    return std::hash<std::uint64_t>{}(t.bits * 1315423911u + static_cast<unsigned>(t.n));
  }
};

}  // namespace orient
