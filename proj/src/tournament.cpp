#include "orient/tournament.hpp"

#include <algorithm>
#include <numeric>

#include "orient/errors.hpp"

namespace orient {

bool Tournament::arc(int i, int j) const {
  if (i < j) return get_bit(bits, pair_pos(n, i, j));
  return !get_bit(bits, pair_pos(n, j, i));
}

std::uint64_t encode(const Tournament& t) { return t.bits; }

Tournament decode(int n, std::uint64_t bits) {
  if (n < 1 || n > kMaxTournamentVertices)
    throw DomainError("tournament vertex count out of range: " + std::to_string(n));
  if (bits & ~low_mask(pair_count(n)))
    throw FormatError("bit tuple longer than C(n,2)");
  return Tournament{n, bits};
}

Tournament decode(int n, const std::vector<int>& bits) {
  if (n < 1 || n > kMaxTournamentVertices)
    throw DomainError("tournament vertex count out of range: " + std::to_string(n));
  if (static_cast<int>(bits.size()) != pair_count(n))
    throw FormatError("bit tuple has length " + std::to_string(bits.size()) +
                      ", expected C(n,2) = " + std::to_string(pair_count(n)));
  std::uint64_t b = 0;
  for (int p = 0; p < pair_count(n); ++p)
    if (bits[p]) b |= std::uint64_t{1} << p;
  return Tournament{n, b};
}

TripleCode triple_encode(const Tournament& t) {
  if (t.n < 3) return TripleCode{t.n, 0};
  std::uint64_t c = 0;
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      for (int k = j + 1; k < t.n; ++k) {
        bool parity = get_bit(t.bits, pair_pos(t.n, i, j)) ^
                      get_bit(t.bits, pair_pos(t.n, i, k)) ^
                      get_bit(t.bits, pair_pos(t.n, j, k));
        c = set_bit(c, triple_pos(t.n, i, j, k), parity);
      }
  return TripleCode{t.n, c};
}

Tournament transitive_tournament(int n) { return decode(n, low_mask(pair_count(n))); }

Tournament directed_triangle() { return Tournament{3, 0b101}; }

Tournament tc4() { return Tournament{4, 0b111011}; }
Tournament c3_minus() { return Tournament{4, 0b101111}; }
Tournament c3_plus() { return Tournament{4, 0b101000}; }

bool is_transitive(const Tournament& t) {
  // a tournament is transitive iff its out-degrees are pairwise distinct
  std::uint64_t seen = 0;
  for (int v = 0; v < t.n; ++v) {
    int deg = 0;
    for (int u = 0; u < t.n; ++u)
      if (u != v && t.arc(v, u)) ++deg;
    if (get_bit(seen, deg)) return false;
    seen = set_bit(seen, deg, true);
  }
  return true;
}

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  Tournament r{t.n, 0};
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j) {
      bool fwd = get_bit(t.bits, pair_pos(t.n, i, j));
      int a = perm[i], b = perm[j];
      if (a < b)
        r.bits = set_bit(r.bits, pair_pos(t.n, a, b), fwd);
      else
        r.bits = set_bit(r.bits, pair_pos(t.n, b, a), !fwd);
    }
  return r;
}

std::uint64_t canonical_form(const Tournament& t) {
  if (t.n > kMaxCanonicalVertices)
    throw DomainError("canonical form capped at " + std::to_string(kMaxCanonicalVertices) +
                      " vertices");
  const int n = t.n;
  std::vector<int> inv(n);  // inv[target] = source vertex
  std::iota(inv.begin(), inv.end(), 0);
  std::uint64_t best = t.bits;
  // walk candidates in target-tuple order and abort on the first position
  // that already loses against the best; permuting the inverse map gives
  // every relabeling exactly once
  do {
    std::uint64_t cand = 0;
    bool better = false, worse = false;
    int pos = 0;
    for (int a = 0; a < n && !worse; ++a)
      for (int b = a + 1; b < n; ++b, ++pos) {
        bool bit = t.arc(inv[a], inv[b]);
        if (bit) cand |= std::uint64_t{1} << pos;
        if (!better) {
          bool best_bit = get_bit(best, pos);
          if (bit != best_bit) {
            if (bit) {
              worse = true;
              break;
            }
            better = true;
          }
        }
      }
    if (!worse && better) best = cand;
  } while (std::next_permutation(inv.begin(), inv.end()));
  return best;
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.n != b.n) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t automorphism_count(const Tournament& t) {
  if (t.n > kMaxCanonicalVertices)
    throw DomainError("automorphism count capped at " + std::to_string(kMaxCanonicalVertices) +
                      " vertices");
  const int n = t.n;
  std::vector<int> inv(n);
  std::iota(inv.begin(), inv.end(), 0);
  std::uint64_t count = 0;
  do {
    bool match = true;
    for (int a = 0; a < n && match; ++a)
      for (int b = a + 1; b < n; ++b)
        if (t.arc(inv[a], inv[b]) != get_bit(t.bits, pair_pos(n, a, b))) {
          match = false;
          break;
        }
    if (match) ++count;
  } while (std::next_permutation(inv.begin(), inv.end()));
  return count;
}

Tournament flip(const Tournament& t) {
  return Tournament{t.n, ~t.bits & low_mask(pair_count(t.n))};
}

Tournament switch_at(const Tournament& t, int a) {
  if (a < 0 || a >= t.n) throw DomainError("switch vertex out of range");
  Tournament r = t;
  for (int v = 0; v < t.n; ++v) {
    if (v == a) continue;
    int p = v < a ? pair_pos(t.n, v, a) : pair_pos(t.n, a, v);
    r.bits ^= std::uint64_t{1} << p;
  }
  return r;
}

Tournament restrict_to(const Tournament& t, int k) {
  if (k < 1 || k > t.n) throw DomainError("restriction size out of range");
  Tournament r{k, 0};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      r.bits = set_bit(r.bits, pair_pos(k, i, j), get_bit(t.bits, pair_pos(t.n, i, j)));
  return r;
}

Tournament minority_tournament(const Tournament& a, const Tournament& b, const Tournament& c) {
  int n = std::min({a.n, b.n, c.n});
  Tournament ra = restrict_to(a, n), rb = restrict_to(b, n), rc = restrict_to(c, n);
  return Tournament{n, ra.bits ^ rb.bits ^ rc.bits};
}

namespace {

bool embeds_rec(const Tournament& s, const Tournament& t, std::vector<int>& image,
                std::uint64_t used) {
  int d = static_cast<int>(image.size());
  if (d == s.n) return true;
  for (int v = 0; v < t.n; ++v) {
    if (get_bit(used, v)) continue;
    bool ok = true;
    for (int u = 0; u < d && ok; ++u)
      if (s.arc(u, d) != t.arc(image[u], v)) ok = false;
    if (!ok) continue;
    image.push_back(v);
    if (embeds_rec(s, t, image, used | (std::uint64_t{1} << v))) return true;
    image.pop_back();
  }
  return false;
}

}  // namespace

bool embeds(const Tournament& s, const Tournament& t) {
  if (s.n > t.n) return false;
  std::vector<int> image;
  image.reserve(s.n);
  return embeds_rec(s, t, image, 0);
}

}  // namespace orient
