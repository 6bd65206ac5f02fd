#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "orient/enumeration.hpp"
#include "orient/errors.hpp"
#include "orient/tournament.hpp"

using namespace orient;

namespace {

Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Tournament t{n, 0};
  int placed = 0;
  for (auto [a, b] : arcs) {
    int i = std::min(a, b), j = std::max(a, b);
    t.bits = set_bit(t.bits, pair_pos(n, i, j), a < b);
    ++placed;
  }
  REQUIRE(placed == pair_count(n));
  return t;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("pair indexing matches the tuple layout") {
  // (x_01, x_02, x_12) for n = 3
  CHECK(pair_pos(3, 0, 1) == 0);
  CHECK(pair_pos(3, 0, 2) == 1);
  CHECK(pair_pos(3, 1, 2) == 2);
  // bijective for n = 8
  std::vector<int> seen(pair_count(8), 0);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      int p = pair_pos(8, i, j);
      REQUIRE(p >= 0);
      REQUIRE(p < pair_count(8));
      ++seen[p];
    }
  for (int c : seen) CHECK(c == 1);
  std::vector<int> seen3(triple_count(8), 0);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) ++seen3[triple_pos(8, i, j, k)];
  for (int c : seen3) CHECK(c == 1);
}

TEST_CASE("encode and decode") {
  // directed triangle 0 -> 1 -> 2 -> 0 carries the tuple (1,0,1)
  Tournament cyc = from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(encode(cyc) == 0b101);
  CHECK(cyc == directed_triangle());
  // transitive order 0 < 1 < 2 is the all-ones tuple
  Tournament tr = from_arcs(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(encode(tr) == 0b111);
  CHECK(tr == transitive_tournament(3));
  // two vertices, arc 1 -> 0
  CHECK(encode(from_arcs(2, {{1, 0}})) == 0);

  CHECK(decode(3, std::vector<int>{1, 0, 1}) == cyc);
  CHECK_THROWS_AS(decode(3, std::vector<int>{1, 0}), FormatError);
  CHECK_THROWS_AS(decode(3, std::uint64_t{1} << 3), FormatError);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    std::uint64_t bits = rng() & low_mask(pair_count(n));
    CHECK(encode(decode(n, bits)) == bits);
  }
}

TEST_CASE("triple codes") {
  CHECK(triple_encode(transitive_tournament(3)).bits == 1);
  CHECK(triple_encode(directed_triangle()).bits == 0);
  Tournament t4 = transitive_tournament(4);
  CHECK(triple_encode(t4).bits == low_mask(4));  // every triple transitive
  CHECK(triple_encode(Tournament{2, 1}).bits == 0);

  // switching never changes a triple parity: each affected triple flips two
  // pair bits
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Tournament t = decode(n, rng() & low_mask(pair_count(n)));
    int a = static_cast<int>(rng() % n);
    CHECK(triple_encode(switch_at(t, a)) == triple_encode(t));
  }
}

TEST_CASE("canonical form and isomorphism") {
  Tournament cyc1 = decode(3, 0b101), cyc2 = decode(3, 0b010);
  CHECK(is_isomorphic(cyc1, cyc2));  // both cyclic orientations of K_3
  CHECK(!is_isomorphic(transitive_tournament(4), tc4()));
  CHECK(!is_isomorphic(cyc1, transitive_tournament(3)));
  CHECK(is_isomorphic(tc4(), tc4()));
  CHECK(!is_isomorphic(cyc1, transitive_tournament(4)));  // size mismatch

  // the four 4-vertex classes are pairwise non-isomorphic
  std::vector<Tournament> four{transitive_tournament(4), tc4(), c3_minus(), c3_plus()};
  for (std::size_t a = 0; a < four.size(); ++a)
    for (std::size_t b = a + 1; b < four.size(); ++b)
      CHECK(!is_isomorphic(four[a], four[b]));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Tournament t = decode(n, rng() & low_mask(pair_count(n)));
    std::uint64_t canon = canonical_form(t);
    CHECK(canonical_form(decode(n, canon)) == canon);  // idempotent
    CHECK(canonical_form(relabel(t, random_perm(n, rng))) == canon);
  }
}

TEST_CASE("flip and switch") {
  CHECK(is_isomorphic(flip(c3_minus()), c3_plus()));
  CHECK(is_isomorphic(flip(directed_triangle()), directed_triangle()));
  // the switch of T_4 at a vertex with positive in- and out-degree is TC_4
  CHECK(is_isomorphic(switch_at(transitive_tournament(4), 1), tc4()));
  CHECK(is_isomorphic(switch_at(transitive_tournament(4), 2), tc4()));
  CHECK_THROWS_AS(switch_at(transitive_tournament(4), 4), DomainError);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Tournament t = decode(n, rng() & low_mask(pair_count(n)));
    CHECK(flip(flip(t)) == t);
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    CHECK(switch_at(switch_at(t, a), a) == t);
    CHECK(switch_at(switch_at(t, a), b) == switch_at(switch_at(t, b), a));
  }
}

TEST_CASE("restriction and the minority vote") {
  // three TC_4 labelings whose minority vote is the transitive T_4
  Tournament t1 = from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {0, 2}, {3, 0}});
  Tournament t2 = from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 0}, {3, 0}});
  Tournament t3 = from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 0}, {0, 3}});
  CHECK(is_isomorphic(t1, tc4()));
  CHECK(is_isomorphic(t2, tc4()));
  CHECK(is_isomorphic(t3, tc4()));
  Tournament m = minority_tournament(t1, t2, t3);
  CHECK(m == transitive_tournament(4));

  // exhaustively up to four vertices the vote is bitwise XOR
  for (int n : {2, 3, 4}) {
    std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t x = 0; x < total; ++x)
      for (std::uint64_t y = 0; y < total; ++y)
        for (std::uint64_t z = 0; z < total; ++z)
          if (minority_tournament(decode(n, x), decode(n, y), decode(n, z)) !=
              decode(n, x ^ y ^ z))
            REQUIRE(false);
  }

  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Tournament a = decode(n, rng() & low_mask(pair_count(n)));
    Tournament b = decode(n, rng() & low_mask(pair_count(n)));
    Tournament z = decode(n, rng() & low_mask(pair_count(n)));
    CHECK(minority_tournament(a, a, a) == a);
    CHECK(minority_tournament(a, a, b) == b);
    CHECK(minority_tournament(a, b, z) == decode(n, a.bits ^ b.bits ^ z.bits));
    // different sizes restrict to the smallest
    Tournament big = decode(n + 1, rng() & low_mask(pair_count(n + 1)));
    Tournament expect{n, a.bits ^ b.bits ^ restrict_to(big, n).bits};
    CHECK(minority_tournament(a, b, big) == expect);
  }

  CHECK(restrict_to(transitive_tournament(5), 3) == transitive_tournament(3));
  CHECK_THROWS_AS(restrict_to(transitive_tournament(3), 4), DomainError);
}

TEST_CASE("embeddings") {
  CHECK(embeds(transitive_tournament(3), transitive_tournament(3)));
  CHECK(embeds(transitive_tournament(3), transitive_tournament(5)));
  CHECK(!embeds(transitive_tournament(4), directed_triangle()));
  CHECK(embeds(directed_triangle(), tc4()));  // TC_4 is strong
  CHECK(!embeds(directed_triangle(), transitive_tournament(6)));
  // C_3^- avoids both T_4 and C_3^+
  CHECK(!embeds(transitive_tournament(4), c3_minus()));
  CHECK(!embeds(c3_plus(), c3_minus()));
}

TEST_CASE("enumeration counts and determinism") {
  const std::uint64_t expected[] = {1, 1, 2, 4, 12, 56};
  for (int n = 1; n <= 6; ++n) {
    auto classes = enumerate_up_to_iso(n);
    CHECK(classes.size() == expected[n - 1]);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(canonical_form(classes[i]) == classes[i].bits);
      if (i > 0) CHECK(tuple_lex_less(classes[i - 1].bits, classes[i].bits));
    }
    // orbit-counting cross-check: class orbit sizes partition the labeled set
    CHECK(labeled_count_from_classes_serial(classes) == std::uint64_t{1} << pair_count(n));
    CHECK(labeled_count_from_classes_parallel(classes) == std::uint64_t{1} << pair_count(n));
  }
  CHECK(enumerate_labeled(3).size() == 8);
  CHECK(enumerate_tournaments(3, true).size() == 2);
  CHECK_THROWS_AS(enumerate_tournaments(8, true), ResourceLimitError);  // opt-in size
  CHECK_THROWS_AS(enumerate_tournaments(9, true, 8), ResourceLimitError);
}

TEST_CASE("canonical scan kernels agree") {
  std::mt19937 rng(23);
  for (int n : {4, 5, 6}) {
    std::vector<std::uint64_t> masks;
    for (int i = 0; i < 500; ++i) masks.push_back(rng() & low_mask(pair_count(n)));
    CHECK(canonical_batch_serial(n, masks) == canonical_batch_parallel(n, masks));
  }
}

TEST_CASE("opt-in eight-vertex enumeration" * doctest::skip(std::getenv("ORIENT_TEST_N8") ==
                                                            nullptr)) {
  auto classes = enumerate_up_to_iso(8, 8);
  CHECK(classes.size() == 6880);
  CHECK(labeled_count_from_classes_parallel(classes) == std::uint64_t{1} << pair_count(8));
}
