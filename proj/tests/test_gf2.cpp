#include <doctest.h>

#include <random>

#include "orient/gf2.hpp"

using namespace orient;

namespace {

bool satisfies_all(const std::vector<std::vector<int>>& rows, const std::vector<int>& rhs,
                   const std::vector<std::uint8_t>& x) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int acc = 0;
    for (int v : rows[r]) acc ^= x[v];
    if (acc != rhs[r]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("solving basics") {
  GF2System s(2);
  s.add_equation({0, 1}, 1);
  auto x = s.solve();
  REQUIRE(x.has_value());
  CHECK(((*x)[0] ^ (*x)[1]) == 1);
  CHECK(s.count_exponent() == 1);

  GF2System contradictory(1);
  contradictory.add_equation({0}, 0);
  contradictory.add_equation({0}, 1);
  CHECK(!contradictory.feasible());
  CHECK(!contradictory.solve().has_value());
  CHECK(!contradictory.count_exponent().has_value());
  CHECK(contradictory.enumerate_solutions(10).empty());

  GF2System empty(3);
  CHECK(empty.count_exponent() == 3);
  CHECK(empty.enumerate_solutions(100).size() == 8);
}

TEST_CASE("chained equalities reproduce the cyclic pair") {
  GF2System s(3);
  s.add_equation({0, 1}, 1);
  s.add_equation({1, 2}, 1);
  CHECK(s.count_exponent() == 1);
  auto sols = s.enumerate_solutions(10);
  REQUIRE(sols.size() == 2);
  std::vector<std::vector<std::uint8_t>> expect{{1, 0, 1}, {0, 1, 0}};
  CHECK((sols[0] == expect[0] || sols[0] == expect[1]));
  CHECK((sols[1] == expect[0] || sols[1] == expect[1]));
  CHECK(sols[0] != sols[1]);
}

TEST_CASE("solve, count and enumeration agree on random systems") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    int nvars = 1 + static_cast<int>(rng() % 8);
    int nrows = static_cast<int>(rng() % 10);
    GF2System s(nvars);
    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    for (int r = 0; r < nrows; ++r) {
      std::vector<int> vars;
      for (int v = 0; v < nvars; ++v)
        if (rng() & 1) vars.push_back(v);
      int b = static_cast<int>(rng() & 1);
      rows.push_back(vars);
      rhs.push_back(b);
      s.add_equation(vars, b);
    }
    // reference: count satisfying assignments exhaustively
    std::uint64_t expect = 0;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << nvars); ++m) {
      std::vector<std::uint8_t> x(nvars);
      for (int v = 0; v < nvars; ++v) x[v] = (m >> v) & 1;
      expect += satisfies_all(rows, rhs, x);
    }
    if (expect == 0) {
      CHECK(!s.feasible());
    } else {
      REQUIRE(s.count_exponent().has_value());
      CHECK((std::uint64_t{1} << *s.count_exponent()) == expect);
      auto sols = s.enumerate_solutions(std::uint64_t{1} << 20);
      CHECK(sols.size() == expect);
      for (const auto& x : sols) CHECK(satisfies_all(rows, rhs, x));
      CHECK(satisfies_all(rows, rhs, *s.solve()));
    }
    // adding an implied row never changes the solution set
    if (!rows.empty() && s.feasible()) {
      int old_rank = s.rank();
      std::vector<int> implied = rows[0];
      int implied_rhs = rhs[0];
      if (rows.size() > 1) {
        for (int v : rows[1]) implied.push_back(v);
        implied_rhs ^= rhs[1];
      }
      s.add_equation(implied, implied_rhs);
      CHECK(s.rank() == old_rank);
      CHECK(s.feasible());
    }
  }
}

TEST_CASE("enumeration truncates at the limit") {
  GF2System s(6);
  auto sols = s.enumerate_solutions(10);
  CHECK(sols.size() == 10);
  // Gray-code order: consecutive solutions differ in one free variable
  for (std::size_t i = 1; i < sols.size(); ++i) {
    int diff = 0;
    for (int v = 0; v < 6; ++v) diff += sols[i][v] != sols[i - 1][v];
    CHECK(diff == 1);
  }
}
