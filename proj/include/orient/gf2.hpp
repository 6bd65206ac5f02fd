#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace orient {

// Linear equations over the two-element field. Rows are bit-packed; the
// system keeps itself in reduced row-echelon form with deterministic
// lowest-index pivots, so assignments are reproducible across runs.
class GF2System {
 public:
  explicit GF2System(int num_vars);

  int num_vars() const { return num_vars_; }
  void add_equation(const std::vector<int>& vars, int rhs);
  void add_equation_mask(const std::vector<std::uint64_t>& coeffs, int rhs);

  bool feasible() const;
  int rank() const;
  // log2 of the solution count: num_vars - rank when feasible
  std::optional<int> count_exponent() const;
  // one satisfying assignment, free variables set to 0
  std::optional<std::vector<std::uint8_t>> solve() const;
  // solutions in Gray-code order over the free variables, truncated at limit
  std::vector<std::vector<std::uint8_t>> enumerate_solutions(std::uint64_t limit) const;

 private:
  int num_vars_;
  int words_;
  std::vector<std::vector<std::uint64_t>> rows_;  // augmented: rhs bit after vars
  std::vector<int> pivots_;                       // pivot column per row
  bool infeasible_ = false;

  bool rhs_of(const std::vector<std::uint64_t>& row) const;
  void reduce_and_insert(std::vector<std::uint64_t> row);
};

}  // namespace orient
