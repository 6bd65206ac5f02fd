#include "orient/gf2.hpp"

#include <algorithm>
#include <bit>

#include "orient/errors.hpp"

namespace orient {

GF2System::GF2System(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw DomainError("negative variable count");
  words_ = (num_vars + 1 + 63) / 64;  // +1 for the rhs column
}

bool GF2System::rhs_of(const std::vector<std::uint64_t>& row) const {
  return (row[num_vars_ >> 6] >> (num_vars_ & 63)) & 1u;
}

void GF2System::add_equation(const std::vector<int>& vars, int rhs) {
  std::vector<std::uint64_t> row(words_, 0);
  for (int v : vars) {
    if (v < 0 || v >= num_vars_) throw DomainError("equation variable out of range");
    row[v >> 6] ^= std::uint64_t{1} << (v & 63);
  }
  if (rhs) row[num_vars_ >> 6] ^= std::uint64_t{1} << (num_vars_ & 63);
  reduce_and_insert(std::move(row));
}

void GF2System::add_equation_mask(const std::vector<std::uint64_t>& coeffs, int rhs) {
  std::vector<std::uint64_t> row(words_, 0);
  for (std::size_t w = 0; w < coeffs.size() && w < static_cast<std::size_t>(words_); ++w)
    row[w] = coeffs[w];
  // the rhs column must stay clean
  row[num_vars_ >> 6] &= ~(std::uint64_t{1} << (num_vars_ & 63));
  if (rhs) row[num_vars_ >> 6] |= std::uint64_t{1} << (num_vars_ & 63);
  reduce_and_insert(std::move(row));
}

void GF2System::reduce_and_insert(std::vector<std::uint64_t> row) {
  auto leading = [&](const std::vector<std::uint64_t>& r) -> int {
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      if (w == (num_vars_ >> 6)) word &= ~(std::uint64_t{1} << (num_vars_ & 63));
      if (word) return w * 64 + std::countr_zero(word);
    }
    return -1;
  };
  // eliminate with existing pivot rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if ((row[p >> 6] >> (p & 63)) & 1u)
      for (int w = 0; w < words_; ++w) row[w] ^= rows_[i][w];
  }
  int lead = leading(row);
  if (lead < 0) {
    if (rhs_of(row)) infeasible_ = true;  // 0 = 1
    return;
  }
  // clear the new pivot from the earlier rows to stay in RREF
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if ((rows_[i][lead >> 6] >> (lead & 63)) & 1u)
      for (int w = 0; w < words_; ++w) rows_[i][w] ^= row[w];
  // keep rows ordered by pivot column
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < lead) ++at;
  rows_.insert(rows_.begin() + at, std::move(row));
  pivots_.insert(pivots_.begin() + at, lead);
}

bool GF2System::feasible() const { return !infeasible_; }

int GF2System::rank() const {
  return infeasible_ ? num_vars_ + 1 : static_cast<int>(rows_.size());
}

std::optional<int> GF2System::count_exponent() const {
  if (infeasible_) return std::nullopt;
  return num_vars_ - static_cast<int>(rows_.size());
}

std::optional<std::vector<std::uint8_t>> GF2System::solve() const {
  if (infeasible_) return std::nullopt;
  std::vector<std::uint8_t> x(num_vars_, 0);
  // RREF with free vars at 0: each pivot var equals its row's rhs
  for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = rhs_of(rows_[i]);
  return x;
}

std::vector<std::vector<std::uint8_t>> GF2System::enumerate_solutions(std::uint64_t limit) const {
  std::vector<std::vector<std::uint8_t>> out;
  if (infeasible_ || limit == 0) return out;
  std::vector<std::uint8_t> is_pivot(num_vars_, 0);
  for (int p : pivots_) is_pivot[p] = 1;
  std::vector<int> free_vars;
  for (int v = 0; v < num_vars_; ++v)
    if (!is_pivot[v]) free_vars.push_back(v);

  std::vector<std::uint8_t> x = *solve();
  // flipping free var f also flips every pivot var whose row contains f
  std::vector<std::vector<int>> delta(free_vars.size());
  for (std::size_t fi = 0; fi < free_vars.size(); ++fi) {
    int f = free_vars[fi];
    delta[fi].push_back(f);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if ((rows_[i][f >> 6] >> (f & 63)) & 1u) delta[fi].push_back(pivots_[i]);
  }
  out.push_back(x);
  std::uint64_t total = free_vars.size() < 64 ? (std::uint64_t{1} << free_vars.size())
                                              : ~std::uint64_t{0};
  for (std::uint64_t g = 1; g < total && out.size() < limit; ++g) {
    int fi = std::countr_zero(g);
    for (int v : delta[fi]) x[v] ^= 1;
    out.push_back(x);
  }
  return out;
}

}  // namespace orient
