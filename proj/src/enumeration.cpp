#include "orient/enumeration.hpp"

#include <algorithm>

#include "orient/errors.hpp"

namespace orient {

namespace {

void check_cap(int n, int cap) {
  if (cap > kMaxEnumCap) cap = kMaxEnumCap;
  if (n < 1) throw DomainError("vertex count must be positive");
  if (n > cap)
    throw ResourceLimitError("enumeration capped at n = " + std::to_string(cap) +
                             " (requested n = " + std::to_string(n) + ")");
}

}  // namespace

std::vector<Tournament> enumerate_labeled(int n, int cap) {
  check_cap(n, cap);
  std::uint64_t total = std::uint64_t{1} << pair_count(n);
  std::vector<Tournament> out;
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) out.push_back(Tournament{n, m});
  return out;
}

std::vector<std::uint64_t> canonical_batch_serial(int n, const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i)
    out[i] = canonical_form(Tournament{n, masks[i]});
  return out;
}

std::vector<std::uint64_t> canonical_batch_parallel(int n, const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out(masks.size());
  const std::int64_t sz = static_cast<std::int64_t>(masks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t i = 0; i < sz; ++i)
    out[i] = canonical_form(Tournament{n, masks[i]});
  return out;
}

std::vector<Tournament> enumerate_up_to_iso(int n, int cap) {
  check_cap(n, cap);
  std::vector<std::uint64_t> reps{0};  // the 1-vertex tournament
  for (int k = 2; k <= n; ++k) {
    // every class on k vertices extends some canonical rep on k-1 vertices
    std::vector<std::uint64_t> cands;
    cands.reserve(reps.size() << (k - 1));
    for (std::uint64_t r : reps) {
      // new vertex k-1; its arcs occupy pair positions pos(k,i,k-1)
      std::uint64_t base = 0;
      for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k - 1; ++j)
          base = set_bit(base, pair_pos(k, i, j), get_bit(r, pair_pos(k - 1, i, j)));
      for (std::uint64_t ext = 0; ext < (std::uint64_t{1} << (k - 1)); ++ext) {
        std::uint64_t m = base;
        for (int i = 0; i < k - 1; ++i)
          m = set_bit(m, pair_pos(k, i, k - 1), get_bit(ext, i));
        cands.push_back(m);
      }
    }
    std::vector<std::uint64_t> canon = canonical_batch_parallel(k, cands);
    std::sort(canon.begin(), canon.end(),
              [](std::uint64_t a, std::uint64_t b) { return tuple_lex_less(a, b); });
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    reps = std::move(canon);
  }
  std::vector<Tournament> out;
  out.reserve(reps.size());
  for (std::uint64_t r : reps) out.push_back(Tournament{n, r});
  return out;
}

std::vector<Tournament> enumerate_tournaments(int n, bool up_to_iso, int cap) {
  return up_to_iso ? enumerate_up_to_iso(n, cap) : enumerate_labeled(n, cap);
}

std::uint64_t labeled_count_from_classes_serial(const std::vector<Tournament>& classes) {
  std::uint64_t factorial = 1;
  if (!classes.empty())
    for (int i = 2; i <= classes.front().n; ++i) factorial *= i;
  std::uint64_t total = 0;
  for (const Tournament& t : classes) total += factorial / automorphism_count(t);
  return total;
}

std::uint64_t labeled_count_from_classes_parallel(const std::vector<Tournament>& classes) {
  std::uint64_t factorial = 1;
  if (!classes.empty())
    for (int i = 2; i <= classes.front().n; ++i) factorial *= i;
  std::uint64_t total = 0;
  const std::int64_t sz = static_cast<std::int64_t>(classes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
#endif
  for (std::int64_t i = 0; i < sz; ++i) total += factorial / automorphism_count(classes[i]);
  return total;
}

}  // namespace orient
