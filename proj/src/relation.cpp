#include "orient/relation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "orient/errors.hpp"

namespace orient {

BoolRelation::BoolRelation(int arity) : arity_(arity), dense_(arity <= kDenseArityCap) {
  if (arity < 1 || arity > kMaxArity)
    throw DomainError("relation arity out of range: " + std::to_string(arity));
  if (dense_) words_.assign((std::size_t{1} << arity) / 64 + 1, 0);
}

bool BoolRelation::contains(std::uint32_t tuple) const {
  if (dense_) return (words_[tuple >> 6] >> (tuple & 63)) & 1u;
  normalize_sparse();
  return std::binary_search(sparse_.begin(), sparse_.end(), tuple);
}

void BoolRelation::insert(std::uint32_t tuple) {
  if (dense_) {
    std::uint64_t& w = words_[tuple >> 6];
    std::uint64_t m = std::uint64_t{1} << (tuple & 63);
    if (!(w & m)) {
      w |= m;
      ++size_;
    }
  } else {
    sparse_.push_back(tuple);
    sparse_sorted_ = false;
    ++size_;
  }
}

void BoolRelation::normalize_sparse() const {
  if (dense_ || sparse_sorted_) return;
  auto& v = const_cast<std::vector<std::uint32_t>&>(sparse_);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  size_ = v.size();
  const_cast<bool&>(sparse_sorted_) = true;
}

std::vector<std::uint32_t> BoolRelation::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(size_));
  if (dense_) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int b = std::countr_zero(word);
        out.push_back(static_cast<std::uint32_t>(w * 64 + b));
        word &= word - 1;
      }
    }
  } else {
    normalize_sparse();
    out = sparse_;
  }
  return out;
}

BoolRelation BoolRelation::full_relation(int arity) {
  BoolRelation r(arity);
  if (arity > kDenseArityCap)
    throw ResourceLimitError("full relation too large to materialize at arity " +
                             std::to_string(arity));
  for (std::uint32_t t = 0; t < (std::uint32_t{1} << arity); ++t) r.insert(t);
  return r;
}

bool operator==(const BoolRelation& a, const BoolRelation& b) {
  if (a.arity_ != b.arity_) return false;
  return a.members() == b.members();
}

namespace {

// echelon reduction: repeatedly clear the leading bit while some basis row
// matches it; basis rows keep pairwise distinct leading bits
std::uint32_t echelon_reduce(std::uint32_t v, const std::vector<std::uint32_t>& basis) {
  bool progress = true;
  while (v && progress) {
    progress = false;
    for (std::uint32_t b : basis) {
      std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(b));
      if (v & top) {
        v ^= b;
        progress = true;
      }
    }
  }
  return v;
}

}  // namespace

void AffineHullAccumulator::add(std::uint32_t member) {
  if (count_ == 0) base_ = member;
  ++count_;
  std::uint32_t v = echelon_reduce(member ^ base_, basis_);
  if (v) {
    basis_.push_back(v);
    gen_member_.push_back(member);
  }
}

bool AffineHullAccumulator::in_hull(std::uint32_t tuple) const {
  if (count_ == 0) return false;
  return echelon_reduce(tuple ^ base_, basis_) == 0;
}

AffineRep AffineHullAccumulator::hull_equations() const {
  // Row-reduce the basis, then read the nullspace off the free columns.
  std::vector<std::uint32_t> rows = basis_;
  std::vector<int> pivot_of_row;
  std::uint32_t pivot_cols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int p = 31 - std::countl_zero(rows[r]);
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2)
      if (r2 != r && ((rows[r2] >> p) & 1u)) rows[r2] ^= rows[r];
    pivot_of_row.push_back(p);
    pivot_cols |= std::uint32_t{1} << p;
  }
  AffineRep rep{arity_, {}};
  for (int c = 0; c < arity_; ++c) {
    if ((pivot_cols >> c) & 1u) continue;
    std::uint32_t h = std::uint32_t{1} << c;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if ((rows[r] >> c) & 1u) h |= std::uint32_t{1} << pivot_of_row[r];
    rep.equations.push_back({h, std::popcount(h & base_) & 1});
  }
  return rep;
}

std::optional<std::uint32_t> AffineHullAccumulator::hull_gap(
    const std::function<bool(std::uint32_t)>& member) const {
  if (count_ == 0) return std::nullopt;
  std::uint64_t total = std::uint64_t{1} << basis_.size();
  std::uint32_t cur = base_;
  for (std::uint64_t g = 0; g < total; ++g) {
    if (!member(cur)) return cur;
    if (g + 1 < total) cur ^= basis_[std::countr_zero(g + 1)];
  }
  return std::nullopt;
}

std::optional<MinorityWitnessTriple> AffineHullAccumulator::witness(
    const std::function<bool(std::uint32_t)>& member) const {
  if (is_affine()) return std::nullopt;
  std::uint32_t z = *hull_gap(member);

  // solve z ^ base = XOR of a subset of the raw generators g_k = m_k ^ base
  std::array<std::uint32_t, 32> piv{}, prov{};
  auto reduce_tracked = [&](std::uint32_t v, std::uint32_t vp) {
    while (v) {
      int k = 31 - std::countl_zero(v);
      if (!piv[k]) break;
      v ^= piv[k];
      vp ^= prov[k];
    }
    return std::pair{v, vp};
  };
  for (std::size_t k = 0; k < gen_member_.size(); ++k) {
    auto [v, vp] = reduce_tracked(gen_member_[k] ^ base_, std::uint32_t{1} << k);
    while (v) {
      int top = 31 - std::countl_zero(v);
      if (!piv[top]) {
        piv[top] = v;
        prov[top] = vp;
        break;
      }
      v ^= piv[top];
      vp ^= prov[top];
    }
  }
  auto [rem, sel] = reduce_tracked(z ^ base_, 0);
  while (rem) {
    int top = 31 - std::countl_zero(rem);
    if (!piv[top]) throw std::logic_error("hull gap not spanned by the generators");
    rem ^= piv[top];
    sel ^= prov[top];
  }

  std::vector<std::uint32_t> chain;
  for (std::size_t k = 0; k < gen_member_.size(); ++k)
    if ((sel >> k) & 1u) chain.push_back(gen_member_[k]);
  if (chain.size() % 2 == 0) chain.push_back(base_);
  // XOR(chain) = z, a non-member, so reducing three at a time must hit a
  // violating triple before the chain collapses to a single member
  while (true) {
    std::uint32_t img = chain[0] ^ chain[1] ^ chain[2];
    if (!member(img)) return MinorityWitnessTriple{chain[0], chain[1], chain[2], img};
    if (chain.size() == 3) throw std::logic_error("minority chain collapsed to a member");
    chain.erase(chain.begin(), chain.begin() + 3);
    chain.insert(chain.begin(), img);
  }
}

bool AffineRep::satisfies(std::uint32_t tuple) const {
  for (const AffineEquation& e : equations)
    if ((std::popcount(e.coeffs & tuple) & 1) != e.rhs) return false;
  return true;
}

std::variant<AffineRep, NotAffine> affine_representation(const BoolRelation& r) {
  if (r.empty()) {
    // canonical infeasible system {0 = 1}
    return AffineRep{r.arity(), {{0u, 1}}};
  }
  std::vector<std::uint32_t> mem = r.members();
  AffineHullAccumulator acc(r.arity());
  for (std::uint32_t m : mem) acc.add(m);
  if (!acc.is_affine()) {
    auto gap = acc.hull_gap([&](std::uint32_t t) { return r.contains(t); });
    return NotAffine{*gap};
  }
  AffineRep rep = acc.hull_equations();
  for (std::uint32_t m : mem)
    if (!rep.satisfies(m)) throw std::logic_error("affine representation lost a member");
  if (static_cast<int>(rep.equations.size()) + acc.dimension() != r.arity())
    throw std::logic_error("affine representation rank mismatch");
  return rep;
}

namespace {

std::uint32_t apply_op(SchaeferOp op, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  switch (op) {
    case SchaeferOp::Min: return a & b;
    case SchaeferOp::Max: return a | b;
    case SchaeferOp::Majority: return (a & b) | (a & c) | (b & c);
    case SchaeferOp::Minority: return a ^ b ^ c;
    default: return 0;
  }
}

}  // namespace

bool preserved_by(const BoolRelation& r, SchaeferOp op) {
  if (r.empty() || r.full()) return true;
  std::uint32_t ones = static_cast<std::uint32_t>((std::uint64_t{1} << r.arity()) - 1);
  switch (op) {
    case SchaeferOp::Const0: return r.contains(0);
    case SchaeferOp::Const1: return r.contains(ones);
    case SchaeferOp::Minority: {
      AffineHullAccumulator acc(r.arity());
      for (std::uint32_t m : r.members()) acc.add(m);
      return acc.is_affine();
    }
    case SchaeferOp::Min:
    case SchaeferOp::Max: {
      std::vector<std::uint32_t> mem = r.members();
      for (std::uint32_t a : mem)
        for (std::uint32_t b : mem)
          if (!r.contains(apply_op(op, a, b, 0))) return false;
      return true;
    }
    case SchaeferOp::Majority: {
      std::vector<std::uint32_t> mem = r.members();
      for (std::uint32_t a : mem)
        for (std::uint32_t b : mem)
          for (std::uint32_t c : mem)
            if (!r.contains(apply_op(op, a, b, c))) return false;
      return true;
    }
  }
  return false;
}

std::optional<MinorityWitnessTriple> minority_witness(const BoolRelation& r) {
  if (r.empty()) return std::nullopt;
  AffineHullAccumulator acc(r.arity());
  for (std::uint32_t m : r.members()) acc.add(m);
  return acc.witness([&](std::uint32_t t) { return r.contains(t); });
}

}  // namespace orient
