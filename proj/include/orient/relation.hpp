#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace orient {

inline constexpr int kDenseArityCap = 21;
inline constexpr int kMaxArity = 28;

// A subset of {0,1}^arity. Dense bitset over 2^arity when arity <= 21,
// sorted member list above (arity capped at 28 = C(8,2)).
class BoolRelation {
 public:
  explicit BoolRelation(int arity);

  int arity() const { return arity_; }
  std::uint64_t size() const {
    normalize_sparse();
    return size_;
  }
  bool empty() const { return size() == 0; }
  bool full() const { return size() == (std::uint64_t{1} << arity_); }

  bool contains(std::uint32_t tuple) const;
  void insert(std::uint32_t tuple);

  // members in increasing mask order
  std::vector<std::uint32_t> members() const;

  static BoolRelation full_relation(int arity);

  friend bool operator==(const BoolRelation&, const BoolRelation&);

 private:
  int arity_;
  mutable std::uint64_t size_ = 0;
  bool dense_;
  std::vector<std::uint64_t> words_;   // dense
  std::vector<std::uint32_t> sparse_;  // sorted, unique
  mutable bool sparse_sorted_ = true;
  void normalize_sparse() const;
};

enum class SchaeferOp { Min, Max, Majority, Minority, Const0, Const1 };

// True iff coordinatewise application of op maps members to members.
// Minority is decided by the affine-hull cardinality test; the cubic
// closure scan lives in the tests as an independent oracle.
bool preserved_by(const BoolRelation& r, SchaeferOp op);

// Three members whose coordinatewise minority image is a non-member.
struct MinorityWitnessTriple {
  std::uint32_t a, b, c;
  std::uint32_t image;  // a ^ b ^ c, not a member
};

// One linear equation over GF(2): coeffs * x = rhs.
struct AffineEquation {
  std::uint32_t coeffs;
  int rhs;
};

// A system whose solution set equals the source relation exactly.
struct AffineRep {
  int arity;
  std::vector<AffineEquation> equations;

  bool satisfies(std::uint32_t tuple) const;
  int rank() const { return static_cast<int>(equations.size()); }
};

struct NotAffine {
  std::uint32_t witness;  // a tuple in the affine hull but not the relation
};

// Streaming affine-hull analysis: feed members one at a time. A relation is
// preserved by minority iff it equals its affine hull, iff the member count
// is 2^dimension. Works without materializing the relation; membership
// queries go through a caller-supplied oracle.
class AffineHullAccumulator {
 public:
  explicit AffineHullAccumulator(int arity) : arity_(arity) {}

  void add(std::uint32_t member);
  std::uint64_t count() const { return count_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  // the empty relation is vacuously affine
  bool is_affine() const {
    return count_ == 0 || count_ == (std::uint64_t{1} << basis_.size());
  }
  bool in_hull(std::uint32_t tuple) const;
  std::uint32_t base() const { return base_; }
  const std::vector<std::uint32_t>& basis() const { return basis_; }

  // Equations cutting out the hull (equal to the relation when affine).
  AffineRep hull_equations() const;
  // Some hull element rejected by the membership oracle.
  std::optional<std::uint32_t> hull_gap(const std::function<bool(std::uint32_t)>& member) const;
  // A violating triple: members whose XOR the oracle rejects. Present iff
  // the accumulated relation is not affine.
  std::optional<MinorityWitnessTriple> witness(
      const std::function<bool(std::uint32_t)>& member) const;

 private:
  int arity_;
  std::uint64_t count_ = 0;
  std::uint32_t base_ = 0;
  std::vector<std::uint32_t> basis_;       // echelon, distinct leading bits
  std::vector<std::uint32_t> gen_member_;  // one raw member per new dimension
};

// A relation is preserved by minority iff it is the solution space of a
// GF(2) system; this extracts that system. The empty relation maps to
// {0 = 1}.
std::variant<AffineRep, NotAffine> affine_representation(const BoolRelation& r);

// Witness form of the same test, on a materialized relation.
std::optional<MinorityWitnessTriple> minority_witness(const BoolRelation& r);

}  // namespace orient
