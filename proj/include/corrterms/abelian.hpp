#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corrterms/errors.hpp"

namespace corrterms {

// An element of a finite abelian group, stored as one residue per cyclic
// factor, each reduced into [0, order_of_factor).
using GroupElement = std::vector<long long>;

bool is_prime(long long n);
bool is_prime_power(long long n);

// A finite abelian group presented in primary decomposition: a direct sum of
// cyclic groups of prime-power order.  The trivial group has no factors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<long long> cyclic_orders);

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
  // Z_p ^ rank for a prime-power p.
  static FiniteAbelianGroup elementary(long long p, int rank);

  const std::vector<long long>& cyclic_orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  long long order() const;

  GroupElement zero() const { return GroupElement(orders_.size(), 0); }
  GroupElement reduce(GroupElement e) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scalar_mul(long long k, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const;
  long long element_order(const GroupElement& a) const;

  // Enumerates all elements in lexicographic coordinate order.
  std::vector<GroupElement> all_elements() const;

  // Basis element with a 1 in coordinate i.
  GroupElement basis(int i) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

  std::string describe() const;  // e.g. "Z_5 + Z_5"

 private:
  std::vector<long long> orders_;
};

// Concatenation of the two factor lists; elements of the sum are the
// concatenated coordinate vectors (left summand first).
FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);
GroupElement join_elements(const GroupElement& a, const GroupElement& b);

// A subgroup of a FiniteAbelianGroup, stored with its generators and the full
// (sorted, cached) element set they generate.
class Subgroup {
 public:
  static Subgroup generated(const FiniteAbelianGroup& parent,
                            std::vector<GroupElement> generators);
  static Subgroup trivial(const FiniteAbelianGroup& parent);
  // Builds the subgroup whose element set is exactly `elements` (must already
  // be closed under the group operations; throws invariant_error otherwise).
  static Subgroup from_elements(const FiniteAbelianGroup& parent,
                                std::vector<GroupElement> elements);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  // Sorted ascending (lexicographically); usable as a canonical key.
  const std::vector<GroupElement>& elements() const { return elements_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  bool contains(const GroupElement& e) const;

  // Multiset of element orders; two finite abelian groups are isomorphic
  // exactly when these agree.
  std::map<long long, long long> order_multiset() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.elements_ < b.elements_;
  }

 private:
  Subgroup(FiniteAbelianGroup parent, std::vector<GroupElement> generators,
           std::vector<GroupElement> elements)
      : parent_(std::move(parent)),
        generators_(std::move(generators)),
        elements_(std::move(elements)) {}

  FiniteAbelianGroup parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;  // sorted
};

bool is_isomorphic(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_sum_of(const Subgroup& a, const Subgroup& b);

// All distinct subgroups of order p (p prime).  There are (p^r - 1)/(p - 1)
// of them, where r is the p-torsion rank; each is cyclic.
std::vector<Subgroup> subgroups_of_order_p(const FiniteAbelianGroup& group, long long p);

// Number of cyclic factors of p-power order in the primary decomposition.
int rp_count(const FiniteAbelianGroup& group, long long p);

// Incremental F_p-rank tracker for order-p elements of a group, used to count
// how many independent order-p subgroups a collection spans.  Coordinates are
// taken in the p-torsion subgroup (one F_p coordinate per p-power factor).
class FpSpan {
 public:
  FpSpan(const FiniteAbelianGroup& group, long long p);

  // Adds the line through `e` (an element of order p); returns true when the
  // rank increased.
  bool add(const GroupElement& e);
  int rank() const { return rank_; }
  int ambient_rank() const { return static_cast<int>(factor_index_.size()); }

 private:
  std::vector<long long> torsion_coordinates(const GroupElement& e) const;

  const FiniteAbelianGroup* group_;
  long long p_;
  std::vector<int> factor_index_;       // indices of p-power cyclic factors
  std::vector<long long> factor_scale_;  // p^(k-1) for each such factor
  std::vector<std::vector<long long>> rows_;  // reduced row-echelon rows mod p
  int rank_ = 0;
};

}  // namespace corrterms
