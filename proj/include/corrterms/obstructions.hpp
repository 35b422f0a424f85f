#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrterms/abelian.hpp"
#include "corrterms/correction.hpp"
#include "corrterms/errors.hpp"
#include "corrterms/rational.hpp"

namespace corrterms {

// A correction-term function on the first homology of a rational homology
// sphere, with the unique spin structure identified with the zero element.
struct DFunctionOnGroup {
  FiniteAbelianGroup group;
  std::function<Rational(const GroupElement&)> d;
};

// View a p x q correction matrix as a d-function on Z_p + Z_q: element
// (x, y) maps to the uncentered entry (x, y); (0, 0) is the spin value.
DFunctionOnGroup d_function_from_matrix(const CorrectionMatrix& m);

// Additivity under connected sum: d((x, y)) = a.d(x) + b.d(y) on the direct
// sum of the two groups.
DFunctionOnGroup orthogonal_sum(const DFunctionOnGroup& a, const DFunctionOnGroup& b);

// Number of exactly-zero entries of a square correction matrix.
long long vanishing_count(const CorrectionMatrix& table);

using SplittingWitness = std::pair<Subgroup, Subgroup>;

// Searches for a splitting group = G_1 + G_2 with G_1 isomorphic to G_2 and
// d vanishing on the union; the necessary condition for the manifold to
// embed smoothly in S^4.  Requires |group| to be a perfect square.
// Exhaustive; returns the first witness pair in enumeration order.
std::optional<SplittingWitness> d_hyperbolic_splitting(const DFunctionOnGroup& df);

// S_H(d) = sum of d over the elements of the subgroup h.
Rational subgroup_sum(const DFunctionOnGroup& df, const Subgroup& h);

// Label for the standard order-p subgroup family of Z_p + Z_p:
// G_a = <(a, a+1)> for a in {0, ..., p-1} and G_star = <(1, 1)>.
class SubgroupLabel {
 public:
  static SubgroupLabel of(long long a) { return SubgroupLabel(false, a); }
  static SubgroupLabel star() { return SubgroupLabel(true, 0); }
  bool is_star() const { return star_; }
  long long a() const;
  std::string str() const;
  friend bool operator==(const SubgroupLabel& x, const SubgroupLabel& y) {
    return x.star_ == y.star_ && (x.star_ || x.a_ == y.a_);
  }

 private:
  SubgroupLabel(bool star, long long a) : star_(star), a_(a) {}
  bool star_;
  long long a_;
};

// The p+1 labels 0, ..., p-1, star in that order.
std::vector<SubgroupLabel> standard_labels(long long p);

// The subgroup of Z_p + Z_p carrying the given label.
Subgroup standard_subgroup(const FiniteAbelianGroup& zp2, const SubgroupLabel& label);

// Closed form for the subgroup sums of d_lens_sum_matrix(p):
// (p^2-1)/6 for a = 0, -(p^2-1)/6 for a = p-1, zero otherwise.
Rational s_lens_closed(long long p, const SubgroupLabel& a);

// One row of the subgroup-sum ledger printed by the CLI.
struct SubgroupSumEntry {
  SubgroupLabel label;
  Rational sum;
};

// Subgroup sums of a d-function on Z_p + Z_p over the standard family.
std::vector<SubgroupSumEntry> subgroup_sum_ledger(const DFunctionOnGroup& df, long long p);

// The minimal-magnitude obstruction invariant at the prime p: zero when p
// does not divide |group|, or when zero-sum order-p subgroups span the full
// p-torsion, or when subgroup sums of both signs exist (exact cancellation);
// otherwise the minimum of |sum of chosen subgroup sums| over families of
// order-p subgroups spanning the full p-torsion, computed greedily (the
// family must contain rp_count independent subgroups, so the optimum is the
// minimum-weight spanning family of the line matroid).
Rational grs_invariant(const DFunctionOnGroup& df, long long p);

// Per-prime stable verdict: for every prime whose primary component has
// rank <= 4, the restricted d-function must itself split hyperbolically;
// any required component failing excludes stable double sliceness.
struct StableComponent {
  long long prime;
  long long rank;
  bool required;  // rank <= 4, so the component is actually checked
  bool has_splitting;
  std::optional<SplittingWitness> witnesses;
};

struct StableReport {
  std::vector<StableComponent> components;
  bool stably_excluded;
};

StableReport stable_obstruction(const DFunctionOnGroup& df);

struct ObstructionVerdicts {
  bool embeds_smoothly_possible;
  bool smoothly_doubly_slice_possible;
  bool stably_doubly_slice_possible;
  // True when orders one and two in the double concordance group are both
  // excluded, i.e. the order is at least three.  Never claims infinite order.
  bool finite_double_concordance_order_excluded;
};

struct ObstructionReport {
  long long p;
  long long k;
  long long zero_count;
  long long required_zero_count;  // 2p - 1
  bool has_d_hyperbolic_splitting;
  std::optional<SplittingWitness> splitting_witnesses;
  bool double_has_splitting;  // splitting of the two-fold orthogonal sum
  Rational grs_value;
  StableReport stable;
  ObstructionVerdicts verdicts;
};

// Assembles the branched-double-cover tables at (p, k) and runs every
// obstruction.  p must be an odd prime and (p, k) must satisfy the
// surgery inequality enforced by the table builders.
ObstructionReport full_report(long long p, long long k);

}  // namespace corrterms
