#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrterms/abelian.hpp"
#include "corrterms/rational.hpp"

namespace corrterms {

// A symmetric bilinear form on a finite abelian group with values in Q/Z,
// given by its Gram matrix on the standard basis (entries are representatives
// in Q; evaluation reduces mod 1 into [0, 1)).
class LinkingForm {
 public:
  LinkingForm(FiniteAbelianGroup group, std::vector<std::vector<Rational>> gram);

  const FiniteAbelianGroup& group() const { return group_; }
  // lambda(a, b) reduced into [0, 1).
  Rational evaluate(const GroupElement& a, const GroupElement& b) const;

  // Checks that lambda(x, .) is the zero functional only for x = 0, by brute
  // force over the whole group; intended for the small groups in tests.
  bool is_nondegenerate() const;

  // Direct sum of forms (block-diagonal Gram matrix).
  friend LinkingForm orthogonal_sum(const LinkingForm& a, const LinkingForm& b);

 private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<Rational>> gram_;
};

Rational reduce_mod_1(const Rational& r);

// A finite abelian group carrying a linking form and a Q-valued function
// (the d-invariant data assigned to the group's elements).
struct LinkingTriple {
  FiniteAbelianGroup group;
  LinkingForm form;
  std::function<Rational(const GroupElement&)> d;
};

struct MetabolicResult {
  bool found = false;
  std::optional<Subgroup> witness;
};

struct HyperbolicResult {
  bool found = false;
  std::optional<std::pair<Subgroup, Subgroup>> witnesses;
};

// Searches for a subgroup W with |W|^2 = |G|, lambda|_{W x W} = 0, and
// d|_W = 0.  The group order must be a perfect square.
MetabolicResult is_metabolic(const LinkingTriple& t);

// Collects every metabolic witness (used by the hyperbolic search and by
// tests on small groups).
std::vector<Subgroup> all_metabolic_subgroups(const LinkingTriple& t);

// Searches for two metabolic witnesses W1, W2 with W1 cap W2 = 0 (hence
// W1 + W2 = G) and W1 isomorphic to W2.
HyperbolicResult is_hyperbolic(const LinkingTriple& t);

// The two-parameter family of rank-six examples: groups A = B = (Z_p)^6,
// forms mu (Gram blocks [[0,-2/p],[-2/p,0]]) and nu (blocks [[0,2/p],[2/p,0]]),
// functions f on A and g on B, and two order-p^6 subgroups L, M of A + B on
// which f + g vanishes and mu + nu is identically zero.
struct RankSixExample {
  LinkingTriple a;  // (A, mu, f)
  LinkingTriple b;  // (B, nu, g)
  Subgroup l;       // subgroup of A + B
  Subgroup m;       // subgroup of A + B
  Subgroup a0;      // <z1, z2, z3>
  Subgroup a1;      // <w1, w2, w3>
  // The four metabolizers of (B, nu) that the splittings of L and M induce.
  Subgroup b0_l;    // <x1, x2, x3>
  Subgroup b1_l;    // <y1, y2, x3>
  Subgroup b0_m;    // <x1, y2, y3>
  Subgroup b1_m;    // <y1, x2, y3>
};

RankSixExample build_rank6_example(long long p);

// Given a subgroup S of A + B and a splitting A = A0 + A1, recovers the
// induced subgroups B_i = pi_B(S cap (A_i + B)).  Validates that the inputs
// are actual splittings (A0 cap A1 = 0 with |A0||A1| = |A|, |S|^2 = |A + B|,
// and |B_0||B_1| = |B|) and throws invalid_input otherwise.
std::pair<Subgroup, Subgroup> split_projection(const Subgroup& s,
                                               const Subgroup& a0,
                                               const Subgroup& a1,
                                               const FiniteAbelianGroup& a_group,
                                               const FiniteAbelianGroup& b_group);

// The four induced subgroups (B_0^L, B_1^L, B_0^M, B_1^M) of B coming from
// two subgroups L, M of A + B and a splitting A = A0 + A1.
std::array<Subgroup, 4> extract_metabolizers(const Subgroup& l, const Subgroup& m,
                                             const Subgroup& a0, const Subgroup& a1,
                                             const FiniteAbelianGroup& a_group,
                                             const FiniteAbelianGroup& b_group);

}  // namespace corrterms
