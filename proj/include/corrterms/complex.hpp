#pragma once

#include <string>
#include <vector>

#include "corrterms/errors.hpp"
#include "corrterms/vsequence.hpp"

namespace corrterms {

// One germ generator of a bifiltered complex: position (i, j) in the
// filtration plane and Maslov grading.  The full complex is the disjoint
// union of the germ's translates under the formal variable U, which acts by
// (i, j, grading) -> (i-1, j-1, grading-2).
struct Generator {
  std::string id;
  long long i = 0;
  long long j = 0;
  long long grading = 0;
};

// Differential arrow src -> U^{u_offset} * dst between germ generators.  The
// grading of the translated target is one less than the source grading:
// grading(dst) - 2*u_offset = grading(src) - 1.
struct Arrow {
  int src = 0;
  int dst = 0;
  long long u_offset = 0;
};

// A finitely generated bifiltered complex over the two-element field,
// presented by one germ.  Invariants (checked by validate()):
//   - every arrow drops the grading by exactly one and does not increase
//     either filtration coordinate;
//   - the composite differential vanishes;
//   - the germ lies in the first quadrant and its U-translate does not.
struct FilteredComplex {
  std::vector<Generator> generators;
  std::vector<Arrow> arrows;

  void validate() const;
  // Top j-coordinate of the germ (the genus for staircase complexes).
  long long genus() const;
};

// Staircase complex of the torus knot T(p, q): convex corners in grading 0
// and the in-between corners in grading -1, with corner coordinates read off
// the gap sequence of the Alexander polynomial exponents.
FilteredComplex staircase_torus(long long p, long long q);

// The unknot complex: a single generator at the origin in grading 0.
FilteredComplex unknot_complex();

// Tensor product over the two-element field: generators are pairs with
// coordinates and gradings added, differential by the Leibniz rule.
FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);

// Exponents of the Alexander polynomial of T(p, q) in descending order, with
// alternating signs starting positive (helper exposed for tests).
std::vector<long long> alexander_exponents(long long p, long long q);

// The V-sequence of the complex: V_l = max{z >= 0 : the class of U^z times
// the grading-0 tower generator is nonzero in the homology of the quotient
// complex by max(i, j-l) < 0}.  Requires the homology of the full complex to
// be a single tower (one class per even grading); rejects acyclic-only
// complexes with invalid_input.
VSequence v_sequence(const FilteredComplex& c);

// Line-oriented text serialization: one `id i j grading` line per generator,
// then `d source target` lines (the U-offset is recovered from the grading
// difference).  parse_complex validates the result.
std::string dump_complex(const FilteredComplex& c);
FilteredComplex parse_complex(const std::string& text);

}  // namespace corrterms
