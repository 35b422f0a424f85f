#pragma once

#include <map>
#include <set>
#include <vector>

#include "corrterms/correction.hpp"
#include "corrterms/errors.hpp"
#include "corrterms/rational.hpp"

namespace corrterms {

// Grading shift of a cobordism map: (c1^2 - 2*euler - 3*signature) / 4.
struct GradingShift {
  Rational c1_squared;
  long long euler = 0;
  long long signature = 0;

  Rational value() const {
    return (c1_squared - Rational(2 * euler + 3 * signature)) / Rational(4);
  }
};

// Grading shift along the first elementary cobordism, spin-c slot m:
// ((n+1) - (2m + (n+1))^2) / (4(n+1)).
Rational gr_w1(long long n, long long m);

// Grading shift along the second elementary cobordism:
// (n(n+1) - (2m + n(n+1))^2) / (4n(n+1)).
Rational gr_w2(long long n, long long m);

// For each centered row index i of the difference matrix, the set of nonzero
// centered column indices j where the entry attains the row's w-value:
// I_i = { j != 0 : diff(i, j) = w[i] }.  Requires every entry of row i to be
// bounded above by w[i]; a violation is an invariant error.
std::map<long long, std::set<long long>> i_sets(const CorrectionMatrix& diff,
                                                const std::vector<long long>& w);

}  // namespace corrterms
