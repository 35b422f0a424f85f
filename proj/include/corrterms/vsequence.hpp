#pragma once

#include <vector>

#include "corrterms/errors.hpp"

namespace corrterms {

// A nonincreasing sequence of nonnegative integers V_0, V_1, ... with
// unit-bounded steps (V_l - V_{l+1} is 0 or 1) and V_l = 0 from some index
// on.  Trailing zeros are trimmed on construction.  The companion sequence
// H_k = V_{-k} is never stored; `extended` realizes V_{-m} = V_m + m.
class VSequence {
 public:
  VSequence() = default;
  explicit VSequence(std::vector<long long> values);

  const std::vector<long long>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  long long size() const { return static_cast<long long>(values_.size()); }

  // V_l for l >= 0 (zero beyond the stored range).
  long long at(long long l) const;
  // V_l for any integer l, via V_{-m} = V_m + m.
  long long extended(long long l) const;
  // Index of the last nonzero value, or -1 for the zero sequence.
  long long last_nonzero_index() const;

  friend bool operator==(const VSequence& a, const VSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<long long> values_;
};

// Closed-form V-sequence of the (2, m)-cable torus-knot family T(2, 2m+1).
// For even m = 2k this is {k, k, k-1, k-1, ..., 1, 1}; for odd m the closed
// form {k, k-1, k-1, ...} (k = (m-1)/2) is exposed as printed even though it
// is disputed for m = 1 (see v_torus2_is_disputed).
VSequence v_torus2(long long m);

// True exactly when the closed form above is the disputed odd-m list.
bool v_torus2_is_disputed(long long m);

// Closed-form V-sequence of T(n, n+1) for odd n = 2d+1: on l = a*n + b with
// 0 <= b < n and 0 <= a <= d-1, V_l = Tr(d-a) - max(0, b - (d+a+1)); zero for
// l >= d*n.  (The plateau cutoff b - (d+a+1) is calibrated against the n = 5
// worked list and the n = 3, 7 oracle values.)
VSequence v_torus_staircase(long long n);

// V-sequence of the torus knot T(p, q) via semigroup counting:
// V_l = #(S cap [0, g - l)) with S = <p, q> and g = (p-1)(q-1)/2.
VSequence semigroup_v_torus(long long p, long long q);

// Min-convolution: V_l(K1 # K2) = min over l1 + l2 = l of V_{l1} + V_{l2},
// using the extension V_{-m} = V_m + m on both factors.
VSequence min_convolve(const VSequence& a, const VSequence& b);

// Closed-form V-sequence of J # J # T(n, n+1) with J the k-fold sum of the
// doubled knot (surrogate T(2, 4k+1) staircase): the min-convolution of
// v_torus2(2k) with v_torus_staircase(n).  Requires
// n^2 + n >= 2*(n(n-1)/2 + 2k) - 1, i.e. 4k <= 2n + 1.
VSequence v_sum(long long n, long long k);

// The symmetric ramp L_k: value k on x in {-1, 0, 1} (a tripled peak), then
// decreasing by one per two steps: L_k(x) = max(0, k - ceil(max(0,|x|-1)/2)).
long long truncated_list(long long k, long long x);

// Truncation: L_k^t(x) = 0 for x < -t, else L_k(x).
long long truncated_list_t(long long k, long long t, long long x);

}  // namespace corrterms
