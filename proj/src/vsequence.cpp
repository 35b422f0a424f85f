#include "corrterms/vsequence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace corrterms {

VSequence::VSequence(std::vector<long long> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  for (size_t l = 0; l < values_.size(); ++l) {
    long long cur = values_[l];
    long long next = l + 1 < values_.size() ? values_[l + 1] : 0;
    if (cur < 0) {
      throw invalid_input("V-sequence: negative value at index " + std::to_string(l));
    }
    if (next > cur || next < cur - 1) {
      throw invalid_input("V-sequence: step from index " + std::to_string(l) +
                          " violates V_l >= V_{l+1} >= V_l - 1");
    }
  }
}

long long VSequence::at(long long l) const {
  if (l < 0) {
    throw invalid_input("V-sequence: at() requires l >= 0; use extended()");
  }
  if (l >= static_cast<long long>(values_.size())) return 0;
  return values_[static_cast<size_t>(l)];
}

long long VSequence::extended(long long l) const {
  if (l >= 0) return at(l);
  return at(-l) + (-l);
}

long long VSequence::last_nonzero_index() const {
  return static_cast<long long>(values_.size()) - 1;
}

VSequence v_torus2(long long m) {
  if (m < 0) throw invalid_input("v_torus2: m must be nonnegative");
  std::vector<long long> vals;
  if (m % 2 == 0) {
    // {k, k, k-1, k-1, ..., 1, 1} for m = 2k, i.e. V_l = ceil((m-l)/2).
    for (long long l = 0; l < m; ++l) {
      vals.push_back((m - l + 1) / 2);
    }
  } else {
    // Disputed odd-m closed form {k, k-1, k-1, ...} as printed.
    long long k = (m - 1) / 2;
    for (long long l = 0;; ++l) {
      long long v = k - (l + 1) / 2;
      if (v <= 0) break;
      vals.push_back(v);
    }
  }
  return VSequence(std::move(vals));
}

bool v_torus2_is_disputed(long long m) { return m % 2 != 0; }

VSequence v_torus_staircase(long long n) {
  if (n < 1 || n % 2 == 0) {
    throw invalid_input("v_torus_staircase: n must be odd and positive");
  }
  long long d = (n - 1) / 2;
  std::vector<long long> vals;
  for (long long a = 0; a <= d - 1; ++a) {
    for (long long b = 0; b < n; ++b) {
      long long tri = (d - a) * (d - a + 1) / 2;
      vals.push_back(tri - std::max<long long>(0, b - (d + a + 1)));
    }
  }
  return VSequence(std::move(vals));
}

VSequence semigroup_v_torus(long long p, long long q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) {
    throw invalid_input("semigroup_v_torus: need 2 <= p < q with gcd(p, q) = 1");
  }
  long long g = (p - 1) * (q - 1) / 2;
  // Membership table for the numerical semigroup <p, q> on [0, g).
  std::vector<char> in_semigroup(static_cast<size_t>(std::max<long long>(g, 1)), 0);
  for (long long a = 0; a * p < g; ++a) {
    for (long long b = 0; a * p + b * q < g; ++b) {
      in_semigroup[static_cast<size_t>(a * p + b * q)] = 1;
    }
  }
  std::vector<long long> vals;
  for (long long l = 0; l < g; ++l) {
    long long count = 0;
    for (long long x = 0; x < g - l; ++x) {
      count += in_semigroup[static_cast<size_t>(x)];
    }
    vals.push_back(count);
  }
  return VSequence(std::move(vals));
}

VSequence min_convolve(const VSequence& a, const VSequence& b) {
  long long ga = a.size();
  long long gb = b.size();
  long long total = ga + gb;
  long long window = total + 4;
  std::vector<long long> vals;
  for (long long l = 0; l < total; ++l) {
    long long best = a.extended(0) + b.extended(l);
    for (long long l1 = -window; l1 <= l + window; ++l1) {
      best = std::min(best, a.extended(l1) + b.extended(l - l1));
    }
    vals.push_back(best);
  }
  return VSequence(std::move(vals));
}

VSequence v_sum(long long n, long long k) {
  if (n < 3 || n % 2 == 0) {
    throw invalid_input("v_sum: n must be odd and at least 3");
  }
  if (k < 0) throw invalid_input("v_sum: k must be nonnegative");
  // Large-surgery constraint: n^2 + n >= 2*(n(n-1)/2 + 2k) - 1, i.e. 4k <= 2n+1.
  if (4 * k > 2 * n + 1) {
    throw invalid_input("v_sum: constraint n^2 + n >= 2*(n(n-1)/2 + 2k) - 1 violated (4k > 2n + 1)");
  }
  if (k == 0) return v_torus_staircase(n);
  return min_convolve(v_torus2(2 * k), v_torus_staircase(n));
}

long long truncated_list(long long k, long long x) {
  long long ax = x < 0 ? -x : x;
  long long ramp = std::max<long long>(0, ax - 1);
  return std::max<long long>(0, k - (ramp + 1) / 2);
}

long long truncated_list_t(long long k, long long t, long long x) {
  if (x < -t) return 0;
  return truncated_list(k, x);
}

}  // namespace corrterms
