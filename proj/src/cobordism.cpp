#include "corrterms/cobordism.hpp"

namespace corrterms {

Rational gr_w1(long long n, long long m) {
  if (n < 1 || n % 2 == 0) throw invalid_input("gr_w1: n must be an odd positive integer");
  const long long t = 2 * m + (n + 1);
  return Rational((n + 1) - t * t, 4 * (n + 1));
}

Rational gr_w2(long long n, long long m) {
  if (n < 1 || n % 2 == 0) throw invalid_input("gr_w2: n must be an odd positive integer");
  const long long q = n * (n + 1);
  const long long t = 2 * m + q;
  return Rational(q - t * t, 4 * q);
}

std::map<long long, std::set<long long>> i_sets(const CorrectionMatrix& diff,
                                                const std::vector<long long>& w) {
  const long long rows = diff.row_modulus();
  const long long cols = diff.col_modulus();
  if (static_cast<long long>(w.size()) != rows) {
    throw invalid_input("i_sets: need one w-value per matrix row");
  }
  std::map<long long, std::set<long long>> out;
  for (long long ci = centered_min(rows); ci <= centered_max(rows); ++ci) {
    const Rational bound(w[static_cast<std::size_t>(ci - centered_min(rows))]);
    std::set<long long> hits;
    for (long long cj = centered_min(cols); cj <= centered_max(cols); ++cj) {
      const Rational v = diff.at_centered(ci, cj);
      if (v > bound) {
        throw invariant_error("i_sets: matrix row exceeds its w-value bound");
      }
      if (cj != 0 && v == bound) hits.insert(cj);
    }
    out[ci] = std::move(hits);
  }
  return out;
}

}  // namespace corrterms
