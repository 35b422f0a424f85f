#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corrterms/complex.hpp"
#include "corrterms/errors.hpp"
#include "corrterms/rational.hpp"
#include "corrterms/vsequence.hpp"

namespace corrterms {

// The quadratic lens-space formula ((2x - p)^2 - p) / (4p) evaluated at a raw
// (unreduced) argument.  d_lens applies it after reduction mod p; the k'^2 - k'
// parity identity is a polynomial identity in the raw values.
Rational lens_formula_raw(long long p, long long x);

// Correction term d(L(p,1), i) with the sign convention fixed so that
// d(L(5,1), 0) = 1 (the convention of the worked examples and of the
// subgroup-sum closed forms).  The index is reduced mod p first.
Rational d_lens(long long p, long long i);

// Centered-index ranges: odd modulus uses [-(m-1)/2, (m-1)/2], even modulus
// uses [-m/2, m/2 - 1].
long long centered_min(long long modulus);
long long centered_max(long long modulus);

// A table of correction terms for one closed 3-manifold with cyclic
// H_1 = Z_modulus, stored on uncentered representatives [0, modulus) with
// centered accessors.
class CorrectionTable {
 public:
  CorrectionTable(long long modulus, std::vector<Rational> uncentered_values);

  long long modulus() const { return modulus_; }
  const std::vector<Rational>& uncentered() const { return values_; }
  Rational at_uncentered(long long i) const;
  Rational at_centered(long long c) const;
  std::vector<Rational> centered_values() const;  // centered_min .. centered_max
  long long zero_count() const;

  friend bool operator==(const CorrectionTable& a, const CorrectionTable& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }

 private:
  long long modulus_;
  std::vector<Rational> values_;
};

// A doubly indexed table of correction terms (or difference values) over
// Z_row_modulus x Z_col_modulus, with centered accessors and the reflection
// indeterminacy handled at the comparison/serialization boundary: the spin-c
// labeling cannot distinguish an index from its negative, so matrices are
// compared (and printed) in the canonical form that is lexicographically
// least among the four index reflections.
class CorrectionMatrix {
 public:
  CorrectionMatrix(long long row_modulus, long long col_modulus,
                   std::vector<std::vector<Rational>> uncentered_values);

  long long row_modulus() const { return rows_; }
  long long col_modulus() const { return cols_; }
  Rational at_uncentered(long long i, long long j) const;
  Rational at_centered(long long ci, long long cj) const;
  // Row-major grid in centered order (rows centered_min(rows_)..max, cols
  // likewise).
  std::vector<std::vector<Rational>> centered_rows() const;
  long long zero_count() const;

  // Index negation (mod the modulus) on rows and/or columns.
  CorrectionMatrix reflected(bool flip_rows, bool flip_cols) const;
  // The reflection producing the lexicographically least centered grid;
  // (false, false) wins ties, so canonical() is idempotent.
  std::pair<bool, bool> canonical_reflection() const;
  CorrectionMatrix canonical() const;
  friend bool equal_up_to_reflection(const CorrectionMatrix& a, const CorrectionMatrix& b);

  // Exact equality of stored values (no reflection).
  friend bool operator==(const CorrectionMatrix& a, const CorrectionMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.values_ == b.values_;
  }

 private:
  std::vector<Rational> flattened_centered() const;

  long long rows_;
  long long cols_;
  std::vector<std::vector<Rational>> values_;  // uncentered [i][j]
};

// d(L(p,1) # L(p,-1)) as a p x p matrix: entry (i, j) = d_lens(p,i) - d_lens(p,j).
CorrectionMatrix d_lens_sum_matrix(long long p);

// Large-surgery correction terms: d(S^3_p(K), i) = d(L(p,1), i)
// - 2*max(V_i, V_{p-i}).  Requires p >= 2*(last nonzero V index) - 1.
CorrectionTable ni_wu(long long p, const VSequence& v);

// Centered length-n vector with entries 2*L_k(i): the drop of the lens
// correction terms under the 2k-fold doubled-knot infection.  Requires
// n >= 4k - 1.
std::vector<long long> w_vector(long long n, long long k);

// k_p = ceil((p+6)/12) for an odd prime p.
long long kp_of(long long p);

// The spin-c index correspondence l = n(n+1)/2 + (n+1)i - nj, from centered
// (i, j) in Z_n x Z_{n+1} to a centered index in Z_{n^2+n}.
long long index_map(long long n, long long ci, long long cj);
// The same without reduction (raw integer value), for the parity identity.
long long index_map_raw(long long n, long long ci, long long cj);

// Correction terms of the large surgery encoded by a filtered complex:
// ni_wu(p, v_sequence(c)); requires p >= 2*genus - 1.
CorrectionTable d_from_complex(const FilteredComplex& c, long long p);

// The Y-side tables for the pair (n, k): the correction-term matrix of the
// surgery manifold (rows Z_n, columns Z_{n+1}) and the difference matrix
// lens_sum - d, which the structural theory constrains entrywise.
struct YTables {
  CorrectionMatrix d;
  CorrectionMatrix diff;
};

YTables d_table_Y(long long n, long long k);

// The Z-side tables for an odd prime p: the branched double cover's p x p
// correction matrix, its difference matrix (the Y-side difference with the
// extra column dropped), and the number of vanishing entries.
struct ZTables {
  CorrectionMatrix d;
  CorrectionMatrix diff;
  long long zeros;
};

ZTables d_table_Z(long long p, long long k);

// One-line statement of the adopted lens-space sign convention, for output
// metadata.
std::string sign_convention_note();

}  // namespace corrterms
