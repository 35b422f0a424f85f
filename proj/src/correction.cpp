#include "corrterms/correction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "corrterms/abelian.hpp"

namespace corrterms {

namespace {

long long mod_reduce(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

// Centered representative of x modulo m, in [centered_min(m), centered_max(m)].
long long to_centered(long long x, long long m) {
  long long u = mod_reduce(x, m);
  return u > centered_max(m) ? u - m : u;
}

bool is_even_integer(const Rational& r) { return r.den() == 1 && r.num() % 2 == 0; }

}  // namespace

Rational lens_formula_raw(long long p, long long x) {
  if (p < 1) throw invalid_input("lens_formula_raw: modulus must be positive");
  const long long t = 2 * x - p;
  return Rational(t * t - p, 4 * p);
}

Rational d_lens(long long p, long long i) {
  if (p < 1) throw invalid_input("d_lens: p must be a positive integer");
  return lens_formula_raw(p, mod_reduce(i, p));
}

long long centered_min(long long modulus) {
  return modulus % 2 == 0 ? -modulus / 2 : -(modulus - 1) / 2;
}

long long centered_max(long long modulus) {
  return modulus % 2 == 0 ? modulus / 2 - 1 : (modulus - 1) / 2;
}

CorrectionTable::CorrectionTable(long long modulus, std::vector<Rational> uncentered_values)
    : modulus_(modulus), values_(std::move(uncentered_values)) {
  if (modulus_ < 1) throw invalid_input("CorrectionTable: modulus must be positive");
  if (static_cast<long long>(values_.size()) != modulus_) {
    throw invalid_input("CorrectionTable: need exactly one value per residue class");
  }
}

Rational CorrectionTable::at_uncentered(long long i) const {
  return values_[static_cast<std::size_t>(mod_reduce(i, modulus_))];
}

Rational CorrectionTable::at_centered(long long c) const { return at_uncentered(c); }

std::vector<Rational> CorrectionTable::centered_values() const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (long long c = centered_min(modulus_); c <= centered_max(modulus_); ++c) {
    out.push_back(at_uncentered(c));
  }
  return out;
}

long long CorrectionTable::zero_count() const {
  return static_cast<long long>(
      std::count(values_.begin(), values_.end(), Rational(0)));
}

CorrectionMatrix::CorrectionMatrix(long long row_modulus, long long col_modulus,
                                   std::vector<std::vector<Rational>> uncentered_values)
    : rows_(row_modulus), cols_(col_modulus), values_(std::move(uncentered_values)) {
  if (rows_ < 1 || cols_ < 1) throw invalid_input("CorrectionMatrix: moduli must be positive");
  if (static_cast<long long>(values_.size()) != rows_) {
    throw invalid_input("CorrectionMatrix: wrong number of rows");
  }
  for (const auto& row : values_) {
    if (static_cast<long long>(row.size()) != cols_) {
      throw invalid_input("CorrectionMatrix: wrong number of columns");
    }
  }
}

Rational CorrectionMatrix::at_uncentered(long long i, long long j) const {
  return values_[static_cast<std::size_t>(mod_reduce(i, rows_))]
                [static_cast<std::size_t>(mod_reduce(j, cols_))];
}

Rational CorrectionMatrix::at_centered(long long ci, long long cj) const {
  return at_uncentered(ci, cj);
}

std::vector<std::vector<Rational>> CorrectionMatrix::centered_rows() const {
  std::vector<std::vector<Rational>> out;
  for (long long ci = centered_min(rows_); ci <= centered_max(rows_); ++ci) {
    std::vector<Rational> row;
    for (long long cj = centered_min(cols_); cj <= centered_max(cols_); ++cj) {
      row.push_back(at_uncentered(ci, cj));
    }
    out.push_back(std::move(row));
  }
  return out;
}

long long CorrectionMatrix::zero_count() const {
  long long n = 0;
  for (const auto& row : values_) {
    n += std::count(row.begin(), row.end(), Rational(0));
  }
  return n;
}

std::vector<Rational> CorrectionMatrix::flattened_centered() const {
  std::vector<Rational> flat;
  flat.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (auto& row : centered_rows()) {
    for (auto& v : row) flat.push_back(v);
  }
  return flat;
}

CorrectionMatrix CorrectionMatrix::reflected(bool flip_rows, bool flip_cols) const {
  std::vector<std::vector<Rational>> grid(
      static_cast<std::size_t>(rows_),
      std::vector<Rational>(static_cast<std::size_t>(cols_)));
  for (long long i = 0; i < rows_; ++i) {
    for (long long j = 0; j < cols_; ++j) {
      const long long si = flip_rows ? mod_reduce(-i, rows_) : i;
      const long long sj = flip_cols ? mod_reduce(-j, cols_) : j;
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          values_[static_cast<std::size_t>(si)][static_cast<std::size_t>(sj)];
    }
  }
  return CorrectionMatrix(rows_, cols_, std::move(grid));
}

std::pair<bool, bool> CorrectionMatrix::canonical_reflection() const {
  std::pair<bool, bool> best{false, false};
  std::vector<Rational> best_flat = flattened_centered();
  for (int flip_row = 0; flip_row < 2; ++flip_row) {
    for (int flip_col = 0; flip_col < 2; ++flip_col) {
      if (flip_row == 0 && flip_col == 0) continue;
      std::vector<Rational> flat = reflected(flip_row != 0, flip_col != 0).flattened_centered();
      if (std::lexicographical_compare(flat.begin(), flat.end(), best_flat.begin(),
                                       best_flat.end())) {
        best = {flip_row != 0, flip_col != 0};
        best_flat = std::move(flat);
      }
    }
  }
  return best;
}

CorrectionMatrix CorrectionMatrix::canonical() const {
  const auto [fr, fc] = canonical_reflection();
  return reflected(fr, fc);
}

bool equal_up_to_reflection(const CorrectionMatrix& a, const CorrectionMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.canonical().values_ == b.canonical().values_;
}

CorrectionMatrix d_lens_sum_matrix(long long p) {
  if (p < 2) throw invalid_input("d_lens_sum_matrix: p must be at least 2");
  std::vector<std::vector<Rational>> grid;
  for (long long i = 0; i < p; ++i) {
    std::vector<Rational> row;
    for (long long j = 0; j < p; ++j) {
      row.push_back(d_lens(p, i) - d_lens(p, j));
    }
    grid.push_back(std::move(row));
  }
  return CorrectionMatrix(p, p, std::move(grid));
}

CorrectionTable ni_wu(long long p, const VSequence& v) {
  if (p < 1) throw invalid_input("ni_wu: p must be a positive integer");
  const long long last = v.last_nonzero_index();
  if (p < 2 * last - 1) {
    std::ostringstream msg;
    msg << "ni_wu: large-surgery formula needs p >= 2*(last nonzero V index) - 1 = "
        << 2 * last - 1 << ", got p = " << p;
    throw invalid_input(msg.str());
  }
  std::vector<Rational> vals;
  vals.reserve(static_cast<std::size_t>(p));
  for (long long i = 0; i < p; ++i) {
    const long long vi = v.at(i);
    const long long hi = v.at(p - i);  // H_{i-p} = V_{p-i}
    vals.push_back(d_lens(p, i) - Rational(2 * std::max(vi, hi)));
  }
  return CorrectionTable(p, std::move(vals));
}

std::vector<long long> w_vector(long long n, long long k) {
  if (n < 1 || n % 2 == 0) throw invalid_input("w_vector: n must be an odd positive integer");
  if (k < 0) throw invalid_input("w_vector: k must be nonnegative");
  if (n < 4 * k - 1) {
    std::ostringstream msg;
    msg << "w_vector: constraint n >= 4k - 1 violated (n = " << n << ", k = " << k << ")";
    throw invalid_input(msg.str());
  }
  std::vector<long long> out;
  for (long long c = centered_min(n); c <= centered_max(n); ++c) {
    out.push_back(2 * truncated_list(k, c));
  }
  return out;
}

long long kp_of(long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw invalid_input("p must be an odd prime");
  }
  return (p + 6 + 11) / 12;  // ceil((p + 6) / 12)
}

long long index_map_raw(long long n, long long ci, long long cj) {
  if (n < 1) throw invalid_input("index_map: n must be a positive integer");
  return n * (n + 1) / 2 + (n + 1) * ci - n * cj;
}

long long index_map(long long n, long long ci, long long cj) {
  return to_centered(index_map_raw(n, ci, cj), n * (n + 1));
}

CorrectionTable d_from_complex(const FilteredComplex& c, long long p) {
  const long long g = c.genus();
  if (p < 2 * g - 1) {
    std::ostringstream msg;
    msg << "d_from_complex: large-surgery formula needs p >= 2*genus - 1 = " << 2 * g - 1
        << ", got p = " << p;
    throw invalid_input(msg.str());
  }
  return ni_wu(p, v_sequence(c));
}

namespace {

// Structural facts about the difference matrix that the builders enforce.
// The entrywise bound by the w-vector is only known to hold in the regime
// n >= 4k - 1, so those checks are skipped outside it.
void check_y_diff(const CorrectionMatrix& diff, long long n, long long k) {
  const long long cols = n + 1;
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < cols; ++j) {
      const Rational v = diff.at_uncentered(i, j);
      if (!is_even_integer(v)) {
        throw invariant_error("difference matrix entry is not an even integer");
      }
      if (diff.at_uncentered(-i, -j) != v) {
        throw invariant_error("difference matrix is not conjugation symmetric");
      }
    }
  }
  if (n < 4 * k - 1) return;
  for (long long ci = centered_min(n); ci <= centered_max(n); ++ci) {
    const Rational bound(2 * truncated_list(k, ci));
    for (long long cj = centered_min(cols); cj <= centered_max(cols); ++cj) {
      const Rational v = diff.at_centered(ci, cj);
      if (v < Rational(0)) throw invariant_error("difference matrix has a negative entry");
      if (v > bound) {
        throw invariant_error("difference matrix row exceeds its w-vector bound");
      }
    }
    if (diff.at_centered(ci, ci) != Rational(0)) {
      throw invariant_error("difference matrix is nonzero on the centered diagonal");
    }
  }
}

}  // namespace

YTables d_table_Y(long long n, long long k) {
  if (n < 3 || n % 2 == 0) throw invalid_input("d_table_Y: n must be an odd integer >= 3");
  const VSequence vs = v_sum(n, k);  // also validates k and the (n, k) inequality
  const CorrectionTable table = ni_wu(n * (n + 1), vs);

  std::vector<std::vector<Rational>> d_grid, diff_grid;
  for (long long i = 0; i < n; ++i) {
    std::vector<Rational> d_row, diff_row;
    for (long long j = 0; j < n + 1; ++j) {
      const long long l = index_map(n, to_centered(i, n), to_centered(j, n + 1));
      const Rational d_val = table.at_centered(l);
      const Rational lens_val = d_lens(n, i) - d_lens(n + 1, j);
      d_row.push_back(d_val);
      diff_row.push_back(lens_val - d_val);
    }
    d_grid.push_back(std::move(d_row));
    diff_grid.push_back(std::move(diff_row));
  }
  CorrectionMatrix d(n, n + 1, std::move(d_grid));
  CorrectionMatrix diff(n, n + 1, std::move(diff_grid));
  check_y_diff(diff, n, k);
  return YTables{std::move(d), std::move(diff)};
}

ZTables d_table_Z(long long p, long long k) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw invalid_input("p must be an odd prime");
  }
  const YTables y = d_table_Y(p, k);

  std::vector<std::vector<Rational>> d_grid, diff_grid;
  for (long long i = 0; i < p; ++i) {
    std::vector<Rational> d_row, diff_row;
    for (long long j = 0; j < p; ++j) {
      // Same centered cell of the Y-side difference matrix; the dropped
      // column is the one centered index with no counterpart mod p.
      const Rational m = y.diff.at_centered(to_centered(i, p), to_centered(j, p));
      const Rational lens_val = d_lens(p, i) - d_lens(p, j);
      diff_row.push_back(m);
      d_row.push_back(lens_val - m);
    }
    d_grid.push_back(std::move(d_row));
    diff_grid.push_back(std::move(diff_row));
  }
  CorrectionMatrix d(p, p, std::move(d_grid));
  CorrectionMatrix diff(p, p, std::move(diff_grid));

  const long long zeros = d.zero_count();
  return ZTables{std::move(d), std::move(diff), zeros};
}

std::string sign_convention_note() {
  return "d(L(p,1), i) = ((2i - p)^2 - p) / (4p) on uncentered representatives "
         "i in [0, p); e.g. d-values of L(5,1) are {1, 1/5, -1/5, -1/5, 1/5}";
}

}  // namespace corrterms
