#include "corrterms/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace corrterms {

namespace {

// Exact division of integer polynomials (ascending coefficient order);
// throws invariant_error on a nonzero remainder.
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  if (den.empty() || den.back() == 0) {
    throw invariant_error("polynomial division by zero leading coefficient");
  }
  if (num.size() < den.size()) {
    for (long long c : num) {
      if (c != 0) throw invariant_error("polynomial division has a remainder");
    }
    return {0};
  }
  std::vector<long long> quotient(num.size() - den.size() + 1, 0);
  for (size_t k = quotient.size(); k-- > 0;) {
    long long lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) {
      throw invariant_error("polynomial division has a remainder");
    }
    long long q = lead / den.back();
    quotient[k] = q;
    if (q != 0) {
      for (size_t t = 0; t < den.size(); ++t) {
        num[k + t] -= q * den[t];
      }
    }
  }
  for (long long c : num) {
    if (c != 0) throw invariant_error("polynomial division has a remainder");
  }
  return quotient;
}

std::vector<long long> cyclotomic_like(long long exponent) {
  // t^exponent - 1, ascending.
  std::vector<long long> p(static_cast<size_t>(exponent) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(exponent)] = 1;
  return p;
}

// ---- F2 linear algebra on dynamic bitsets ----------------------------------

using BitRow = std::vector<std::uint64_t>;

BitRow make_row(size_t width) { return BitRow((width + 63) / 64, 0); }

void set_bit(BitRow& row, size_t idx) { row[idx / 64] ^= (std::uint64_t{1} << (idx % 64)); }

bool is_zero_row(const BitRow& row) {
  for (std::uint64_t w : row) {
    if (w) return false;
  }
  return true;
}

int leading_bit(const BitRow& row) {
  for (size_t w = 0; w < row.size(); ++w) {
    if (row[w]) {
      for (int b = 0; b < 64; ++b) {
        if (row[w] >> b & 1) return static_cast<int>(w * 64 + b);
      }
    }
  }
  return -1;
}

void xor_into(BitRow& dst, const BitRow& src) {
  for (size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
}

// Incremental row space over the two-element field.
struct F2RowSpace {
  std::map<int, BitRow> echelon;  // leading bit -> reduced row

  // Reduces v against the stored rows in place; returns the leading bit of
  // the reduced vector, or -1 if it vanished.
  int reduce(BitRow& v) const {
    while (true) {
      int lead = leading_bit(v);
      if (lead < 0) return -1;
      auto it = echelon.find(lead);
      if (it == echelon.end()) return lead;
      xor_into(v, it->second);
    }
  }

  // Adds v to the space; returns true when the rank increased.
  bool add(BitRow v) {
    int lead = reduce(v);
    if (lead < 0) return false;
    echelon.emplace(lead, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(echelon.size()); }

  bool contains(BitRow v) const { return reduce(v) < 0; }
};

}  // namespace

void FilteredComplex::validate() const {
  long long min_i = 0;
  long long min_j = 0;
  long long min_corner = 1;
  std::map<std::string, int> seen_ids;
  for (int g = 0; g < static_cast<int>(generators.size()); ++g) {
    const Generator& gen = generators[static_cast<size_t>(g)];
    if (gen.id.empty()) throw invariant_error("complex: empty generator id");
    if (seen_ids.count(gen.id)) {
      throw invariant_error("complex: duplicate generator id '" + gen.id + "'");
    }
    seen_ids[gen.id] = g;
    min_i = std::min(min_i, gen.i);
    min_j = std::min(min_j, gen.j);
    min_corner = std::min(min_corner, std::min(gen.i, gen.j));
  }
  if (!generators.empty()) {
    if (min_i < 0 || min_j < 0) {
      throw invariant_error("complex: germ leaves the first quadrant");
    }
    if (min_corner != 0) {
      throw invariant_error("complex: germ is not normalized (U-translate still in quadrant)");
    }
  }
  for (const Arrow& a : arrows) {
    if (a.src < 0 || a.src >= static_cast<int>(generators.size()) || a.dst < 0 ||
        a.dst >= static_cast<int>(generators.size())) {
      throw invariant_error("complex: arrow endpoint out of range");
    }
    const Generator& s = generators[static_cast<size_t>(a.src)];
    const Generator& d = generators[static_cast<size_t>(a.dst)];
    if (d.grading - 2 * a.u_offset != s.grading - 1) {
      throw invariant_error("complex: arrow does not drop the grading by one");
    }
    if (d.i - a.u_offset > s.i || d.j - a.u_offset > s.j) {
      throw invariant_error("complex: arrow increases a filtration level");
    }
  }
  // Composite differential must vanish mod 2: count two-step paths with their
  // combined U-offsets.
  std::map<std::pair<int, int>, std::map<long long, int>> two_step;
  for (const Arrow& a : arrows) {
    for (const Arrow& b : arrows) {
      if (b.src != a.dst) continue;
      two_step[{a.src, b.dst}][a.u_offset + b.u_offset] ^= 1;
    }
  }
  for (const auto& [key, offsets] : two_step) {
    for (const auto& [offset, parity] : offsets) {
      if (parity != 0) {
        throw invariant_error("complex: composite differential does not vanish");
      }
    }
  }
}

long long FilteredComplex::genus() const {
  long long g = 0;
  for (const Generator& gen : generators) g = std::max(g, gen.j);
  return g;
}

std::vector<long long> alexander_exponents(long long p, long long q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) {
    throw invalid_input("torus knot parameters must satisfy 2 <= p < q with gcd(p, q) = 1");
  }
  // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), ascending coefficients.
  std::vector<long long> numerator(static_cast<size_t>(p * q) + 2, 0);
  numerator[0] = 1;
  numerator[1] = -1;
  numerator[static_cast<size_t>(p * q)] = -1;
  numerator[static_cast<size_t>(p * q) + 1] = 1;
  std::vector<long long> stage = poly_divide_exact(std::move(numerator), cyclotomic_like(p));
  std::vector<long long> poly = poly_divide_exact(std::move(stage), cyclotomic_like(q));
  std::vector<long long> exponents;
  long long expected_sign = 1;
  for (size_t e = poly.size(); e-- > 0;) {
    if (poly[e] == 0) continue;
    if (poly[e] != expected_sign) {
      throw invariant_error("Alexander polynomial coefficients are not alternating");
    }
    exponents.push_back(static_cast<long long>(e));
    expected_sign = -expected_sign;
  }
  if (exponents.size() % 2 != 1 || exponents.back() != 0) {
    throw invariant_error("Alexander polynomial exponent list is malformed");
  }
  return exponents;
}

FilteredComplex staircase_torus(long long p, long long q) {
  std::vector<long long> exponents = alexander_exponents(p, q);
  long long genus = (p - 1) * (q - 1) / 2;
  FilteredComplex c;
  long long x = 0;
  long long y = genus;
  c.generators.push_back({"x0", x, y, 0});
  for (size_t t = 1; t < exponents.size(); ++t) {
    long long gap = exponents[t - 1] - exponents[t];
    if (t % 2 == 1) {
      x += gap;  // step right to an in-between corner
      c.generators.push_back({"x" + std::to_string(t), x - 1, y - 1, -1});
    } else {
      y -= gap;  // step down to a convex corner
      c.generators.push_back({"x" + std::to_string(t), x, y, 0});
    }
  }
  if (x != genus || y != 0) {
    throw invariant_error("staircase walk did not terminate at (genus, 0)");
  }
  for (int t = 1; t < static_cast<int>(c.generators.size()); t += 2) {
    c.arrows.push_back({t, t - 1, 1});
    c.arrows.push_back({t, t + 1, 1});
  }
  c.validate();
  return c;
}

FilteredComplex unknot_complex() {
  FilteredComplex c;
  c.generators.push_back({"u", 0, 0, 0});
  c.validate();
  return c;
}

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b) {
  FilteredComplex c;
  int nb = static_cast<int>(b.generators.size());
  auto pair_index = [nb](int ia, int ib) { return ia * nb + ib; };
  for (const Generator& ga : a.generators) {
    for (const Generator& gb : b.generators) {
      c.generators.push_back({ga.id + "." + gb.id, ga.i + gb.i, ga.j + gb.j,
                              ga.grading + gb.grading});
    }
  }
  for (const Arrow& ar : a.arrows) {
    for (int ib = 0; ib < nb; ++ib) {
      c.arrows.push_back({pair_index(ar.src, ib), pair_index(ar.dst, ib), ar.u_offset});
    }
  }
  for (const Arrow& br : b.arrows) {
    for (int ia = 0; ia < static_cast<int>(a.generators.size()); ++ia) {
      c.arrows.push_back({pair_index(ia, br.src), pair_index(ia, br.dst), br.u_offset});
    }
  }
  // Renormalize the germ choice: translate by U^m so the germ touches the
  // coordinate axes (m = 0 for staircase factors).
  if (!c.generators.empty()) {
    long long m = std::min(c.generators.front().i, c.generators.front().j);
    for (const Generator& g : c.generators) m = std::min(m, std::min(g.i, g.j));
    if (m != 0) {
      for (Generator& g : c.generators) {
        g.i -= m;
        g.j -= m;
        g.grading -= 2 * m;
      }
    }
  }
  c.validate();
  return c;
}

namespace {

// Basis bookkeeping for one grading of the (possibly truncated) complex.
// Every basis element is U^z g for a unique z = (grading(g) - m) / 2; the
// truncation keeps it iff z <= max(i_g, j_g - level) (no truncation when
// level is negative infinity, represented by truncate = false).
struct GradingBasis {
  std::vector<int> gen_index;
  std::vector<long long> z_shift;
  std::map<int, size_t> position_of_gen;

  size_t size() const { return gen_index.size(); }
};

long long z_ceiling(const Generator& g, long long level) {
  return std::max(g.i, g.j - level);
}

GradingBasis basis_for(const FilteredComplex& c, long long m, bool truncate,
                       long long level) {
  GradingBasis basis;
  for (int g = 0; g < static_cast<int>(c.generators.size()); ++g) {
    const Generator& gen = c.generators[static_cast<size_t>(g)];
    long long diff = gen.grading - m;
    if (diff % 2 != 0) continue;
    long long z = diff / 2;
    if (truncate && z > z_ceiling(gen, level)) continue;
    basis.position_of_gen[g] = basis.gen_index.size();
    basis.gen_index.push_back(g);
    basis.z_shift.push_back(z);
  }
  return basis;
}

// Rows of the differential from grading m to grading m-1 (one row per domain
// basis element), as bitsets over the codomain basis.
std::vector<BitRow> differential_rows(const FilteredComplex& c,
                                      const std::vector<std::vector<Arrow>>& arrows_from,
                                      const GradingBasis& domain,
                                      const GradingBasis& codomain) {
  std::vector<BitRow> rows;
  rows.reserve(domain.size());
  for (size_t d = 0; d < domain.size(); ++d) {
    BitRow row = make_row(std::max<size_t>(codomain.size(), 1));
    for (const Arrow& a : arrows_from[static_cast<size_t>(domain.gen_index[d])]) {
      auto it = codomain.position_of_gen.find(a.dst);
      if (it == codomain.position_of_gen.end()) continue;
      // U^z src -> U^{z + offset} dst; the codomain z-shift of dst is fixed
      // by the grading, so the arrow lands on the basis element exactly when
      // the shifts agree (it always does in the untruncated complex; in the
      // truncated complex a missing entry means the target was quotiented
      // away).
      set_bit(row, it->second);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int rank_of(const std::vector<BitRow>& rows) {
  F2RowSpace space;
  for (const BitRow& r : rows) space.add(r);
  return space.rank();
}

}  // namespace

VSequence v_sequence(const FilteredComplex& c) {
  c.validate();
  if (c.generators.empty()) {
    throw invalid_input("v_sequence: empty complex has no homology tower");
  }
  std::vector<std::vector<Arrow>> arrows_from(c.generators.size());
  for (const Arrow& a : c.arrows) {
    arrows_from[static_cast<size_t>(a.src)].push_back(a);
  }

  // Single-tower check on the full complex: dim H_0 = 1 and dim H_1 = 0.
  // U-periodicity (grading m is grading m-2 shifted) extends this to every
  // grading.
  GradingBasis full_0 = basis_for(c, 0, false, 0);
  GradingBasis full_1 = basis_for(c, 1, false, 0);
  GradingBasis full_2 = basis_for(c, 2, false, 0);
  GradingBasis full_m1 = basis_for(c, -1, false, 0);
  std::vector<BitRow> d0_rows = differential_rows(c, arrows_from, full_0, full_m1);
  std::vector<BitRow> d1_rows = differential_rows(c, arrows_from, full_1, full_0);
  std::vector<BitRow> d2_rows = differential_rows(c, arrows_from, full_2, full_1);
  long long h0 = static_cast<long long>(full_0.size()) - rank_of(d0_rows) - rank_of(d1_rows);
  long long h1 = static_cast<long long>(full_1.size()) - rank_of(d1_rows) - rank_of(d2_rows);
  if (h0 != 1 || h1 != 0) {
    throw invalid_input(
        "v_sequence: homology of the full complex is not a single tower "
        "(dim H_0 = " + std::to_string(h0) + ", dim H_1 = " + std::to_string(h1) + ")");
  }

  // Tower generator in grading 0: a cycle that is not a boundary.
  F2RowSpace image_0;
  for (const BitRow& r : d1_rows) image_0.add(r);
  // Kernel basis of d_0 via tracked elimination.
  std::vector<std::pair<BitRow, BitRow>> tracked;  // (image part, domain part)
  for (size_t d = 0; d < full_0.size(); ++d) {
    BitRow dom = make_row(full_0.size());
    set_bit(dom, d);
    tracked.push_back({d0_rows[d], std::move(dom)});
  }
  std::map<int, size_t> lead_to_row;
  std::vector<BitRow> kernel_vectors;
  for (size_t r = 0; r < tracked.size(); ++r) {
    while (true) {
      int lead = leading_bit(tracked[r].first);
      if (lead < 0) {
        kernel_vectors.push_back(tracked[r].second);
        break;
      }
      auto it = lead_to_row.find(lead);
      if (it == lead_to_row.end()) {
        lead_to_row[lead] = r;
        break;
      }
      xor_into(tracked[r].first, tracked[it->second].first);
      xor_into(tracked[r].second, tracked[it->second].second);
    }
  }
  BitRow tau = make_row(full_0.size());
  bool tau_found = false;
  for (const BitRow& k : kernel_vectors) {
    if (!image_0.contains(k)) {
      tau = k;
      tau_found = true;
      break;
    }
  }
  if (!tau_found) {
    throw invariant_error("v_sequence: tower generator not found despite dim H_0 = 1");
  }

  // V_l loop: project U^z tau into the truncated complex and test whether its
  // class survives.
  long long genus = c.genus();
  std::vector<long long> values;
  for (long long l = 0;; ++l) {
    long long v_l = -1;
    for (long long z = 0;; ++z) {
      // Basis of grading -2z in the truncated complex and the projection of
      // U^z tau onto it.
      GradingBasis trunc = basis_for(c, -2 * z, true, l);
      BitRow projected = make_row(std::max<size_t>(trunc.size(), 1));
      bool any = false;
      for (size_t pos = 0; pos < full_0.size(); ++pos) {
        if (!(tau[pos / 64] >> (pos % 64) & 1)) continue;
        int gen = full_0.gen_index[pos];
        auto it = trunc.position_of_gen.find(gen);
        if (it == trunc.position_of_gen.end()) continue;
        set_bit(projected, it->second);
        any = true;
      }
      bool alive = false;
      if (any) {
        GradingBasis trunc_above = basis_for(c, -2 * z + 1, true, l);
        std::vector<BitRow> boundary_rows =
            differential_rows(c, arrows_from, trunc_above, trunc);
        F2RowSpace image;
        for (const BitRow& r : boundary_rows) image.add(r);
        alive = !image.contains(projected);
      }
      if (alive) {
        v_l = z;
      } else {
        break;  // dead classes stay dead under further U-multiplication
      }
    }
    if (v_l < 0) {
      throw invariant_error("v_sequence: tower class already dead at U^0");
    }
    values.push_back(v_l);
    if (v_l == 0) break;
    if (l > 4 * genus + 8) {
      throw invariant_error("v_sequence: failed to reach V_l = 0 near the genus");
    }
  }
  return VSequence(std::move(values));
}

std::string dump_complex(const FilteredComplex& c) {
  std::ostringstream os;
  for (const Generator& g : c.generators) {
    os << g.id << ' ' << g.i << ' ' << g.j << ' ' << g.grading << '\n';
  }
  for (const Arrow& a : c.arrows) {
    os << "d " << c.generators[static_cast<size_t>(a.src)].id << ' '
       << c.generators[static_cast<size_t>(a.dst)].id << '\n';
  }
  return os.str();
}

FilteredComplex parse_complex(const std::string& text) {
  FilteredComplex c;
  std::map<std::string, int> index_of;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "d") {
      std::string src;
      std::string dst;
      if (!(ls >> src >> dst)) {
        throw invalid_input("complex parse: malformed differential line '" + line + "'");
      }
      auto si = index_of.find(src);
      auto di = index_of.find(dst);
      if (si == index_of.end() || di == index_of.end()) {
        throw invalid_input("complex parse: differential references unknown generator");
      }
      const Generator& s = c.generators[static_cast<size_t>(si->second)];
      const Generator& d = c.generators[static_cast<size_t>(di->second)];
      long long delta = d.grading - s.grading + 1;
      if (delta % 2 != 0) {
        throw invalid_input("complex parse: grading difference has wrong parity");
      }
      c.arrows.push_back({si->second, di->second, delta / 2});
    } else {
      Generator g;
      g.id = first;
      if (!(ls >> g.i >> g.j >> g.grading)) {
        throw invalid_input("complex parse: malformed generator line '" + line + "'");
      }
      if (index_of.count(g.id)) {
        throw invalid_input("complex parse: duplicate generator id '" + g.id + "'");
      }
      index_of[g.id] = static_cast<int>(c.generators.size());
      c.generators.push_back(std::move(g));
    }
  }
  try {
    c.validate();
  } catch (const invariant_error& e) {
    throw invalid_input(std::string("complex parse: ") + e.what());
  }
  return c;
}

}  // namespace corrterms
