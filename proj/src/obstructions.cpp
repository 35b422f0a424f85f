#include "corrterms/obstructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace corrterms {

namespace {

Rational rational_abs(const Rational& r) { return r < Rational(0) ? -r : r; }

bool is_perfect_square(long long n, long long* root) {
  if (n < 0) return false;
  long long r = std::llround(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return false;
  *root = r;
  return true;
}

long long smallest_prime_factor(long long n) {
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

// All subgroups of exactly the given order on which d vanishes identically.
// DFS over increasing candidate indices; a subgroup is recorded or expanded
// only on its first (lexicographically least) generating chain, which is
// always the chain the depth-first order reaches first.
std::vector<Subgroup> d_zero_subgroups_of_order(const DFunctionOnGroup& df, long long target) {
  std::set<GroupElement> zero_set;
  for (const GroupElement& e : df.group.all_elements()) {
    if (df.d(e) == Rational(0)) zero_set.insert(e);
  }
  std::vector<Subgroup> results;
  if (zero_set.count(df.group.zero()) == 0) return results;
  if (target == 1) {
    results.push_back(Subgroup::trivial(df.group));
    return results;
  }

  auto closed_in_zero_set = [&](const Subgroup& s) {
    for (const GroupElement& e : s.elements()) {
      if (zero_set.count(e) == 0) return false;
    }
    return true;
  };

  // Only elements whose cyclic closure stays in the zero set can appear in a
  // witness subgroup.
  std::vector<GroupElement> candidates;
  for (const GroupElement& e : df.group.all_elements()) {
    if (df.group.is_zero(e) || zero_set.count(e) == 0) continue;
    Subgroup cyc = Subgroup::generated(df.group, {e});
    if (cyc.order() <= target && closed_in_zero_set(cyc)) candidates.push_back(e);
  }

  std::set<std::vector<GroupElement>> seen;
  std::vector<GroupElement> gens;

  auto dfs = [&](auto&& self, const Subgroup& current, std::size_t start) -> void {
    for (std::size_t idx = start; idx < candidates.size(); ++idx) {
      const GroupElement& e = candidates[idx];
      if (current.contains(e)) continue;
      gens.push_back(e);
      Subgroup next = Subgroup::generated(df.group, gens);
      if (next.order() <= target && seen.insert(next.elements()).second &&
          closed_in_zero_set(next)) {
        if (next.order() == target) {
          results.push_back(next);
        } else {
          self(self, next, idx + 1);
        }
      }
      gens.pop_back();
    }
  };
  dfs(dfs, Subgroup::trivial(df.group), 0);
  return results;
}

}  // namespace

DFunctionOnGroup d_function_from_matrix(const CorrectionMatrix& m) {
  FiniteAbelianGroup group({m.row_modulus(), m.col_modulus()});
  CorrectionMatrix copy = m;
  return DFunctionOnGroup{group, [copy](const GroupElement& e) {
                            return copy.at_uncentered(e[0], e[1]);
                          }};
}

DFunctionOnGroup orthogonal_sum(const DFunctionOnGroup& a, const DFunctionOnGroup& b) {
  FiniteAbelianGroup group = direct_sum(a.group, b.group);
  const std::size_t split = a.group.zero().size();
  auto da = a.d;
  auto db = b.d;
  return DFunctionOnGroup{group, [split, da, db](const GroupElement& e) {
                            GroupElement left(e.begin(), e.begin() + split);
                            GroupElement right(e.begin() + split, e.end());
                            return da(left) + db(right);
                          }};
}

long long vanishing_count(const CorrectionMatrix& table) {
  if (table.row_modulus() != table.col_modulus()) {
    throw invalid_input("vanishing_count: matrix must be square");
  }
  return table.zero_count();
}

std::optional<SplittingWitness> d_hyperbolic_splitting(const DFunctionOnGroup& df) {
  long long root = 0;
  if (!is_perfect_square(df.group.order(), &root)) {
    throw invalid_input("d_hyperbolic_splitting: |group| must be a perfect square");
  }
  if (df.group.order() == 1) {
    if (df.d(df.group.zero()) != Rational(0)) return std::nullopt;
    return SplittingWitness{Subgroup::trivial(df.group), Subgroup::trivial(df.group)};
  }
  std::vector<Subgroup> halves = d_zero_subgroups_of_order(df, root);
  for (std::size_t i = 0; i < halves.size(); ++i) {
    for (std::size_t j = i + 1; j < halves.size(); ++j) {
      if (intersection(halves[i], halves[j]).order() != 1) continue;
      if (halves[i].order() * halves[j].order() != df.group.order()) continue;
      if (!is_isomorphic(halves[i], halves[j])) continue;
      return SplittingWitness{halves[i], halves[j]};
    }
  }
  return std::nullopt;
}

Rational subgroup_sum(const DFunctionOnGroup& df, const Subgroup& h) {
  if (!(h.parent() == df.group)) {
    throw invalid_input("subgroup_sum: subgroup belongs to a different group");
  }
  Rational total(0);
  for (const GroupElement& e : h.elements()) total = total + df.d(e);
  return total;
}

long long SubgroupLabel::a() const {
  if (star_) throw invalid_input("SubgroupLabel: the star label has no index");
  return a_;
}

std::string SubgroupLabel::str() const { return star_ ? "star" : std::to_string(a_); }

std::vector<SubgroupLabel> standard_labels(long long p) {
  std::vector<SubgroupLabel> out;
  for (long long a = 0; a < p; ++a) out.push_back(SubgroupLabel::of(a));
  out.push_back(SubgroupLabel::star());
  return out;
}

Subgroup standard_subgroup(const FiniteAbelianGroup& zp2, const SubgroupLabel& label) {
  if (zp2.rank() != 2 || zp2.cyclic_orders()[0] != zp2.cyclic_orders()[1] ||
      !is_prime(zp2.cyclic_orders()[0])) {
    throw invalid_input("standard_subgroup: group must be Z_p + Z_p with p prime");
  }
  const long long p = zp2.cyclic_orders()[0];
  if (label.is_star()) return Subgroup::generated(zp2, {GroupElement{1, 1}});
  const long long a = label.a();
  if (a < 0 || a >= p) throw invalid_input("standard_subgroup: label out of range");
  return Subgroup::generated(zp2, {GroupElement{a, (a + 1) % p}});
}

Rational s_lens_closed(long long p, const SubgroupLabel& a) {
  if (p < 3 || !is_prime(p)) throw invalid_input("p must be an odd prime");
  if (a.is_star()) return Rational(0);
  const long long idx = a.a();
  if (idx < 0 || idx >= p) throw invalid_input("s_lens_closed: label out of range");
  if (idx == 0) return Rational(p * p - 1, 6);
  if (idx == p - 1) return Rational(-(p * p - 1), 6);
  return Rational(0);
}

std::vector<SubgroupSumEntry> subgroup_sum_ledger(const DFunctionOnGroup& df, long long p) {
  std::vector<SubgroupSumEntry> out;
  for (const SubgroupLabel& label : standard_labels(p)) {
    out.push_back(SubgroupSumEntry{label, subgroup_sum(df, standard_subgroup(df.group, label))});
  }
  return out;
}

Rational grs_invariant(const DFunctionOnGroup& df, long long p) {
  if (p < 2 || !is_prime(p)) throw invalid_input("grs_invariant: p must be prime");
  if (df.group.order() % p != 0) return Rational(0);

  const std::vector<Subgroup> subs = subgroups_of_order_p(df.group, p);
  std::vector<Rational> sums;
  sums.reserve(subs.size());
  bool has_positive = false;
  bool has_negative = false;
  for (const Subgroup& h : subs) {
    Rational s = subgroup_sum(df, h);
    if (s > Rational(0)) has_positive = true;
    if (s < Rational(0)) has_negative = true;
    sums.push_back(std::move(s));
  }
  // Sums of both signs cancel exactly with positive integer coefficients, and
  // the support can always be padded to full p-torsion rank.
  if (has_positive && has_negative) return Rational(0);

  std::vector<std::size_t> order(subs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return rational_abs(sums[x]) < rational_abs(sums[y]);
  });

  const int needed = rp_count(df.group, p);
  FpSpan span(df.group, p);
  Rational total(0);
  for (std::size_t idx : order) {
    if (span.rank() >= needed) break;
    if (span.add(subs[idx].generators()[0])) {
      total = total + rational_abs(sums[idx]);
    }
  }
  return total;
}

StableReport stable_obstruction(const DFunctionOnGroup& df) {
  // Group coordinates by the prime of their (prime power) order.
  std::map<long long, std::vector<std::size_t>> coords_by_prime;
  const std::vector<long long>& orders = df.group.cyclic_orders();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    coords_by_prime[smallest_prime_factor(orders[i])].push_back(i);
  }

  StableReport report;
  report.stably_excluded = false;
  for (const auto& [prime, coords] : coords_by_prime) {
    StableComponent comp;
    comp.prime = prime;
    comp.rank = static_cast<long long>(coords.size());
    comp.required = comp.rank <= 4;
    comp.has_splitting = false;
    if (comp.required) {
      std::vector<long long> comp_orders;
      for (std::size_t c : coords) comp_orders.push_back(orders[c]);
      FiniteAbelianGroup comp_group(comp_orders);
      auto full_d = df.d;
      GroupElement ambient_zero = df.group.zero();
      std::vector<std::size_t> coord_map = coords;
      DFunctionOnGroup restricted{
          comp_group, [full_d, ambient_zero, coord_map](const GroupElement& e) {
            GroupElement lifted = ambient_zero;
            for (std::size_t i = 0; i < coord_map.size(); ++i) lifted[coord_map[i]] = e[i];
            return full_d(lifted);
          }};
      long long root = 0;
      if (is_perfect_square(comp_group.order(), &root)) {
        auto witness = d_hyperbolic_splitting(restricted);
        comp.has_splitting = witness.has_value();
        comp.witnesses = witness;
      }
      if (!comp.has_splitting) report.stably_excluded = true;
    }
    report.components.push_back(std::move(comp));
  }
  return report;
}

ObstructionReport full_report(long long p, long long k) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw invalid_input("p must be an odd prime");
  }
  const ZTables z = d_table_Z(p, k);
  const DFunctionOnGroup df = d_function_from_matrix(z.d);

  ObstructionReport report;
  report.p = p;
  report.k = k;
  report.zero_count = z.zeros;
  report.required_zero_count = 2 * p - 1;
  auto witness = d_hyperbolic_splitting(df);
  report.has_d_hyperbolic_splitting = witness.has_value();
  report.splitting_witnesses = witness;
  auto double_witness = d_hyperbolic_splitting(orthogonal_sum(df, df));
  report.double_has_splitting = double_witness.has_value();
  report.grs_value = grs_invariant(df, p);
  report.stable = stable_obstruction(df);

  report.verdicts.embeds_smoothly_possible =
      report.zero_count >= report.required_zero_count && report.has_d_hyperbolic_splitting;
  report.verdicts.smoothly_doubly_slice_possible =
      report.verdicts.embeds_smoothly_possible && report.grs_value == Rational(0);
  report.verdicts.stably_doubly_slice_possible = !report.stable.stably_excluded;
  report.verdicts.finite_double_concordance_order_excluded =
      !report.has_d_hyperbolic_splitting && !report.double_has_splitting;
  return report;
}

}  // namespace corrterms
