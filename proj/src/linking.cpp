#include "corrterms/linking.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace corrterms {

Rational reduce_mod_1(const Rational& r) {
  long long n = r.num() % r.den();
  if (n < 0) n += r.den();
  return Rational(n, r.den());
}

LinkingForm::LinkingForm(FiniteAbelianGroup group, std::vector<std::vector<Rational>> gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
  size_t r = static_cast<size_t>(group_.rank());
  if (gram_.size() != r) {
    throw invalid_input("linking form: Gram matrix size does not match group rank");
  }
  for (auto& row : gram_) {
    if (row.size() != r) {
      throw invalid_input("linking form: Gram matrix is not square");
    }
    for (auto& entry : row) entry = reduce_mod_1(entry);
  }
  const auto& orders = group_.cyclic_orders();
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      if (!(gram_[i][j] == gram_[j][i])) {
        throw invalid_input("linking form: Gram matrix is not symmetric mod 1");
      }
      // lambda(q * e_i, e_j) must vanish mod 1 when q is the order of e_i.
      if (gram_[i][j].den() != 1 && orders[i] % gram_[i][j].den() != 0) {
        throw invalid_input("linking form: entry order incompatible with group order");
      }
    }
  }
}

Rational LinkingForm::evaluate(const GroupElement& a, const GroupElement& b) const {
  GroupElement x = group_.reduce(a);
  GroupElement y = group_.reduce(b);
  Rational total(0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      total += gram_[i][j] * Rational(x[i] * y[j]);
      total = reduce_mod_1(total);
    }
  }
  return reduce_mod_1(total);
}

bool LinkingForm::is_nondegenerate() const {
  std::vector<GroupElement> all = group_.all_elements();
  for (const GroupElement& x : all) {
    if (group_.is_zero(x)) continue;
    bool pairs_nontrivially = false;
    for (const GroupElement& y : all) {
      if (!evaluate(x, y).is_zero()) {
        pairs_nontrivially = true;
        break;
      }
    }
    if (!pairs_nontrivially) return false;
  }
  return true;
}

LinkingForm orthogonal_sum(const LinkingForm& a, const LinkingForm& b) {
  FiniteAbelianGroup group = direct_sum(a.group_, b.group_);
  size_t ra = a.gram_.size();
  size_t rb = b.gram_.size();
  std::vector<std::vector<Rational>> gram(ra + rb, std::vector<Rational>(ra + rb, Rational(0)));
  for (size_t i = 0; i < ra; ++i) {
    for (size_t j = 0; j < ra; ++j) gram[i][j] = a.gram_[i][j];
  }
  for (size_t i = 0; i < rb; ++i) {
    for (size_t j = 0; j < rb; ++j) gram[ra + i][ra + j] = b.gram_[i][j];
  }
  return LinkingForm(std::move(group), std::move(gram));
}

namespace {

long long integer_sqrt_exact(long long n) {
  long long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

// Depth-first enumeration of subgroups whose elements all satisfy the
// vanishing function and pair trivially under the form.  Candidates are
// filtered on the vanishing function first (it is usually nonzero almost
// everywhere), then on self-pairing.  Subgroups are deduplicated by their
// sorted element set; the first visit of each subgroup arrives through its
// greedy minimal generator chain, so skipping revisits loses nothing.
struct MetabolicSearch {
  const LinkingTriple& t;
  long long target;
  std::vector<GroupElement> candidates;
  std::set<std::vector<GroupElement>> visited;
  std::vector<Subgroup> found;
  bool stop_at_first = false;

  bool vanishing_on(const Subgroup& w) const {
    for (const GroupElement& e : w.elements()) {
      if (!t.d(e).is_zero()) return false;
    }
    return true;
  }

  // Returns true when the search should stop (first witness found in
  // stop_at_first mode).
  bool explore(const Subgroup& w, size_t start) {
    if (w.order() == target) {
      found.push_back(w);
      return stop_at_first;
    }
    for (size_t idx = start; idx < candidates.size(); ++idx) {
      const GroupElement& e = candidates[idx];
      if (w.contains(e)) continue;
      bool isotropic_with_w = true;
      for (const GroupElement& g : w.generators()) {
        if (!t.form.evaluate(e, g).is_zero()) {
          isotropic_with_w = false;
          break;
        }
      }
      if (!isotropic_with_w) continue;
      std::vector<GroupElement> gens = w.generators();
      gens.push_back(e);
      Subgroup next = Subgroup::generated(t.group, std::move(gens));
      if (next.order() > target) continue;
      if (!visited.insert(next.elements()).second) continue;
      if (!vanishing_on(next)) continue;
      if (explore(next, idx + 1)) return true;
    }
    return false;
  }
};

std::vector<Subgroup> metabolic_witnesses_single_component(const LinkingTriple& t,
                                                           bool stop_at_first) {
  long long n = t.group.order();
  long long root = integer_sqrt_exact(n);
  if (root < 0) return {};
  if (!t.d(t.group.zero()).is_zero()) return {};
  MetabolicSearch search{t, root, {}, {}, {}, stop_at_first};
  for (const GroupElement& e : t.group.all_elements()) {
    if (t.group.is_zero(e)) continue;
    if (!t.d(e).is_zero()) continue;
    if (!t.form.evaluate(e, e).is_zero()) continue;
    search.candidates.push_back(e);
  }
  Subgroup root_subgroup = Subgroup::trivial(t.group);
  search.visited.insert(root_subgroup.elements());
  search.explore(root_subgroup, 0);
  return std::move(search.found);
}

std::vector<long long> distinct_primes_of(const FiniteAbelianGroup& g) {
  std::set<long long> primes;
  for (long long q : g.cyclic_orders()) {
    long long p = 2;
    while (q % p != 0) ++p;
    primes.insert(p);
  }
  return std::vector<long long>(primes.begin(), primes.end());
}

}  // namespace

std::vector<Subgroup> all_metabolic_subgroups(const LinkingTriple& t) {
  if (t.group.rank() == 0) {
    if (!t.d(t.group.zero()).is_zero()) return {};
    return {Subgroup::trivial(t.group)};
  }
  std::vector<long long> primes = distinct_primes_of(t.group);
  if (primes.size() <= 1) {
    return metabolic_witnesses_single_component(t, false);
  }
  // Multi-prime groups: a witness splits over the homogeneous p-components,
  // so search each component and recombine, re-checking the vanishing
  // function on every combined subgroup (it need not split).
  struct Component {
    std::vector<int> coords;
    FiniteAbelianGroup group;
  };
  std::vector<Component> components;
  const auto& orders = t.group.cyclic_orders();
  for (long long p : primes) {
    Component c;
    std::vector<long long> sub_orders;
    for (int i = 0; i < static_cast<int>(orders.size()); ++i) {
      if (orders[static_cast<size_t>(i)] % p == 0) {
        c.coords.push_back(i);
        sub_orders.push_back(orders[static_cast<size_t>(i)]);
      }
    }
    c.group = FiniteAbelianGroup(std::move(sub_orders));
    components.push_back(std::move(c));
  }
  auto embed = [&](const Component& c, const GroupElement& local) {
    GroupElement out = t.group.zero();
    for (size_t i = 0; i < c.coords.size(); ++i) {
      out[static_cast<size_t>(c.coords[i])] = local[i];
    }
    return out;
  };
  std::vector<std::vector<Subgroup>> component_witnesses;
  for (const Component& c : components) {
    std::vector<std::vector<Rational>> gram(c.coords.size(),
                                            std::vector<Rational>(c.coords.size()));
    LinkingForm whole = t.form;
    for (size_t i = 0; i < c.coords.size(); ++i) {
      for (size_t j = 0; j < c.coords.size(); ++j) {
        GroupElement ei = c.group.basis(static_cast<int>(i));
        GroupElement ej = c.group.basis(static_cast<int>(j));
        gram[i][j] = whole.evaluate(embed(c, ei), embed(c, ej));
      }
    }
    LinkingTriple restricted{
        c.group, LinkingForm(c.group, std::move(gram)),
        [&t, &c, embed](const GroupElement& e) { return t.d(embed(c, e)); }};
    component_witnesses.push_back(metabolic_witnesses_single_component(restricted, false));
    if (component_witnesses.back().empty()) return {};
  }
  std::vector<Subgroup> out;
  std::vector<size_t> pick(components.size(), 0);
  while (true) {
    std::vector<GroupElement> gens;
    for (size_t ci = 0; ci < components.size(); ++ci) {
      for (const GroupElement& g :
           component_witnesses[ci][pick[ci]].generators()) {
        gens.push_back(embed(components[ci], g));
      }
    }
    Subgroup combined = Subgroup::generated(t.group, std::move(gens));
    bool vanishes = true;
    for (const GroupElement& e : combined.elements()) {
      if (!t.d(e).is_zero()) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) out.push_back(std::move(combined));
    size_t ci = components.size();
    while (ci > 0) {
      --ci;
      if (++pick[ci] < component_witnesses[ci].size()) break;
      pick[ci] = 0;
      if (ci == 0) return out;
    }
  }
}

MetabolicResult is_metabolic(const LinkingTriple& t) {
  MetabolicResult result;
  if (t.group.rank() == 0) {
    if (t.d(t.group.zero()).is_zero()) {
      result.found = true;
      result.witness = Subgroup::trivial(t.group);
    }
    return result;
  }
  std::vector<long long> primes = distinct_primes_of(t.group);
  std::vector<Subgroup> witnesses;
  if (primes.size() <= 1) {
    witnesses = metabolic_witnesses_single_component(t, true);
  } else {
    witnesses = all_metabolic_subgroups(t);
  }
  if (!witnesses.empty()) {
    result.found = true;
    result.witness = witnesses.front();
  }
  return result;
}

HyperbolicResult is_hyperbolic(const LinkingTriple& t) {
  HyperbolicResult result;
  if (t.group.rank() == 0 || t.group.order() == 1) {
    if (t.d(t.group.zero()).is_zero()) {
      result.found = true;
      result.witnesses = {Subgroup::trivial(t.group), Subgroup::trivial(t.group)};
    }
    return result;
  }
  std::vector<Subgroup> witnesses = all_metabolic_subgroups(t);
  for (size_t i = 0; i < witnesses.size(); ++i) {
    for (size_t j = i + 1; j < witnesses.size(); ++j) {
      if (intersection(witnesses[i], witnesses[j]).order() != 1) continue;
      if (!is_isomorphic(witnesses[i], witnesses[j])) continue;
      if (witnesses[i].order() * witnesses[j].order() != t.group.order()) continue;
      result.found = true;
      result.witnesses = {witnesses[i], witnesses[j]};
      return result;
    }
  }
  return result;
}

RankSixExample build_rank6_example(long long p) {
  if (p == 2 || !is_prime(p)) {
    throw invalid_input("rank-6 example: p = " + std::to_string(p) +
                        " must be an odd prime");
  }
  FiniteAbelianGroup a_group = FiniteAbelianGroup::elementary(p, 6);
  FiniteAbelianGroup b_group = FiniteAbelianGroup::elementary(p, 6);
  // Coordinates: A = (z1, w1, z2, w2, z3, w3), B = (x1, y1, x2, y2, x3, y3);
  // z_i / x_i at even indices, w_i / y_i at odd indices.
  auto block_gram = [&](long long numer) {
    std::vector<std::vector<Rational>> gram(6, std::vector<Rational>(6, Rational(0)));
    for (int i = 0; i < 3; ++i) {
      gram[static_cast<size_t>(2 * i)][static_cast<size_t>(2 * i + 1)] = Rational(numer, p);
      gram[static_cast<size_t>(2 * i + 1)][static_cast<size_t>(2 * i)] = Rational(numer, p);
    }
    return gram;
  };
  LinkingForm mu(a_group, block_gram(-2));
  LinkingForm nu(b_group, block_gram(2));

  auto basis_span = [](const FiniteAbelianGroup& g, std::initializer_list<int> idx) {
    std::vector<GroupElement> gens;
    for (int i : idx) gens.push_back(g.basis(i));
    return Subgroup::generated(g, gens);
  };
  Subgroup a0 = basis_span(a_group, {0, 2, 4});  // <z1, z2, z3>
  Subgroup a1 = basis_span(a_group, {1, 3, 5});  // <w1, w2, w3>
  Subgroup b0_l = basis_span(b_group, {0, 2, 4});  // <x1, x2, x3>
  Subgroup b1_l = basis_span(b_group, {1, 3, 4});  // <y1, y2, x3>
  Subgroup b0_m = basis_span(b_group, {0, 3, 5});  // <x1, y2, y3>
  Subgroup b1_m = basis_span(b_group, {1, 2, 5});  // <y1, x2, y3>

  auto metabolizers = std::make_shared<std::vector<Subgroup>>(
      std::vector<Subgroup>{b0_l, b1_l, b0_m, b1_m});
  std::function<Rational(const GroupElement&)> g_fn =
      [metabolizers](const GroupElement& b) {
        for (const Subgroup& w : *metabolizers) {
          if (w.contains(b)) return Rational(0);
        }
        return Rational(1);
      };
  auto a_halves = std::make_shared<std::pair<Subgroup, Subgroup>>(a0, a1);
  std::function<Rational(const GroupElement&)> f_fn =
      [a_halves, g_fn](const GroupElement& a) {
        if (a_halves->first.contains(a) || a_halves->second.contains(a)) {
          return Rational(0);
        }
        // The correspondence z_i -> x_i, w_i -> y_i is the identity on
        // coordinate vectors.
        return -g_fn(a);
      };

  FiniteAbelianGroup ab = direct_sum(a_group, b_group);
  auto pair_gen = [&](const GroupElement& a_part, const GroupElement& b_part) {
    return join_elements(a_part, b_part);
  };
  GroupElement zero_a = a_group.zero();
  GroupElement zero_b = b_group.zero();
  Subgroup l = Subgroup::generated(
      ab, {pair_gen(a_group.basis(0), b_group.basis(0)),   // (z1, x1)
           pair_gen(a_group.basis(2), b_group.basis(2)),   // (z2, x2)
           pair_gen(a_group.basis(1), b_group.basis(1)),   // (w1, y1)
           pair_gen(a_group.basis(3), b_group.basis(3)),   // (w2, y2)
           pair_gen(zero_a, b_group.basis(4)),             // (0, x3)
           pair_gen(a_group.basis(5), zero_b)});           // (w3, 0)
  Subgroup m = Subgroup::generated(
      ab, {pair_gen(a_group.basis(0), b_group.basis(3)),   // (z1, y2)
           pair_gen(a_group.basis(4), b_group.basis(0)),   // (z3, x1)
           pair_gen(a_group.basis(1), b_group.basis(2)),   // (w1, x2)
           pair_gen(a_group.basis(5), b_group.basis(1)),   // (w3, y1)
           pair_gen(zero_a, b_group.basis(5)),             // (0, y3)
           pair_gen(a_group.basis(3), zero_b)});           // (w2, 0)

  return RankSixExample{LinkingTriple{a_group, mu, f_fn},
                        LinkingTriple{b_group, nu, g_fn},
                        std::move(l),
                        std::move(m),
                        std::move(a0),
                        std::move(a1),
                        std::move(b0_l),
                        std::move(b1_l),
                        std::move(b0_m),
                        std::move(b1_m)};
}

std::pair<Subgroup, Subgroup> split_projection(const Subgroup& s, const Subgroup& a0,
                                               const Subgroup& a1,
                                               const FiniteAbelianGroup& a_group,
                                               const FiniteAbelianGroup& b_group) {
  size_t a_rank = static_cast<size_t>(a_group.rank());
  size_t b_rank = static_cast<size_t>(b_group.rank());
  if (s.parent().rank() != static_cast<int>(a_rank + b_rank)) {
    throw invalid_input("split_projection: subgroup does not live in A + B");
  }
  if (intersection(a0, a1).order() != 1 || a0.order() * a1.order() != a_group.order()) {
    throw invalid_input("split_projection: A_0, A_1 do not split A");
  }
  if (s.order() * s.order() != s.parent().order()) {
    throw invalid_input("split_projection: subgroup order squared differs from |A + B|");
  }
  std::vector<GroupElement> proj0;
  std::vector<GroupElement> proj1;
  for (const GroupElement& e : s.elements()) {
    GroupElement a_part(e.begin(), e.begin() + static_cast<long>(a_rank));
    GroupElement b_part(e.begin() + static_cast<long>(a_rank), e.end());
    if (a0.contains(a_part)) proj0.push_back(b_part);
    if (a1.contains(a_part)) proj1.push_back(b_part);
  }
  Subgroup b0 = Subgroup::generated(b_group, std::move(proj0));
  Subgroup b1 = Subgroup::generated(b_group, std::move(proj1));
  if (b0.order() * b1.order() != b_group.order()) {
    throw invalid_input(
        "split_projection: induced projections do not split B (orders " +
        std::to_string(b0.order()) + " * " + std::to_string(b1.order()) +
        " != " + std::to_string(b_group.order()) + ")");
  }
  return {std::move(b0), std::move(b1)};
}

std::array<Subgroup, 4> extract_metabolizers(const Subgroup& l, const Subgroup& m,
                                             const Subgroup& a0, const Subgroup& a1,
                                             const FiniteAbelianGroup& a_group,
                                             const FiniteAbelianGroup& b_group) {
  auto [b0_l, b1_l] = split_projection(l, a0, a1, a_group, b_group);
  auto [b0_m, b1_m] = split_projection(m, a0, a1, a_group, b_group);
  return {std::move(b0_l), std::move(b1_l), std::move(b0_m), std::move(b1_m)};
}

}  // namespace corrterms
