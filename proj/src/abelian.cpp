#include "corrterms/abelian.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace corrterms {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long long n) {
  if (n < 2) return false;
  long long d = 2;
  while (d * d <= n && n % d != 0) ++d;
  long long p = (d * d <= n) ? d : n;
  while (n % p == 0) n /= p;
  return n == 1;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  for (long long q : orders_) {
    if (!is_prime_power(q)) {
      throw invalid_input("abelian group: cyclic factor order " + std::to_string(q) +
                          " is not a prime power");
    }
  }
}

FiniteAbelianGroup FiniteAbelianGroup::elementary(long long p, int rank) {
  if (!is_prime_power(p)) {
    throw invalid_input("abelian group: order " + std::to_string(p) +
                        " is not a prime power");
  }
  if (rank < 0) throw invalid_input("abelian group: negative rank");
  return FiniteAbelianGroup(std::vector<long long>(static_cast<size_t>(rank), p));
}

long long FiniteAbelianGroup::order() const {
  long long n = 1;
  for (long long q : orders_) n *= q;
  return n;
}

GroupElement FiniteAbelianGroup::reduce(GroupElement e) const {
  if (e.size() != orders_.size()) {
    throw invalid_input("abelian group: element has wrong number of coordinates");
  }
  for (size_t i = 0; i < e.size(); ++i) {
    long long r = e[i] % orders_[i];
    if (r < 0) r += orders_[i];
    e[i] = r;
  }
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.size() != orders_.size() || b.size() != orders_.size()) {
    throw invalid_input("abelian group: element has wrong number of coordinates");
  }
  GroupElement out(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    out[i] = (a[i] + b[i]) % orders_[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  GroupElement out(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    out[i] = (orders_[i] - a[i] % orders_[i]) % orders_[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::scalar_mul(long long k, const GroupElement& a) const {
  GroupElement out(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long r = (a[i] % orders_[i]) * (k % orders_[i]) % orders_[i];
    if (r < 0) r += orders_[i];
    out[i] = r;
  }
  return out;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

long long FiniteAbelianGroup::element_order(const GroupElement& a) const {
  long long ord = 1;
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long q = orders_[i];
    long long c = ((a[i] % q) + q) % q;
    long long coord_order = q / std::gcd(q, c == 0 ? q : c);
    ord = std::lcm(ord, coord_order);
  }
  return ord;
}

std::vector<GroupElement> FiniteAbelianGroup::all_elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(order()));
  GroupElement cur = zero();
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(orders_.size()) - 1;
    while (i >= 0) {
      if (++cur[static_cast<size_t>(i)] < orders_[static_cast<size_t>(i)]) break;
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  // A trivial group still has exactly one element (the empty tuple).
  return out;
}

GroupElement FiniteAbelianGroup::basis(int i) const {
  GroupElement e = zero();
  e.at(static_cast<size_t>(i)) = 1;
  return e;
}

std::string FiniteAbelianGroup::describe() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << " + ";
    os << "Z_" << orders_[i];
  }
  return os.str();
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  std::vector<long long> orders = a.cyclic_orders();
  orders.insert(orders.end(), b.cyclic_orders().begin(), b.cyclic_orders().end());
  return FiniteAbelianGroup(std::move(orders));
}

GroupElement join_elements(const GroupElement& a, const GroupElement& b) {
  GroupElement out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Subgroup Subgroup::generated(const FiniteAbelianGroup& parent,
                             std::vector<GroupElement> generators) {
  std::set<GroupElement> seen;
  std::deque<GroupElement> frontier;
  GroupElement zero = parent.zero();
  seen.insert(zero);
  frontier.push_back(zero);
  std::vector<GroupElement> gens;
  gens.reserve(generators.size());
  for (const GroupElement& g : generators) gens.push_back(parent.reduce(g));
  while (!frontier.empty()) {
    GroupElement cur = frontier.front();
    frontier.pop_front();
    for (const GroupElement& g : gens) {
      GroupElement next = parent.add(cur, g);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::vector<GroupElement> elements(seen.begin(), seen.end());
  return Subgroup(parent, std::move(gens), std::move(elements));
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& parent) {
  return generated(parent, {});
}

Subgroup Subgroup::from_elements(const FiniteAbelianGroup& parent,
                                 std::vector<GroupElement> elements) {
  for (GroupElement& e : elements) e = parent.reduce(e);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup closed = generated(parent, elements);
  if (closed.elements() != elements) {
    throw invariant_error("subgroup: element set is not closed under addition");
  }
  return closed;
}

bool Subgroup::contains(const GroupElement& e) const {
  GroupElement r = parent_.reduce(e);
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

std::map<long long, long long> Subgroup::order_multiset() const {
  std::map<long long, long long> out;
  for (const GroupElement& e : elements_) ++out[parent_.element_order(e)];
  return out;
}

bool is_isomorphic(const Subgroup& a, const Subgroup& b) {
  return a.order_multiset() == b.order_multiset();
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<GroupElement> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return Subgroup::from_elements(a.parent(), std::move(common));
}

Subgroup subgroup_sum_of(const Subgroup& a, const Subgroup& b) {
  std::vector<GroupElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated(a.parent(), std::move(gens));
}

namespace {

// Order-p elements expressed through the p-torsion: one F_p coordinate per
// p-power cyclic factor, where the factor Z_{p^k} contributes its subgroup
// generated by p^(k-1).
struct TorsionFrame {
  std::vector<int> factor_index;
  std::vector<long long> factor_scale;
};

TorsionFrame torsion_frame(const FiniteAbelianGroup& group, long long p) {
  TorsionFrame frame;
  const auto& orders = group.cyclic_orders();
  for (int i = 0; i < static_cast<int>(orders.size()); ++i) {
    long long q = orders[static_cast<size_t>(i)];
    if (q % p != 0) continue;
    long long scale = 1;
    while (scale * p < q) scale *= p;
    frame.factor_index.push_back(i);
    frame.factor_scale.push_back(scale);
  }
  return frame;
}

}  // namespace

std::vector<Subgroup> subgroups_of_order_p(const FiniteAbelianGroup& group, long long p) {
  if (!is_prime(p)) {
    throw invalid_input("subgroups_of_order_p: p = " + std::to_string(p) +
                        " is not prime");
  }
  TorsionFrame frame = torsion_frame(group, p);
  int r = static_cast<int>(frame.factor_index.size());
  std::vector<Subgroup> out;
  if (r == 0) return out;
  // Projective-line representatives: first nonzero torsion coordinate is 1.
  std::vector<long long> coords(static_cast<size_t>(r), 0);
  for (int lead = 0; lead < r; ++lead) {
    std::fill(coords.begin(), coords.end(), 0);
    coords[static_cast<size_t>(lead)] = 1;
    while (true) {
      GroupElement gen = group.zero();
      for (int i = 0; i < r; ++i) {
        gen[static_cast<size_t>(frame.factor_index[static_cast<size_t>(i)])] =
            coords[static_cast<size_t>(i)] *
            frame.factor_scale[static_cast<size_t>(i)];
      }
      out.push_back(Subgroup::generated(group, {gen}));
      // Advance the free coordinates (those after the leading 1) as a base-p
      // counter.
      int i = r - 1;
      while (i > lead) {
        if (++coords[static_cast<size_t>(i)] < p) break;
        coords[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i == lead) break;
    }
  }
  return out;
}

int rp_count(const FiniteAbelianGroup& group, long long p) {
  if (!is_prime(p)) {
    throw invalid_input("rp_count: p = " + std::to_string(p) + " is not prime");
  }
  int count = 0;
  for (long long q : group.cyclic_orders()) {
    if (q % p == 0) ++count;
  }
  return count;
}

FpSpan::FpSpan(const FiniteAbelianGroup& group, long long p) : group_(&group), p_(p) {
  if (!is_prime(p)) {
    throw invalid_input("FpSpan: p = " + std::to_string(p) + " is not prime");
  }
  TorsionFrame frame = torsion_frame(group, p);
  factor_index_ = std::move(frame.factor_index);
  factor_scale_ = std::move(frame.factor_scale);
}

std::vector<long long> FpSpan::torsion_coordinates(const GroupElement& e) const {
  GroupElement r = group_->reduce(e);
  if (group_->element_order(r) != p_) {
    throw invalid_input("FpSpan: element does not have order p");
  }
  std::vector<long long> coords(factor_index_.size(), 0);
  for (size_t i = 0; i < factor_index_.size(); ++i) {
    long long v = r[static_cast<size_t>(factor_index_[i])];
    if (v % factor_scale_[i] != 0) {
      throw invariant_error("FpSpan: order-p element outside the p-torsion frame");
    }
    coords[i] = (v / factor_scale_[i]) % p_;
  }
  for (size_t i = 0; i < r.size(); ++i) {
    bool tracked = std::find(factor_index_.begin(), factor_index_.end(),
                             static_cast<int>(i)) != factor_index_.end();
    if (!tracked && r[i] != 0) {
      throw invariant_error("FpSpan: order-p element has support outside p-torsion");
    }
  }
  return coords;
}

bool FpSpan::add(const GroupElement& e) {
  std::vector<long long> v = torsion_coordinates(e);
  for (const auto& row : rows_) {
    // Eliminate with the row's leading coordinate.
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    long long factor = v[lead] % p_;
    if (factor != 0) {
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] = ((v[i] - factor * row[i]) % p_ + p_) % p_;
      }
    }
  }
  size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  // Normalize the leading entry to 1 (p prime, so invertible).
  long long inv = 1;
  for (long long t = 1; t < p_; ++t) {
    if (v[lead] * t % p_ == 1) {
      inv = t;
      break;
    }
  }
  for (auto& c : v) c = c * inv % p_;
  rows_.push_back(std::move(v));
  ++rank_;
  return true;
}

}  // namespace corrterms
