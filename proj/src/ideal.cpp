#include "oka/ideal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oka {

std::string to_string(Side side) {
  switch (side) {
    case Side::two_sided: return "two-sided";
    case Side::right: return "right";
    case Side::left: return "left";
  }
  return "?";
}

namespace {

void require_same_ring(const Ideal& i, const Ideal& j, const char* op) {
  if (i.ring() != j.ring()) throw IdealError(std::string(op) + ": ideals belong to different rings");
}

bool left_closed(Side s) { return s != Side::right; }
bool right_closed(Side s) { return s != Side::left; }

Side combine(bool left, bool right) {
  if (left && right) return Side::two_sided;
  return left ? Side::left : Side::right;
}

// I + J for additive subgroups, in time linear in |I + J|.
ElementSet sumset(const Ring& r, const ElementSet& i, const ElementSet& j) {
  ElementSet out = i;
  j.for_each([&](Element y) {
    if (out.test(y)) return;
    i.for_each([&](Element x) { out.set(r.add(x, y)); });
  });
  return out;
}

}  // namespace

void extend_subgroup(const Ring& r, ElementSet& set, Element x) {
  if (set.test(x)) return;
  ElementSet grown = set;
  Element cur = x;
  while (!set.test(cur)) {
    set.for_each([&](Element h) { grown.set(r.add(h, cur)); });
    cur = r.add(cur, x);
  }
  set = std::move(grown);
}

ElementSet additive_span(const Ring& r, std::span<const Element> gens) {
  ElementSet s(r.order());
  s.set(0);
  for (auto g : gens) extend_subgroup(r, s, g);
  return s;
}

std::vector<Element> additive_generators(const Ring& r, const ElementSet& subgroup) {
  std::vector<Element> gens;
  ElementSet span(r.order());
  span.set(0);
  subgroup.for_each([&](Element x) {
    if (!span.test(x)) {
      gens.push_back(x);
      extend_subgroup(r, span, x);
    }
  });
  return gens;
}

Ideal zero_ideal(const RingPtr& r, Side side) {
  ElementSet s(r->order());
  s.set(0);
  return Ideal(r, std::move(s), side);
}

Ideal whole_ideal(const RingPtr& r, Side side) {
  return Ideal(r, ElementSet::full(r->order()), side);
}

Ideal ideal_closure(const RingPtr& rp, std::span<const Element> gens, Side side) {
  const Ring& r = *rp;
  const std::size_t n = r.order();
  ElementSet members(n);
  members.set(0);
  std::deque<Element> pending;
  auto absorb = [&](Element x) {
    if (members.test(x)) return;
    extend_subgroup(r, members, x);
    pending.push_back(x);
  };
  for (auto g : gens) absorb(g);
  // Only elements that extended the subgroup need their products taken: the
  // subgroup they generate is closed under multiplication once they are.
  while (!pending.empty()) {
    const Element x = pending.front();
    pending.pop_front();
    for (Element s = 0; s < n; ++s) {
      if (right_closed(side)) absorb(r.mul(x, s));
      if (left_closed(side)) absorb(r.mul(s, x));
    }
  }
  return Ideal(rp, std::move(members), side);
}

Ideal principal(const RingPtr& r, Element x, Side side) {
  const Element g[] = {x};
  return ideal_closure(r, g, side);
}

bool is_ideal(const Ring& r, const ElementSet& members, Side side) {
  if (members.size() != r.order() || !members.test(0)) return false;
  bool ok = true;
  members.for_each([&](Element x) {
    if (!ok) return;
    if (!members.test(r.neg(x))) ok = false;
    members.for_each([&](Element y) {
      if (!members.test(r.add(x, y))) ok = false;
    });
    for (Element s = 0; s < r.order() && ok; ++s) {
      if (right_closed(side) && !members.test(r.mul(x, s))) ok = false;
      if (left_closed(side) && !members.test(r.mul(s, x))) ok = false;
    }
  });
  return ok;
}

std::vector<Element> generators(const Ideal& ideal) {
  std::vector<Element> gens;
  Ideal span = zero_ideal(ideal.ring(), ideal.side());
  ideal.members().for_each([&](Element x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    span = ideal_closure(ideal.ring(), gens, ideal.side());
  });
  return gens;
}

Ideal sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j, "sum");
  if (i.side() != j.side()) throw IdealError("sum: sidedness mismatch");
  return Ideal(i.ring(), sumset(*i.ring(), i.members(), j.members()), i.side());
}

Ideal intersect(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j, "intersect");
  const Side side = combine(left_closed(i.side()) && left_closed(j.side()),
                            right_closed(i.side()) && right_closed(j.side()));
  return Ideal(i.ring(), i.members() & j.members(), side);
}

Ideal product(const Ideal& i, const Ideal& j, ProductInputs inputs) {
  require_same_ring(i, j, "product");
  if (inputs == ProductInputs::two_sided &&
      (i.side() != Side::two_sided || j.side() != Side::two_sided))
    throw IdealError("product: two-sided factors required");
  const bool lc = left_closed(i.side());
  const bool rc = right_closed(j.side());
  if (!lc && !rc) throw IdealError("product: a right ideal times a left ideal is not an ideal");
  const Ring& r = *i.ring();
  const auto gi = additive_generators(r, i.members());
  const auto gj = additive_generators(r, j.members());
  ElementSet out(r.order());
  out.set(0);
  for (auto x : gi)
    for (auto y : gj) extend_subgroup(r, out, r.mul(x, y));
  return Ideal(i.ring(), std::move(out), combine(lc, rc));
}

Ideal left_quotient(const Ideal& j, const Ideal& i) {
  require_same_ring(i, j, "left_quotient");
  const Ring& r = *i.ring();
  const auto gj = additive_generators(r, j.members());
  ElementSet out(r.order());
  for (Element x = 0; x < r.order(); ++x) {
    bool in = true;
    for (auto g : gj)
      if (!i.contains(r.mul(g, x))) {
        in = false;
        break;
      }
    if (in) out.set(x);
  }
  return Ideal(i.ring(), std::move(out), Side::two_sided);
}

Ideal right_quotient(const Ideal& i, const Ideal& j) {
  require_same_ring(i, j, "right_quotient");
  const Ring& r = *i.ring();
  const auto gj = additive_generators(r, j.members());
  ElementSet out(r.order());
  for (Element x = 0; x < r.order(); ++x) {
    bool in = true;
    for (auto g : gj)
      if (!i.contains(r.mul(x, g))) {
        in = false;
        break;
      }
    if (in) out.set(x);
  }
  return Ideal(i.ring(), std::move(out), Side::two_sided);
}

std::pair<Ideal, Ideal> element_quotients(const Ideal& i, Element a) {
  const Ideal pa = principal(i.ring(), a, Side::two_sided);
  return {left_quotient(pa, i), right_quotient(i, pa)};
}

PowerChain ideal_power_stabilization(const Ideal& i) {
  PowerChain chain{{i}, 1};
  for (;;) {
    Ideal next = product(chain.powers.back(), i);
    if (next == chain.powers.back()) break;
    chain.powers.push_back(std::move(next));
  }
  chain.stable_index = chain.powers.size();
  return chain;
}

// ---------------------------------------------------------------------------
// Lattices

IdealLattice::IdealLattice(RingPtr ring, Side side, std::vector<Ideal> ideals)
    : ring_(std::move(ring)), side_(side), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end(), [](const Ideal& a, const Ideal& b) {
    return canonical_less(a.members(), b.members());
  });
  for (std::size_t k = 0; k < ideals_.size(); ++k) index_.emplace(ideals_[k].members(), k);
  supersets_.assign(ideals_.size(), ElementSet(ideals_.size()));
  for (std::size_t a = 0; a < ideals_.size(); ++a)
    for (std::size_t b = 0; b < ideals_.size(); ++b)
      if (ideals_[a].members().subset_of(ideals_[b].members())) supersets_[a].set(b);
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IdealLattice::index_of(const Ideal& ideal) const {
  auto k = find(ideal.members());
  if (!k) throw IdealError("lattice lookup: set is not a member of the " + to_string(side_) +
                           " lattice of " + ring_->label());
  return *k;
}

std::vector<std::pair<std::size_t, std::size_t>> IdealLattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !contains(b, a)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < size() && cover; ++c)
        if (c != a && c != b && contains(c, a) && contains(b, c)) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

IdealLattice all_ideals(const RingPtr& r, Side side, std::size_t lattice_cap) {
  const std::size_t n = r->order();
  std::vector<ElementSet> principals;
  {
    std::unordered_map<ElementSet, bool, ElementSetHash> seen;
    for (Element x = 0; x < n; ++x) {
      auto p = principal(r, x, side);
      if (seen.emplace(p.members(), true).second) principals.push_back(p.members());
    }
  }
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> found;
  std::vector<ElementSet> order;
  std::deque<std::size_t> work;
  auto insert = [&](ElementSet s) {
    if (found.count(s)) return;
    if (order.size() >= lattice_cap)
      throw IdealError("lattice cap exceeded: more than " + std::to_string(lattice_cap) + " " +
                       to_string(side) + " ideals in " + r->label());
    found.emplace(s, order.size());
    work.push_back(order.size());
    order.push_back(std::move(s));
  };
  insert(zero_ideal(r, side).members());
  while (!work.empty()) {
    const std::size_t k = work.front();
    work.pop_front();
    for (const auto& p : principals) {
      if (p.subset_of(order[k])) continue;
      insert(sumset(*r, order[k], p));
    }
  }
  std::vector<Ideal> ideals;
  ideals.reserve(order.size());
  for (auto& s : order) ideals.emplace_back(r, std::move(s), side);
  return IdealLattice(r, side, std::move(ideals));
}

IdealTables::IdealTables(const IdealLattice& lattice) : n_(lattice.size()) {
  if (lattice.side() != Side::two_sided)
    throw IdealError("ideal tables need the two-sided lattice");
  const auto& r = lattice.ring();
  principal_.resize(r->order());
  for (Element x = 0; x < r->order(); ++x)
    principal_[x] = lattice.index_of(oka::principal(r, x, Side::two_sided));
  sum_.resize(n_ * n_);
  product_.resize(n_ * n_);
  meet_.resize(n_ * n_);
  lquot_.resize(n_ * n_);
  rquot_.resize(n_ * n_);
  contains_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Ideal& a = lattice[i];
      const Ideal& b = lattice[j];
      sum_[i * n_ + j] = lattice.index_of(oka::sum(a, b));
      product_[i * n_ + j] = lattice.index_of(oka::product(a, b));
      meet_[i * n_ + j] = lattice.index_of(intersect(a, b));
      lquot_[i * n_ + j] = lattice.index_of(oka::left_quotient(a, b));
      rquot_[i * n_ + j] = lattice.index_of(oka::right_quotient(a, b));
      contains_[i * n_ + j] = lattice.contains(i, j) ? 1 : 0;
    }
}

}  // namespace oka
