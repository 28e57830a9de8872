#include "oka/module.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace oka {

namespace {

[[noreturn]] void fail(const std::string& axiom, std::vector<Element> witness) {
  throw AlgebraError(axiom, std::move(witness), axiom);
}

void extend_module_subgroup(const RightModule& m, ElementSet& set, Element x) {
  if (set.test(x)) return;
  ElementSet grown = set;
  Element cur = x;
  while (!set.test(cur)) {
    set.for_each([&](Element h) { grown.set(m.add(h, cur)); });
    cur = m.add(cur, x);
  }
  set = std::move(grown);
}

ElementSet module_sumset(const RightModule& m, const ElementSet& a, const ElementSet& b) {
  ElementSet out = a;
  b.for_each([&](Element y) {
    if (out.test(y)) return;
    a.for_each([&](Element x) { out.set(m.add(x, y)); });
  });
  return out;
}

}  // namespace

RightModule RightModule::from_tables(const RingPtr& ring, std::size_t n, std::vector<Element> add,
                                     std::vector<Element> action, std::string label) {
  const std::size_t q = ring->order();
  if (n == 0) fail("module order must be positive", {});
  if (add.size() != n * n || action.size() != n * q) fail("module table shape", {});
  for (auto v : add)
    if (v >= n) fail("module table shape", {v});
  for (auto v : action)
    if (v >= n) fail("module table shape", {v});
  auto ad = [&](Element x, Element y) { return add[x * n + y]; };
  auto act = [&](Element x, Element r) { return action[x * q + r]; };

  for (Element a = 0; a < n; ++a)
    if (ad(0, a) != a || ad(a, 0) != a) fail("module additive identity", {a});
  std::vector<Element> neg(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (ad(a, b) == 0) {
        neg[a] = b;
        found = true;
      }
    if (!found) fail("module additive inverse", {a});
    for (Element b = 0; b < n; ++b) {
      if (ad(a, b) != ad(b, a)) fail("module additive commutativity", {a, b});
      for (Element c = 0; c < n; ++c)
        if (ad(ad(a, b), c) != ad(a, ad(b, c))) fail("module additive associativity", {a, b, c});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (act(x, ring->one()) != x) fail("module unital", {x});
    for (Element r = 0; r < q; ++r) {
      for (Element y = 0; y < n; ++y)
        if (act(ad(x, y), r) != ad(act(x, r), act(y, r))) fail("module additivity", {x, y, r});
      for (Element s = 0; s < q; ++s) {
        if (act(x, ring->add(r, s)) != ad(act(x, r), act(x, s)))
          fail("module additivity", {x, r, s});
        if (act(x, ring->mul(r, s)) != act(act(x, r), s)) fail("module associativity", {x, r, s});
      }
    }
  }
  RightModule m;
  m.order_ = n;
  m.ring_ = ring;
  m.label_ = std::move(label);
  m.add_ = std::move(add);
  m.neg_ = std::move(neg);
  m.action_ = std::move(action);
  return m;
}

RightModule regular_module(const RingPtr& r) {
  std::vector<Element> add(r->add_table().begin(), r->add_table().end());
  std::vector<Element> action(r->mul_table().begin(), r->mul_table().end());
  return RightModule::from_tables(r, r->order(), std::move(add), std::move(action),
                                  r->label() + "_" + r->label());
}

bool is_submodule(const RightModule& m, const ElementSet& n) {
  if (n.size() != m.order() || !n.test(0)) return false;
  bool ok = true;
  n.for_each([&](Element x) {
    if (!ok) return;
    n.for_each([&](Element y) {
      if (!n.test(m.add(x, y))) ok = false;
    });
    for (Element r = 0; r < m.ring()->order() && ok; ++r)
      if (!n.test(m.act(x, r))) ok = false;
  });
  return ok;
}

ElementSet cyclic_submodule(const RightModule& m, Element x) {
  ElementSet s(m.order());
  s.set(0);
  for (Element r = 0; r < m.ring()->order(); ++r) extend_module_subgroup(m, s, m.act(x, r));
  return s;
}

RightModule quotient_module(const RightModule& m, const ElementSet& n) {
  if (!is_submodule(m, n)) throw AlgebraError("submodule", {}, "submodule: N is not a submodule of M");
  const std::size_t q = m.ring()->order();
  std::vector<Element> projection(m.order(), 0);
  std::vector<Element> reps;
  std::vector<bool> seen(m.order(), false);
  for (Element x = 0; x < m.order(); ++x) {
    if (seen[x]) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    n.for_each([&](Element y) {
      const Element z = m.add(x, y);
      seen[z] = true;
      projection[z] = c;
    });
  }
  const std::size_t k = reps.size();
  std::vector<Element> add(k * k), action(k * q);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) add[a * k + b] = projection[m.add(reps[a], reps[b])];
    for (Element r = 0; r < q; ++r) action[a * q + r] = projection[m.act(reps[a], r)];
  }
  return RightModule::from_tables(m.ring(), k, std::move(add), std::move(action),
                                  m.label() + "/N");
}

RightModule submodule_as_module(const RightModule& m, const ElementSet& n) {
  if (!is_submodule(m, n)) throw AlgebraError("submodule", {}, "submodule: N is not a submodule of M");
  const auto members = n.members();
  std::vector<Element> index(m.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Element>(i);
  const std::size_t k = members.size();
  const std::size_t q = m.ring()->order();
  std::vector<Element> add(k * k), action(k * q);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) add[a * k + b] = index[m.add(members[a], members[b])];
    for (Element r = 0; r < q; ++r) action[a * q + r] = index[m.act(members[a], r)];
  }
  return RightModule::from_tables(m.ring(), k, std::move(add), std::move(action),
                                  m.label() + "|N");
}

std::vector<ElementSet> submodules(const RightModule& m, std::size_t cap) {
  std::vector<ElementSet> cyclic;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Element x = 0; x < m.order(); ++x) {
      auto c = cyclic_submodule(m, x);
      if (seen.insert(c).second) cyclic.push_back(std::move(c));
    }
  }
  std::unordered_set<ElementSet, ElementSetHash> found;
  std::vector<ElementSet> out;
  std::deque<std::size_t> work;
  auto insert = [&](ElementSet s) {
    if (found.count(s)) return;
    if (out.size() >= cap)
      throw IdealError("submodule cap exceeded: more than " + std::to_string(cap) + " submodules");
    found.insert(s);
    work.push_back(out.size());
    out.push_back(std::move(s));
  };
  ElementSet zero(m.order());
  zero.set(0);
  insert(zero);
  while (!work.empty()) {
    const std::size_t k = work.front();
    work.pop_front();
    for (const auto& c : cyclic)
      if (!c.subset_of(out[k])) insert(module_sumset(m, out[k], c));
  }
  std::sort(out.begin(), out.end(),
            [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
  return out;
}

Ideal annihilator(const RightModule& m, const ElementSet& n) {
  const auto& r = m.ring();
  ElementSet out(r->order());
  for (Element s = 0; s < r->order(); ++s) {
    bool kills = true;
    n.for_each([&](Element x) {
      if (kills && m.act(x, s) != 0) kills = false;
    });
    if (kills) out.set(s);
  }
  return Ideal(r, std::move(out), Side::two_sided);
}

Ideal annihilator(const RightModule& m) { return annihilator(m, ElementSet::full(m.order())); }

MiddleAnnihilator middle_annihilator(const Ideal& x, const Ideal& y) {
  if (x.ring() != y.ring()) throw IdealError("middle_annihilator: ideals belong to different rings");
  const Ring& r = *x.ring();
  const auto gx = additive_generators(r, x.members());
  const auto gy = additive_generators(r, y.members());
  ElementSet out(r.order());
  for (Element s = 0; s < r.order(); ++s) {
    bool zero = true;
    for (auto a : gx) {
      const Element as = r.mul(a, s);
      for (auto b : gy)
        if (r.mul(as, b) != 0) {
          zero = false;
          break;
        }
      if (!zero) break;
    }
    if (zero) out.set(s);
  }
  const bool qualifies = !product(x, y).is_zero();
  return {Ideal(x.ring(), std::move(out), Side::two_sided), qualifies};
}

}  // namespace oka
