#include "oka/ring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <deque>
#include <numeric>
#include <sstream>

namespace oka {

namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

[[noreturn]] void fail(const std::string& axiom, std::vector<Element> witness,
                       const std::string& detail) {
  throw AlgebraError(axiom, std::move(witness), axiom + ": " + detail);
}

void check_cap(std::size_t order, const Caps& caps, const std::string& what) {
  if (order > caps.order) {
    std::ostringstream os;
    os << what << " has order " << order << ", above the order cap " << caps.order;
    throw AlgebraError("order cap", {}, os.str());
  }
}

// Inverse table for a validated abelian group; throws if some element has no
// inverse.
std::vector<Element> additive_inverses(std::size_t n, const std::vector<Element>& add,
                                       const std::string& axiom) {
  std::vector<Element> neg(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n; ++b) {
      if (add[a * n + b] == 0) {
        neg[a] = b;
        found = true;
        break;
      }
    }
    if (!found) fail(axiom, {a}, "element " + std::to_string(a) + " has no additive inverse");
  }
  return neg;
}

void validate_abelian_group(std::size_t n, const std::vector<Element>& add) {
  for (Element a = 0; a < n; ++a) {
    if (add[a] != a || add[a * n] != a)
      fail("additive identity", {a}, "0 + " + std::to_string(a) + " != " + std::to_string(a));
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (add[a * n + b] != add[b * n + a])
        fail("additive commutativity", {a, b}, "a+b != b+a at " + triple(a, b, 0));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = add[a * n + b];
      for (Element c = 0; c < n; ++c)
        if (add[ab * n + c] != add[a * n + add[b * n + c]])
          fail("additive associativity", {a, b, c}, "(a+b)+c != a+(b+c) at " + triple(a, b, c));
    }
}

void validate_tables_shape(std::size_t n, const std::vector<Element>& t, std::size_t expected,
                           const std::string& name) {
  if (t.size() != expected)
    throw AlgebraError("table shape", {}, name + " table has " + std::to_string(t.size()) +
                                              " entries, expected " + std::to_string(expected));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= n)
      throw AlgebraError("table shape", {static_cast<Element>(i)},
                         name + " table entry " + std::to_string(i) + " is out of range");
}

}  // namespace

RingPtr Ring::from_tables(std::size_t n, std::vector<Element> add, std::vector<Element> mul,
                          Element zero, Element one, std::string label, const Caps& caps) {
  if (n == 0) throw AlgebraError("order", {}, "order: a ring needs at least one element");
  check_cap(n, caps, label);
  validate_tables_shape(n, add, n * n, "addition");
  validate_tables_shape(n, mul, n * n, "multiplication");
  if (zero != 0) throw AlgebraError("zero index", {zero}, "zero index: element 0 must be zero");
  if (one >= n) throw AlgebraError("table shape", {one}, "one index out of range");

  validate_abelian_group(n, add);
  auto neg = additive_inverses(n, add, "additive inverse");

  for (Element a = 0; a < n; ++a)
    if (mul[one * n + a] != a || mul[a * n + one] != a)
      fail("no multiplicative identity", {one, a},
           "element " + std::to_string(one) + " is not a two-sided identity (fails at " +
               std::to_string(a) + ")");

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = mul[a * n + b];
      for (Element c = 0; c < n; ++c)
        if (mul[ab * n + c] != mul[a * n + mul[b * n + c]])
          fail("multiplicative associativity", {a, b, c},
               "(ab)c != a(bc) at " + triple(a, b, c));
    }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element bc = add[b * n + c];
        if (mul[a * n + bc] != add[mul[a * n + b] * n + mul[a * n + c]])
          fail("left distributivity", {a, b, c}, "a(b+c) != ab+ac at " + triple(a, b, c));
        const Element ab = add[a * n + b];
        if (mul[ab * n + c] != add[mul[a * n + c] * n + mul[b * n + c]])
          fail("right distributivity", {a, b, c}, "(a+b)c != ac+bc at " + triple(a, b, c));
      }

  auto r = std::shared_ptr<Ring>(new Ring());
  r->order_ = n;
  r->one_ = one;
  r->label_ = std::move(label);
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->neg_ = std::move(neg);
  return r;
}

RingPtr Ring::with_triangular(TriangularShape shape) const {
  auto r = std::shared_ptr<Ring>(new Ring(*this));
  r->triangular_ = shape;
  return r;
}

// ---------------------------------------------------------------------------
// Bimodules

Bimodule Bimodule::regular(const RingPtr& a) { return regular_power(a, 1); }

Bimodule Bimodule::regular_power(const RingPtr& a, std::size_t k) {
  if (k == 0) throw AlgebraError("bimodule", {}, "bimodule: power must be positive");
  const std::size_t q = a->order();
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order *= q;
  auto digits = [&](std::size_t x) {
    std::vector<Element> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = static_cast<Element>(x % q);
      x /= q;
    }
    return d;
  };
  auto pack = [&](const std::vector<Element>& d) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * q + d[i];
    return static_cast<Element>(x);
  };
  std::vector<Element> add(order * order), left(q * order), right(order * q);
  for (std::size_t x = 0; x < order; ++x) {
    const auto dx = digits(x);
    for (std::size_t y = 0; y < order; ++y) {
      const auto dy = digits(y);
      std::vector<Element> s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = a->add(dx[i], dy[i]);
      add[x * order + y] = pack(s);
    }
    for (Element c = 0; c < q; ++c) {
      std::vector<Element> l(k), r(k);
      for (std::size_t i = 0; i < k; ++i) {
        l[i] = a->mul(c, dx[i]);
        r[i] = a->mul(dx[i], c);
      }
      left[c * order + x] = pack(l);
      right[x * q + c] = pack(r);
    }
  }
  std::string label = k == 1 ? a->label() : a->label() + "^" + std::to_string(k);
  return from_tables(a, a, order, std::move(add), std::move(left), std::move(right), label);
}

Bimodule Bimodule::from_tables(const RingPtr& a, const RingPtr& b, std::size_t n,
                               std::vector<Element> add, std::vector<Element> left_action,
                               std::vector<Element> right_action, std::string label) {
  if (n == 0) throw AlgebraError("order", {}, "order: a bimodule needs at least one element");
  validate_tables_shape(n, add, n * n, "bimodule addition");
  validate_tables_shape(n, left_action, a->order() * n, "left action");
  validate_tables_shape(n, right_action, n * b->order(), "right action");
  validate_abelian_group(n, add);
  auto neg = additive_inverses(n, add, "bimodule additive inverse");

  const std::size_t qa = a->order();
  const std::size_t qb = b->order();
  auto la = [&](Element r, Element m) { return left_action[r * n + m]; };
  auto ra = [&](Element m, Element s) { return right_action[m * qb + s]; };
  auto ad = [&](Element x, Element y) { return add[x * n + y]; };

  for (Element m = 0; m < n; ++m) {
    if (la(a->one(), m) != m) fail("bimodule left unital", {m}, "1m != m");
    if (ra(m, b->one()) != m) fail("bimodule right unital", {m}, "m1 != m");
  }
  for (Element r = 0; r < qa; ++r)
    for (Element m = 0; m < n; ++m) {
      for (Element m2 = 0; m2 < n; ++m2)
        if (la(r, ad(m, m2)) != ad(la(r, m), la(r, m2)))
          fail("bimodule left additivity", {r, m, m2}, "r(m+m') != rm+rm'");
      for (Element r2 = 0; r2 < qa; ++r2) {
        if (la(a->add(r, r2), m) != ad(la(r, m), la(r2, m)))
          fail("bimodule left additivity", {r, r2, m}, "(r+r')m != rm+r'm");
        if (la(a->mul(r, r2), m) != la(r, la(r2, m)))
          fail("bimodule left associativity", {r, r2, m}, "(rr')m != r(r'm)");
      }
      for (Element s = 0; s < qb; ++s)
        if (ra(la(r, m), s) != la(r, ra(m, s)))
          fail("bimodule associativity", {r, m, s}, "(rm)s != r(ms)");
    }
  for (Element m = 0; m < n; ++m)
    for (Element s = 0; s < qb; ++s) {
      for (Element m2 = 0; m2 < n; ++m2)
        if (ra(ad(m, m2), s) != ad(ra(m, s), ra(m2, s)))
          fail("bimodule right additivity", {m, m2, s}, "(m+m')s != ms+m's");
      for (Element s2 = 0; s2 < qb; ++s2) {
        if (ra(m, b->add(s, s2)) != ad(ra(m, s), ra(m, s2)))
          fail("bimodule right additivity", {m, s, s2}, "m(s+s') != ms+ms'");
        if (ra(m, b->mul(s, s2)) != ra(ra(m, s), s2))
          fail("bimodule right associativity", {m, s, s2}, "m(ss') != (ms)s'");
      }
    }

  Bimodule bm;
  bm.order_ = n;
  bm.left_ = a;
  bm.right_ = b;
  bm.label_ = std::move(label);
  bm.add_ = std::move(add);
  bm.neg_ = std::move(neg);
  bm.left_action_ = std::move(left_action);
  bm.right_action_ = std::move(right_action);
  return bm;
}

// ---------------------------------------------------------------------------
// Constructors

RingPtr build_zn(std::size_t n, const Caps& caps) {
  if (n == 0) throw AlgebraError("order", {}, "order: Z/0 is not a finite ring");
  check_cap(n, caps, "Z" + std::to_string(n));
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>((a + b) % n);
      mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  return Ring::from_tables(n, std::move(add), std::move(mul), 0, static_cast<Element>(1 % n),
                           "Z" + std::to_string(n), caps);
}

RingPtr build_matrix_ring(const RingPtr& base, std::size_t k, const Caps& caps) {
  if (k == 0) throw AlgebraError("order", {}, "order: matrix size must be positive");
  const std::size_t q = base->order();
  const std::size_t entries = k * k;
  std::size_t n = 1;
  for (std::size_t i = 0; i < entries; ++i) {
    n *= q;
    if (n > caps.order) check_cap(n, caps, "M" + std::to_string(k) + "(" + base->label() + ")");
  }
  // Entry (i,j) is digit i*k+j of the base-q index.
  std::vector<std::vector<Element>> digits(n, std::vector<Element>(entries));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    for (std::size_t d = 0; d < entries; ++d) {
      digits[x][d] = static_cast<Element>(y % q);
      y /= q;
    }
  }
  auto pack = [&](const std::vector<Element>& d) {
    std::size_t x = 0;
    for (std::size_t i = entries; i-- > 0;) x = x * q + d[i];
    return static_cast<Element>(x);
  };
  std::vector<Element> add(n * n), mul(n * n);
  std::vector<Element> tmp(entries);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& dx = digits[x];
      const auto& dy = digits[y];
      for (std::size_t d = 0; d < entries; ++d) tmp[d] = base->add(dx[d], dy[d]);
      add[x * n + y] = pack(tmp);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Element acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            acc = base->add(acc, base->mul(dx[i * k + l], dy[l * k + j]));
          tmp[i * k + j] = acc;
        }
      mul[x * n + y] = pack(tmp);
    }
  std::vector<Element> id(entries, 0);
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = base->one();
  return Ring::from_tables(n, std::move(add), std::move(mul), 0, pack(id),
                           "M" + std::to_string(k) + "(" + base->label() + ")", caps);
}

RingPtr build_triangular(const RingPtr& a, const Bimodule& m, const RingPtr& b, const Caps& caps) {
  if (m.left_ring() != a || m.right_ring() != b)
    throw AlgebraError("bimodule rings", {},
                       "bimodule rings: M must be a bimodule over the given A and B");
  const std::size_t qa = a->order(), qm = m.order(), qb = b->order();
  const std::size_t n = qa * qm * qb;
  const std::string label = "T(" + a->label() + "," + m.label() + "," + b->label() + ")";
  check_cap(n, caps, label);
  TriangularShape shape{qa, qm, qb, a->one(), b->one()};
  auto split = [&](std::size_t x) {
    return std::array<Element, 3>{static_cast<Element>(x % qa),
                                  static_cast<Element>((x / qa) % qm),
                                  static_cast<Element>(x / (qa * qm))};
  };
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto [a1, m1, b1] = split(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto [a2, m2, b2] = split(y);
      add[x * n + y] = shape.index(a->add(a1, a2), m.add(m1, m2), b->add(b1, b2));
      // (a,m,b)(a',m',b') = (aa', am' + mb', bb')
      mul[x * n + y] = shape.index(a->mul(a1, a2), m.add(m.act_left(a1, m2), m.act_right(m1, b2)),
                                   b->mul(b1, b2));
    }
  }
  auto r = Ring::from_tables(n, std::move(add), std::move(mul), 0,
                             shape.index(a->one(), 0, b->one()), label, caps);
  return r->with_triangular(shape);
}

RingPtr build_product(const RingPtr& r1, const RingPtr& r2, const Caps& caps) {
  const std::size_t n1 = r1->order(), n2 = r2->order();
  const std::size_t n = n1 * n2;
  const std::string label = r1->label() + "x" + r2->label();
  check_cap(n, caps, label);
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element x1 = static_cast<Element>(x % n1), x2 = static_cast<Element>(x / n1);
      const Element y1 = static_cast<Element>(y % n1), y2 = static_cast<Element>(y / n1);
      add[x * n + y] = static_cast<Element>(r1->add(x1, y1) + n1 * r2->add(x2, y2));
      mul[x * n + y] = static_cast<Element>(r1->mul(x1, y1) + n1 * r2->mul(x2, y2));
    }
  return Ring::from_tables(n, std::move(add), std::move(mul), 0,
                           static_cast<Element>(r1->one() + n1 * r2->one()), label, caps);
}

RingPtr build_opposite(const RingPtr& r) {
  const std::size_t n = r->order();
  std::vector<Element> add(r->add_table().begin(), r->add_table().end());
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a * n + b] = r->mul(b, a);
  return Ring::from_tables(n, std::move(add), std::move(mul), 0, r->one(), r->label() + "^op",
                           Caps{std::max<std::size_t>(n, 1), Caps{}.lattice});
}

RingPtr build_from_tables(std::size_t order, std::vector<Element> add, std::vector<Element> mul,
                          Element zero, Element one, std::string label, const Caps& caps) {
  return Ring::from_tables(order, std::move(add), std::move(mul), zero, one, std::move(label),
                           caps);
}

Quotient build_quotient(const RingPtr& r, const ElementSet& members, const Caps& caps) {
  const std::size_t n = r->order();
  if (members.size() != n || !members.test(0))
    throw AlgebraError("ideal", {}, "ideal: quotient needs a subset of R containing 0");
  members.for_each([&](Element x) {
    if (!members.test(r->neg(x))) throw AlgebraError("ideal", {x}, "ideal: not closed under negation");
    members.for_each([&](Element y) {
      if (!members.test(r->add(x, y)))
        throw AlgebraError("ideal", {x, y}, "ideal: not closed under addition");
    });
    for (Element s = 0; s < n; ++s)
      if (!members.test(r->mul(x, s)) || !members.test(r->mul(s, x)))
        throw AlgebraError("ideal", {x, s}, "ideal: not closed under multiplication by R");
  });

  std::vector<Element> projection(n, 0);
  std::vector<Element> reps;
  std::vector<bool> seen(n, false);
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    const auto coset = static_cast<Element>(reps.size());
    reps.push_back(x);
    members.for_each([&](Element i) {
      const Element y = r->add(x, i);
      seen[y] = true;
      projection[y] = coset;
    });
  }
  const std::size_t m = reps.size();
  std::vector<Element> add(m * m), mul(m * m);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d < m; ++d) {
      add[c * m + d] = projection[r->add(reps[c], reps[d])];
      mul[c * m + d] = projection[r->mul(reps[c], reps[d])];
    }
  std::ostringstream label;
  label << r->label() << "/(";
  bool first = true;
  members.for_each([&](Element x) {
    if (!first) label << ",";
    label << x;
    first = false;
  });
  label << ")";
  auto q = Ring::from_tables(m, std::move(add), std::move(mul), 0, projection[r->one()],
                             label.str(), caps);
  return Quotient{std::move(q), std::move(projection), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Elementwise predicates

bool is_dedekind_finite(const Ring& r) {
  const std::size_t n = r.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) != r.one()) return false;
  return true;
}

ElementSet right_multiples(const Ring& r, Element x) {
  ElementSet s(r.order());
  for (Element y = 0; y < r.order(); ++y) s.set(r.mul(x, y));
  return s;
}

ElementSet left_multiples(const Ring& r, Element x) {
  ElementSet s(r.order());
  for (Element y = 0; y < r.order(); ++y) s.set(r.mul(y, x));
  return s;
}

bool is_normal(const Ring& r, Element x) { return right_multiples(r, x) == left_multiples(r, x); }

ElementSet normal_elements(const Ring& r) {
  ElementSet s(r.order());
  for (Element x = 0; x < r.order(); ++x)
    if (is_normal(r, x)) s.set(x);
  return s;
}

bool is_central(const Ring& r, Element x) {
  for (Element y = 0; y < r.order(); ++y)
    if (r.mul(x, y) != r.mul(y, x)) return false;
  return true;
}

ElementSet central_idempotents(const Ring& r) {
  ElementSet s(r.order());
  for (Element e = 0; e < r.order(); ++e)
    if (r.mul(e, e) == e && is_central(r, e)) s.set(e);
  return s;
}

ElementSet units(const Ring& r) {
  ElementSet s(r.order());
  for (Element a = 0; a < r.order(); ++a)
    for (Element b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        s.set(a);
        break;
      }
  return s;
}

ElementSet multiplicative_closure(const Ring& r, std::span<const Element> seeds) {
  ElementSet s(r.order());
  std::deque<Element> work;
  auto push = [&](Element x) {
    if (s.insert(x)) work.push_back(x);
  };
  push(r.one());
  for (auto x : seeds) push(x);
  while (!work.empty()) {
    const Element x = work.front();
    work.pop_front();
    for (auto y : s.members()) {
      push(r.mul(x, y));
      push(r.mul(y, x));
    }
  }
  return s;
}

bool are_isomorphic(const Ring& r, const Ring& s) {
  const std::size_t n = r.order();
  if (n != s.order()) return false;
  if (n == 1) return true;

  // Additive generators of R, greedily.
  std::vector<Element> gens;
  ElementSet span(n);
  span.set(0);
  auto extend = [&](ElementSet& set, Element x) {
    // set <- set + <x>
    ElementSet grown = set;
    Element cur = x;
    while (!set.test(cur)) {
      set.for_each([&](Element h) { grown.set(r.add(h, cur)); });
      cur = r.add(cur, x);
    }
    set = grown;
  };
  for (Element x = 0; x < n; ++x)
    if (!span.test(x)) {
      gens.push_back(x);
      extend(span, x);
    }

  std::vector<Element> images(gens.size());
  std::vector<Element> phi(n);
  std::vector<bool> assigned(n);

  auto try_map = [&]() {
    std::fill(assigned.begin(), assigned.end(), false);
    phi[0] = 0;
    assigned[0] = true;
    std::deque<Element> work{0};
    while (!work.empty()) {
      const Element x = work.front();
      work.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Element y = r.add(x, gens[i]);
        const Element img = s.add(phi[x], images[i]);
        if (assigned[y]) {
          if (phi[y] != img) return false;
        } else {
          phi[y] = img;
          assigned[y] = true;
          work.push_back(y);
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (Element x = 0; x < n; ++x) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = true;
    }
    if (phi[r.one()] != s.one()) return false;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (phi[r.mul(a, b)] != s.mul(phi[a], phi[b])) return false;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return try_map();
    for (Element y = 1; y < n; ++y) {
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace oka
