#include <doctest.h>

#include "oka/ideal.hpp"
#include "support.hpp"

using namespace oka;
using support::from_oracle;
using support::to_oracle;
using support::tri;
using support::zn;

namespace {

oracle::Kind kind(Side s) {
  switch (s) {
    case Side::right: return oracle::Kind::right;
    case Side::left: return oracle::Kind::left;
    default: return oracle::Kind::two_sided;
  }
}

Ideal as_ideal(const RingPtr& r, const oracle::Set& s, Side side = Side::two_sided) {
  return Ideal(r, from_oracle(s), side);
}

}  // namespace

TEST_CASE("lattices match brute-force subset enumeration") {
  for (const auto& r : support::small_rings()) {
    for (Side side : {Side::two_sided, Side::right, Side::left}) {
      CAPTURE(r->label());
      CAPTURE(to_string(side));
      auto lat = all_ideals(r, side);
      CHECK(to_oracle(lat) == oracle::all_ideals(*r, kind(side)));
      for (std::size_t i = 1; i < lat.size(); ++i) {
        const auto a = lat[i - 1].members().members();
        const auto b = lat[i].members().members();
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
      }
      CHECK(lat[lat.bottom()].is_zero());
      CHECK(lat[lat.top()].size() == r->order());
    }
  }
}

TEST_CASE("pinned ideal counts") {
  CHECK(all_ideals(zn(6), Side::two_sided).size() == 4);
  CHECK(all_ideals(zn(12), Side::two_sided).size() == 6);
  CHECK(all_ideals(tri(2), Side::two_sided).size() == 5);
  CHECK(all_ideals(tri(2), Side::right).size() == 7);
  CHECK(all_ideals(support::m2(2), Side::two_sided).size() == 2);
  CHECK(all_ideals(build_product(zn(2), zn(2)), Side::two_sided).size() == 4);
}

TEST_CASE("T(Z3,Z3,Z3) has five ideals") {
  // Every additive subgroup of Z3^3 needs at most three generators, so the
  // generator-bounded oracle is complete here.
  auto t = tri(3);
  auto lat = all_ideals(t, Side::two_sided);
  CHECK(lat.size() == 5);
  CHECK(to_oracle(lat) == oracle::all_ideals(*t, oracle::Kind::two_sided, 3));
}

TEST_CASE("M2(Z4) has exactly 0, M2((2)) and R") {
  auto r = support::m2(4);
  auto lat = all_ideals(r, Side::two_sided);
  REQUIRE(lat.size() == 3);
  // M2((2)) is the image of doubling.
  oracle::Set doubled = oracle::empty_set(*r);
  for (Element x = 0; x < r->order(); ++x) doubled[r->add(x, x)] = true;
  CHECK(oracle::count(doubled) == 16);
  CHECK(to_oracle(lat[1].members()) == doubled);
  CHECK(oracle::is_ideal(*r, doubled, oracle::Kind::two_sided));
}

TEST_CASE("M2(Z2)xZ2 has the Boolean lattice of order four") {
  auto r = build_product(support::m2(2), zn(2));
  auto lat = all_ideals(r, Side::two_sided);
  REQUIRE(lat.size() == 4);
  CHECK_FALSE(lat.contains(1, 2));
  CHECK_FALSE(lat.contains(2, 1));
  CHECK(lat.contains(3, 1));
  CHECK(lat.contains(3, 2));
}

TEST_CASE("ideal closure agrees with saturation") {
  for (const auto& r : support::small_rings()) {
    for (Side side : {Side::two_sided, Side::right, Side::left}) {
      for (Element x = 0; x < r->order(); ++x) {
        CAPTURE(r->label());
        std::vector<Element> g{x};
        CHECK(to_oracle(ideal_closure(r, g, side).members()) ==
              oracle::closure(*r, g, kind(side)));
      }
    }
  }
}

TEST_CASE("ideal operations agree with definitions on every pair") {
  for (const auto& r : support::small_rings()) {
    auto lat = all_ideals(r, Side::two_sided);
    IdealTables t(lat);
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        CAPTURE(r->label());
        const auto I = to_oracle(lat[i].members()), J = to_oracle(lat[j].members());
        CHECK(to_oracle(sum(lat[i], lat[j]).members()) == oracle::sum(*r, I, J));
        CHECK(to_oracle(product(lat[i], lat[j]).members()) == oracle::product(*r, I, J));
        CHECK(to_oracle(intersect(lat[i], lat[j]).members()) == oracle::meet(I, J));
        CHECK(to_oracle(left_quotient(lat[j], lat[i]).members()) ==
              oracle::left_quotient(*r, J, I));
        CHECK(to_oracle(right_quotient(lat[i], lat[j]).members()) ==
              oracle::right_quotient(*r, I, J));
        CHECK(to_oracle(lat[t.sum(i, j)].members()) == oracle::sum(*r, I, J));
        CHECK(to_oracle(lat[t.product(i, j)].members()) == oracle::product(*r, I, J));
        CHECK(to_oracle(lat[t.meet(i, j)].members()) == oracle::meet(I, J));
        CHECK(to_oracle(lat[t.left_quotient(j, i)].members()) == oracle::left_quotient(*r, J, I));
        CHECK(to_oracle(lat[t.right_quotient(i, j)].members()) ==
              oracle::right_quotient(*r, I, J));
        CHECK(t.contains(i, j) == oracle::subset(J, I));
        CHECK(lat.contains(i, j) == oracle::subset(J, I));
        // quotient sandwich: J(J^{-1}I) inside I, (IJ^{-1})J inside I
        CHECK(oracle::subset(oracle::product(*r, J, oracle::left_quotient(*r, J, I)), I));
        CHECK(oracle::subset(oracle::product(*r, oracle::right_quotient(*r, I, J), J), I));
        CHECK(oracle::subset(oracle::product(*r, I, J), oracle::meet(I, J)));
      }
    for (Element x = 0; x < r->order(); ++x)
      CHECK(to_oracle(lat[t.principal(x)].members()) == oracle::principal(*r, x));
  }
}

TEST_CASE("element quotients") {
  auto t = tri(2);
  auto lat = all_ideals(t, Side::two_sided);
  for (const auto& i : lat.ideals())
    for (Element a = 0; a < t->order(); ++a) {
      auto [l, rq] = element_quotients(i, a);
      const auto pa = oracle::principal(*t, a);
      CHECK(to_oracle(l.members()) == oracle::left_quotient(*t, pa, to_oracle(i.members())));
      CHECK(to_oracle(rq.members()) == oracle::right_quotient(*t, to_oracle(i.members()), pa));
    }
}

TEST_CASE("pinned operations in T(Z2,Z2,Z2)") {
  auto t = tri(2);
  support::Tri c(*t);
  const Element e11 = c.e11(), e12 = c.e12(), e22 = c.e22();
  auto p1 = principal(t, e11);
  auto p2 = principal(t, e22);
  auto zero = zero_ideal(t);
  auto mid = principal(t, e12);
  CHECK(sum(p1, p2) == whole_ideal(t));
  CHECK(to_oracle(product(p1, p2).members()) == oracle::from_list(*t, {0, e12}));
  CHECK(product(p2, p1).is_zero());
  CHECK(intersect(p1, p2) == mid);
  // 0 P1^{-1} = {x : x P1 = 0} = P2
  CHECK(right_quotient(zero, p1) == p2);
  // (e12)^{-1}0 = {x : e12 x = 0} kills the (2,2) entry, giving P1;
  // 0(e12)^{-1} = {x : x e12 = 0} kills the (1,1) entry, giving P2
  auto [l, r] = element_quotients(zero, e12);
  CHECK(l == p1);
  CHECK(r == p2);
}

TEST_CASE("products generated by right generating sets") {
  // Right closure of {xy : x in X, y in Y} for right generators X of I and Y
  // of J equals IJ.
  for (const auto& r : support::small_rings()) {
    auto lat = all_ideals(r, Side::two_sided);
    auto rlat = all_ideals(r, Side::right);
    for (const auto& i : lat.ideals())
      for (const auto& j : lat.ideals()) {
        auto gi = generators(Ideal(r, i.members(), Side::right));
        auto gj = generators(Ideal(r, j.members(), Side::right));
        std::vector<Element> xy;
        for (auto x : gi)
          for (auto y : gj) xy.push_back(r->mul(x, y));
        CHECK(to_oracle(ideal_closure(r, xy, Side::right).members()) ==
              oracle::product(*r, to_oracle(i.members()), to_oracle(j.members())));
      }
  }
}

TEST_CASE("power stabilization") {
  auto z8 = zn(8);
  auto chain = ideal_power_stabilization(principal(z8, 2));
  REQUIRE(chain.powers.size() == chain.stable_index);
  CHECK(chain.stable_index == 3);
  CHECK(chain.powers[0].size() == 4);
  CHECK(chain.powers[1].size() == 2);
  CHECK(chain.powers[2].is_zero());
  auto z6 = zn(6);
  auto c6 = ideal_power_stabilization(principal(z6, 2));
  CHECK(c6.stable_index == 1);
  for (const auto& r : support::small_rings()) {
    const auto lat = all_ideals(r, Side::two_sided);
    for (const auto& i : lat.ideals()) {
      auto ch = ideal_power_stabilization(i);
      const auto& last = ch.powers.back();
      CHECK(product(last, i) == last);
      for (std::size_t k = 1; k < ch.powers.size(); ++k)
        CHECK(ch.powers[k] == product(ch.powers[k - 1], i));
    }
  }
}

TEST_CASE("mixing rings and caps are errors") {
  auto a = zn(4), b = zn(4);
  CHECK_THROWS_AS(sum(whole_ideal(a), whole_ideal(b)), IdealError);
  CHECK_THROWS_AS(all_ideals(zn(12), Side::two_sided, 3), IdealError);
  CHECK(is_ideal(*zn(6), principal(zn(6), 2).members(), Side::two_sided));
}
