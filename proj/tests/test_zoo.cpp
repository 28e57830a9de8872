#include <doctest.h>

#include "oka/module.hpp"
#include "oka/zoo.hpp"
#include "support.hpp"

using namespace oka;
using support::from_oracle;
using support::to_oracle;
using support::tri;
using support::zn;

namespace {

std::set<oracle::Set> members_of(const Family& f) {
  std::set<oracle::Set> out;
  f.members().for_each(
      [&](std::size_t k) { out.insert(to_oracle(f.context().lattice()[k].members())); });
  return out;
}

ElementSet elems(const Ring& r, std::initializer_list<Element> xs) {
  return from_oracle(oracle::from_list(r, xs));
}

ElementSet indices(const FamilyContext& ctx, std::initializer_list<std::size_t> ks) {
  ElementSet s(ctx.size());
  for (auto k : ks) s.set(k);
  return s;
}

std::size_t idx(const ContextPtr& ctx, Element x) { return ctx->tables().principal(x); }

std::vector<ContextPtr> contexts() {
  std::vector<ContextPtr> out;
  for (const auto& r : support::small_rings())
    if (!r->is_zero_ring()) out.push_back(FamilyContext::create(r));
  return out;
}

/// Sets of ideals selected by a predicate on member sets.
std::set<oracle::Set> select(const FamilyContext& ctx,
                             const std::function<bool(const oracle::Set&)>& pred) {
  std::set<oracle::Set> out;
  for (const auto& i : ctx.lattice().ideals()) {
    auto s = to_oracle(i.members());
    if (pred(s)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("meets_m_system") {
  auto z6 = FamilyContext::create(zn(6));
  auto f = meets_m_system(z6, elems(*z6->ring(), {1, 2, 4}));
  CHECK(f.claimed == Property::p1);
  CHECK(f.family.members() == indices(*z6, {idx(z6, 2), z6->top()}));
  CHECK(check_p1(f.family).holds());
  CHECK(meets_m_system(z6, elems(*z6->ring(), {1})).family.size() == 1);
  CHECK_THROWS_AS(meets_m_system(z6, elems(*z6->ring(), {2})), ZooError);
  auto z4 = FamilyContext::create(zn(4));
  CHECK_THROWS_AS(meets_m_system(z4, elems(*z4->ring(), {1, 2})), ZooError);

  auto t = FamilyContext::create(tri(2));
  support::Tri c(*t->ring());
  auto p1 = t->lattice()[idx(t, c.e11())].members();
  auto g = meets_m_system(t, p1.complement());
  CHECK(g.family.members() == indices(*t, {idx(t, c.e22()), t->top()}));

  for (const auto& ctx : contexts()) {
    const auto& r = *ctx->ring();
    for (Element x = 0; x < r.order(); ++x) {
      std::vector<Element> seed{x};
      auto s = multiplicative_closure(r, seed);
      if (!is_m_system(r, s).is_m_system) continue;
      auto zf = meets_m_system(ctx, s);
      auto want = select(*ctx, [&](const oracle::Set& i) {
        bool hit = false;
        s.for_each([&](Element e) { hit = hit || i[e]; });
        return hit;
      });
      CHECK(members_of(zf.family) == want);
      CHECK(check_p1(zf.family).holds());
    }
  }
}

TEST_CASE("point annihilator and faithful families") {
  auto z6 = FamilyContext::create(zn(6));
  auto lf = left_faithful_family(z6);
  CHECK(lf.zoo.family.size() == 1);
  std::vector<std::size_t> want{idx(z6, 2), idx(z6, 3)};
  std::sort(want.begin(), want.end());
  auto got = lf.maximal_annihilators;
  std::sort(got.begin(), got.end());
  CHECK(got == want);

  auto m2 = FamilyContext::create(support::m2(2));
  CHECK(left_faithful_family(m2).zoo.family.size() == 1);

  auto t = FamilyContext::create(tri(2));
  support::Tri c(*t->ring());
  const auto& p1 = t->lattice()[idx(t, c.e11())];
  auto pa = point_annihilator_family(t, quotient_module(regular_module(t->ring()), p1.members()));
  CHECK(pa.maximal_annihilators == std::vector<std::size_t>{idx(t, c.e11())});
  CHECK(t->spec().is_prime(idx(t, c.e11())));

  CHECK_THROWS_AS(left_faithful_family(FamilyContext::create(zn(1))), ZooError);
  auto z2 = FamilyContext::create(zn(2));
  CHECK_THROWS_AS(point_annihilator_family(
                      z2, quotient_module(regular_module(z2->ring()), ElementSet::full(2))),
                  ZooError);

  for (const auto& ctx : contexts()) {
    const auto& r = *ctx->ring();
    auto fam = left_faithful_family(ctx);
    // {I : xI = 0 implies x = 0}
    auto want_f = select(*ctx, [&](const oracle::Set& i) {
      for (Element x = 1; x < r.order(); ++x) {
        bool kills = true;
        for (auto y : oracle::elements(i)) kills = kills && r.mul(x, y) == 0;
        if (kills) return false;
      }
      return true;
    });
    CHECK(members_of(fam.zoo.family) == want_f);
    CHECK(check_p1(fam.zoo.family).holds());
    for (auto k : fam.maximal_annihilators) CHECK(ctx->spec().is_prime(k));
  }
}

TEST_CASE("middle annihilator family") {
  for (const auto& ctx : contexts()) {
    const auto& r = *ctx->ring();
    const auto ideals = to_oracle(ctx->lattice());
    auto mf = middle_annihilator_family(ctx);
    // {I : XIY = 0 implies XY = 0}
    auto want = select(*ctx, [&](const oracle::Set& i) {
      for (const auto& x : ideals)
        for (const auto& y : ideals) {
          auto xiy = oracle::product(r, oracle::product(r, x, i), y);
          auto xy = oracle::product(r, x, y);
          if (oracle::count(xiy) == 1 && oracle::count(xy) > 1) return false;
        }
      return true;
    });
    CHECK(members_of(mf.zoo.family) == want);
    CHECK(check_p1(mf.zoo.family).holds());
    auto mx = max_in_complement(ctx->lattice(), mf.zoo.family.members());
    auto got = mf.maximal_middle_annihilators;
    std::sort(got.begin(), got.end());
    CHECK(got == mx);
    for (auto k : got) CHECK(ctx->spec().is_prime(k));
  }
  auto m2 = FamilyContext::create(support::m2(2));
  CHECK(middle_annihilator_family(m2).zoo.family.size() == 1);
}

TEST_CASE("contains_member family") {
  auto z6 = FamilyContext::create(zn(6));
  auto whole = contains_member_family(z6, indices(*z6, {z6->top()}));
  CHECK(whole.family.size() == 1);
  auto mins = product_closure(*z6, indices(*z6, {idx(z6, 2), idx(z6, 3)}));
  CHECK(mins.test(z6->bottom()));
  CHECK(contains_member_family(z6, mins).family.size() == z6->size());

  auto t = FamilyContext::create(tri(2));
  support::Tri c(*t->ring());
  auto p1 = contains_member_family(t, indices(*t, {idx(t, c.e11())}));
  CHECK(p1.family.members() == indices(*t, {idx(t, c.e11()), t->top()}));
  CHECK(check_p1(p1.family).holds());

  auto z4 = FamilyContext::create(zn(4));
  CHECK_THROWS_AS(contains_member_family(z4, indices(*z4, {idx(z4, 2)})), ZooError);
}

TEST_CASE("Artin-Rees family") {
  auto t = FamilyContext::create(tri(2));
  support::Tri c(*t->ring());
  auto ar = artin_rees_family(t);
  CHECK(ar.zoo.claimed == Property::p2);
  const auto p1 = idx(t, c.e11());
  const auto mid = idx(t, c.e12());
  CHECK_FALSE(ar.zoo.family.contains(p1));
  CHECK(ar.zoo.family.contains(mid));
  bool found = false;
  for (const auto& rec : ar.records)
    if (rec.ideal == p1) {
      found = true;
      CHECK_FALSE(rec.has_property);
      REQUIRE(rec.failing_right_ideal);
      CHECK(*rec.failing_right_ideal == elems(*t->ring(), {0, c.e12()}));
    }
  CHECK(found);
  auto mx = max_in_complement(t->lattice(), ar.zoo.family.members());
  CHECK(std::find(mx.begin(), mx.end(), p1) != mx.end());
  CHECK(t->spec().is_prime(p1));

  auto z4 = FamilyContext::create(zn(4));
  CHECK(artin_rees_family(z4).zoo.family.size() == z4->size());

  for (const auto& ctx : contexts()) {
    const auto& r = *ctx->ring();
    auto fam = artin_rees_family(ctx);
    auto rights = oracle::all_ideals(r, oracle::Kind::right);
    auto want = select(*ctx, [&](const oracle::Set& i) {
      // powers I, I^2, ... until they repeat
      std::vector<oracle::Set> pw{i};
      while (true) {
        auto nx = oracle::product(r, pw.back(), i);
        if (nx == pw.back()) break;
        pw.push_back(nx);
      }
      for (const auto& k : rights) {
        // KI is the additive span of products; K is a right ideal
        auto ki = oracle::product(r, k, i);
        bool some = false;
        for (const auto& p : pw) some = some || oracle::subset(oracle::meet(k, p), ki);
        if (!some) return false;
      }
      return true;
    });
    CHECK(members_of(fam.zoo.family) == want);
    CHECK(check_p3(fam.zoo.family).holds());
  }
}

TEST_CASE("idempotent and direct summand families") {
  auto z6 = FamilyContext::create(zn(6));
  auto ds = direct_summand_family(z6);
  CHECK(ds.zoo.claimed == Property::p3);
  CHECK(ds.zoo.family.size() == 4);
  CHECK(ds.all_ideals_summands);
  CHECK(ds.product_of_simple_rings);
  CHECK(check_p3(ds.zoo.family).holds());

  auto z4 = FamilyContext::create(zn(4));
  auto d4 = direct_summand_family(z4);
  CHECK(d4.zoo.family.members() == indices(*z4, {z4->bottom(), z4->top()}));
  CHECK_FALSE(d4.product_of_simple_rings);
  CHECK(d4.non_maximal_in_max_complement.empty());

  auto t = FamilyContext::create(tri(2));
  auto dt = direct_summand_family(t);
  CHECK(dt.zoo.family.size() == 2);
  CHECK(dt.non_maximal_in_max_complement.empty());
  CHECK(max_in_complement(t->lattice(), dt.zoo.family.members()).size() == 2);

  for (const auto& ctx : contexts()) {
    auto d = direct_summand_family(ctx);
    CHECK(d.all_ideals_summands == d.product_of_simple_rings);
    CHECK(d.all_ideals_summands == (d.zoo.family.size() == ctx->size()));
    CHECK(check_p3(d.zoo.family).holds());
  }
  CHECK(is_product_of_simple_rings(*FamilyContext::create(build_product(support::m2(2), zn(2)))));
  CHECK_FALSE(is_product_of_simple_rings(*FamilyContext::create(zn(12))));

  // S = {1} gives {R}
  CHECK(idempotent_family(z6, elems(*z6->ring(), {1})).family.size() == 1);
  // S must be central idempotents and multiplicatively closed
  CHECK_THROWS_AS(idempotent_family(z6, elems(*z6->ring(), {1, 2})), ZooError);
  CHECK_THROWS_AS(idempotent_family(z6, elems(*z6->ring(), {3})), ZooError);
}

TEST_CASE("idempotent families are P3 but not always P2") {
  // Z4 with S = {0,1}: F = {0, R}. J = 0 in F and I = (2) satisfy
  // I^2 inside J inside I, yet (2) is not in F.
  auto z4 = FamilyContext::create(zn(4));
  auto f = idempotent_family(z4, elems(*z4->ring(), {0, 1}));
  CHECK(f.claimed == Property::p2);
  auto p2 = check_p2(f.family);
  CHECK_FALSE(p2.holds());
  REQUIRE(p2.witness);
  CHECK(witness_violates(Property::p2, f.family, *p2.witness));
  CHECK(check_p3(f.family).holds());
  CHECK(check_monoidal(f.family).holds());
  CHECK(verify_pip(f.family).contained);
}

TEST_CASE("Dedekind-finite factor family is degenerate") {
  for (const auto& ctx : contexts()) {
    auto f = dedekind_finite_factor_family(ctx);
    CHECK(f.claimed == Property::p3);
    CHECK(f.family.size() == ctx->size());
    CHECK(f.family.degenerate());
    CHECK_FALSE(f.family.notes().empty());
  }
}

TEST_CASE("flat factor family") {
  auto z4 = FamilyContext::create(zn(4));
  auto f = flat_factor_family(z4);
  CHECK(f.zoo.family.members() == indices(*z4, {z4->bottom(), z4->top()}));
  CHECK(check_p3(f.zoo.family).holds());
  CHECK_FALSE(check_semifilter(f.zoo.family).holds());
  CHECK_FALSE(check_p1(f.zoo.family).holds());
  CHECK(verify_pip(f.zoo.family).max_complement == std::vector<std::size_t>{idx(z4, 2)});

  auto z6 = FamilyContext::create(zn(6));
  CHECK(flat_factor_family(z6).zoo.family.size() == 4);

  for (const auto& ctx : contexts()) {
    const auto& r = *ctx->ring();
    auto lefts = oracle::all_ideals(r, oracle::Kind::left);
    auto want = select(*ctx, [&](const oracle::Set& i) {
      for (const auto& l : lefts)
        if (!oracle::subset(oracle::meet(i, l), oracle::product(r, i, l))) return false;
      return true;
    });
    CHECK(members_of(flat_factor_family(ctx).zoo.family) == want);
  }
}

TEST_CASE("principal normal families") {
  auto t = FamilyContext::create(tri(2));
  support::Tri c(*t->ring());
  auto f = principal_normal_family(t, elems(*t->ring(), {0, t->ring()->one(), c.e12()}));
  CHECK(f.claimed == Property::strongly_r_oka);
  CHECK(f.family.members() == indices(*t, {t->bottom(), idx(t, c.e12()), t->top()}));
  CHECK(check_strongly_r_oka(f.family).holds());
  CHECK(verify_pip(f.family).max_complement.size() == 2);
  CHECK_THROWS_AS(principal_normal_family(t, elems(*t->ring(), {t->ring()->one(), c.e11()})),
                  ZooError);
  CHECK_THROWS_AS(principal_normal_family(t, elems(*t->ring(), {c.e12()})), ZooError);

  auto z6 = FamilyContext::create(zn(6));
  CHECK(principal_normal_family(z6, ElementSet::full(6)).family.size() == 4);
  CHECK(principal_normal_family(z6, elems(*z6->ring(), {1})).family.size() == 1);

  for (const auto& ctx : contexts()) {
    auto s = normal_elements(*ctx->ring());
    CHECK(check_strongly_r_oka(principal_normal_family(ctx, s).family).holds());
  }
}

TEST_CASE("left-right principal sweep") {
  for (const auto& ctx : contexts()) {
    auto rep = verify_left_right_principal_normal(ctx);
    CHECK(rep.violations.empty());
    CHECK(rep.triples_checked > 0);
    REQUIRE(rep.family);
    CHECK(rep.family_product_closed);
    CHECK(rep.family_r_oka.holds());
  }
  auto t = FamilyContext::create(tri(2));
  support::Tri c(*t->ring());
  auto rep = verify_left_right_principal_normal(t);
  CHECK(rep.family->contains(idx(t, c.e12())));
}

TEST_CASE("module class families") {
  for (const auto& ctx : contexts()) {
    const auto& r = *ctx->ring();
    for (Element x = 0; x < r.order(); ++x) {
      std::vector<Element> seed{x};
      auto s = multiplicative_closure(r, seed);
      if (is_m_system(r, s).is_m_system) {
        auto a = factor_predicate_family(ctx, annihilator_meets(s), "annihilator_meets");
        CHECK(a.zoo.family.members() == meets_m_system(ctx, s).family.members());
        CHECK(a.sample.violations.empty());
      }
      bool central = true;
      s.for_each([&](Element e) { central = central && is_central(r, e); });
      if (!central) continue;
      auto tor = factor_predicate_family(ctx, s_torsion(s), "s_torsion");
      CHECK(tor.zoo.family.members() == s_torsion_direct(*ctx, s));
      // {I : for all r some s in S has rs in I}
      auto want = select(*ctx, [&](const oracle::Set& i) {
        for (Element y = 0; y < r.order(); ++y) {
          bool hit = false;
          s.for_each([&](Element e) { hit = hit || i[r.mul(y, e)]; });
          if (!hit) return false;
        }
        return true;
      });
      CHECK(members_of(tor.zoo.family) == want);
    }
    auto all = factor_predicate_family(
        ctx, [](const RightModule&) { return true; }, "all");
    CHECK(all.zoo.family.size() == ctx->size());
    CHECK_THROWS_AS(factor_predicate_family(
                        ctx, [](const RightModule& m) { return !m.is_zero(); }, "nonzero"),
                    ZooError);
  }
  // "cyclic of prime order" is not closed under extensions in Z4
  auto z4 = FamilyContext::create(zn(4));
  auto sample = sample_class_closure(*z4, [](const RightModule& m) { return m.order() <= 2; });
  CHECK_FALSE(sample.violations.empty());
}

TEST_CASE("unsupported constructors explain themselves") {
  for (auto name : {"integral_factor", "pi_factor", "invertible", "right_artinian_factor",
                    "right_noetherian_factor", "strongly_noetherian_factor", "tensor_category"}) {
    try {
      unsupported_family(name);
      FAIL("expected ZooError");
    } catch (const ZooError& e) {
      CHECK(std::string(e.what()).size() > 20);
    }
  }
  auto names = registry_names();
  CHECK(std::find(names.begin(), names.end(), "flat_factor") != names.end());
}
