#include "oka/zoo.hpp"

#include <map>
#include <sstream>

namespace oka {

namespace {

std::string set_text(const ElementSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each([&](Element x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  os << "}";
  return os.str();
}

Ideal as_ideal(const FamilyContext& ctx, std::size_t k) { return ctx.lattice()[k]; }

void require_ring(const FamilyContext& ctx, const RingPtr& r, const char* what) {
  if (ctx.ring() != r) throw ZooError(std::string(what) + ": module is over a different ring");
}

// Members of `candidates` not strictly below another member.
std::vector<std::size_t> maximal_among(const FamilyContext& ctx, const ElementSet& candidates) {
  std::vector<std::size_t> out;
  candidates.for_each([&](Element k) {
    bool maximal = true;
    candidates.for_each([&](Element j) {
      if (j != k && ctx.lattice().contains(j, k)) maximal = false;
    });
    if (maximal) out.push_back(k);
  });
  return out;
}

}  // namespace

ZooFamily meets_m_system(const ContextPtr& ctx, const ElementSet& s) {
  const auto v = is_m_system(*ctx->ring(), s);
  if (!v.is_m_system)
    throw ZooError("meets_m_system: " + set_text(s) + " is not an m-system");
  ElementSet members(ctx->size());
  for (std::size_t k = 0; k < ctx->size(); ++k)
    if (ctx->lattice()[k].members().intersects(s)) members.set(k);
  return {Family(ctx, std::move(members), "meets_m_system" + set_text(s)), Property::p1};
}

PointAnnihilatorResult point_annihilator_family(const ContextPtr& ctx, const RightModule& m) {
  require_ring(*ctx, m.ring(), "point_annihilator_family");
  if (m.is_zero()) throw ZooError("point_annihilator_family: the module must be nonzero");
  ElementSet anns(ctx->size());
  for (const auto& n : submodules(m, ctx->caps().lattice)) {
    if (n.count() == 1) continue;
    anns.set(ctx->lattice().index_of(annihilator(m, n)));
  }
  // NJ = 0 exactly when J lies inside ann(N).
  ElementSet members(ctx->size());
  for (std::size_t j = 0; j < ctx->size(); ++j) {
    bool killed = false;
    anns.for_each([&](Element a) {
      if (ctx->lattice().contains(a, j)) killed = true;
    });
    if (!killed) members.set(j);
  }
  PointAnnihilatorResult res{
      {Family(ctx, std::move(members), "point_annihilator(" + m.label() + ")"), Property::p1},
      maximal_among(*ctx, anns)};
  return res;
}

PointAnnihilatorResult left_faithful_family(const ContextPtr& ctx) {
  if (ctx->ring()->is_zero_ring()) throw ZooError("left_faithful_family: the ring must be nonzero");
  auto res = point_annihilator_family(ctx, regular_module(ctx->ring()));
  res.zoo.family = Family(ctx, res.zoo.family.members(), "left_faithful");
  return res;
}

MiddleAnnihilatorResult middle_annihilator_family(const ContextPtr& ctx) {
  const auto& t = ctx->tables();
  const std::size_t z = ctx->bottom();
  ElementSet members(ctx->size());
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    bool ok = true;
    for (std::size_t x = 0; x < ctx->size() && ok; ++x)
      for (std::size_t y = 0; y < ctx->size() && ok; ++y)
        if (t.product(t.product(x, i), y) == z && t.product(x, y) != z) ok = false;
    if (ok) members.set(i);
  }
  ElementSet middles(ctx->size());
  for (std::size_t x = 0; x < ctx->size(); ++x)
    for (std::size_t y = 0; y < ctx->size(); ++y) {
      auto ma = middle_annihilator(as_ideal(*ctx, x), as_ideal(*ctx, y));
      if (ma.qualifies) middles.set(ctx->lattice().index_of(ma.value));
    }
  return {{Family(ctx, std::move(members), "middle_annihilator"), Property::p1},
          maximal_among(*ctx, middles)};
}

ElementSet product_closure(const FamilyContext& ctx, const ElementSet& seeds) {
  ElementSet out = seeds;
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a : out.members())
      for (auto b : out.members())
        if (out.insert(ctx.tables().product(a, b))) grew = true;
  }
  return out;
}

ZooFamily contains_member_family(const ContextPtr& ctx, const ElementSet& seeds) {
  if (seeds.empty()) throw ZooError("contains_member_family: the seed set must be nonempty");
  std::optional<std::pair<Element, Element>> bad;
  seeds.for_each([&](Element a) {
    seeds.for_each([&](Element b) {
      if (!bad && !seeds.test(ctx->tables().product(a, b))) bad = std::make_pair(a, b);
    });
  });
  if (bad)
    throw ZooError("contains_member_family: seed set is not closed under products (#" +
                   std::to_string(bad->first) + " * #" + std::to_string(bad->second) + ")");
  return {Family(ctx, upward_closure(*ctx, seeds), "contains_member" + set_text(seeds)),
          Property::p1};
}

ArtinReesResult artin_rees_family(const ContextPtr& ctx) {
  const auto& right = ctx->right_lattice();
  ElementSet members(ctx->size());
  std::vector<ArtinReesRecord> records;
  for (std::size_t k = 0; k < ctx->size(); ++k) {
    const Ideal& i = ctx->lattice()[k];
    const auto chain = ideal_power_stabilization(i);
    ArtinReesRecord rec{k, true, chain.stable_index, std::nullopt};
    for (const auto& kr : right.ideals()) {
      const Ideal ki = product(kr, i, ProductInputs::any);
      bool some_n = false;
      for (const auto& power : chain.powers)
        if (intersect(kr, power).subset_of(ki)) {
          some_n = true;
          break;
        }
      if (!some_n) {
        rec.has_property = false;
        rec.failing_right_ideal = kr.members();
        break;
      }
    }
    if (rec.has_property) members.set(k);
    records.push_back(std::move(rec));
  }
  return {{Family(ctx, std::move(members), "artin_rees"), Property::p2}, std::move(records)};
}

ZooFamily idempotent_family(const ContextPtr& ctx, const ElementSet& s) {
  const Ring& r = *ctx->ring();
  const ElementSet central = central_idempotents(r);
  if (!s.subset_of(central))
    throw ZooError("idempotent_family: " + set_text(s) + " contains a non-central or non-idempotent element");
  if (!s.test(r.one())) throw ZooError("idempotent_family: the set must contain 1");
  s.for_each([&](Element a) {
    s.for_each([&](Element b) {
      if (!s.test(r.mul(a, b)))
        throw ZooError("idempotent_family: " + set_text(s) + " is not closed under products");
    });
  });
  ElementSet members(ctx->size());
  s.for_each([&](Element e) { members.set(ctx->tables().principal(e)); });
  return {Family(ctx, std::move(members), "idempotent" + set_text(s)), Property::p2};
}

bool is_product_of_simple_rings(const FamilyContext& ctx) {
  const Ring& r = *ctx.ring();
  const auto central = central_idempotents(r).members();
  std::map<Element, bool> memo;
  std::function<bool(Element)> splits = [&](Element e) -> bool {
    if (e == 0) return true;
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    const std::size_t pe = ctx.tables().principal(e);
    std::size_t inside = 0;
    for (std::size_t k = 0; k < ctx.size(); ++k)
      if (ctx.lattice().contains(pe, k)) ++inside;
    bool ok = inside == 2;
    for (std::size_t idx = 0; idx < central.size() && !ok; ++idx) {
      const Element f = central[idx];
      if (f == 0 || f == e || r.mul(f, e) != f) continue;
      ok = splits(f) && splits(r.sub(e, f));
    }
    memo[e] = ok;
    return ok;
  };
  return splits(r.one());
}

DirectSummandResult direct_summand_family(const ContextPtr& ctx) {
  DirectSummandResult res{idempotent_family(ctx, central_idempotents(*ctx->ring())), false, false,
                          {}};
  res.zoo.family = Family(ctx, res.zoo.family.members(), "direct_summand");
  res.zoo.claimed = Property::p3;
  res.all_ideals_summands = res.zoo.family.size() == ctx->size();
  res.product_of_simple_rings = is_product_of_simple_rings(*ctx);
  const std::size_t top = ctx->top();
  for (auto k : max_in_complement(ctx->lattice(), res.zoo.family.members())) {
    bool maximal = k != top;
    for (std::size_t j = 0; j < ctx->size() && maximal; ++j)
      if (j != k && j != top && ctx->lattice().contains(j, k)) maximal = false;
    if (!maximal) res.non_maximal_in_max_complement.push_back(k);
  }
  return res;
}

ZooFamily dedekind_finite_factor_family(const ContextPtr& ctx) {
  ElementSet members(ctx->size());
  for (std::size_t k = 0; k < ctx->size(); ++k) {
    const auto q = build_quotient(ctx->ring(), ctx->lattice()[k].members(),
                                  Caps{ctx->ring()->order(), ctx->caps().lattice});
    if (is_dedekind_finite(*q.ring)) members.set(k);
  }
  Family f(ctx, std::move(members), "dedekind_finite_factor");
  f.set_degenerate(true);
  f.add_note("every factor of a finite ring is finite, hence Dedekind finite");
  return {std::move(f), Property::p3};
}

FlatFactorResult flat_factor_family(const ContextPtr& ctx) {
  const auto& left = ctx->left_lattice();
  ElementSet members(ctx->size());
  std::vector<FlatFactorRecord> records;
  for (std::size_t k = 0; k < ctx->size(); ++k) {
    const Ideal& i = ctx->lattice()[k];
    FlatFactorRecord rec{k, true, std::nullopt};
    for (const auto& l : left.ideals()) {
      const Ideal il = product(i, l, ProductInputs::any);
      if (!intersect(i, l).subset_of(il)) {
        rec.flat = false;
        rec.failing_left_ideal = l.members();
        break;
      }
    }
    if (rec.flat) members.set(k);
    records.push_back(std::move(rec));
  }
  return {{Family(ctx, std::move(members), "flat_factor"), Property::p3}, std::move(records)};
}

ZooFamily principal_normal_family(const ContextPtr& ctx, const ElementSet& s) {
  const Ring& r = *ctx->ring();
  if (!s.test(r.one())) throw ZooError("principal_normal_family: the set must contain 1");
  s.for_each([&](Element x) {
    if (!is_normal(r, x))
      throw ZooError("principal_normal_family: element " + std::to_string(x) + " is not normal");
    s.for_each([&](Element y) {
      if (!s.test(r.mul(x, y)))
        throw ZooError("principal_normal_family: " + set_text(s) + " is not closed under products");
    });
  });
  ElementSet members(ctx->size());
  s.for_each([&](Element x) { members.set(ctx->tables().principal(x)); });
  return {Family(ctx, std::move(members), "principal_normal" + set_text(s)),
          Property::strongly_r_oka};
}

LeftRightPrincipalReport verify_left_right_principal_normal(const ContextPtr& ctx) {
  const Ring& r = *ctx->ring();
  const std::size_t n = r.order();
  LeftRightPrincipalReport rep;
  std::vector<ElementSet> right(n), left(n);
  for (Element x = 0; x < n; ++x) {
    right[x] = right_multiples(r, x);
    left[x] = left_multiples(r, x);
  }
  ElementSet members(ctx->size());
  for (std::size_t k = 0; k < ctx->size(); ++k) {
    const ElementSet& ideal = ctx->lattice()[k].members();
    std::vector<Element> as, bs;
    for (Element x = 0; x < n; ++x) {
      if (right[x] == ideal) as.push_back(x);
      if (left[x] == ideal) bs.push_back(x);
    }
    if (as.empty() || bs.empty()) continue;
    members.set(k);
    for (auto b : bs) {
      const bool ok = right[b] == ideal && is_normal(r, b);
      rep.triples_checked += as.size();
      if (!ok)
        rep.violations.push_back("ideal #" + std::to_string(k) + " with b = " + std::to_string(b));
    }
  }
  Family f(ctx, members, "left_right_principal");
  members.for_each([&](Element a) {
    members.for_each([&](Element b) {
      if (!members.test(ctx->tables().product(a, b))) rep.family_product_closed = false;
    });
  });
  rep.family_r_oka = check_r_oka(f);
  rep.family = std::move(f);
  return rep;
}

ClosureSample sample_class_closure(const FamilyContext& ctx, const ModulePredicate& pred,
                                   std::size_t max_submodules) {
  ClosureSample s;
  const auto reg = regular_module(ctx.ring());
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const auto m = quotient_module(reg, ctx.lattice()[k].members());
    ++s.modules;
    const bool in_m = pred(m);
    auto subs = submodules(m, ctx.caps().lattice);
    if (subs.size() > max_submodules) subs.resize(max_submodules);
    for (std::size_t idx = 0; idx < subs.size(); ++idx) {
      const auto quo = quotient_module(m, subs[idx]);
      const bool in_quo = pred(quo);
      ++s.quotient_checks;
      if (in_m && !in_quo)
        s.violations.push_back("quotient of R/I#" + std::to_string(k) + " by submodule " +
                               set_text(subs[idx]) + " leaves the class");
      const auto sub = submodule_as_module(m, subs[idx]);
      ++s.extension_checks;
      if (pred(sub) && in_quo && !in_m)
        s.violations.push_back("R/I#" + std::to_string(k) + " is an extension of class members by " +
                               set_text(subs[idx]) + " but is not in the class");
    }
  }
  return s;
}

FactorPredicateResult factor_predicate_family(const ContextPtr& ctx, const ModulePredicate& pred,
                                              std::string name) {
  const auto reg = regular_module(ctx->ring());
  const auto zero = quotient_module(reg, ElementSet::full(reg.order()));
  if (!pred(zero)) throw ZooError("factor_predicate_family: the class must contain the zero module");
  auto sample = sample_class_closure(*ctx, pred);
  if (!sample.violations.empty())
    throw ZooError("factor_predicate_family: closure sampler refuted the class: " +
                   sample.violations.front());
  ElementSet members(ctx->size());
  for (std::size_t k = 0; k < ctx->size(); ++k)
    if (pred(quotient_module(reg, ctx->lattice()[k].members()))) members.set(k);
  Family f(ctx, std::move(members), std::move(name));
  f.add_note("finite rings make every ideal finitely generated as a right ideal; the "
             "direct-sum-power route has no finite counterpart and is not used");
  return {{std::move(f), Property::p1}, std::move(sample)};
}

ModulePredicate annihilator_meets(const ElementSet& s) {
  return [s](const RightModule& m) { return annihilator(m).members().intersects(s); };
}

ModulePredicate s_torsion(const ElementSet& s) {
  return [s](const RightModule& m) {
    for (Element x = 0; x < m.order(); ++x) {
      bool killed = false;
      s.for_each([&](Element t) {
        if (!killed && m.act(x, t) == 0) killed = true;
      });
      if (!killed) return false;
    }
    return true;
  };
}

ElementSet s_torsion_direct(const FamilyContext& ctx, const ElementSet& s) {
  const Ring& r = *ctx.ring();
  ElementSet members(ctx.size());
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const auto& ideal = ctx.lattice()[k].members();
    bool all = true;
    for (Element x = 0; x < r.order() && all; ++x) {
      bool some = false;
      s.for_each([&](Element t) {
        if (!some && ideal.test(r.mul(x, t))) some = true;
      });
      all = some;
    }
    if (all) members.set(k);
  }
  return members;
}

void unsupported_family(const std::string& name) {
  static const std::map<std::string, std::string> kReasons = {
      {"integral_factor", "integrality over a base ring needs polynomial machinery and is "
                          "automatic for finite rings"},
      {"pi_factor", "polynomial identities need symbolic noncommutative polynomials"},
      {"invertible", "invertibility is relative to an overring; for finite rings the only "
                     "choice available here is the ring itself"},
      {"right_artinian_factor", "every finite ring is right artinian"},
      {"right_noetherian_factor", "every finite ring is right noetherian"},
      {"strongly_noetherian_factor", "every finite ring is strongly noetherian"},
      {"tensor_category", "tensor-closed bimodule classes over a commutative base are not "
                          "modelled"},
  };
  auto it = kReasons.find(name);
  if (it == kReasons.end()) throw ZooError("unknown family '" + name + "'");
  throw ZooError("family '" + name + "' is not supported: " + it->second);
}

std::vector<std::string> registry_names() {
  return {"all",
          "meets_m_system",
          "point_annihilator",
          "left_faithful",
          "middle_annihilator",
          "contains_member",
          "artin_rees",
          "idempotent",
          "direct_summand",
          "dedekind_finite_factor",
          "flat_factor",
          "principal_normal",
          "left_right_principal",
          "annihilator_meets",
          "s_torsion"};
}

}  // namespace oka
