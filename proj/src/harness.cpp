#include "oka/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "oka/module.hpp"
#include "oka/prime.hpp"
#include "oka/zoo.hpp"

namespace oka {

// ---------------------------------------------------------------------------
// Corpus

namespace {

Json zn(std::size_t n) { return Json{{"type", "zn"}, {"n", n}}; }
Json matrix(Json base, std::size_t k) { return Json{{"type", "matrix"}, {"base", base}, {"k", k}}; }
Json triangular(Json a, Json m, Json b) {
  return Json{{"type", "triangular"}, {"A", a}, {"M", m}, {"B", b}};
}
Json product_of(Json l, Json r) { return Json{{"type", "product"}, {"left", l}, {"right", r}}; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Corpus default_corpus() {
  Corpus c;
  for (std::size_t n = 1; n <= 12; ++n) c.rings.push_back({"Z" + std::to_string(n), zn(n)});
  c.rings.push_back({"M2(Z2)", matrix(zn(2), 2)});
  c.rings.push_back({"M2(Z3)", matrix(zn(3), 2)});
  c.rings.push_back({"M2(Z4)", matrix(zn(4), 2)});
  c.rings.push_back({"T(Z2,Z2,Z2)", triangular(zn(2), {{"type", "regular"}}, zn(2))});
  c.rings.push_back({"T(Z3,Z3,Z3)", triangular(zn(3), {{"type", "regular"}}, zn(3))});
  c.rings.push_back(
      {"T(Z2,Z2^2,Z2)", triangular(zn(2), {{"type", "regular_power"}, {"k", 2}}, zn(2))});
  c.rings.push_back({"Z2xZ2", product_of(zn(2), zn(2))});
  c.rings.push_back({"Z2xZ3", product_of(zn(2), zn(3))});
  c.rings.push_back({"M2(Z2)xZ2", product_of(matrix(zn(2), 2), zn(2))});
  return c;
}

Corpus corpus_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("$", "corpus must be an object");
  Corpus c;
  if (j.contains("caps")) {
    const auto& caps = j["caps"];
    c.caps.order = caps.value("order", c.caps.order);
    c.caps.lattice = caps.value("lattice", c.caps.lattice);
  }
  c.seed = j.value("seed", c.seed);
  c.random_families = j.value("random_families", c.random_families);
  if (!j.contains("rings")) {
    c.rings = default_corpus().rings;
    return c;
  }
  const auto& rings = j["rings"];
  if (!rings.is_array()) throw ParseError("$.rings", "expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const std::string path = "$.rings[" + std::to_string(i) + "]";
    const auto& e = rings[i];
    CorpusEntry entry;
    if (e.is_object() && e.contains("ring")) {
      entry.name = e.value("name", "ring" + std::to_string(i));
      entry.description = e["ring"];
    } else {
      entry.name = e.is_object() ? e.value("name", "ring" + std::to_string(i))
                                 : "ring" + std::to_string(i);
      entry.description = e;
    }
    if (!names.insert(entry.name).second)
      throw ParseError(path, "duplicate ring name '" + entry.name + "'");
    c.rings.push_back(std::move(entry));
  }
  return c;
}

Json corpus_to_json(const Corpus& c) {
  Json rings = Json::array();
  for (const auto& e : c.rings) rings.push_back({{"name", e.name}, {"ring", e.description}});
  return Json{{"rings", rings},
              {"caps", {{"order", c.caps.order}, {"lattice", c.caps.lattice}}},
              {"seed", c.seed},
              {"random_families", c.random_families}};
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Family random_family(const ContextPtr& ctx, std::mt19937_64& rng, double density,
                     std::string name) {
  ElementSet members(ctx->size());
  for (std::size_t k = 0; k < ctx->size(); ++k)
    if (k != ctx->top() && unit_interval(rng) < density) members.set(k);
  members.set(ctx->top());
  return Family(ctx, std::move(members), std::move(name));
}

Family random_family(const ContextPtr& ctx, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  return random_family(ctx, rng, density);
}

std::uint64_t ring_seed(std::uint64_t seed, const std::string& ring_name) {
  return seed ^ fnv1a(ring_name);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::degenerate: return "degenerate";
    case Verdict::hypothesis_unmet: return "hypothesis_unmet";
    case Verdict::violated: return "violated";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Suite plumbing

namespace {

constexpr std::size_t kMaxListed = 5;

Json set_json(const ElementSet& s) { return s.members(); }

/// Accumulates checks for one assertion and keeps the first few violations.
class Tally {
 public:
  Tally(std::string block, std::string name) {
    a_.block = std::move(block);
    a_.name = std::move(name);
  }

  void check(bool ok, const std::function<Json()>& what) {
    ++a_.checks;
    if (ok) return;
    if (failures_ < kMaxListed) a_.detail["violations"].push_back(what());
    ++failures_;
  }
  void add_checks(std::size_t n) { a_.checks += n; }
  Json& detail() { return a_.detail; }

  Assertion done(Verdict otherwise = Verdict::verified, std::string note = {}) {
    if (failures_ > 0) {
      a_.verdict = Verdict::violated;
      a_.detail["violation_count"] = failures_;
    } else {
      a_.verdict = otherwise;
    }
    if (!note.empty()) a_.detail["note"] = std::move(note);
    return std::move(a_);
  }

 private:
  Assertion a_;
  std::size_t failures_ = 0;
};

Assertion unmet(std::string block, std::string name, std::string why) {
  Tally t(std::move(block), std::move(name));
  return t.done(Verdict::hypothesis_unmet, std::move(why));
}

bool is_commutative(const Ring& r) {
  for (Element a = 0; a < r.order(); ++a)
    for (Element b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

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

struct ZooInstance {
  std::string constructor;
  std::string params;
  std::optional<ZooFamily> zoo;
  std::string unmet;
};

/// Everything the blocks share for one corpus ring: the context, the zoo
/// families, the random population and memoized profiles.
class RingRun {
 public:
  RingRun(const CorpusEntry& entry, RingPtr ring, const Corpus& corpus)
      : entry_(entry), corpus_(corpus), ctx_(FamilyContext::create(std::move(ring), corpus.caps)) {}

  const ContextPtr& ctx() const { return ctx_; }
  const Ring& ring() const { return *ctx_->ring(); }
  const std::string& name() const { return entry_.name; }

  const std::vector<ZooInstance>& zoo() {
    if (!zoo_built_) build_zoo();
    return zoo_;
  }
  std::vector<Assertion>& corollaries() {
    if (!zoo_built_) build_zoo();
    return corollaries_;
  }

  /// Zoo families followed by the seeded random families.
  const std::vector<Family>& population() {
    if (population_.empty()) {
      for (const auto& z : zoo())
        if (z.zoo) population_.push_back(z.zoo->family);
      std::mt19937_64 rng(ring_seed(corpus_.seed, entry_.name));
      for (std::size_t k = 0; k < corpus_.random_families; ++k) {
        const double density = static_cast<double>(k % 9 + 1) / 10.0;
        population_.push_back(random_family(ctx_, rng, density, "random#" + std::to_string(k)));
      }
    }
    return population_;
  }

  std::size_t distinct_families() {
    std::unordered_map<ElementSet, int, ElementSetHash> seen;
    for (const auto& f : population()) seen.emplace(f.members(), 0);
    return seen.size();
  }

  const PropertyProfile& profile(const Family& f) {
    auto it = profiles_.find(f.members());
    if (it == profiles_.end()) it = profiles_.emplace(f.members(), property_profile(f)).first;
    return it->second;
  }

 private:
  void add_instance(const std::string& constructor, const std::string& params,
                    const std::function<ZooFamily()>& make) {
    ZooInstance inst{constructor, params, std::nullopt, {}};
    try {
      inst.zoo = make();
    } catch (const ZooError& e) {
      inst.unmet = e.what();
    }
    zoo_.push_back(std::move(inst));
  }

  Tally& corollary(const std::string& name) {
    for (auto& [n, t] : pending_)
      if (n == name) return t;
    pending_.emplace_back(name, Tally("zoo", name));
    return pending_.back().second;
  }

  void build_zoo();

  const CorpusEntry& entry_;
  const Corpus& corpus_;
  ContextPtr ctx_;
  bool zoo_built_ = false;
  std::vector<ZooInstance> zoo_;
  std::vector<std::pair<std::string, Tally>> pending_;
  std::vector<Assertion> corollaries_;
  std::vector<Family> population_;
  std::unordered_map<ElementSet, PropertyProfile, ElementSetHash> profiles_;
};

// Distinct sets in first-seen order.
void push_unique(std::vector<ElementSet>& out, ElementSet s) {
  for (const auto& t : out)
    if (t == s) return;
  out.push_back(std::move(s));
}

void RingRun::build_zoo() {
  zoo_built_ = true;
  const auto& ctx = ctx_;
  const Ring& r = ring();
  const auto& lat = ctx->lattice();
  const std::size_t n = r.order();
  const bool zero = r.is_zero_ring();

  auto primes_set = [&] {
    ElementSet s(ctx->size());
    for (auto p : ctx->spec().primes) s.set(p);
    return s;
  }();

  // m-systems: {1}, units, complements of primes, powers of each element.
  std::vector<ElementSet> m_systems;
  {
    ElementSet one(n);
    one.set(r.one());
    push_unique(m_systems, one);
    push_unique(m_systems, units(r));
    for (auto p : ctx->spec().primes) push_unique(m_systems, lat[p].members().complement());
    for (Element x = 0; x < n; ++x) {
      const Element seed[] = {x};
      push_unique(m_systems, multiplicative_closure(r, seed));
    }
  }
  for (const auto& s : m_systems)
    add_instance("meets_m_system", "s=" + set_text(s), [&] { return meets_m_system(ctx, s); });

  // Point annihilators of R_R/K for proper right ideals K.
  {
    const auto& right = ctx->right_lattice();
    std::size_t used = 0;
    for (const auto& k : right.ideals()) {
      if (k.is_whole() && !zero) continue;
      if (used++ == 24) break;
      std::optional<PointAnnihilatorResult> res;
      add_instance("point_annihilator", "M=R/" + set_text(k.members()), [&] {
        res = point_annihilator_family(ctx, quotient_module(regular_module(ctx->ring()), k.members()));
        return res->zoo;
      });
      if (!res) continue;
      auto& t = corollary("maximal_annihilators_prime");
      for (auto a : res->maximal_annihilators)
        t.check(ctx->spec().is_prime(a), [&] {
          return Json{{"module", "R/" + set_text(k.members())}, {"annihilator", a}};
        });
    }
  }

  {
    std::optional<PointAnnihilatorResult> res;
    add_instance("left_faithful", "", [&] {
      res = left_faithful_family(ctx);
      return res->zoo;
    });
    if (res) {
      // Direct reading: I is faithful as a left module when xI = 0 forces x = 0.
      auto& t = corollary("left_faithful_direct");
      for (std::size_t k = 0; k < ctx->size(); ++k) {
        bool faithful = true;
        for (Element x = 1; x < n && faithful; ++x) {
          bool kills = true;
          lat[k].members().for_each([&](Element i) {
            if (kills && r.mul(x, i) != 0) kills = false;
          });
          if (kills) faithful = false;
        }
        t.check(faithful == res->zoo.family.contains(k), [&] { return Json{{"ideal", k}}; });
      }
    }
  }

  {
    std::optional<MiddleAnnihilatorResult> res;
    add_instance("middle_annihilator", "", [&] {
      res = middle_annihilator_family(ctx);
      return res->zoo;
    });
    if (res) {
      auto& t = corollary("maximal_middle_annihilators_prime");
      for (auto a : res->maximal_middle_annihilators)
        t.check(ctx->spec().is_prime(a), [&] { return Json{{"middle_annihilator", a}}; });
      auto& eq = corollary("middle_annihilators_are_max_complement");
      auto maxc = max_in_complement(lat, res->zoo.family.members());
      eq.check(maxc == res->maximal_middle_annihilators, [&] {
        return Json{{"max_complement", maxc}, {"maximal", res->maximal_middle_annihilators}};
      });
    }
  }

  {
    std::vector<ElementSet> seeds;
    ElementSet whole(ctx->size());
    whole.set(ctx->top());
    push_unique(seeds, whole);
    ElementSet minimal(ctx->size());
    for (auto p : ctx->spec().minimal_primes) minimal.set(p);
    if (!minimal.empty()) push_unique(seeds, product_closure(*ctx, minimal));
    for (std::size_t k = 0; k < ctx->size(); ++k) {
      ElementSet one(ctx->size());
      one.set(k);
      push_unique(seeds, product_closure(*ctx, one));
    }
    for (const auto& s : seeds)
      add_instance("contains_member", "S=" + set_text(s),
                   [&] { return contains_member_family(ctx, s); });
  }

  add_instance("artin_rees", "", [&] { return artin_rees_family(ctx).zoo; });

  {
    const ElementSet central = central_idempotents(r);
    std::vector<ElementSet> sets;
    ElementSet one(n);
    one.set(r.one());
    push_unique(sets, one);
    push_unique(sets, central);
    central.for_each([&](Element e) {
      ElementSet s = one;
      s.set(e);
      push_unique(sets, s);
    });
    for (const auto& s : sets)
      add_instance("idempotent", "S=" + set_text(s), [&] { return idempotent_family(ctx, s); });
    // (P3) survives even where the (P2) claim fails: (e) meet (f) = (ef).
    auto& t = corollary("idempotent_family_p3");
    for (const auto& z : zoo_)
      if (z.constructor == "idempotent" && z.zoo)
        t.check(check_p3(z.zoo->family).holds(), [&] { return Json{{"params", z.params}}; });
  }

  {
    std::optional<DirectSummandResult> res;
    add_instance("direct_summand", "", [&] {
      res = direct_summand_family(ctx);
      return res->zoo;
    });
    if (res) {
      auto& t = corollary("direct_summand_max_complement_maximal");
      t.check(res->non_maximal_in_max_complement.empty(),
              [&] { return Json{{"non_maximal", res->non_maximal_in_max_complement}}; });
      auto& d = corollary("summands_iff_product_of_simple");
      d.check(res->all_ideals_summands == res->product_of_simple_rings, [&] {
        return Json{{"all_ideals_summands", res->all_ideals_summands},
                    {"product_of_simple_rings", res->product_of_simple_rings}};
      });
    }
  }

  add_instance("dedekind_finite_factor", "", [&] { return dedekind_finite_factor_family(ctx); });
  add_instance("flat_factor", "", [&] { return flat_factor_family(ctx).zoo; });

  {
    const ElementSet normal = normal_elements(r);
    std::vector<ElementSet> sets;
    ElementSet one(n);
    one.set(r.one());
    push_unique(sets, one);
    push_unique(sets, normal);
    normal.for_each([&](Element x) {
      const Element seed[] = {x};
      push_unique(sets, multiplicative_closure(r, seed));
    });
    for (const auto& s : sets)
      add_instance("principal_normal", "S=" + set_text(s),
                   [&] { return principal_normal_family(ctx, s); });
  }

  add_instance("left_right_principal", "", [&] {
    auto rep = verify_left_right_principal_normal(ctx);
    return ZooFamily{std::move(*rep.family), Property::r_oka};
  });

  // Module-class families, checked against their direct descriptions. The
  // sampler is the expensive part, so only the first few sets are used.
  {
    constexpr std::size_t kSamples = 4;
    auto& t = corollary("annihilator_class_equals_m_system_family");
    for (std::size_t k = 0; k < m_systems.size() && k < kSamples; ++k) {
      const auto& s = m_systems[k];
      std::optional<ZooFamily> fam;
      add_instance("annihilator_meets", "s=" + set_text(s), [&] {
        fam = factor_predicate_family(ctx, annihilator_meets(s), "annihilator_meets" + set_text(s)).zoo;
        return *fam;
      });
      if (!fam) continue;
      ElementSet direct(ctx->size());
      for (std::size_t i = 0; i < ctx->size(); ++i)
        if (lat[i].members().intersects(s)) direct.set(i);
      t.check(direct == fam->family.members(), [&] { return Json{{"s", set_json(s)}}; });
    }

    std::vector<ElementSet> mult;
    ElementSet one(n);
    one.set(r.one());
    push_unique(mult, one);
    for (Element x = 0; x < n && mult.size() < kSamples; ++x) {
      const Element seed[] = {x};
      push_unique(mult, multiplicative_closure(r, seed));
    }
    auto& u = corollary("s_torsion_class_equals_direct");
    for (const auto& s : mult) {
      std::optional<ZooFamily> fam;
      add_instance("s_torsion", "s=" + set_text(s), [&] {
        fam = factor_predicate_family(ctx, s_torsion(s), "s_torsion" + set_text(s)).zoo;
        return *fam;
      });
      if (!fam) continue;
      u.check(s_torsion_direct(*ctx, s) == fam->family.members(),
              [&] { return Json{{"s", set_json(s)}}; });
    }
  }

  (void)primes_set;
  for (auto& [name, t] : pending_) corollaries_.push_back(t.done());
  pending_.clear();
}

// ---------------------------------------------------------------------------
// Blocks

using Block = std::function<void(RingRun&, std::vector<Assertion>&)>;

void block_ring(RingRun& run, std::vector<Assertion>& out) {
  const Ring& r = run.ring();
  const std::size_t n = r.order();
  {
    Tally t("ring", "table_round_trip");
    auto back = ring_from_json(ring_to_json(r), Caps{n, run.ctx()->caps().lattice});
    t.check(std::ranges::equal(back->add_table(), r.add_table()) &&
                std::ranges::equal(back->mul_table(), r.mul_table()) && back->one() == r.one(),
            [] { return Json("tables differ"); });
    out.push_back(t.done());
  }
  {
    Tally t("ring", "normal_elements_closed");
    const auto normal = normal_elements(r);
    normal.for_each([&](Element x) {
      normal.for_each([&](Element y) {
        t.check(normal.test(r.mul(x, y)), [&] { return Json{x, y}; });
      });
    });
    t.check(normal.test(0) && normal.test(r.one()), [] { return Json("0 or 1 not normal"); });
    out.push_back(t.done());
  }
  {
    Tally t("ring", "central_idempotents_closed");
    const auto central = central_idempotents(r);
    central.for_each([&](Element e) {
      t.check(central.test(r.sub(r.one(), e)), [&] { return Json{{"complement_of", e}}; });
      central.for_each([&](Element f) {
        t.check(central.test(r.mul(e, f)), [&] { return Json{{"product", {e, f}}}; });
      });
    });
    out.push_back(t.done());
  }
  {
    Tally t("ring", "dedekind_finite");
    t.check(is_dedekind_finite(r), [] { return Json("ab = 1 but ba != 1"); });
    out.push_back(t.done(Verdict::degenerate, "every finite ring is Dedekind finite"));
  }
}

void block_ideal_ops(RingRun& run, std::vector<Assertion>& out) {
  const auto& ctx = *run.ctx();
  const auto& lat = ctx.lattice();
  const std::size_t L = ctx.size();
  Tally closure("ideal_ops", "lattice_closed_under_operations");
  Tally quot("ideal_ops", "quotient_containments");
  Tally meet("ideal_ops", "product_inside_intersection");
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const Ideal& a = lat[i];
      const Ideal& b = lat[j];
      const Ideal ops[] = {sum(a, b), product(a, b), intersect(a, b), left_quotient(a, b),
                           right_quotient(a, b)};
      for (const auto& o : ops)
        closure.check(lat.find(o.members()).has_value() && is_ideal(run.ring(), o.members(), Side::two_sided),
                      [&] { return Json{{"pair", {i, j}}}; });
      // J (J^{-1} I) inside I and (I J^{-1}) J inside I, with I = a, J = b.
      quot.check(product(b, left_quotient(b, a)).subset_of(a),
                 [&] { return Json{{"left", {i, j}}}; });
      quot.check(product(right_quotient(a, b), b).subset_of(a),
                 [&] { return Json{{"right", {i, j}}}; });
      meet.check(product(a, b).subset_of(intersect(a, b)), [&] { return Json{{"pair", {i, j}}}; });
    }
  out.push_back(closure.done());
  out.push_back(quot.done());
  out.push_back(meet.done());

  if (is_commutative(run.ring())) {
    Tally t("ideal_ops", "commutative_quotients_agree");
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j)
        t.check(ctx.tables().left_quotient(j, i) == ctx.tables().right_quotient(i, j),
                [&] { return Json{{"pair", {i, j}}}; });
    out.push_back(t.done());
  } else {
    out.push_back(unmet("ideal_ops", "commutative_quotients_agree", "ring is not commutative"));
  }

  Tally pw("ideal_ops", "power_chain_stabilizes");
  for (std::size_t k = 0; k < L; ++k) {
    const auto chain = ideal_power_stabilization(lat[k]);
    const Ideal& last = chain.powers.back();
    bool descending = true;
    for (std::size_t s = 1; s < chain.powers.size(); ++s)
      descending = descending && chain.powers[s].subset_of(chain.powers[s - 1]);
    pw.check(descending && product(last, lat[k]) == last && chain.stable_index == chain.powers.size(),
             [&] { return Json{{"ideal", k}}; });
  }
  out.push_back(pw.done());
}

void block_lemma39(RingRun& run, std::vector<Assertion>& out) {
  const auto& ctx = *run.ctx();
  Tally t("lemma39", "right_generators_of_products");
  const auto& right = ctx.right_lattice();
  std::vector<std::vector<Element>> ygens;
  for (const auto& j : ctx.lattice().ideals())
    ygens.push_back(generators(Ideal(run.ctx()->ring(), j.members(), Side::right)));
  for (std::size_t i = 0; i < right.size(); ++i) {
    const auto xs = generators(right[i]);
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      std::vector<Element> prods;
      for (auto x : xs)
        for (auto y : ygens[j]) prods.push_back(run.ring().mul(x, y));
      const Ideal generated = ideal_closure(run.ctx()->ring(), prods, Side::right);
      const Ideal ij = product(right[i], ctx.lattice()[j], ProductInputs::any);
      t.check(generated == ij, [&] { return Json{{"right_ideal", i}, {"ideal", j}}; });
    }
  }
  t.detail()["right_ideals"] = right.size();
  out.push_back(t.done());
}

void block_modules(RingRun& run, std::vector<Assertion>& out) {
  const auto& ctx = *run.ctx();
  const Ring& r = run.ring();
  const auto reg = regular_module(run.ctx()->ring());
  Tally two("modules", "annihilators_two_sided");
  Tally anti("modules", "annihilator_antitone");
  Tally ord("modules", "quotient_order");
  Tally cyc("modules", "annihilator_of_cyclic_factor");
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const auto m = quotient_module(reg, ctx.lattice()[k].members());
    cyc.check(annihilator(m) == ctx.lattice()[k], [&] { return Json{{"ideal", k}}; });
    const auto subs = submodules(m, ctx.caps().lattice);
    std::vector<Ideal> anns;
    for (const auto& s : subs) {
      anns.push_back(annihilator(m, s));
      two.check(is_ideal(r, anns.back().members(), Side::two_sided),
                [&] { return Json{{"module", k}, {"submodule", set_json(s)}}; });
      ord.check(quotient_module(m, s).order() * s.count() == m.order(),
                [&] { return Json{{"module", k}, {"submodule", set_json(s)}}; });
    }
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = 0; b < subs.size(); ++b)
        if (a != b && subs[a].subset_of(subs[b]))
          anti.check(anns[b].subset_of(anns[a]), [&] { return Json{{"module", k}, {"pair", {a, b}}}; });
  }
  Tally direct("modules", "regular_cyclic_annihilator_direct");
  for (Element x = 0; x < r.order(); ++x) {
    const auto xr = right_multiples(r, x);
    const auto ann = annihilator(reg, xr);
    ElementSet scan(r.order());
    for (Element s = 0; s < r.order(); ++s)
      if (annihilates_through(r, x, s)) scan.set(s);
    direct.check(scan == ann.members(), [&] { return Json{{"x", x}}; });
  }
  out.push_back(two.done());
  out.push_back(anti.done());
  out.push_back(ord.done());
  out.push_back(cyc.done());
  out.push_back(direct.done());
}

void block_lemma31(RingRun& run, std::vector<Assertion>& out) {
  const Ring& r = run.ring();
  const auto rep = is_prime_ring(run.ctx()->ring());
  if (rep.zero_ring) {
    Tally t("lemma31", "criteria_agree");
    t.add_checks(1);
    out.push_back(t.done(Verdict::degenerate, "zero ring: not prime by convention"));
    out.push_back(unmet("lemma31", "symmetric_witness", "zero ring"));
    return;
  }
  Tally t("lemma31", "criteria_agree");
  t.check(rep.consistent, [&] {
    return Json{{"zero_ideal_prime", rep.zero_ideal_prime},
                {"both_nonzero", rep.both_nonzero},
                {"either_nonzero", rep.either_nonzero}};
  });
  t.detail()["prime"] = rep.prime;
  out.push_back(t.done());
  if (rep.prime) {
    out.push_back(unmet("lemma31", "symmetric_witness", "ring is prime"));
    return;
  }
  Tally w("lemma31", "symmetric_witness");
  w.check(rep.symmetric.has_value(), [] { return Json("no witness produced"); });
  if (rep.symmetric) {
    const auto [a, b] = *rep.symmetric;
    w.check(a != 0 && b != 0 && annihilates_through(r, a, b) && annihilates_through(r, b, a),
            [&] { return Json{a, b}; });
    w.detail()["witness"] = {a, b};
    w.detail()["from"] = {rep.one_sided->first, rep.one_sided->second};
  }
  out.push_back(w.done());
}

void block_spec(RingRun& run, std::vector<Assertion>& out) {
  const auto& ctx = *run.ctx();
  const auto& lat = ctx.lattice();
  const Ring& r = run.ring();
  const auto& sp = ctx.spec();
  const bool zero = r.is_zero_ring();
  const std::string note = zero ? "zero ring: Spec is empty" : "";
  const Verdict fine = zero ? Verdict::degenerate : Verdict::verified;

  Tally msys("spec", "prime_iff_complement_m_system");
  Tally semi("spec", "prime_implies_semiprime");
  Tally transfer("spec", "prime_iff_factor_ring_prime");
  Tally wit("spec", "non_prime_witnesses");
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    if (lat[k].is_whole()) continue;
    const bool prime = sp.is_prime(k);
    msys.check(prime == is_m_system(r, lat[k].members().complement()).is_m_system,
               [&] { return Json{{"ideal", k}}; });
    if (prime) semi.check(is_semiprime_ideal(lat[k]).prime, [&] { return Json{{"ideal", k}}; });
    const auto q = build_quotient(run.ctx()->ring(), lat[k].members(),
                                  Caps{r.order(), ctx.caps().lattice});
    transfer.check(prime == is_prime_ring(q.ring).prime, [&] { return Json{{"ideal", k}}; });
    if (!prime) {
      const auto& w = sp.witnesses[k];
      wit.check(w && !lat[k].contains(w->first) && !lat[k].contains(w->second) && [&] {
        for (Element s = 0; s < r.order(); ++s)
          if (!lat[k].contains(r.mul(r.mul(w->first, s), w->second))) return false;
        return true;
      }(), [&] { return Json{{"ideal", k}}; });
    }
  }
  Tally minimal("spec", "minimal_primes");
  std::vector<std::size_t> recount;
  for (auto p : sp.primes) {
    bool min = true;
    for (auto q : sp.primes)
      if (q != p && lat[q].members().subset_of(lat[p].members())) min = false;
    if (min) recount.push_back(p);
  }
  minimal.check(recount == sp.minimal_primes,
                [&] { return Json{{"recount", recount}, {"listed", sp.minimal_primes}}; });
  minimal.detail()["primes"] = sp.primes;
  minimal.detail()["minimal"] = sp.minimal_primes;
  out.push_back(msys.done(fine, note));
  out.push_back(semi.done(fine, note));
  out.push_back(transfer.done(fine, note));
  out.push_back(wit.done(fine, note));
  out.push_back(minimal.done(fine, note));
}

void block_prop310(RingRun& run, std::vector<Assertion>& out) {
  const auto& ctx = *run.ctx();
  const auto& lat = ctx.lattice();
  if (run.ring().is_zero_ring()) {
    Tally t("prop310", "zero_is_product_of_minimal_primes");
    t.add_checks(1);
    out.push_back(t.done(Verdict::degenerate, "zero ring: 0 = R is the empty product"));
    return;
  }
  Tally t("prop310", "zero_is_product_of_minimal_primes");
  const auto seq = zero_as_product_of_minimal_primes(lat, ctx.tables(), ctx.spec());
  t.check(seq.has_value(), [] { return Json("no product of minimal primes reaches 0"); });
  if (seq) {
    Ideal acc = lat[(*seq)[0]];
    for (std::size_t s = 1; s < seq->size(); ++s) acc = product(acc, lat[(*seq)[s]]);
    t.check(acc.is_zero(), [&] { return Json{{"sequence", *seq}}; });
    bool all_minimal = true;
    for (auto p : *seq)
      all_minimal = all_minimal && std::ranges::find(ctx.spec().minimal_primes, p) !=
                                       ctx.spec().minimal_primes.end();
    t.check(all_minimal, [&] { return Json{{"sequence", *seq}}; });
    t.detail()["sequence"] = *seq;
  }
  out.push_back(t.done());
}

void block_triangular(RingRun& run, std::vector<Assertion>& out) {
  const auto& shape = run.ring().triangular();
  if (!shape) {
    out.push_back(unmet("triangular", "two_primes", "not a triangular ring"));
    return;
  }
  const auto& ctx = *run.ctx();
  const auto& lat = ctx.lattice();
  const Ring& r = run.ring();
  const auto rp = run.ctx()->ring();
  ElementSet p1(r.order()), p2(r.order()), mpart(r.order());
  for (Element a = 0; a < shape->order_a; ++a)
    for (Element m = 0; m < shape->order_m; ++m)
      for (Element b = 0; b < shape->order_b; ++b) {
        const Element x = shape->index(a, m, b);
        if (b == 0) p1.set(x);
        if (a == 0) p2.set(x);
        if (a == 0 && b == 0) mpart.set(x);
      }
  const Element e11 = shape->index(shape->one_a, 0, 0);
  const Element e22 = shape->index(0, 0, shape->one_b);

  Tally gen("triangular", "prime_generator_formulas");
  auto span_of = [&](const ElementSet& a, const ElementSet& b) {
    auto gens = (a | b).members();
    return additive_span(r, gens);
  };
  for (auto [target, e, name] : {std::tuple{&p1, e11, "P1"}, std::tuple{&p2, e22, "P2"}}) {
    const Element g[] = {e};
    gen.check(ideal_closure(rp, g, Side::two_sided).members() == *target,
              [&] { return Json{{name, "(e) differs"}}; });
    gen.check(span_of(mpart, left_multiples(r, e)) == *target,
              [&] { return Json{{name, "M + Re differs"}}; });
    gen.check(span_of(mpart, right_multiples(r, e)) == *target,
              [&] { return Json{{name, "M + eR differs"}}; });
    gen.check(lat.find(*target).has_value(), [&] { return Json{{name, "not an ideal"}}; });
  }
  out.push_back(gen.done());

  const auto i1 = lat.find(p1), i2 = lat.find(p2);
  if (!i1 || !i2) return;
  auto above = [&](std::size_t k) { return lat.supersets_of(k).count(); };
  // R/P2 is A and R/P1 is B, so simplicity shows up as exactly two ideals above.
  if (above(*i2) == 2 && above(*i1) == 2) {
    Tally t("triangular", "two_primes");
    std::vector<std::size_t> expect{*i1, *i2};
    std::ranges::sort(expect);
    t.check(ctx.spec().primes == expect,
            [&] { return Json{{"primes", ctx.spec().primes}, {"expected", expect}}; });
    out.push_back(t.done());
  } else {
    out.push_back(unmet("triangular", "two_primes", "A or B is not simple"));
  }

  Tally z("triangular", "p2_p1_zero");
  z.check(product(lat[*i2], lat[*i1]).is_zero(), [] { return Json("P2 P1 != 0"); });
  out.push_back(z.done());

  if (shape->order_m > 1) {
    Tally ar("triangular", "p1_lacks_artin_rees");
    const Ideal k(rp, mpart, Side::right);
    const Ideal kp1 = product(k, lat[*i1], ProductInputs::any);
    ar.check(kp1.is_zero() && !intersect(k, lat[*i1]).subset_of(kp1),
             [] { return Json("K = M does not witness the failure"); });
    const auto res = artin_rees_family(run.ctx());
    ar.check(!res.zoo.family.contains(*i1), [] { return Json("P1 in the Artin-Rees family"); });
    if (res.records[*i1].failing_right_ideal)
      ar.detail()["failing_right_ideal"] = set_json(*res.records[*i1].failing_right_ideal);
    out.push_back(ar.done());
  }
}

void block_zoo(RingRun& run, std::vector<Assertion>& out) {
  // One contract assertion per constructor, in first-seen order.
  std::vector<std::string> order;
  for (const auto& z : run.zoo())
    if (std::ranges::find(order, z.constructor) == order.end()) order.push_back(z.constructor);
  for (const auto& name : order) {
    Tally t("zoo", name + "_contract");
    std::size_t built = 0, unmet_count = 0;
    bool degenerate = false;
    std::string why;
    for (const auto& z : run.zoo()) {
      if (z.constructor != name) continue;
      if (!z.zoo) {
        ++unmet_count;
        why = z.unmet;
        continue;
      }
      ++built;
      degenerate = degenerate || z.zoo->family.degenerate();
      const auto res = check(z.zoo->claimed, z.zoo->family);
      t.check(res.holds(), [&] {
        Json j{{"params", z.params}, {"members", set_json(z.zoo->family.members())},
               {"status", to_string(res.status)}};
        if (res.witness) {
          j["clause"] = res.witness->clause;
          j["witness_ideals"] = res.witness->ideals;
        }
        return j;
      });
      t.detail()["claimed"] = std::string(to_string(z.zoo->claimed));
    }
    t.detail()["instances"] = built;
    if (unmet_count) t.detail()["hypothesis_unmet"] = unmet_count;
    if (built == 0)
      out.push_back(t.done(Verdict::hypothesis_unmet, why));
    else
      out.push_back(t.done(degenerate ? Verdict::degenerate : Verdict::verified,
                           degenerate ? "every factor of a finite ring is Dedekind finite" : ""));
  }
  for (const auto& a : run.corollaries()) out.push_back(a);
}

void block_pip(RingRun& run, std::vector<Assertion>& out) {
  Tally t("pip", "max_complement_in_spec");
  std::size_t oka = 0;
  std::unordered_map<ElementSet, PipReport, ElementSetHash> memo;
  for (const auto& f : run.population()) {
    auto it = memo.find(f.members());
    if (it == memo.end()) it = memo.emplace(f.members(), verify_pip(f)).first;
    const auto& rep = it->second;
    if (rep.oka.holds()) ++oka;
    t.check(!rep.violation, [&] {
      return Json{{"family", f.name()}, {"members", set_json(f.members())}, {"report", pip_to_json(rep)}};
    });
  }
  t.detail()["families"] = run.population().size();
  t.detail()["distinct"] = memo.size();
  t.detail()["oka"] = oka;
  out.push_back(t.done());
}

void block_prop22(RingRun& run, std::vector<Assertion>& out) {
  Tally imp("prop22", "implication_diagram");
  Tally rep("prop22", "witnesses_replay");
  std::unordered_map<ElementSet, int, ElementSetHash> replayed;
  for (const auto& f : run.population()) {
    const auto& prof = run.profile(f);
    const auto bad = implication_violations(prof);
    imp.check(bad.empty(), [&] {
      Json arrows = Json::array();
      for (const auto& b : bad) arrows.push_back({to_string(b.from), to_string(b.to)});
      return Json{{"family", f.name()}, {"members", set_json(f.members())}, {"arrows", arrows}};
    });
    if (!replayed.emplace(f.members(), 0).second) continue;
    for (const auto& [p, res] : prof.verdicts) {
      if (res.status != Status::fails || !res.witness) continue;
      rep.check(witness_violates(p, f, *res.witness), [&] {
        return Json{{"property", to_string(p)}, {"members", set_json(f.members())}};
      });
    }
  }
  imp.detail()["families"] = run.population().size();
  out.push_back(imp.done());
  out.push_back(rep.done());
}

void block_thm34(RingRun& run, std::vector<Assertion>& out) {
  std::vector<ElementSet> semifilters;
  for (const auto& z : run.zoo())
    if (z.zoo && is_semifilter(*run.ctx(), z.zoo->family.members()))
      push_unique(semifilters, z.zoo->family.members());
  Tally t("thm34", "supplement_statements");
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  std::size_t oka = 0;
  for (const auto& f : run.population()) {
    if (!seen.emplace(f.members(), 0).second) continue;
    if (!run.profile(f).holds(Property::oka)) continue;
    ++oka;
    const auto rep = verify_supplement(f, semifilters);
    t.add_checks(rep.checks > 0 ? rep.checks - 1 : 0);
    t.check(rep.verdict != SupplementVerdict::violated, [&] {
      return Json{{"members", set_json(f.members())}, {"statements", rep.violations}};
    });
  }
  t.detail()["oka_families"] = oka;
  t.detail()["semifilters"] = semifilters.size();
  out.push_back(t.done());
}

void block_intersections(RingRun& run, std::vector<Assertion>& out) {
  static constexpr Property kClosed[] = {
      Property::monoidal,       Property::semifilter,     Property::p1,
      Property::p2,             Property::p3,             Property::strongly_r_oka,
      Property::strongly_l_oka, Property::strongly_oka,   Property::r_oka,
      Property::l_oka,          Property::oka};
  std::vector<const Family*> fams;
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  for (const auto& f : run.population())
    if (seen.emplace(f.members(), 0).second) fams.push_back(&f);
  Tally t("intersections", "properties_pass_to_intersections");
  constexpr std::size_t kPairs = 2000;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < fams.size() && pairs < kPairs; ++a)
    for (std::size_t b = a + 1; b < fams.size() && pairs < kPairs; ++b, ++pairs) {
      const auto& pa = run.profile(*fams[a]);
      const auto& pb = run.profile(*fams[b]);
      const Family meet = intersect_families(*fams[a], *fams[b]);
      const auto& pm = run.profile(meet);
      for (auto p : kClosed)
        if (pa.holds(p) && pb.holds(p))
          t.check(pm.holds(p), [&] {
            return Json{{"property", to_string(p)},
                        {"left", set_json(fams[a]->members())},
                        {"right", set_json(fams[b]->members())}};
          });
    }
  t.detail()["pairs"] = pairs;
  out.push_back(t.done());
}

void block_ako(RingRun& run, std::vector<Assertion>& out) {
  Tally t("ako", "ako_families_satisfy_pip");
  std::size_t ako = 0;
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  for (const auto& f : run.population()) {
    if (!seen.emplace(f.members(), 0).second) continue;
    const auto& prof = run.profile(f);
    if (!prof.holds(Property::ako_goodearl) && !prof.holds(Property::ako_product)) continue;
    ++ako;
    const auto rep = verify_pip(f);
    t.check(rep.contained, [&] {
      return Json{{"members", set_json(f.members())}, {"non_prime", rep.non_prime_maximals}};
    });
  }
  t.detail()["ako_families"] = ako;
  out.push_back(t.done());
}

void block_lemma42(RingRun& run, std::vector<Assertion>& out) {
  const auto rep = verify_left_right_principal_normal(run.ctx());
  Tally t("lemma42", "left_right_principal_normal");
  t.add_checks(rep.triples_checked);
  for (const auto& v : rep.violations) t.check(false, [&] { return Json(v); });
  t.detail()["triples"] = rep.triples_checked;
  out.push_back(t.done(Verdict::verified, "right noetherian hypothesis holds for finite rings"));
  Tally c("lemma42", "corollary_family");
  c.check(rep.family_product_closed, [] { return Json("family not closed under products"); });
  c.check(rep.family_r_oka.holds(), [&] { return check_to_json(rep.family_r_oka); });
  if (rep.family) c.detail()["members"] = set_json(rep.family->members());
  out.push_back(c.done());
}

const std::vector<std::pair<std::string, Block>>& blocks() {
  static const std::vector<std::pair<std::string, Block>> kBlocks = {
      {"ring", block_ring},         {"ideal_ops", block_ideal_ops},
      {"lemma39", block_lemma39},   {"modules", block_modules},
      {"lemma31", block_lemma31},   {"spec", block_spec},
      {"prop310", block_prop310},   {"triangular", block_triangular},
      {"zoo", block_zoo},           {"pip", block_pip},
      {"prop22", block_prop22},     {"thm34", block_thm34},
      {"intersections", block_intersections},
      {"ako", block_ako},           {"lemma42", block_lemma42},
  };
  return kBlocks;
}

template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

std::vector<RingPtr> build_rings(const Corpus& corpus) {
  std::vector<RingPtr> rings;
  for (std::size_t i = 0; i < corpus.rings.size(); ++i)
    rings.push_back(ring_from_json(corpus.rings[i].description, corpus.caps,
                                   "$.rings[" + std::to_string(i) + "] (" +
                                       corpus.rings[i].name + ")"));
  return rings;
}

}  // namespace

std::vector<std::string> suite_blocks() {
  std::vector<std::string> names;
  for (const auto& [n, b] : blocks()) names.push_back(n);
  return names;
}

SuiteReport run_paper_suite(const Corpus& corpus, const SuiteOptions& options) {
  const auto names = suite_blocks();
  for (const auto& o : options.only)
    if (std::ranges::find(names, o) == names.end())
      throw ParseError("--only", "unknown block '" + o + "'");
  const auto rings = build_rings(corpus);

  SuiteReport report;
  report.seed = corpus.seed;
  report.rings.resize(rings.size());
  std::vector<std::string> errors(rings.size());
  parallel_for(rings.size(), options.jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    RingReport& rr = report.rings[i];
    rr.name = corpus.rings[i].name;
    rr.label = rings[i]->label();
    rr.order = rings[i]->order();
    rr.zero_ring = rings[i]->is_zero_ring();
    try {
      RingRun run(corpus.rings[i], rings[i], corpus);
      rr.ideals = run.ctx()->size();
      for (const auto& [name, block] : blocks()) {
        if (!options.only.empty() && std::ranges::find(options.only, name) == options.only.end())
          continue;
        block(run, rr.assertions);
      }
    } catch (const std::exception& e) {
      Assertion a{"engine", "error", Verdict::violated, 0, Json{{"message", e.what()}}};
      rr.assertions.push_back(std::move(a));
    }
    rr.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return report;
}

bool SuiteReport::ok() const { return count(Verdict::violated) == 0; }

std::size_t SuiteReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : rings)
    for (const auto& a : r.assertions) n += a.verdict == v;
  return n;
}

std::size_t SuiteReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& r : rings)
    for (const auto& a : r.assertions) n += a.checks;
  return n;
}

Json SuiteReport::to_json() const {
  Json rs = Json::array();
  for (const auto& r : rings) {
    Json as = Json::array();
    for (const auto& a : r.assertions)
      as.push_back({{"block", a.block},
                    {"name", a.name},
                    {"verdict", to_string(a.verdict)},
                    {"checks", a.checks},
                    {"detail", a.detail}});
    rs.push_back({{"name", r.name},
                  {"label", r.label},
                  {"order", r.order},
                  {"ideals", r.ideals},
                  {"zero_ring", r.zero_ring},
                  {"assertions", std::move(as)}});
  }
  return Json{{"seed", seed},
              {"ok", ok()},
              {"summary",
               {{"verified", count(Verdict::verified)},
                {"degenerate", count(Verdict::degenerate)},
                {"hypothesis_unmet", count(Verdict::hypothesis_unmet)},
                {"violated", count(Verdict::violated)},
                {"checks", total_checks()}}},
              {"rings", std::move(rs)}};
}

std::string SuiteReport::to_table(std::size_t width) const {
  std::ostringstream os;
  os << std::left << std::setw(16) << "ring" << std::right << std::setw(6) << "order"
     << std::setw(7) << "ideals" << std::setw(9) << "verified" << std::setw(6) << "degen"
     << std::setw(7) << "unmet" << std::setw(6) << "FAIL" << std::setw(11) << "checks"
     << std::setw(9) << "seconds" << "\n";
  for (const auto& r : rings) {
    std::size_t c[4] = {0, 0, 0, 0}, checks = 0;
    for (const auto& a : r.assertions) {
      ++c[static_cast<int>(a.verdict)];
      checks += a.checks;
    }
    os << std::left << std::setw(16) << r.name << std::right << std::setw(6) << r.order
       << std::setw(7) << r.ideals << std::setw(9) << c[0] << std::setw(6) << c[1] << std::setw(7)
       << c[2] << std::setw(6) << c[3] << std::setw(11) << checks << std::setw(9) << std::fixed
       << std::setprecision(2) << r.seconds << "\n";
    for (const auto& a : r.assertions) {
      if (a.verdict != Verdict::violated) continue;
      std::string line = "  VIOLATED " + a.block + "/" + a.name + " " + a.detail.dump();
      if (line.size() > width) line = line.substr(0, width > 3 ? width - 3 : 0) + "...";
      os << line << "\n";
    }
  }
  os << "total: " << count(Verdict::verified) << " verified, " << count(Verdict::degenerate)
     << " degenerate, " << count(Verdict::hypothesis_unmet) << " hypothesis unmet, "
     << count(Verdict::violated) << " violated, " << total_checks() << " checks\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Separation search

Json SeparationResult::to_json() const {
  Json rs = Json::array();
  for (const auto& r : rings) {
    Json j{{"name", r.name},
           {"ideals", r.ideals},
           {"examined", r.examined},
           {"space", r.space},
           {"exhaustive", r.exhaustive}};
    if (r.witness) {
      j["witness"] = set_json(*r.witness);
      j["profile"] = r.witness_profile;
    }
    rs.push_back(std::move(j));
  }
  Json j{{"prop_a", prop_a}, {"prop_b", prop_b}, {"found", first.has_value()}, {"rings", rs},
         {"aborted", aborted}};
  if (first) j["first"] = rings[*first].name;
  if (aborted) j["abort_reason"] = abort_reason;
  return j;
}

SeparationResult search_separation(const Corpus& corpus, Property prop_a,
                                   const std::vector<Property>& prop_b, std::size_t budget,
                                   unsigned jobs, std::size_t exhaustive_limit) {
  const auto rings = build_rings(corpus);
  SeparationResult res;
  res.prop_a = std::string(to_string(prop_a));
  for (auto p : prop_b) res.prop_b.emplace_back(to_string(p));
  res.rings.resize(rings.size());
  std::vector<std::string> aborts(rings.size());

  parallel_for(rings.size(), jobs, [&](std::size_t i) {
    auto ctx = FamilyContext::create(rings[i], corpus.caps);
    RingSearch& rs = res.rings[i];
    rs.name = corpus.rings[i].name;
    rs.ideals = ctx->size();
    const std::size_t free_bits = ctx->size() - 1;  // R is pinned

    auto try_family = [&](ElementSet members) {
      ++rs.examined;
      Family f(ctx, members, "candidate");
      if (!check(prop_a, f).holds()) return false;
      for (auto p : prop_b)
        if (check(p, f).holds()) return false;
      const auto prof = property_profile(f);
      if (!implication_violations(prof).empty())
        aborts[i] = "witness on " + rs.name + " contradicts the implication diagram";
      rs.witness = std::move(members);
      rs.witness_profile = profile_to_json(prof);
      return true;
    };

    if (free_bits <= exhaustive_limit && (std::size_t{1} << free_bits) <= std::max(budget, std::size_t{1})) {
      rs.exhaustive = true;
      rs.space = std::size_t{1} << free_bits;
      for (std::size_t mask = 0; mask < rs.space; ++mask) {
        ElementSet members(ctx->size());
        for (std::size_t b = 0; b < free_bits; ++b)
          if (mask >> b & 1) members.set(b);
        members.set(ctx->top());
        if (try_family(std::move(members))) break;
      }
    } else {
      rs.space = budget;
      std::mt19937_64 rng(ring_seed(corpus.seed, rs.name));
      for (std::size_t k = 0; k < budget; ++k) {
        const double density = static_cast<double>(k % 9 + 1) / 10.0;
        if (try_family(random_family(ctx, rng, density).members())) break;
      }
    }
  });

  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (!aborts[i].empty() && !res.aborted) {
      res.aborted = true;
      res.abort_reason = aborts[i];
    }
    if (res.rings[i].witness && !res.first) res.first = i;
  }
  return res;
}

}  // namespace oka
