#include "oka/family.hpp"

#include <sstream>
#include <unordered_map>

namespace oka {

// ---------------------------------------------------------------------------
// Context

FamilyContext::FamilyContext(RingPtr ring, const Caps& caps)
    : ring_(ring),
      caps_(caps),
      lattice_(all_ideals(ring, Side::two_sided, caps.lattice)),
      tables_(lattice_),
      spec_(oka::spec(lattice_)) {}

std::shared_ptr<const FamilyContext> FamilyContext::create(RingPtr ring, const Caps& caps) {
  return std::shared_ptr<const FamilyContext>(new FamilyContext(std::move(ring), caps));
}

const IdealLattice& FamilyContext::right_lattice() const {
  std::call_once(right_once_, [&] { right_.emplace(all_ideals(ring_, Side::right, caps_.lattice)); });
  return *right_;
}

const IdealLattice& FamilyContext::left_lattice() const {
  std::call_once(left_once_, [&] { left_.emplace(all_ideals(ring_, Side::left, caps_.lattice)); });
  return *left_;
}

std::span<const std::size_t> FamilyContext::sandwich_class(Element a, Element b) const {
  std::call_once(sandwich_once_, [&] {
    const std::size_t n = ring_->order();
    const std::size_t m = lattice_.size();
    std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> ids;
    sandwich_id_.resize(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        ElementSet cls(m);
        for (Element r = 0; r < n; ++r)
          cls.set(tables_.principal(ring_->mul(ring_->mul(x, r), y)));
        auto [it, fresh] = ids.emplace(cls, static_cast<std::uint32_t>(sandwich_classes_.size()));
        if (fresh) {
          std::vector<std::size_t> list;
          cls.for_each([&](Element k) { list.push_back(k); });
          sandwich_classes_.push_back(std::move(list));
        }
        sandwich_id_[x * n + y] = it->second;
      }
  });
  return sandwich_classes_[sandwich_id_[a * ring_->order() + b]];
}

// ---------------------------------------------------------------------------
// Families

Family::Family(ContextPtr ctx, ElementSet members, std::string name)
    : ctx_(std::move(ctx)), members_(std::move(members)), name_(std::move(name)) {
  if (members_.size() != ctx_->size())
    throw IdealError("family '" + name_ + "': member set does not match the lattice size");
}

Family Family::with_whole(ContextPtr ctx, ElementSet members, std::string name) {
  const std::size_t top = ctx->top();
  Family f(std::move(ctx), std::move(members), std::move(name));
  if (!f.members_.test(top)) {
    f.members_.set(top);
    f.inserted_whole_ = true;
    f.add_note("R was missing and has been inserted");
  }
  return f;
}

Family Family::from_ideals(ContextPtr ctx, std::span<const Ideal> ideals, std::string name,
                           bool insert_whole) {
  ElementSet members(ctx->size());
  for (const auto& i : ideals) members.set(ctx->lattice().index_of(i));
  if (insert_whole) return with_whole(std::move(ctx), std::move(members), std::move(name));
  return Family(std::move(ctx), std::move(members), std::move(name));
}

// ---------------------------------------------------------------------------
// Names

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 13> kNames = {{
    {Property::monoidal, "monoidal"},
    {Property::semifilter, "semifilter"},
    {Property::p1, "p1"},
    {Property::p2, "p2"},
    {Property::p3, "p3"},
    {Property::strongly_r_oka, "strongly_r_oka"},
    {Property::strongly_l_oka, "strongly_l_oka"},
    {Property::strongly_oka, "strongly_oka"},
    {Property::r_oka, "r_oka"},
    {Property::l_oka, "l_oka"},
    {Property::oka, "oka"},
    {Property::ako_goodearl, "ako_goodearl"},
    {Property::ako_product, "ako_product"},
}};

}  // namespace

std::string_view to_string(Property p) {
  for (auto& [prop, name] : kNames)
    if (prop == p) return name;
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (auto& [prop, n] : kNames)
    if (n == name) return prop;
  return std::nullopt;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::assumption_violated: return "standing assumption violated";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Checkers. Sweeps run over (lattice index, element index) ascending and stop
// at the first violation.

namespace {

CheckResult holds() { return {Status::holds, std::nullopt}; }

CheckResult fails(std::string clause, std::vector<std::size_t> ideals,
                  std::vector<Element> elements = {}) {
  return {Status::fails, Witness{std::move(clause), std::move(ideals), std::move(elements)}};
}

std::optional<CheckResult> standing_assumption(const Family& f) {
  if (f.contains_whole()) return std::nullopt;
  return CheckResult{Status::assumption_violated, std::nullopt};
}

enum class Quotients { left, right, both };

// (I,a) in F together with the requested element quotients in F forces I in F.
CheckResult element_oka(const Family& f, Quotients q, const char* clause) {
  if (auto a = standing_assumption(f)) return *a;
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  const std::size_t n = ctx.ring()->order();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (f.contains(i)) continue;
    // Hypotheses depend on a only through (a); memoize per principal ideal.
    std::vector<signed char> memo(ctx.size(), -1);
    for (Element a = 0; a < n; ++a) {
      const std::size_t pa = t.principal(a);
      if (memo[pa] < 0) {
        bool hyp = f.contains(t.sum(i, pa));
        if (hyp && q != Quotients::right) hyp = f.contains(t.left_quotient(pa, i));
        if (hyp && q != Quotients::left) hyp = f.contains(t.right_quotient(i, pa));
        memo[pa] = hyp ? 1 : 0;
      }
      if (memo[pa]) return fails(clause, {i}, {a});
    }
  }
  return holds();
}

CheckResult strongly_oka(const Family& f, Quotients q, const char* clause) {
  if (auto a = standing_assumption(f)) return *a;
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (f.contains(i)) continue;
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      bool hyp = f.contains(t.sum(i, j));
      if (hyp && q != Quotients::right) hyp = f.contains(t.left_quotient(j, i));
      if (hyp && q != Quotients::left) hyp = f.contains(t.right_quotient(i, j));
      if (hyp) return fails(clause, {i, j});
    }
  }
  return holds();
}

std::optional<CheckResult> monoidal_violation(const Family& f) {
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (!f.contains(a)) continue;
    for (std::size_t b = 0; b < ctx.size(); ++b)
      if (f.contains(b) && !f.contains(t.product(a, b))) return fails("monoidal", {a, b});
  }
  return std::nullopt;
}

std::optional<CheckResult> semifilter_violation(const Family& f) {
  const auto& ctx = f.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!f.contains(i)) continue;
    for (std::size_t j = 0; j < ctx.size(); ++j)
      if (ctx.lattice().contains(j, i) && !f.contains(j)) return fails("semifilter", {i, j});
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_oka(const Family& f) { return element_oka(f, Quotients::both, "oka"); }
CheckResult check_r_oka(const Family& f) { return element_oka(f, Quotients::left, "r_oka"); }
CheckResult check_l_oka(const Family& f) { return element_oka(f, Quotients::right, "l_oka"); }

CheckResult check_strongly_oka(const Family& f) {
  return strongly_oka(f, Quotients::both, "strongly_oka");
}
CheckResult check_strongly_r_oka(const Family& f) {
  return strongly_oka(f, Quotients::left, "strongly_r_oka");
}
CheckResult check_strongly_l_oka(const Family& f) {
  return strongly_oka(f, Quotients::right, "strongly_l_oka");
}

CheckResult check_monoidal(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  if (auto v = monoidal_violation(f)) return *v;
  return holds();
}

CheckResult check_semifilter(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  if (auto v = semifilter_violation(f)) return *v;
  return holds();
}

CheckResult check_p1(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  if (auto v = monoidal_violation(f)) return *v;
  if (auto v = semifilter_violation(f)) return *v;
  return holds();
}

CheckResult check_p2(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  if (auto v = monoidal_violation(f)) return *v;
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (f.contains(i)) continue;
    const std::size_t sq = t.product(i, i);
    for (std::size_t j = 0; j < ctx.size(); ++j)
      if (f.contains(j) && t.contains(j, sq) && t.contains(i, j)) return fails("square", {i, j});
  }
  return holds();
}

CheckResult check_p3(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (!f.contains(a)) continue;
    for (std::size_t b = 0; b < ctx.size(); ++b) {
      if (!f.contains(b)) continue;
      const std::size_t ab = t.product(a, b);
      const std::size_t meet = t.meet(a, b);
      for (std::size_t i = 0; i < ctx.size(); ++i)
        if (!f.contains(i) && t.contains(i, ab) && t.contains(meet, i))
          return fails("p3", {a, b, i});
    }
  }
  return holds();
}

CheckResult check_ako_goodearl(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  const std::size_t n = ctx.ring()->order();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::vector<Element> extended;
    for (Element a = 0; a < n; ++a)
      if (f.contains(t.sum(i, t.principal(a)))) extended.push_back(a);
    for (auto a : extended)
      for (auto b : extended) {
        bool some = false;
        for (auto p : ctx.sandwich_class(a, b))
          if (f.contains(t.sum(i, p))) {
            some = true;
            break;
          }
        if (!some) return fails("ako_goodearl", {i}, {a, b});
      }
  }
  return holds();
}

CheckResult check_ako_product(const Family& f) {
  if (auto a = standing_assumption(f)) return *a;
  const auto& ctx = f.context();
  const auto& t = ctx.tables();
  const std::size_t n = ctx.ring()->order();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::vector<Element> extended;
    for (Element a = 0; a < n; ++a)
      if (f.contains(t.sum(i, t.principal(a)))) extended.push_back(a);
    for (auto a : extended)
      for (auto b : extended)
        if (!f.contains(t.sum(i, t.product(t.principal(a), t.principal(b)))))
          return fails("ako_product", {i}, {a, b});
  }
  return holds();
}

CheckResult check(Property p, const Family& f) {
  switch (p) {
    case Property::monoidal: return check_monoidal(f);
    case Property::semifilter: return check_semifilter(f);
    case Property::p1: return check_p1(f);
    case Property::p2: return check_p2(f);
    case Property::p3: return check_p3(f);
    case Property::strongly_r_oka: return check_strongly_r_oka(f);
    case Property::strongly_l_oka: return check_strongly_l_oka(f);
    case Property::strongly_oka: return check_strongly_oka(f);
    case Property::r_oka: return check_r_oka(f);
    case Property::l_oka: return check_l_oka(f);
    case Property::oka: return check_oka(f);
    case Property::ako_goodearl: return check_ako_goodearl(f);
    case Property::ako_product: return check_ako_product(f);
  }
  return holds();
}

// ---------------------------------------------------------------------------
// Witness replay with direct ideal arithmetic.

namespace {

class Replay {
 public:
  explicit Replay(const Family& f) : f_(f), lat_(f.context().lattice()), ring_(f.context().ring()) {}

  const Ideal& ideal(std::size_t k) const { return lat_[k]; }
  bool in(const Ideal& i) const {
    auto k = lat_.find(i.members());
    return k && f_.contains(*k);
  }
  bool in(std::size_t k) const { return f_.contains(k); }
  Ideal principal_of(Element a) const { return principal(ring_, a, Side::two_sided); }

 private:
  const Family& f_;
  const IdealLattice& lat_;
  RingPtr ring_;
};

bool replay_element_oka(const Replay& rp, const Witness& w, Quotients q) {
  if (w.ideals.size() != 1 || w.elements.size() != 1) return false;
  const Ideal& i = rp.ideal(w.ideals[0]);
  const Element a = w.elements[0];
  if (rp.in(i)) return false;
  const Ideal pa = rp.principal_of(a);
  bool hyp = rp.in(sum(i, pa));
  if (q != Quotients::right) hyp = hyp && rp.in(left_quotient(pa, i));
  if (q != Quotients::left) hyp = hyp && rp.in(right_quotient(i, pa));
  return hyp;
}

bool replay_strongly(const Replay& rp, const Witness& w, Quotients q) {
  if (w.ideals.size() != 2) return false;
  const Ideal& i = rp.ideal(w.ideals[0]);
  const Ideal& j = rp.ideal(w.ideals[1]);
  if (rp.in(i)) return false;
  bool hyp = rp.in(sum(i, j));
  if (q != Quotients::right) hyp = hyp && rp.in(left_quotient(j, i));
  if (q != Quotients::left) hyp = hyp && rp.in(right_quotient(i, j));
  return hyp;
}

bool replay_monoidal(const Replay& rp, const Witness& w) {
  if (w.ideals.size() != 2) return false;
  return rp.in(w.ideals[0]) && rp.in(w.ideals[1]) &&
         !rp.in(product(rp.ideal(w.ideals[0]), rp.ideal(w.ideals[1])));
}

bool replay_semifilter(const Replay& rp, const Witness& w) {
  if (w.ideals.size() != 2) return false;
  const Ideal& i = rp.ideal(w.ideals[0]);
  const Ideal& j = rp.ideal(w.ideals[1]);
  return rp.in(i) && i.subset_of(j) && !rp.in(j);
}

bool replay_square(const Replay& rp, const Witness& w) {
  if (w.ideals.size() != 2) return false;
  const Ideal& i = rp.ideal(w.ideals[0]);
  const Ideal& j = rp.ideal(w.ideals[1]);
  return !rp.in(i) && rp.in(j) && product(i, i).subset_of(j) && j.subset_of(i);
}

bool replay_p3(const Replay& rp, const Witness& w) {
  if (w.ideals.size() != 3) return false;
  const Ideal& a = rp.ideal(w.ideals[0]);
  const Ideal& b = rp.ideal(w.ideals[1]);
  const Ideal& i = rp.ideal(w.ideals[2]);
  return rp.in(a) && rp.in(b) && !rp.in(i) && product(a, b).subset_of(i) &&
         i.subset_of(intersect(a, b));
}

bool replay_ako(const Replay& rp, const Family& f, const Witness& w, bool goodearl) {
  if (w.ideals.size() != 1 || w.elements.size() != 2) return false;
  const Ideal& i = rp.ideal(w.ideals[0]);
  const Element a = w.elements[0], b = w.elements[1];
  const Ideal pa = rp.principal_of(a);
  const Ideal pb = rp.principal_of(b);
  if (!rp.in(sum(i, pa)) || !rp.in(sum(i, pb))) return false;
  if (!goodearl) return !rp.in(sum(i, product(pa, pb)));
  const Ring& r = *f.context().ring();
  for (Element s = 0; s < r.order(); ++s)
    if (rp.in(sum(i, rp.principal_of(r.mul(r.mul(a, s), b))))) return false;
  return true;
}

}  // namespace

bool witness_violates(Property p, const Family& f, const Witness& w) {
  if (!f.contains_whole()) return false;
  for (auto k : w.ideals)
    if (k >= f.context().size()) return false;
  for (auto e : w.elements)
    if (e >= f.context().ring()->order()) return false;
  Replay rp(f);
  switch (p) {
    case Property::oka: return replay_element_oka(rp, w, Quotients::both);
    case Property::r_oka: return replay_element_oka(rp, w, Quotients::left);
    case Property::l_oka: return replay_element_oka(rp, w, Quotients::right);
    case Property::strongly_oka: return replay_strongly(rp, w, Quotients::both);
    case Property::strongly_r_oka: return replay_strongly(rp, w, Quotients::left);
    case Property::strongly_l_oka: return replay_strongly(rp, w, Quotients::right);
    case Property::monoidal: return replay_monoidal(rp, w);
    case Property::semifilter: return replay_semifilter(rp, w);
    case Property::p1:
      return w.clause == "monoidal" ? replay_monoidal(rp, w) : replay_semifilter(rp, w);
    case Property::p2:
      return w.clause == "monoidal" ? replay_monoidal(rp, w) : replay_square(rp, w);
    case Property::p3: return replay_p3(rp, w);
    case Property::ako_goodearl: return replay_ako(rp, f, w, true);
    case Property::ako_product: return replay_ako(rp, f, w, false);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Profiles and the implication diagram

bool PropertyProfile::assumption_violated() const {
  for (auto& [p, r] : verdicts)
    if (r.status == Status::assumption_violated) return true;
  return false;
}

PropertyProfile property_profile(const Family& f) {
  PropertyProfile prof;
  for (auto p : kAllProperties) prof.verdicts.emplace(p, check(p, f));
  return prof;
}

namespace {

using P = Property;
constexpr Implication kDiagram[] = {
    // definitional
    {P::p1, P::monoidal},
    {P::p1, P::semifilter},
    {P::p2, P::monoidal},
    {P::p3, P::monoidal},
    // right-handed diagram
    {P::p1, P::p2},
    {P::p2, P::p3},
    {P::p3, P::strongly_r_oka},
    {P::strongly_r_oka, P::r_oka},
    {P::strongly_r_oka, P::strongly_oka},
    {P::r_oka, P::oka},
    {P::strongly_oka, P::oka},
    // mirror image
    {P::p3, P::strongly_l_oka},
    {P::strongly_l_oka, P::l_oka},
    {P::strongly_l_oka, P::strongly_oka},
    {P::l_oka, P::oka},
};

}  // namespace

std::span<const Implication> implication_diagram() { return kDiagram; }

std::vector<Implication> implication_violations(const PropertyProfile& profile) {
  std::vector<Implication> bad;
  if (profile.assumption_violated()) return bad;
  for (const auto& imp : kDiagram)
    if (profile.holds(imp.from) && !profile.holds(imp.to)) bad.push_back(imp);
  return bad;
}

// ---------------------------------------------------------------------------
// Prime Ideal Principle and its supplement

PipReport verify_pip(const Family& f) {
  PipReport rep;
  rep.oka = check_oka(f);
  const auto& ctx = f.context();
  rep.max_complement = max_in_complement(ctx.lattice(), f.members());
  for (auto k : rep.max_complement) {
    // Whole-ring members of Max(F') only occur when R is missing from F.
    if (ctx.lattice()[k].is_whole() || !ctx.spec().is_prime(k)) rep.non_prime_maximals.push_back(k);
  }
  rep.contained = rep.non_prime_maximals.empty();
  rep.violation = rep.oka.holds() && !rep.contained;
  return rep;
}

bool is_semifilter(const FamilyContext& ctx, const ElementSet& members) {
  bool ok = true;
  members.for_each([&](Element i) {
    if (!ctx.lattice().supersets_of(i).subset_of(members)) ok = false;
  });
  return ok;
}

ElementSet upward_closure(const FamilyContext& ctx, const ElementSet& members) {
  ElementSet up(ctx.size());
  members.for_each([&](Element i) { up |= ctx.lattice().supersets_of(i); });
  return up;
}

SupplementReport verify_supplement(const Family& f, std::span<const ElementSet> semifilters) {
  SupplementReport rep;
  if (!check_oka(f).holds()) {
    rep.verdict = SupplementVerdict::hypothesis_unmet;
    return rep;
  }
  const auto& ctx = f.context();
  const auto& lat = ctx.lattice();
  ElementSet primes(ctx.size());
  for (auto p : ctx.spec().primes) primes.set(p);

  auto statement = [&](const ElementSet& f0, const std::string& what) {
    ++rep.checks;
    const bool primes_in = (f0 & primes).subset_of(f.members());
    if (primes_in && !f0.subset_of(f.members())) rep.violations.push_back(what);
  };

  for (std::size_t k = 0; k < semifilters.size(); ++k) {
    if (!is_semifilter(ctx, semifilters[k])) continue;
    statement(semifilters[k], "semifilter #" + std::to_string(k));
  }
  for (std::size_t j = 0; j < ctx.size(); ++j) {
    ElementSet up = lat.supersets_of(j);
    statement(up, "ideals containing #" + std::to_string(j));
    up.reset(j);
    statement(up, "ideals properly containing #" + std::to_string(j));
  }
  statement(ElementSet::full(ctx.size()), "all ideals");

  if (!rep.violations.empty()) rep.verdict = SupplementVerdict::violated;
  return rep;
}

Family intersect_families(const Family& a, const Family& b) {
  if (a.context_ptr() != b.context_ptr())
    throw IdealError("intersect_families: families belong to different rings");
  return Family(a.context_ptr(), a.members() & b.members(),
                "(" + a.name() + ")&(" + b.name() + ")");
}

}  // namespace oka
