#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oka/family.hpp"
#include "oka/module.hpp"

namespace oka {

/// A materialized named family together with the property it is claimed to
/// satisfy.
struct ZooFamily {
  Family family;
  Property claimed;
};

/// Raised when a constructor's hypotheses are not met (or the constructor is
/// outside the supported families).
class ZooError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {I : I meets S}; S must be an m-system.
ZooFamily meets_m_system(const ContextPtr& ctx, const ElementSet& s);

/// Families built from a fixed nonzero right module.
struct PointAnnihilatorResult {
  ZooFamily zoo;
  /// Lattice indices of the annihilators ann(N), N a nonzero submodule, that
  /// are maximal among those annihilators.
  std::vector<std::size_t> maximal_annihilators;
};
PointAnnihilatorResult point_annihilator_family(const ContextPtr& ctx, const RightModule& m);

/// Ideals faithful as left modules; the point-annihilator family of R_R.
PointAnnihilatorResult left_faithful_family(const ContextPtr& ctx);

struct MiddleAnnihilatorResult {
  ZooFamily zoo;
  std::vector<std::size_t> maximal_middle_annihilators;
};
MiddleAnnihilatorResult middle_annihilator_family(const ContextPtr& ctx);

/// Upward closure of a product-closed set of ideals (lattice indices).
ZooFamily contains_member_family(const ContextPtr& ctx, const ElementSet& seeds);

/// Closure of a set of lattice indices under products.
ElementSet product_closure(const FamilyContext& ctx, const ElementSet& seeds);

struct ArtinReesRecord {
  std::size_t ideal = 0;
  bool has_property = true;
  std::size_t stable_index = 1;
  std::optional<ElementSet> failing_right_ideal;
};
struct ArtinReesResult {
  ZooFamily zoo;
  std::vector<ArtinReesRecord> records;
};
/// Ideals I such that every right ideal K has K meet I^n inside KI for some n.
/// The search over n stops at the power-stabilization index: I^n is constant
/// from there on, so failure there is failure for every larger n.
ArtinReesResult artin_rees_family(const ContextPtr& ctx);

/// {(e) : e in S} for a multiplicative set S of central idempotents.
ZooFamily idempotent_family(const ContextPtr& ctx, const ElementSet& s);

struct DirectSummandResult {
  ZooFamily zoo;
  bool all_ideals_summands = false;
  /// Independent decision: R splits into simple rings along central idempotents.
  bool product_of_simple_rings = false;
  std::vector<std::size_t> non_maximal_in_max_complement;
};
DirectSummandResult direct_summand_family(const ContextPtr& ctx);

/// Recursive split of R along complementary central idempotents into corner
/// rings eR with no ideals strictly between 0 and eR.
bool is_product_of_simple_rings(const FamilyContext& ctx);

/// {I : R/I is Dedekind finite}; every such family over a finite ring is the
/// whole lattice, so the result is flagged degenerate.
ZooFamily dedekind_finite_factor_family(const ContextPtr& ctx);

struct FlatFactorRecord {
  std::size_t ideal = 0;
  bool flat = true;
  std::optional<ElementSet> failing_left_ideal;
};
struct FlatFactorResult {
  ZooFamily zoo;
  std::vector<FlatFactorRecord> records;
};
/// {I : I meet L inside IL for every left ideal L}.
FlatFactorResult flat_factor_family(const ContextPtr& ctx);

/// {(s) : s in S}; S must contain 1, be multiplicatively closed and consist of
/// normal elements.
ZooFamily principal_normal_family(const ContextPtr& ctx, const ElementSet& s);

struct LeftRightPrincipalReport {
  std::size_t triples_checked = 0;
  std::vector<std::string> violations;
  /// {I : I = aR = Rb for some a, b}
  std::optional<Family> family;
  bool family_product_closed = true;
  CheckResult family_r_oka;
};
/// Sweeps every (I, a, b) with I = aR = Rb and asserts I = bR with b normal;
/// then checks the family of such ideals is product-closed and r-Oka.
LeftRightPrincipalReport verify_left_right_principal_normal(const ContextPtr& ctx);

using ModulePredicate = std::function<bool(const RightModule&)>;

struct ClosureSample {
  std::size_t modules = 0;
  std::size_t quotient_checks = 0;
  std::size_t extension_checks = 0;
  std::vector<std::string> violations;
};

/// Samples closure of a module class under quotients and extensions over the
/// cyclic modules R/I and their submodules and quotients. It can refute
/// closure, never prove it.
ClosureSample sample_class_closure(const FamilyContext& ctx, const ModulePredicate& pred,
                                   std::size_t max_submodules = 64);

struct FactorPredicateResult {
  ZooFamily zoo;
  ClosureSample sample;
};
/// {I : pred(R/I)}. Throws ZooError if pred(0) is false or the sampler finds
/// a closure violation.
FactorPredicateResult factor_predicate_family(const ContextPtr& ctx, const ModulePredicate& pred,
                                              std::string name);

/// Module classes used with factor_predicate_family.
ModulePredicate annihilator_meets(const ElementSet& s);
ModulePredicate s_torsion(const ElementSet& s);

/// {I : for all r some s in S has rs in I}, computed directly on the ring.
ElementSet s_torsion_direct(const FamilyContext& ctx, const ElementSet& s);

/// Constructors for families whose defining notion does not survive the
/// passage to finite rings. Each throws ZooError explaining why.
[[noreturn]] void unsupported_family(const std::string& name);

/// Names understood by the registry.
std::vector<std::string> registry_names();

}  // namespace oka
