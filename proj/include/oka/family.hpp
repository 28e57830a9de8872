#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oka/element_set.hpp"
#include "oka/ideal.hpp"
#include "oka/prime.hpp"
#include "oka/ring.hpp"

namespace oka {

/// Everything the family checkers need about one ring: its two-sided lattice,
/// the operation tables over it, and Spec. One-sided lattices and the
/// sandwich classes used by the Goodearl variant of Ako are built on first use.
class FamilyContext {
 public:
  static std::shared_ptr<const FamilyContext> create(RingPtr ring, const Caps& caps = {});

  const RingPtr& ring() const { return ring_; }
  const Caps& caps() const { return caps_; }
  const IdealLattice& lattice() const { return lattice_; }
  const IdealTables& tables() const { return tables_; }
  const SpecResult& spec() const { return spec_; }
  std::size_t size() const { return lattice_.size(); }
  std::size_t top() const { return lattice_.top(); }
  std::size_t bottom() const { return lattice_.bottom(); }

  const IdealLattice& right_lattice() const;
  const IdealLattice& left_lattice() const;

  /// Distinct lattice indices of the principal ideals (arb), r in R.
  std::span<const std::size_t> sandwich_class(Element a, Element b) const;

 private:
  FamilyContext(RingPtr ring, const Caps& caps);

  RingPtr ring_;
  Caps caps_;
  IdealLattice lattice_;
  IdealTables tables_;
  SpecResult spec_;

  mutable std::once_flag right_once_, left_once_, sandwich_once_;
  mutable std::optional<IdealLattice> right_, left_;
  mutable std::vector<std::uint32_t> sandwich_id_;
  mutable std::vector<std::vector<std::size_t>> sandwich_classes_;
};

using ContextPtr = std::shared_ptr<const FamilyContext>;

/// An explicit set of two-sided ideals of one ring, stored as lattice indices.
class Family {
 public:
  /// Takes the set as given; checkers report a standing-assumption violation
  /// if R is missing.
  Family(ContextPtr ctx, ElementSet members, std::string name);

  /// Inserts R when missing and records that it did so.
  static Family with_whole(ContextPtr ctx, ElementSet members, std::string name);
  static Family from_ideals(ContextPtr ctx, std::span<const Ideal> ideals, std::string name,
                            bool insert_whole = true);

  const FamilyContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const ElementSet& members() const { return members_; }
  const std::string& name() const { return name_; }
  bool contains(std::size_t k) const { return members_.test(k); }
  bool contains_whole() const { return members_.test(ctx_->top()); }
  std::size_t size() const { return members_.count(); }

  bool inserted_whole() const { return inserted_whole_; }
  bool degenerate() const { return degenerate_; }
  void set_degenerate(bool d) { degenerate_ = d; }
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

 private:
  ContextPtr ctx_;
  ElementSet members_;
  std::string name_;
  bool inserted_whole_ = false;
  bool degenerate_ = false;
  std::vector<std::string> notes_;
};

enum class Property {
  monoidal,
  semifilter,
  p1,
  p2,
  p3,
  strongly_r_oka,
  strongly_l_oka,
  strongly_oka,
  r_oka,
  l_oka,
  oka,
  ako_goodearl,
  ako_product,
};

inline constexpr std::array<Property, 13> kAllProperties = {
    Property::monoidal,       Property::semifilter,     Property::p1,
    Property::p2,             Property::p3,             Property::strongly_r_oka,
    Property::strongly_l_oka, Property::strongly_oka,   Property::r_oka,
    Property::l_oka,          Property::oka,            Property::ako_goodearl,
    Property::ako_product};

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view name);

/// A violation of one property: the ideals (lattice indices) and elements the
/// quantifiers were instantiated with, and which clause failed.
struct Witness {
  std::string clause;
  std::vector<std::size_t> ideals;
  std::vector<Element> elements;
};

enum class Status { holds, fails, assumption_violated };
std::string_view to_string(Status s);

struct CheckResult {
  Status status = Status::holds;
  std::optional<Witness> witness;
  bool holds() const { return status == Status::holds; }
};

CheckResult check(Property p, const Family& f);

CheckResult check_oka(const Family& f);
CheckResult check_r_oka(const Family& f);
CheckResult check_l_oka(const Family& f);
CheckResult check_strongly_oka(const Family& f);
CheckResult check_strongly_r_oka(const Family& f);
CheckResult check_strongly_l_oka(const Family& f);
CheckResult check_monoidal(const Family& f);
CheckResult check_semifilter(const Family& f);
CheckResult check_p1(const Family& f);
CheckResult check_p2(const Family& f);
CheckResult check_p3(const Family& f);
CheckResult check_ako_goodearl(const Family& f);
CheckResult check_ako_product(const Family& f);

/// Replays a witness against the property definition using direct ideal
/// arithmetic (not the lattice tables) and reports whether it is a violation.
bool witness_violates(Property p, const Family& f, const Witness& w);

struct PropertyProfile {
  std::map<Property, CheckResult> verdicts;
  bool holds(Property p) const { return verdicts.at(p).holds(); }
  bool assumption_violated() const;
};

PropertyProfile property_profile(const Family& f);

struct Implication {
  Property from;
  Property to;
};

/// The implication diagram between properties together with its mirror image
/// for the left-handed variants.
std::span<const Implication> implication_diagram();

/// Arrows of the diagram whose source holds and target fails. Empty for a
/// consistent profile; profiles with R missing are vacuously consistent.
std::vector<Implication> implication_violations(const PropertyProfile& profile);

struct PipReport {
  CheckResult oka;
  std::vector<std::size_t> max_complement;
  std::vector<std::size_t> non_prime_maximals;
  bool contained = true;   ///< Max(F') inside Spec(R)
  bool violation = false;  ///< oka holds but containment fails
};

PipReport verify_pip(const Family& f);

enum class SupplementVerdict { verified, hypothesis_unmet, violated };

struct SupplementReport {
  SupplementVerdict verdict = SupplementVerdict::verified;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Instantiates the three prime-testing statements for an Oka family:
/// semifilters F0 in `semifilters` (lattice-index sets), the upward sets of
/// every ideal J (strict and non-strict), and the whole lattice.
SupplementReport verify_supplement(const Family& f, std::span<const ElementSet> semifilters = {});

bool is_semifilter(const FamilyContext& ctx, const ElementSet& members);
ElementSet upward_closure(const FamilyContext& ctx, const ElementSet& members);

Family intersect_families(const Family& a, const Family& b);

}  // namespace oka
