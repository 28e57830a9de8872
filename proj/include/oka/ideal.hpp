#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "oka/element_set.hpp"
#include "oka/ring.hpp"

namespace oka {

enum class Side { two_sided, right, left };

std::string to_string(Side side);

/// A subset of a ring closed under the ideal axioms for its sidedness.
class Ideal {
 public:
  Ideal(RingPtr ring, ElementSet members, Side side)
      : ring_(std::move(ring)), members_(std::move(members)), side_(side) {}

  const RingPtr& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  Side side() const { return side_; }
  std::size_t size() const { return members_.count(); }
  bool contains(Element x) const { return members_.test(x); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_whole() const { return members_.test(ring_->one()); }
  bool subset_of(const Ideal& o) const { return members_.subset_of(o.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.members_ == b.members_;
  }

 private:
  RingPtr ring_;
  ElementSet members_;
  Side side_;
};

/// Raised when ideals from different rings are combined, or a lattice cap is hit.
class IdealError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Additive subgroup helpers. `set` must already be a subgroup.
void extend_subgroup(const Ring& r, ElementSet& set, Element x);
ElementSet additive_span(const Ring& r, std::span<const Element> gens);
std::vector<Element> additive_generators(const Ring& r, const ElementSet& subgroup);

Ideal zero_ideal(const RingPtr& r, Side side = Side::two_sided);
Ideal whole_ideal(const RingPtr& r, Side side = Side::two_sided);

/// Least ideal of the given sidedness containing `gens` (worklist fixpoint).
Ideal ideal_closure(const RingPtr& r, std::span<const Element> gens, Side side);
Ideal principal(const RingPtr& r, Element x, Side side = Side::two_sided);

/// True iff `members` is closed under the ideal axioms for `side`.
bool is_ideal(const Ring& r, const ElementSet& members, Side side);

/// A greedy minimal-by-inclusion generator list (ascending element order).
std::vector<Element> generators(const Ideal& ideal);

Ideal sum(const Ideal& i, const Ideal& j);
Ideal intersect(const Ideal& i, const Ideal& j);

enum class ProductInputs {
  two_sided,  ///< both factors must be two-sided
  any,        ///< one-sided factors allowed when the product is still one-sided closed
};

/// Additive closure of {ij}. The result is left-closed when `i` is and
/// right-closed when `j` is.
Ideal product(const Ideal& i, const Ideal& j, ProductInputs inputs = ProductInputs::two_sided);

/// J^{-1}I = {x : Jx in I}.
Ideal left_quotient(const Ideal& j, const Ideal& i);
/// IJ^{-1} = {x : xJ in I}.
Ideal right_quotient(const Ideal& i, const Ideal& j);
/// ((a)^{-1}I, I(a)^{-1}).
std::pair<Ideal, Ideal> element_quotients(const Ideal& i, Element a);

struct PowerChain {
  std::vector<Ideal> powers;  ///< I, I^2, ..., I^n with I^{n+1} = I^n
  std::size_t stable_index;   ///< n
};
PowerChain ideal_power_stabilization(const Ideal& i);

/// All ideals of one sidedness, sorted canonically (size, then members).
class IdealLattice {
 public:
  IdealLattice(RingPtr ring, Side side, std::vector<Ideal> ideals);

  const RingPtr& ring() const { return ring_; }
  Side side() const { return side_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const { return ideals_; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t index_of(const Ideal& ideal) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return ideals_.size() - 1; }

  /// contains(i, j): ideal i is a superset of ideal j.
  bool contains(std::size_t i, std::size_t j) const { return supersets_[j].test(i); }
  const ElementSet& supersets_of(std::size_t j) const { return supersets_[j]; }
  /// Covering pairs (smaller, larger) of the containment order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  RingPtr ring_;
  Side side_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<ElementSet> supersets_;
};

/// Fixpoint of {0} and the principal closures under pairwise sum. Throws
/// IdealError past `lattice_cap` ideals.
IdealLattice all_ideals(const RingPtr& r, Side side, std::size_t lattice_cap = Caps{}.lattice);

/// Operation tables over a two-sided lattice, indexed by lattice position.
class IdealTables {
 public:
  explicit IdealTables(const IdealLattice& lattice);

  std::size_t size() const { return n_; }
  std::size_t principal(Element x) const { return principal_[x]; }
  std::size_t sum(std::size_t i, std::size_t j) const { return sum_[i * n_ + j]; }
  std::size_t product(std::size_t i, std::size_t j) const { return product_[i * n_ + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * n_ + j]; }
  /// J^{-1}I as left_quotient(j, i).
  std::size_t left_quotient(std::size_t j, std::size_t i) const { return lquot_[j * n_ + i]; }
  /// IJ^{-1} as right_quotient(i, j).
  std::size_t right_quotient(std::size_t i, std::size_t j) const { return rquot_[i * n_ + j]; }
  bool contains(std::size_t i, std::size_t j) const { return contains_[i * n_ + j] != 0; }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> principal_;
  std::vector<std::size_t> sum_, product_, meet_, lquot_, rquot_;
  std::vector<char> contains_;
};

}  // namespace oka
