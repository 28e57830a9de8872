#pragma once

#include <cstddef>
#include <vector>

#include "oka/element_set.hpp"
#include "oka/ideal.hpp"
#include "oka/ring.hpp"

namespace oka {

/// A finite right module over a finite ring, index 0 is zero.
class RightModule {
 public:
  std::size_t order() const { return order_; }
  const RingPtr& ring() const { return ring_; }
  const std::string& label() const { return label_; }
  bool is_zero() const { return order_ == 1; }

  Element add(Element m, Element n) const { return add_[m * order_ + n]; }
  Element neg(Element m) const { return neg_[m]; }
  Element act(Element m, Element r) const { return action_[m * ring_->order() + r]; }

  /// Validates group and action axioms; `action` is order x |R| row-major.
  static RightModule from_tables(const RingPtr& ring, std::size_t order, std::vector<Element> add,
                                 std::vector<Element> action, std::string label = "M");

 private:
  RightModule() = default;

  std::size_t order_ = 0;
  RingPtr ring_;
  std::string label_;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Element> action_;
};

RightModule regular_module(const RingPtr& r);

/// M/N on least coset representatives. Throws AlgebraError if N is not a
/// submodule.
RightModule quotient_module(const RightModule& m, const ElementSet& n);

/// N as a module in its own right (members relabelled in ascending order).
RightModule submodule_as_module(const RightModule& m, const ElementSet& n);

bool is_submodule(const RightModule& m, const ElementSet& n);
ElementSet cyclic_submodule(const RightModule& m, Element x);

/// All submodules, sorted canonically; throws IdealError past `cap`.
std::vector<ElementSet> submodules(const RightModule& m, std::size_t cap = Caps{}.lattice);

/// {r : nr = 0 for all n in N}; always a two-sided ideal.
Ideal annihilator(const RightModule& m, const ElementSet& n);
Ideal annihilator(const RightModule& m);

struct MiddleAnnihilator {
  Ideal value;      ///< {r : XrY = 0}
  bool qualifies;   ///< XY != 0
};
MiddleAnnihilator middle_annihilator(const Ideal& x, const Ideal& y);

}  // namespace oka
