#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oka/element_set.hpp"

namespace oka {

/// Limits applied by every constructor and enumerator.
struct Caps {
  std::size_t order = 512;
  std::size_t lattice = 4096;
};

/// Raised when input tables violate an algebraic axiom or a size cap.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(std::string axiom, std::vector<Element> witness, const std::string& what)
      : std::runtime_error(what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<Element> witness_;
};

/// Component orders of a triangular ring T(A,M,B); element (a,m,b) has index
/// a + |A|*(m + |M|*b).
struct TriangularShape {
  std::size_t order_a = 0;
  std::size_t order_m = 0;
  std::size_t order_b = 0;
  Element one_a = 0;
  Element one_b = 0;

  Element index(Element a, Element m, Element b) const {
    return static_cast<Element>(a + order_a * (m + order_m * b));
  }
};

/// A finite unital ring on the indices 0..order()-1 with index 0 as zero.
///
/// Immutable once built; construction validates every ring axiom
/// exhaustively, so a Ring value is always a ring.
class Ring {
 public:
  std::size_t order() const { return order_; }
  Element zero() const { return 0; }
  Element one() const { return one_; }
  const std::string& label() const { return label_; }
  bool is_zero_ring() const { return order_ == 1; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  std::span<const Element> add_table() const { return add_; }
  std::span<const Element> mul_table() const { return mul_; }
  std::span<const Element> neg_table() const { return neg_; }

  const std::optional<TriangularShape>& triangular() const { return triangular_; }

  /// Validates tables exhaustively (O(order^3)) and returns the ring, or
  /// throws AlgebraError naming the first violated axiom with a witness.
  static std::shared_ptr<const Ring> from_tables(std::size_t order, std::vector<Element> add,
                                                 std::vector<Element> mul, Element zero,
                                                 Element one, std::string label,
                                                 const Caps& caps = {});

  std::shared_ptr<const Ring> with_triangular(TriangularShape shape) const;

 private:
  Ring() = default;

  std::size_t order_ = 0;
  Element one_ = 0;
  std::string label_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::optional<TriangularShape> triangular_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// An (A,B)-bimodule on indices 0..order()-1 with index 0 as zero.
class Bimodule {
 public:
  std::size_t order() const { return order_; }
  const RingPtr& left_ring() const { return left_; }
  const RingPtr& right_ring() const { return right_; }
  const std::string& label() const { return label_; }

  Element add(Element m, Element n) const { return add_[m * order_ + n]; }
  Element neg(Element m) const { return neg_[m]; }
  Element act_left(Element a, Element m) const { return left_action_[a * order_ + m]; }
  Element act_right(Element m, Element b) const { return right_action_[m * right_->order() + b]; }

  /// A as an (A,A)-bimodule.
  static Bimodule regular(const RingPtr& a);
  /// A^k with componentwise (A,A)-action.
  static Bimodule regular_power(const RingPtr& a, std::size_t k);
  /// Validated explicit tables; left_action is |A| x order, right_action is
  /// order x |B|, both row-major.
  static Bimodule from_tables(const RingPtr& a, const RingPtr& b, std::size_t order,
                              std::vector<Element> add, std::vector<Element> left_action,
                              std::vector<Element> right_action, std::string label = "M");

 private:
  Bimodule() = default;

  std::size_t order_ = 0;
  RingPtr left_;
  RingPtr right_;
  std::string label_;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Element> left_action_;
  std::vector<Element> right_action_;
};

RingPtr build_zn(std::size_t n, const Caps& caps = {});
RingPtr build_matrix_ring(const RingPtr& base, std::size_t k, const Caps& caps = {});
RingPtr build_triangular(const RingPtr& a, const Bimodule& m, const RingPtr& b,
                         const Caps& caps = {});
RingPtr build_product(const RingPtr& r1, const RingPtr& r2, const Caps& caps = {});
RingPtr build_opposite(const RingPtr& r);
RingPtr build_from_tables(std::size_t order, std::vector<Element> add, std::vector<Element> mul,
                          Element zero, Element one, std::string label = "table",
                          const Caps& caps = {});

/// R/I on least coset representatives; `projection[x]` is the coset of x and
/// `representatives[c]` the least member of coset c.
struct Quotient {
  RingPtr ring;
  std::vector<Element> projection;
  std::vector<Element> representatives;
};

/// Throws AlgebraError when `members` is not a two-sided ideal of `r`.
Quotient build_quotient(const RingPtr& r, const ElementSet& members, const Caps& caps = {});

bool is_dedekind_finite(const Ring& r);
bool is_normal(const Ring& r, Element x);
ElementSet normal_elements(const Ring& r);
bool is_central(const Ring& r, Element x);
ElementSet central_idempotents(const Ring& r);
ElementSet units(const Ring& r);

/// The set {x*r : r in R}.
ElementSet right_multiples(const Ring& r, Element x);
/// The set {r*x : r in R}.
ElementSet left_multiples(const Ring& r, Element x);

/// Multiplicative closure of `seeds` together with 1.
ElementSet multiplicative_closure(const Ring& r, std::span<const Element> seeds);

/// Brute-force isomorphism search (backtracking over additive generators);
/// intended for small orders in tests and diagnostics.
bool are_isomorphic(const Ring& r, const Ring& s);

}  // namespace oka
