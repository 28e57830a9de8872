#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oka/element_set.hpp"
#include "oka/ideal.hpp"
#include "oka/ring.hpp"

namespace oka {

using ElementPair = std::pair<Element, Element>;

struct PrimeVerdict {
  bool prime = false;
  /// Lexicographically first (a,b) outside I with aRb in I, when not prime.
  std::optional<ElementPair> witness;
};

/// Primality by the element criterion. Throws IdealError when I = R.
PrimeVerdict is_prime_ideal(const Ideal& i);

/// Semiprimality: no a outside I with aRa in I. Throws IdealError when I = R.
PrimeVerdict is_semiprime_ideal(const Ideal& i);

/// The three equivalent primality criteria for a ring, each evaluated on its
/// own, plus a symmetric witness aRb = 0 = bRa for non-prime rings.
struct PrimeRingReport {
  bool zero_ring = false;
  bool zero_ideal_prime = false;   ///< criterion (1)
  bool both_nonzero = false;       ///< criterion (2): aRb != 0 and bRa != 0
  bool either_nonzero = false;     ///< criterion (3): aRb != 0 or bRa != 0
  bool consistent = true;
  bool prime = false;
  /// First (x,y) with xRy = 0, x,y != 0.
  std::optional<ElementPair> one_sided;
  /// (a,b) with aRb = 0 = bRa built from `one_sided`.
  std::optional<ElementPair> symmetric;
};

PrimeRingReport is_prime_ring(const RingPtr& r);

/// True iff aRb = {0}.
bool annihilates_through(const Ring& r, Element a, Element b);

struct MSystemVerdict {
  bool is_m_system = false;
  bool contains_one = false;
  std::optional<ElementPair> witness;  ///< a,b in S with arb outside S for all r
};
MSystemVerdict is_m_system(const Ring& r, const ElementSet& s);

struct SpecResult {
  RingPtr ring;
  std::vector<std::size_t> primes;          ///< lattice indices, ascending
  std::vector<std::size_t> minimal_primes;  ///< subset of primes
  /// For each lattice index: the non-primality witness (absent for primes and R).
  std::vector<std::optional<ElementPair>> witnesses;

  bool is_prime(std::size_t k) const;
};

SpecResult spec(const IdealLattice& lattice);

/// Ideals outside `family` (a set of lattice indices) that are maximal among
/// those outside it.
std::vector<std::size_t> max_in_complement(const IdealLattice& lattice, const ElementSet& family);

/// Breadth-first search over products of minimal primes for a sequence whose
/// product is zero. Returns lattice indices in multiplication order.
std::optional<std::vector<std::size_t>> zero_as_product_of_minimal_primes(
    const IdealLattice& lattice, const IdealTables& tables, const SpecResult& spec);

}  // namespace oka
