#pragma once

#include <set>
#include <vector>

#include "oka/family.hpp"
#include "oka/ideal.hpp"
#include "oka/ring.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Set to_oracle(const oka::ElementSet& s) {
  oracle::Set out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s.test(i);
  return out;
}

inline oka::ElementSet from_oracle(const oracle::Set& s) {
  oka::ElementSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.set(i);
  return out;
}

inline std::set<oracle::Set> to_oracle(const oka::IdealLattice& lat) {
  std::set<oracle::Set> out;
  for (const auto& i : lat.ideals()) out.insert(to_oracle(i.members()));
  return out;
}

inline oka::RingPtr zn(std::size_t n) { return oka::build_zn(n); }

/// T(A, A, A) with the regular bimodule.
inline oka::RingPtr tri(std::size_t n) {
  auto a = oka::build_zn(n);
  return oka::build_triangular(a, oka::Bimodule::regular(a), a);
}

/// T(Z2, Z2^2, Z2)
inline oka::RingPtr tri_power() {
  auto a = oka::build_zn(2);
  return oka::build_triangular(a, oka::Bimodule::regular_power(a, 2), a);
}

inline oka::RingPtr m2(std::size_t n) { return oka::build_matrix_ring(oka::build_zn(n), 2); }

/// The small rings most tests sweep over.
inline std::vector<oka::RingPtr> small_rings() {
  return {zn(1), zn(2),  zn(4),     zn(6),        zn(8),
          zn(12), tri(2), tri_power(), m2(2),       oka::build_product(zn(2), zn(2)),
          oka::build_product(zn(2), zn(3))};
}

/// Elements of T(A,M,B) in coordinates.
struct Tri {
  oka::TriangularShape shape;
  explicit Tri(const oka::Ring& r) : shape(*r.triangular()) {}
  oka::Element e11() const { return shape.index(shape.one_a, 0, 0); }
  oka::Element e22() const { return shape.index(0, 0, shape.one_b); }
  oka::Element e12() const { return shape.index(0, 1, 0); }
};

}  // namespace support
