#include <doctest.h>

#include "oka/prime.hpp"
#include "support.hpp"

using namespace oka;
using support::from_oracle;
using support::to_oracle;
using support::tri;
using support::zn;

namespace {

std::set<oracle::Set> as_sets(const IdealLattice& lat, const std::vector<std::size_t>& idx) {
  std::set<oracle::Set> out;
  for (auto k : idx) out.insert(to_oracle(lat[k].members()));
  return out;
}

std::vector<RingPtr> rings() {
  auto rs = support::small_rings();
  rs.push_back(tri(3));
  rs.push_back(build_product(support::m2(2), zn(2)));
  return rs;
}

}  // namespace

TEST_CASE("prime ring criteria agree") {
  for (const auto& r : rings()) {
    CAPTURE(r->label());
    auto rep = is_prime_ring(r);
    CHECK(rep.consistent);
    if (r->is_zero_ring()) {
      CHECK(rep.zero_ring);
      CHECK_FALSE(rep.prime);
      continue;
    }
    const bool oracle_prime = oracle::is_prime(*r, oracle::from_list(*r, {0}));
    CHECK(rep.prime == oracle_prime);
    CHECK(rep.zero_ideal_prime == oracle_prime);
    CHECK(rep.both_nonzero == oracle_prime);
    CHECK(rep.either_nonzero == oracle_prime);
    if (!rep.prime) {
      REQUIRE(rep.symmetric);
      auto [a, b] = *rep.symmetric;
      CHECK(a != 0);
      CHECK(b != 0);
      CHECK(annihilates_through(*r, a, b));
      CHECK(annihilates_through(*r, b, a));
    } else {
      CHECK_FALSE(rep.symmetric);
    }
  }
  CHECK(is_prime_ring(support::m2(2)).prime);
  CHECK(is_prime_ring(support::m2(3)).prime);
  CHECK_FALSE(is_prime_ring(zn(6)).prime);
  auto t = is_prime_ring(tri(2));
  CHECK_FALSE(t.prime);
}

TEST_CASE("spec matches the definition") {
  for (const auto& r : rings()) {
    CAPTURE(r->label());
    auto lat = all_ideals(r, Side::two_sided);
    auto s = spec(lat);
    auto want = oracle::primes(*r, to_oracle(lat));
    CHECK(as_sets(lat, s.primes) == want);
    CHECK(as_sets(lat, s.minimal_primes) == oracle::minimal(want));
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (k == lat.top()) continue;
      auto v = is_prime_ideal(lat[k]);
      CHECK(v.prime == s.is_prime(k));
      CHECK(is_semiprime_ideal(lat[k]).prime >= v.prime);
      const auto comp = lat[k].members().complement();
      CHECK(is_m_system(*r, comp).is_m_system == v.prime);
      if (!v.prime) {
        REQUIRE(v.witness);
        auto [a, b] = *v.witness;
        CHECK_FALSE(lat[k].contains(a));
        CHECK_FALSE(lat[k].contains(b));
        CHECK(oracle::sandwich_inside(*r, a, b, to_oracle(lat[k].members())));
        CHECK(s.witnesses[k] == v.witness);
      }
      // prime iff the factor ring is prime
      if (!r->is_zero_ring()) CHECK(is_prime_ring(build_quotient(r, lat[k].members()).ring).prime == v.prime);
    }
    CHECK_THROWS_AS(is_prime_ideal(lat[lat.top()]), IdealError);
  }
}

TEST_CASE("pinned spectra") {
  auto z6 = zn(6);
  auto lat6 = all_ideals(z6, Side::two_sided);
  auto s6 = spec(lat6);
  CHECK(as_sets(lat6, s6.primes) ==
        std::set<oracle::Set>{oracle::from_list(*z6, {0, 2, 4}), oracle::from_list(*z6, {0, 3})});
  CHECK(s6.minimal_primes.size() == 2);

  auto t = tri(2);
  support::Tri c(*t);
  auto lt = all_ideals(t, Side::two_sided);
  auto st = spec(lt);
  // P1 = {(a, m, 0)}, P2 = {(0, m, b)}
  oracle::Set p1 = oracle::empty_set(*t), p2 = oracle::empty_set(*t);
  for (Element a = 0; a < 2; ++a)
    for (Element m = 0; m < 2; ++m) {
      p1[c.shape.index(a, m, 0)] = true;
      p2[c.shape.index(0, m, a)] = true;
    }
  CHECK(as_sets(lt, st.primes) == std::set<oracle::Set>{p1, p2});
  CHECK(st.minimal_primes == st.primes);

  auto z4 = zn(4);
  auto l4 = all_ideals(z4, Side::two_sided);
  CHECK(as_sets(l4, spec(l4).primes) == std::set<oracle::Set>{oracle::from_list(*z4, {0, 2})});
  CHECK(spec(all_ideals(zn(1), Side::two_sided)).primes.empty());

  auto mz = all_ideals(support::m2(2), Side::two_sided);
  CHECK(spec(mz).primes == std::vector<std::size_t>{0});

  CHECK(is_prime_ideal(principal(z6, 2)).prime);
  CHECK_FALSE(is_semiprime_ideal(zero_ideal(z4)).prime);
  CHECK(is_semiprime_ideal(principal(t, c.e12())).prime);
  auto zt = is_prime_ideal(zero_ideal(t));
  REQUIRE(zt.witness);
  CHECK(annihilates_through(*t, zt.witness->first, zt.witness->second));
  CHECK(annihilates_through(*t, c.e12(), c.e12()));
}

TEST_CASE("m-systems") {
  auto z6 = zn(6);
  CHECK(is_m_system(*z6, from_oracle(oracle::from_list(*z6, {1}))).is_m_system);
  CHECK(is_m_system(*z6, from_oracle(oracle::from_list(*z6, {1, 2, 4}))).is_m_system);
  auto z4 = zn(4);
  auto v = is_m_system(*z4, from_oracle(oracle::from_list(*z4, {1, 2})));
  CHECK_FALSE(v.is_m_system);
  REQUIRE(v.witness);
  CHECK(*v.witness == ElementPair{2, 2});
  CHECK_FALSE(is_m_system(*z4, from_oracle(oracle::from_list(*z4, {3}))).contains_one);
}

TEST_CASE("maximal ideals outside a family") {
  auto z6 = zn(6);
  auto lat = all_ideals(z6, Side::two_sided);
  ElementSet only_r(lat.size());
  only_r.set(lat.top());
  auto mx = max_in_complement(lat, only_r);
  CHECK(as_sets(lat, mx) ==
        std::set<oracle::Set>{oracle::from_list(*z6, {0, 2, 4}), oracle::from_list(*z6, {0, 3})});
  CHECK(max_in_complement(lat, ElementSet::full(lat.size())).empty());
  auto z4 = zn(4);
  auto l4 = all_ideals(z4, Side::two_sided);
  ElementSet f(l4.size());
  f.set(l4.bottom());
  f.set(l4.top());
  CHECK(as_sets(l4, max_in_complement(l4, f)) ==
        std::set<oracle::Set>{oracle::from_list(*z4, {0, 2})});
  for (const auto& r : rings()) {
    auto l = all_ideals(r, Side::two_sided);
    ElementSet fam(l.size());
    fam.set(l.top());
    for (std::size_t k = 0; k < l.size(); k += 2) fam.set(k);
    std::set<oracle::Set> of;
    fam.for_each([&](std::size_t k) { of.insert(to_oracle(l[k].members())); });
    CHECK(as_sets(l, max_in_complement(l, fam)) == oracle::max_outside(to_oracle(l), of));
  }
}

TEST_CASE("zero is a product of minimal primes") {
  for (const auto& r : rings()) {
    CAPTURE(r->label());
    auto lat = all_ideals(r, Side::two_sided);
    IdealTables t(lat);
    auto s = spec(lat);
    auto seq = zero_as_product_of_minimal_primes(lat, t, s);
    if (r->is_zero_ring()) continue;
    REQUIRE(seq);
    REQUIRE_FALSE(seq->empty());
    oracle::Set acc = oracle::whole(*r);
    for (auto k : *seq) {
      CHECK(std::find(s.minimal_primes.begin(), s.minimal_primes.end(), k) !=
            s.minimal_primes.end());
      acc = oracle::product(*r, acc, to_oracle(lat[k].members()));
    }
    CHECK(acc == oracle::from_list(*r, {0}));
  }
  auto t = tri(2);
  auto lt = all_ideals(t, Side::two_sided);
  IdealTables tt(lt);
  auto seq = zero_as_product_of_minimal_primes(lt, tt, spec(lt));
  REQUIRE(seq);
  // P2 P1 = 0 already, so the breadth-first search stops at length two
  CHECK(seq->size() == 2);
  auto m = all_ideals(support::m2(2), Side::two_sided);
  IdealTables mt(m);
  CHECK(*zero_as_product_of_minimal_primes(m, mt, spec(m)) == std::vector<std::size_t>{0});
}
