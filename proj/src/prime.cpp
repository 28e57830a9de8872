#include "oka/prime.hpp"

#include <deque>
#include <map>

namespace oka {

namespace {

// aRb inside I, scanning r with early exit.
bool sandwich_inside(const Ring& r, Element a, Element b, const ElementSet& i) {
  for (Element s = 0; s < r.order(); ++s)
    if (!i.test(r.mul(r.mul(a, s), b))) return false;
  return true;
}

}  // namespace

bool annihilates_through(const Ring& r, Element a, Element b) {
  for (Element s = 0; s < r.order(); ++s)
    if (r.mul(r.mul(a, s), b) != 0) return false;
  return true;
}

PrimeVerdict is_prime_ideal(const Ideal& i) {
  if (i.is_whole()) throw IdealError("is_prime_ideal: ideal is not proper");
  const Ring& r = *i.ring();
  const auto& m = i.members();
  for (Element a = 0; a < r.order(); ++a) {
    if (m.test(a)) continue;
    for (Element b = 0; b < r.order(); ++b) {
      if (m.test(b)) continue;
      if (sandwich_inside(r, a, b, m)) return {false, ElementPair{a, b}};
    }
  }
  return {true, std::nullopt};
}

PrimeVerdict is_semiprime_ideal(const Ideal& i) {
  if (i.is_whole()) throw IdealError("is_semiprime_ideal: ideal is not proper");
  const Ring& r = *i.ring();
  for (Element a = 0; a < r.order(); ++a) {
    if (i.contains(a)) continue;
    if (sandwich_inside(r, a, a, i.members())) return {false, ElementPair{a, a}};
  }
  return {true, std::nullopt};
}

PrimeRingReport is_prime_ring(const RingPtr& rp) {
  const Ring& r = *rp;
  PrimeRingReport rep;
  if (r.is_zero_ring()) {
    rep.zero_ring = true;
    return rep;
  }
  const std::size_t n = r.order();

  // Criterion (1): the zero ideal is prime.
  rep.zero_ideal_prime = is_prime_ideal(zero_ideal(rp)).prime;

  // One pass records aRb = 0 for all nonzero pairs; (2) and (3) read it.
  std::vector<char> kills(n * n, 0);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b) kills[a * n + b] = annihilates_through(r, a, b) ? 1 : 0;
  rep.both_nonzero = true;
  rep.either_nonzero = true;
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b) {
      const bool ab = kills[a * n + b] != 0;
      const bool ba = kills[b * n + a] != 0;
      if (ab || ba) rep.both_nonzero = false;
      if (ab && ba) rep.either_nonzero = false;
      if (ab && !rep.one_sided) rep.one_sided = ElementPair{a, b};
    }
  rep.consistent =
      rep.zero_ideal_prime == rep.both_nonzero && rep.both_nonzero == rep.either_nonzero;
  rep.prime = rep.zero_ideal_prime;

  if (rep.one_sided) {
    const auto [x, y] = *rep.one_sided;
    if (annihilates_through(r, y, x)) {
      rep.symmetric = ElementPair{x, y};
    } else {
      for (Element s = 0; s < n; ++s) {
        const Element c = r.mul(r.mul(y, s), x);
        if (c != 0) {
          rep.symmetric = ElementPair{c, c};
          break;
        }
      }
    }
  }
  return rep;
}

MSystemVerdict is_m_system(const Ring& r, const ElementSet& s) {
  MSystemVerdict v;
  v.contains_one = s.test(r.one());
  std::optional<ElementPair> bad;
  s.for_each([&](Element a) {
    if (bad) return;
    s.for_each([&](Element b) {
      if (bad) return;
      for (Element x = 0; x < r.order(); ++x)
        if (s.test(r.mul(r.mul(a, x), b))) return;
      bad = ElementPair{a, b};
    });
  });
  v.witness = bad;
  v.is_m_system = v.contains_one && !bad;
  return v;
}

bool SpecResult::is_prime(std::size_t k) const {
  for (auto p : primes)
    if (p == k) return true;
  return false;
}

SpecResult spec(const IdealLattice& lattice) {
  SpecResult res;
  res.ring = lattice.ring();
  res.witnesses.resize(lattice.size());
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lattice[k].is_whole()) continue;
    auto v = is_prime_ideal(lattice[k]);
    if (v.prime)
      res.primes.push_back(k);
    else
      res.witnesses[k] = v.witness;
  }
  for (auto p : res.primes) {
    bool minimal = true;
    for (auto q : res.primes)
      if (q != p && lattice.contains(p, q)) minimal = false;
    if (minimal) res.minimal_primes.push_back(p);
  }
  return res;
}

std::vector<std::size_t> max_in_complement(const IdealLattice& lattice, const ElementSet& family) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (family.test(k)) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < lattice.size() && maximal; ++j)
      if (j != k && !family.test(j) && lattice.contains(j, k)) maximal = false;
    if (maximal) out.push_back(k);
  }
  return out;
}

std::optional<std::vector<std::size_t>> zero_as_product_of_minimal_primes(
    const IdealLattice& lattice, const IdealTables& tables, const SpecResult& sp) {
  if (sp.minimal_primes.empty()) return std::nullopt;
  const std::size_t zero = lattice.bottom();
  // parent[k] = (previous state, last factor); states are lattice indices.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> parent;
  std::deque<std::size_t> work;
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  auto rebuild = [&](std::size_t k) {
    std::vector<std::size_t> seq;
    while (k != kRoot) {
      auto [prev, factor] = parent.at(k);
      seq.push_back(factor);
      k = prev;
    }
    return std::vector<std::size_t>(seq.rbegin(), seq.rend());
  };
  for (auto p : sp.minimal_primes) {
    if (parent.count(p)) continue;
    parent.emplace(p, std::make_pair(kRoot, p));
    if (p == zero) return rebuild(p);
    work.push_back(p);
  }
  while (!work.empty()) {
    const std::size_t k = work.front();
    work.pop_front();
    for (auto p : sp.minimal_primes) {
      const std::size_t next = tables.product(k, p);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(k, p));
      if (next == zero) return rebuild(next);
      work.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace oka
