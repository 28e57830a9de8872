#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace oka {

using Element = std::uint32_t;

/// Dense membership bit-vector over 0..size()-1.
///
/// Used both for subsets of a ring's elements (ideals, m-systems) and for
/// subsets of a lattice's ideal indices (families). Equality and hashing are
/// by content, so an ElementSet is its own canonical identity.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static ElementSet full(std::size_t n) {
    ElementSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i);
    return s;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  /// Sets bit i and reports whether it was previously clear.
  bool insert(std::size_t i) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    std::uint64_t& w = words_[i >> 6];
    const bool fresh = (w & mask) == 0;
    w |= mask;
    return fresh;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  /// Complement within 0..size()-1.
  ElementSet complement() const {
    ElementSet c(size_);
    for (std::size_t i = 0; i < size_; ++i)
      if (!test(i)) c.set(i);
    return c;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int off = std::countr_zero(w);
        f(static_cast<Element>(wi * 64 + static_cast<std::size_t>(off)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  /// Smallest member, or size() when empty.
  std::size_t first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return size_;
  }

  std::size_t hash() const {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical report order: fewer members first, then lexicographic on the
  /// ascending member lists.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    const auto ma = a.members();
    const auto mb = b.members();
    return ma < mb;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace oka
