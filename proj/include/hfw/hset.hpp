#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hfw {

/// Index of an element in a finite carrier.
using Element = std::uint32_t;

/// Finite subset of a carrier of at most 64 elements, stored as a bitmask.
/// Iteration visits members in ascending index order.
class HSet {
 public:
  static constexpr std::size_t kMaxCarrier = 64;

  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr HSet() = default;
  HSet(std::initializer_list<Element> members) {
    for (Element x : members) insert(x);
  }
  template <typename It>
  HSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<Element>(*first));
  }
  static constexpr HSet from_mask(std::uint64_t mask) {
    HSet s;
    s.bits_ = mask;
    return s;
  }
  static HSet singleton(Element x) { return HSet{x}; }
  /// {0, ..., n-1}
  static HSet full(std::size_t n) {
    check_size(n);
    return from_mask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  void insert(Element x) {
    check_index(x);
    bits_ |= std::uint64_t{1} << x;
  }
  void erase(Element x) {
    check_index(x);
    bits_ &= ~(std::uint64_t{1} << x);
  }
  bool contains(Element x) const { return x < kMaxCarrier && ((bits_ >> x) & 1U); }

  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t mask() const { return bits_; }
  /// Smallest member; the set must be nonempty.
  Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }

  std::vector<Element> members() const { return {begin(), end()}; }
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  bool subset_of(const HSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const HSet& other) const { return (bits_ & other.bits_) != 0; }

  HSet& operator|=(const HSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  HSet& operator&=(const HSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend HSet operator|(HSet a, const HSet& b) { return a |= b; }
  friend HSet operator&(HSet a, const HSet& b) { return a &= b; }
  /// Set difference.
  friend HSet operator-(const HSet& a, const HSet& b) { return from_mask(a.bits_ & ~b.bits_); }

  friend bool operator==(const HSet&, const HSet&) = default;
  friend std::strong_ordering operator<=>(const HSet& a, const HSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  static void check_index(Element x) {
    if (x >= kMaxCarrier) throw std::out_of_range("element index exceeds HSet capacity");
  }
  static void check_size(std::size_t n) {
    if (n > kMaxCarrier) throw std::out_of_range("carrier exceeds HSet capacity");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace hfw
