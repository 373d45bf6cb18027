#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "coalition/errors.hpp"

namespace coalition {

// Subset of the vertices 0..63, one bit per vertex. All set algebra is
// single-word, which is what keeps the exact solvers' inner loops cheap.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.add(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet first_n(int n) {
    if (n < 0 || n > 64) throw DomainError("vertex count out of range: " + std::to_string(n));
    return VertexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static VertexSet of(std::span<const int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1; }

  void add(int v) {
    check_range(v);
    bits_ |= std::uint64_t{1} << v;
  }

  void remove(int v) {
    check_range(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  // Smallest member; only meaningful on a nonempty set.
  int lowest() const { return bits_ ? std::countr_zero(bits_) : 64; }

  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  // "{0,2,5}"
  std::string to_string() const;

  // Iterates members in increasing order.
  class const_iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr const_iterator() = default;
    constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  const_iterator begin() const { return const_iterator(bits_); }
  const_iterator end() const { return const_iterator(0); }

 private:
  static void check_range(int v) {
    if (v < 0 || v >= 64) throw DomainError("vertex index out of range: " + std::to_string(v));
  }

  std::uint64_t bits_ = 0;
};

inline std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace coalition
