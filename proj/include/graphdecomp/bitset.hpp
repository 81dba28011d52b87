#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "graphdecomp/errors.hpp"

namespace graphdecomp {

// A set of vertex indices drawn from a fixed universe [0, universe).
// Backed by 64-bit words so the fixpoint loops and the exhaustive
// enumerations get word-parallel union/intersection/subset tests.
class VertexSet {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    if (!s.words_.empty()) {
      for (auto& w : s.words_) w = ~std::uint64_t{0};
      s.trim_tail();
    }
    return s;
  }

  static VertexSet of(std::size_t universe,
                      std::initializer_list<std::size_t> members) {
    VertexSet s(universe);
    for (std::size_t i : members) s.set(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s = all(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
    return s;
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Smallest member, or npos when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }

  // Smallest member strictly greater than i, or npos.
  std::size_t next(std::size_t i) const {
    if (i >= universe_ || i + 1 >= universe_) return npos;
    std::size_t w = (i + 1) >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << ((i + 1) & 63));
    while (true) {
      if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == words_.size()) return npos;
      word = words_[w];
    }
  }

  class const_iterator {
  public:
    using value_type = std::size_t;
    const_iterator(const VertexSet* s, std::size_t pos) : set_(s), pos_(pos) {}
    std::size_t operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

  private:
    const VertexSet* set_;
    std::size_t pos_;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, npos}; }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> v;
    v.reserve(count());
    for (std::size_t i : *this) v.push_back(i);
    return v;
  }

private:
  void check_index(std::size_t i) const {
    if (i >= universe_)
      throw DomainError("vertex index " + std::to_string(i) +
                        " outside universe of size " + std::to_string(universe_));
  }

  void check_universe(const VertexSet& o) const {
    if (universe_ != o.universe_)
      throw DomainError("vertex sets over different universes (" +
                        std::to_string(universe_) + " vs " +
                        std::to_string(o.universe_) + ")");
  }

  void trim_tail() {
    std::size_t rem = universe_ & 63;
    if (rem != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace graphdecomp
