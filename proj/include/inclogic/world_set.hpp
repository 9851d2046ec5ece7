#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace inclogic {

// Fixed-universe bitset over the dense indices 0..universe()-1.
// Used for world teams and labelling sets.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  WorldSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : WorldSet(universe) {
    for (auto m : members) insert(m);
  }

  static WorldSet full(std::size_t universe) {
    WorldSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return i < universe_ && (words_[i / 64] >> (i % 64)) & 1U;
  }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_subset_of(const WorldSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const WorldSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  WorldSet& operator&=(const WorldSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  WorldSet& operator|=(const WorldSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  WorldSet& operator-=(const WorldSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }

  friend bool operator==(const WorldSet&, const WorldSet&) = default;

  // Lexicographic by member list, so {0} < {0,1} < {1}.
  friend bool operator<(const WorldSet& a, const WorldSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      auto w = words_[wi];
      while (w) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        fn(wi * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

  class const_iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    using reference = std::size_t;
    using pointer = void;

    const_iterator() = default;
    const_iterator(const WorldSet* s, std::size_t i) : set_(s), i_(i) { advance(); }
    std::size_t operator*() const { return i_; }
    const_iterator& operator++() {
      ++i_;
      advance();
      return *this;
    }
    const_iterator operator++(int) {
      auto c = *this;
      ++*this;
      return c;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.i_ == b.i_;
    }

   private:
    void advance() {
      while (i_ < set_->universe_) {
        auto w = set_->words_[i_ / 64] >> (i_ % 64);
        if (w == 0) {
          i_ = (i_ / 64 + 1) * 64;
          continue;
        }
        i_ += static_cast<std::size_t>(std::countr_zero(w));
        break;
      }
      if (i_ > set_->universe_) i_ = set_->universe_;
    }
    const WorldSet* set_ = nullptr;
    std::size_t i_ = 0;
  };

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, universe_}; }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct WorldSetHash {
  std::size_t operator()(const WorldSet& s) const noexcept { return s.hash(); }
};

}  // namespace inclogic
