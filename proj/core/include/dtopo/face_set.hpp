#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace dtopo {

/// Dense index of a face inside one poset's ground set.
using FaceId = std::uint32_t;

/// Fixed-universe bitset over FaceIds.
///
/// Every poset-level set (closures, openings, suborder member sets, borders)
/// is a FaceSet over the ambient poset's universe, so suborders of suborders
/// are plain intersections. Also serves as the memoization key for the
/// recursive recognizers.
class FaceSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = FaceId;
    using difference_type = std::ptrdiff_t;
    using pointer = const FaceId*;
    using reference = FaceId;

    const_iterator() = default;
    const_iterator(const std::uint64_t* words, std::size_t nwords, std::size_t index)
        : words_(words), nwords_(nwords), index_(index) {
      if (index_ < nwords_) {
        current_ = words_[index_];
        seek();
      }
    }

    FaceId operator*() const {
      return static_cast<FaceId>(index_ * 64 + std::countr_zero(current_));
    }
    const_iterator& operator++() {
      current_ &= current_ - 1;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const {
      return index_ == o.index_ && current_ == o.current_;
    }

   private:
    void seek() {
      while (current_ == 0) {
        if (++index_ >= nwords_) {
          index_ = nwords_;
          return;
        }
        current_ = words_[index_];
      }
    }

    const std::uint64_t* words_ = nullptr;
    std::size_t nwords_ = 0;
    std::size_t index_ = 0;
    std::uint64_t current_ = 0;
  };

  FaceSet() = default;
  explicit FaceSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static FaceSet full(std::size_t universe);
  static FaceSet of(std::size_t universe, std::initializer_list<FaceId> ids);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(FaceId id) const noexcept {
    return id < universe_ && ((words_[id / 64] >> (id % 64)) & 1u) != 0;
  }
  void insert(FaceId id);
  void erase(FaceId id);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<FaceId> first() const noexcept;

  bool intersects(const FaceSet& other) const noexcept;
  bool is_subset_of(const FaceSet& other) const noexcept;

  FaceSet& operator|=(const FaceSet& other);
  FaceSet& operator&=(const FaceSet& other);
  /// Set difference.
  FaceSet& operator-=(const FaceSet& other);

  friend FaceSet operator|(FaceSet a, const FaceSet& b) { return a |= b; }
  friend FaceSet operator&(FaceSet a, const FaceSet& b) { return a &= b; }
  friend FaceSet operator-(FaceSet a, const FaceSet& b) { return a -= b; }

  bool operator==(const FaceSet&) const = default;

  const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
  const_iterator end() const {
    return {words_.data(), words_.size(), words_.size()};
  }

  std::vector<FaceId> to_vector() const;
  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace dtopo

template <>
struct std::hash<dtopo::FaceSet> {
  std::size_t operator()(const dtopo::FaceSet& s) const noexcept { return s.hash(); }
};
