#include "dtopo/face_set.hpp"

#include <cassert>

#include "dtopo/error.hpp"

namespace dtopo {

FaceSet FaceSet::full(std::size_t universe) {
  FaceSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

FaceSet FaceSet::of(std::size_t universe, std::initializer_list<FaceId> ids) {
  FaceSet s(universe);
  for (FaceId id : ids) s.insert(id);
  return s;
}

void FaceSet::insert(FaceId id) {
  if (id >= universe_)
    throw DomainError("face " + std::to_string(id) + " outside universe of size " +
                      std::to_string(universe_));
  words_[id / 64] |= std::uint64_t{1} << (id % 64);
}

void FaceSet::erase(FaceId id) {
  if (id < universe_) words_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
}

std::size_t FaceSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool FaceSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::optional<FaceId> FaceSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return static_cast<FaceId>(i * 64 + std::countr_zero(words_[i]));
  return std::nullopt;
}

bool FaceSet::intersects(const FaceSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool FaceSet::is_subset_of(const FaceSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

FaceSet& FaceSet::operator|=(const FaceSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

FaceSet& FaceSet::operator&=(const FaceSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

FaceSet& FaceSet::operator-=(const FaceSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<FaceId> FaceSet::to_vector() const {
  std::vector<FaceId> out;
  out.reserve(size());
  for (FaceId id : *this) out.push_back(id);
  return out;
}

std::size_t FaceSet::hash() const noexcept {
  // splitmix-style word mixing
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dtopo
