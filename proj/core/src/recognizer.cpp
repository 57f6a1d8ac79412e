#include "dtopo/recognizer.hpp"

#include <cassert>
#include <cstdlib>
#include <string_view>

#include "dtopo/error.hpp"
#include "dtopo/surface.hpp"

namespace dtopo {

RecognizerOptions RecognizerOptions::from_environment() {
  RecognizerOptions o;
  if (const char* v = std::getenv("DTOPO_DISABLE_MEMO")) {
    std::string_view s(v);
    if (!s.empty() && s != "0") o.memoize = false;
  }
  return o;
}

Recognizer::Recognizer(const Poset& poset, RecognizerOptions options)
    : poset_(&poset), options_(options) {}

Recognizer::Stats Recognizer::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

std::optional<bool> Recognizer::lookup(const FaceSet& members, std::int8_t Entry::*field) {
  std::lock_guard lock(mutex_);
  if (options_.memoize) {
    auto it = memo_.find(members);
    if (it != memo_.end() && it->second.*field >= 0) {
      ++stats_.cache_hits;
      return it->second.*field == 1;
    }
  }
  ++stats_.evaluations;
  return std::nullopt;
}

void Recognizer::store(const FaceSet& members, std::int8_t Entry::*field, bool value) {
  if (!options_.memoize) return;
  std::lock_guard lock(mutex_);
  memo_[members].*field = value ? 1 : 0;
}

int Recognizer::rank(const FaceSet& members) {
  if (options_.memoize) {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(members);
    if (it != memo_.end() && it->second.rank != -2) return it->second.rank;
  }
  const int r = dtopo::rank(SuborderView(*poset_, members));
  if (options_.memoize) {
    std::lock_guard lock(mutex_);
    memo_[members].rank = r;
  }
  return r;
}

FaceSet Recognizer::neighborhood(FaceId h, const FaceSet& m) const {
  return poset_->strict_neighborhood(h) & m;
}

bool Recognizer::connected(const FaceSet& m) const {
  return is_connected(SuborderView(*poset_, m));
}

SurfaceVerdict Recognizer::surface(const FaceSet& members) {
  SurfaceVerdict v;
  v.key = MemoKey{poset_->identity(), members};
  auto cached = lookup(members, &Entry::surface);
  v.is_surface = cached ? *cached : compute_surface(members);
  if (!cached) store(members, &Entry::surface, v.is_surface);
  if (v.is_surface) v.rank = rank(members);
  return v;
}

bool Recognizer::is_surface_of_rank(const FaceSet& members, int k) {
  if (rank(members) != k) return false;
  return surface(members).is_surface;
}

bool Recognizer::compute_surface(const FaceSet& m) {
  const int k = rank(m);
  if (k == -1) return true;
  if (k == 0) return m.size() == 2;  // rank 0 means an antichain
  if (!connected(m)) return false;
  for (FaceId h : m) {
    FaceSet nb = neighborhood(h, m);
    // neighbourhoods have strictly smaller rank, so the recursion depth is
    // bounded by k + 1
    assert(rank(nb) < k);
    if (!is_surface_of_rank(nb, k - 1)) return false;
  }
  return true;
}

bool Recognizer::coherent(const FaceSet& members) {
  auto cached = lookup(members, &Entry::coherent);
  if (cached) return *cached;
  bool value = compute_coherent(members);
  store(members, &Entry::coherent, value);
  return value;
}

bool Recognizer::compute_coherent(const FaceSet& m) {
  if (m.empty()) return true;
  const int n = rank(m);
  for (FaceId h : m) {
    FaceSet nb = neighborhood(h, m);
    if (rank(nb) != n - 1 || !coherent(nb)) return false;
  }
  return true;
}

// --- free functions of the surface recognizer ------------------------------

SurfaceVerdict is_k_surface(const SuborderView& p, RecognizerOptions options) {
  Recognizer r(p.ambient(), options);
  return r.surface(p.members());
}

bool is_coherent(const SuborderView& p, RecognizerOptions options) {
  Recognizer r(p.ambient(), options);
  return r.coherent(p.members());
}

}  // namespace dtopo
