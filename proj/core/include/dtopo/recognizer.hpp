#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dtopo/face_set.hpp"
#include "dtopo/poset.hpp"

namespace dtopo {

struct RecognizerOptions {
  bool memoize = true;

  /// Defaults, with memoization turned off when the environment variable
  /// DTOPO_DISABLE_MEMO is set to anything other than "0" or "".
  static RecognizerOptions from_environment();
};

/// Identity of a suborder: ambient poset identity plus member bitset.
struct MemoKey {
  std::uint64_t poset = 0;
  FaceSet members;

  bool operator==(const MemoKey&) const = default;
};

struct SurfaceVerdict {
  bool is_surface = false;
  /// Set iff is_surface; equals the rank of the suborder.
  std::optional<int> rank;
  MemoKey key;
};

struct PcmVerdict {
  bool holds = false;
  /// Rank of the suborder the verdict is about.
  int rank = -1;

  explicit operator bool() const noexcept { return holds; }
};

struct BorderComponent {
  FaceSet faces;
  SurfaceVerdict verdict;
};

/// Border / interior split of a suborder of rank >= 0. Border components are
/// theta-connected pieces of the border, ordered by smallest face id.
struct BorderDecomposition {
  int rank = -1;
  FaceSet border;
  FaceSet interior;
  std::vector<BorderComponent> components;
};

/// Recursive recognizers for discrete surfaces, coherence, PCMs and smooth
/// PCMs over suborders of one ambient poset.
///
/// Every suborder examined during the recursion (neighbourhoods of
/// neighbourhoods, borders, border components) is a member set of the same
/// ambient poset, so verdicts are memoized by member bitset. The memo table
/// is guarded by a mutex: a Recognizer may be shared between threads, and a
/// verdict computed twice by racing threads is identical.
class Recognizer {
 public:
  struct Stats {
    std::size_t evaluations = 0;
    std::size_t cache_hits = 0;
  };

  explicit Recognizer(const Poset& poset, RecognizerOptions options = {});
  Recognizer(Poset&&, RecognizerOptions = {}) = delete;
  Recognizer(const Recognizer&) = delete;
  Recognizer& operator=(const Recognizer&) = delete;

  const Poset& poset() const noexcept { return *poset_; }
  const RecognizerOptions& options() const noexcept { return options_; }

  int rank(const FaceSet& members);

  SurfaceVerdict surface(const FaceSet& members);
  /// `members` is a discrete k-surface (which forces rank == k).
  bool is_surface_of_rank(const FaceSet& members, int k);
  bool coherent(const FaceSet& members);

  PcmVerdict pcm(const FaceSet& members);
  PcmVerdict smooth_pcm(const FaceSet& members);

  /// Throws DomainError when `members` is empty (border undefined at rank -1).
  BorderDecomposition border(const FaceSet& members);

  /// Smoothness condition (C): every border face has a border neighbourhood
  /// that is an (n-2)-surface. Throws DomainError unless `members` is a
  /// simplicial face poset that is an n-PCM with n >= 2.
  bool condition_c(const FaceSet& members);

  Stats stats() const;

 private:
  struct Entry {
    int rank = -2;
    std::int8_t surface = -1;
    std::int8_t coherent = -1;
    std::int8_t pcm = -1;
    std::int8_t smooth = -1;
  };

  std::optional<bool> lookup(const FaceSet& members, std::int8_t Entry::*field);
  void store(const FaceSet& members, std::int8_t Entry::*field, bool value);

  bool compute_surface(const FaceSet& m);
  bool compute_coherent(const FaceSet& m);
  bool compute_pcm(const FaceSet& m, bool smooth);
  bool pcm_flag(const FaceSet& m, bool smooth);
  bool pcm_of_rank(const FaceSet& m, int k, bool smooth);
  FaceSet neighborhood(FaceId h, const FaceSet& m) const;
  bool connected(const FaceSet& m) const;

  const Poset* poset_;
  RecognizerOptions options_;
  mutable std::mutex mutex_;
  std::unordered_map<FaceSet, Entry> memo_;
  Stats stats_;
};

}  // namespace dtopo
