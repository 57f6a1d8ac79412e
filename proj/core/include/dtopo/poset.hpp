#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dtopo/face_set.hpp"

namespace dtopo {

class SuborderView;

/// Finite partially ordered set stored by its covering (Hasse) relation.
///
/// The full strict order (closure and opening of every face), the ranks and
/// the rank layers are derived once at construction; a Poset is immutable
/// afterwards and safe to share between threads for reading.
class Poset {
 public:
  /// The empty order (rank -1).
  Poset();

  /// `below[h]` lists faces strictly below `h`. The list need not be
  /// minimal: the covering relation is recovered by transitive reduction.
  /// Throws DomainError on out-of-range ids, self loops or cycles.
  explicit Poset(std::vector<std::vector<FaceId>> below,
                 std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return covers_.size(); }
  bool empty() const noexcept { return covers_.empty(); }

  /// Faces immediately below `h`.
  std::span<const FaceId> covers(FaceId h) const;
  /// Faces immediately above `h`.
  std::span<const FaceId> covered_by(FaceId h) const;

  /// alpha-box: every face strictly below `h`.
  const FaceSet& strict_closure(FaceId h) const;
  /// beta-box: every face strictly above `h`.
  const FaceSet& strict_opening(FaceId h) const;
  /// theta-box: strict closure plus strict opening.
  FaceSet strict_neighborhood(FaceId h) const;

  /// Strict order test: a < b.
  bool less(FaceId a, FaceId b) const;

  int rank(FaceId h) const;
  /// Maximal face rank, -1 for the empty order.
  int rank() const noexcept { return rank_; }
  /// Faces of rank `r` (empty set when r is out of range).
  FaceSet layer(int r) const;

  std::string_view label(FaceId h) const;
  bool has_labels() const noexcept { return !labels_.empty(); }

  FaceSet all() const { return FaceSet::full(size()); }
  FaceSet none() const { return FaceSet(size()); }

  /// Faces ordered by non-decreasing rank (a linear extension).
  std::span<const FaceId> linear_extension() const noexcept { return order_; }

  /// Process-unique identity of this poset's contents; part of memo keys.
  std::uint64_t identity() const noexcept { return identity_; }

  SuborderView view() const;
  SuborderView view(FaceSet members) const;

 private:
  void check(FaceId h) const;

  std::vector<std::vector<FaceId>> covers_;
  std::vector<std::vector<FaceId>> covered_by_;
  std::vector<FaceSet> closure_;
  std::vector<FaceSet> opening_;
  std::vector<int> ranks_;
  std::vector<FaceSet> layers_;
  std::vector<FaceId> order_;
  std::vector<std::string> labels_;
  int rank_ = -1;
  std::uint64_t identity_ = 0;
};

/// Induced suborder: the ambient order restricted to `members`.
///
/// Ranks are always recomputed relative to the member set. The view holds a
/// reference to its ambient poset, which must outlive it.
class SuborderView {
 public:
  SuborderView(const Poset& ambient)  // NOLINT(google-explicit-constructor)
      : ambient_(&ambient), members_(ambient.all()) {}
  SuborderView(const Poset& ambient, FaceSet members);
  SuborderView(Poset&&) = delete;
  SuborderView(Poset&&, FaceSet) = delete;

  const Poset& ambient() const noexcept { return *ambient_; }
  const FaceSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(FaceId h) const noexcept { return members_.contains(h); }

  FaceSet strict_closure(FaceId h) const;
  FaceSet strict_opening(FaceId h) const;
  FaceSet strict_neighborhood(FaceId h) const;

  /// Sub-view; `subset` must lie inside this view.
  SuborderView restrict(FaceSet subset) const;

  /// Copies the view into a standalone poset. New ids follow increasing
  /// ambient id order; labels are carried over.
  Poset materialize() const;

 private:
  const Poset* ambient_;
  FaceSet members_;
};

enum class LocalOperator { alpha, beta, theta };

/// alpha / beta / theta of `h` inside the view. Non-strict variants include
/// `h` itself. Throws DomainError if `h` is not a member.
FaceSet local_set(const SuborderView& p, FaceId h, LocalOperator op, bool strict = true);
/// Set version: union of the per-face sets over `faces`.
FaceSet local_set(const SuborderView& p, const FaceSet& faces, LocalOperator op,
                  bool strict = true);

/// Rank of `h` relative to the view.
int rank(const SuborderView& p, FaceId h);
/// Rank of the view itself; -1 when empty.
int rank(const SuborderView& p);
/// Per-face ranks relative to the view, indexed by ambient id (-1 for
/// non-members).
std::vector<int> ranks(const SuborderView& p);

/// Connected components under theta-adjacency, ordered by smallest member.
std::vector<FaceSet> connected_components(const SuborderView& p);
bool is_connected(const SuborderView& p);

/// Order join: every face of `lower` lies below every face of `upper`.
/// Faces of `upper` are renumbered by offset lower.size(); labels are kept.
Poset join(const Poset& lower, const Poset& upper);

/// True iff no theta-adjacency crosses between `a` and `b`. Requires `a`
/// and `b` to partition the view's members (DomainError otherwise).
bool is_separated_union(const SuborderView& p, const FaceSet& a, const FaceSet& b);

/// Exact isomorphism test by backtracking; a bijection preserving rank and
/// the covering relation both ways. Refuses (DomainError) when either
/// poset exceeds `bound` faces.
bool is_isomorphic(const Poset& p, const Poset& q, std::size_t bound = 40);

/// True iff `p` is the face poset of a simplicial complex: every principal
/// ideal is a boolean lattice (minus its bottom) over the rank-0 faces it
/// contains, and distinct faces have distinct vertex sets.
bool is_simplicial(const Poset& p);

/// Hasse text format.
///
///   # comment
///   rank <n>                      (optional, verified when present)
///   f <id> [<label>] : <covered-id>*
///
/// Ids must be dense from 0. Throws ParseError with a 1-based line number.
Poset read_hasse(std::istream& in);
void write_hasse(std::ostream& out, const Poset& p);

}  // namespace dtopo
