#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtopo/poset.hpp"

namespace dtopo {

/// Finite vertex set, kept strictly sorted. Vertex labels are arbitrary
/// integers.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<int> vertices);
  explicit Simplex(std::vector<int> vertices);

  std::span<const int> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  /// Cardinality minus one.
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  bool contains(int v) const;
  bool is_face_of(const Simplex& other) const;
  bool disjoint_from(const Simplex& other) const;

  Simplex united(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;

  /// "{1,2,3}"
  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<int> vertices_;
};

/// Inclusion-closed family of nonempty simplices. The empty simplex is not a
/// face.
///
/// Simplices are stored ordered by (dimension, lexicographic); the index of a
/// simplex in `simplices()` is its FaceId in `face_poset()`.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `facets`. Throws DomainError on an empty facet or
  /// a facet with more than 20 vertices.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);

  std::span<const Simplex> simplices() const noexcept { return simplices_; }
  /// Maximal simplices, lexicographic order.
  std::span<const Simplex> facets() const noexcept { return facets_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  /// -1 for the empty complex.
  int dimension() const noexcept { return dimension_; }

  bool contains(const Simplex& s) const { return index_.contains(s); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::vector<int> vertices() const;
  /// Number of simplices per dimension 0..dimension().
  std::vector<std::size_t> f_vector() const;

  bool operator==(const SimplicialComplex& o) const { return simplices_ == o.simplices_; }

 private:
  std::vector<Simplex> simplices_;
  std::vector<Simplex> facets_;
  std::map<Simplex, std::size_t> index_;
  int dimension_ = -1;
};

/// One face per simplex, covering = codimension-1 inclusion, labels
/// "{v0,v1,...}". Face ids follow `K.simplices()`.
Poset face_poset(const SimplicialComplex& k);

/// Rebuilds a complex from a simplicial face poset; vertex v is the FaceId of
/// the corresponding rank-0 face. Throws DomainError if `is_simplicial(p)`
/// does not hold.
SimplicialComplex from_face_poset(const Poset& p);

/// { h' : h' and h disjoint, h' u h in K }. Throws DomainError if h is not in K.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& h);

/// K u L u { x u y }. If the vertex sets overlap, L is renumbered past
/// K's largest vertex first.
SimplicialComplex simplicial_join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Every simplex lies in a simplex of dimension dim(K).
bool is_pure(const SimplicialComplex& k);

/// Facet dual graph (facets adjacent when they share a codimension-1 face)
/// is connected. Throws DomainError on non-pure input.
bool is_codim1_connected(const SimplicialComplex& k);
/// Same test on an explicit facet list, e.g. the cofacets of a face.
bool is_codim1_connected(std::span<const Simplex> facets);

/// Rank 0: exactly one vertex. Rank >= 1: pure, every (n-1)-face lies in one
/// or two n-faces, codimension-1 connected.
bool is_pseudomanifold(const SimplicialComplex& k);

/// Pseudomanifold whose faces of dimension <= n-2 all have pseudomanifold
/// links.
bool is_normal_pseudomanifold(const SimplicialComplex& k);

/// (n-1)-faces contained in exactly one n-face.
std::vector<Simplex> boundary_ridges(const SimplicialComplex& k);

/// Facet-list text format: `#` comments, one facet per line as
/// whitespace-separated integers. Downward closure is applied on load.
SimplicialComplex read_facets(std::istream& in);
void write_facets(std::ostream& out, const SimplicialComplex& k);

}  // namespace dtopo
