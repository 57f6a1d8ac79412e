#include "dtopo/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dtopo/error.hpp"

namespace dtopo {

// --- Simplex ------------------------------------------------------------

Simplex::Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Simplex::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<int> out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  return Simplex(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  std::vector<int> out;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                      other.vertices_.end(), std::back_inserter(out));
  return Simplex(std::move(out));
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

// --- SimplicialComplex ----------------------------------------------------

namespace {

bool by_dimension(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Codimension-1 faces of a simplex with at least two vertices.
std::vector<Simplex> ridges_of(const Simplex& s) {
  std::vector<Simplex> out;
  auto v = s.vertices();
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::vector<int> r;
    r.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) r.push_back(v[i]);
    out.emplace_back(std::move(r));
  }
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Dual-graph connectivity for facets of one common size.
bool dual_graph_connected(std::span<const Simplex> facets) {
  if (facets.size() <= 1) return true;
  if (facets.front().size() == 1) return false;  // the empty simplex is not a face
  DisjointSets ds(facets.size());
  std::map<Simplex, std::size_t> first_owner;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (Simplex& r : ridges_of(facets[i])) {
      auto [it, inserted] = first_owner.emplace(std::move(r), i);
      if (!inserted) ds.unite(i, it->second);
    }
  }
  const auto root = ds.find(0);
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (ds.find(i) != root) return false;
  return true;
}

// Pseudomanifold test on a nonempty list of equal-size facets.
bool facet_pseudomanifold(std::span<const Simplex> facets) {
  if (facets.empty()) return false;
  if (facets.front().size() == 1) return facets.size() == 1;
  std::map<Simplex, int> cofaces;
  for (const Simplex& f : facets)
    for (Simplex& r : ridges_of(f))
      if (++cofaces[std::move(r)] > 2) return false;
  return dual_graph_connected(facets);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  std::set<Simplex> all;
  for (const Simplex& f : facets) {
    if (f.empty()) throw DomainError("empty facet");
    if (f.size() > 20)
      throw DomainError("facet " + f.to_string() + " has more than 20 vertices");
    auto v = f.vertices();
    const std::uint32_t subsets = (std::uint32_t{1} << v.size()) - 1;
    for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) s.push_back(v[i]);
      all.emplace(std::move(s));
    }
  }

  SimplicialComplex k;
  k.simplices_.assign(all.begin(), all.end());
  std::sort(k.simplices_.begin(), k.simplices_.end(), by_dimension);
  for (std::size_t i = 0; i < k.simplices_.size(); ++i) k.index_.emplace(k.simplices_[i], i);

  std::vector<bool> maximal(k.simplices_.size(), true);
  for (const Simplex& s : k.simplices_) {
    if (s.size() < 2) continue;
    for (const Simplex& r : ridges_of(s)) maximal[k.index_.at(r)] = false;
  }
  for (std::size_t i = 0; i < k.simplices_.size(); ++i)
    if (maximal[i]) k.facets_.push_back(k.simplices_[i]);
  std::sort(k.facets_.begin(), k.facets_.end());
  k.dimension_ = k.simplices_.empty() ? -1 : k.simplices_.back().dimension();
  return k;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const Simplex& s : simplices_) {
    if (s.size() != 1) break;
    out.push_back(s.vertices()[0]);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension_ + 1), 0);
  for (const Simplex& s : simplices_) ++f[static_cast<std::size_t>(s.dimension())];
  return f;
}

// --- operations ------------------------------------------------------------

Poset face_poset(const SimplicialComplex& k) {
  std::vector<std::vector<FaceId>> below(k.size());
  std::vector<std::string> labels;
  labels.reserve(k.size());
  auto simplices = k.simplices();
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (simplices[i].size() >= 2)
      for (const Simplex& r : ridges_of(simplices[i]))
        below[i].push_back(static_cast<FaceId>(*k.index_of(r)));
    labels.push_back(simplices[i].to_string());
  }
  return Poset(std::move(below), std::move(labels));
}

SimplicialComplex from_face_poset(const Poset& p) {
  if (!is_simplicial(p)) throw DomainError("poset is not a simplicial-complex face poset");
  const FaceSet vertices = p.layer(0);
  std::vector<Simplex> facets;
  for (FaceId h = 0; h < p.size(); ++h) {
    if (!p.covered_by(h).empty()) continue;
    FaceSet ideal = p.strict_closure(h);
    ideal.insert(h);
    std::vector<int> v;
    for (FaceId x : ideal & vertices) v.push_back(static_cast<int>(x));
    facets.emplace_back(std::move(v));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& h) {
  if (h.empty() || !k.contains(h))
    throw DomainError("link: simplex " + h.to_string() + " is not in the complex");
  std::vector<Simplex> parts;
  for (const Simplex& s : k.simplices())
    if (s.size() > h.size() && h.is_face_of(s)) parts.push_back(s.minus(h));
  return SimplicialComplex::from_facets(std::move(parts));
}

SimplicialComplex simplicial_join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.empty()) return l;
  if (l.empty()) return k;
  const auto kv = k.vertices();
  const auto lv = l.vertices();
  int shift = 0;
  const bool overlap = std::any_of(lv.begin(), lv.end(), [&](int v) {
    return std::binary_search(kv.begin(), kv.end(), v);
  });
  if (overlap) shift = kv.back() + 1 - lv.front();

  std::vector<Simplex> facets;
  for (const Simplex& a : k.facets()) {
    for (const Simplex& b : l.facets()) {
      std::vector<int> v(a.vertices().begin(), a.vertices().end());
      for (int x : b.vertices()) v.push_back(x + shift);
      facets.emplace_back(std::move(v));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

bool is_pure(const SimplicialComplex& k) {
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [&](const Simplex& f) { return f.dimension() == k.dimension(); });
}

bool is_codim1_connected(std::span<const Simplex> facets) {
  if (!facets.empty()) {
    const auto n = facets.front().size();
    for (const Simplex& f : facets)
      if (f.size() != n) throw DomainError("codimension-1 connectivity needs a pure input");
  }
  return dual_graph_connected(facets);
}

bool is_codim1_connected(const SimplicialComplex& k) {
  if (!is_pure(k)) throw DomainError("codimension-1 connectivity needs a pure complex");
  return dual_graph_connected(k.facets());
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (k.dimension() < 0) return false;
  if (k.dimension() == 0) return k.size() == 1;
  if (!is_pure(k)) return false;
  return facet_pseudomanifold(k.facets());
}

bool is_normal_pseudomanifold(const SimplicialComplex& k) {
  if (!is_pseudomanifold(k)) return false;
  const int n = k.dimension();
  std::vector<Simplex> link_facets;
  for (const Simplex& h : k.simplices()) {
    if (h.dimension() > n - 2) break;
    // K is pure, so the link's facets are exactly f \ h over facets f >= h.
    link_facets.clear();
    for (const Simplex& f : k.facets())
      if (h.is_face_of(f)) link_facets.push_back(f.minus(h));
    if (!facet_pseudomanifold(link_facets)) return false;
  }
  return true;
}

std::vector<Simplex> boundary_ridges(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  if (k.dimension() < 1) return out;
  std::map<Simplex, int> cofaces;
  for (const Simplex& f : k.facets())
    if (f.dimension() == k.dimension())
      for (Simplex& r : ridges_of(f)) ++cofaces[std::move(r)];
  for (auto& [r, count] : cofaces)
    if (count == 1) out.push_back(r);
  return out;
}

}  // namespace dtopo
