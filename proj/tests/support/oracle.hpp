#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond reading a Poset's covering relation: the order is an explicit
// comparability matrix closed by Warshall's algorithm, sets are sorted
// vectors, and nothing is memoized.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dtopo/face_set.hpp"
#include "dtopo/poset.hpp"

namespace oracle {

using Set = std::vector<int>;

class Order {
 public:
  explicit Order(const dtopo::Poset& p) : n_(static_cast<int>(p.size())) {
    lt_.assign(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (int h = 0; h < n_; ++h)
      for (dtopo::FaceId c : p.covers(static_cast<dtopo::FaceId>(h))) at(static_cast<int>(c), h) = 1;
    close();
  }

  /// `pairs` lists a < b relations; closure is taken here.
  Order(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
    lt_.assign(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (auto [a, b] : pairs) at(a, b) = 1;
    close();
  }

  int size() const { return n_; }
  bool less(int a, int b) const { return lt_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
  bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }
  bool acyclic() const {
    for (int i = 0; i < n_; ++i)
      if (less(i, i)) return false;
    return true;
  }

 private:
  char& at(int a, int b) { return lt_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  void close() {
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (at(i, k))
          for (int j = 0; j < n_; ++j)
            if (at(k, j)) at(i, j) = 1;
  }

  int n_;
  std::vector<std::vector<char>> lt_;
};

inline Set everything(const Order& o) {
  Set s(static_cast<std::size_t>(o.size()));
  for (int i = 0; i < o.size(); ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

inline Set from_faces(const dtopo::FaceSet& f) {
  Set s;
  for (dtopo::FaceId h : f) s.push_back(static_cast<int>(h));
  return s;
}

inline dtopo::FaceSet to_faces(const Set& s, std::size_t universe) {
  dtopo::FaceSet f(universe);
  for (int h : s) f.insert(static_cast<dtopo::FaceId>(h));
  return f;
}

inline bool has(const Set& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

inline Set filter(const Set& x, const std::function<bool(int)>& keep) {
  Set out;
  for (int y : x)
    if (keep(y)) out.push_back(y);
  return out;
}

inline Set alpha(const Order& o, const Set& x, int h) {
  return filter(x, [&](int y) { return o.less(y, h); });
}
inline Set beta(const Order& o, const Set& x, int h) {
  return filter(x, [&](int y) { return o.less(h, y); });
}
inline Set theta(const Order& o, const Set& x, int h) {
  return filter(x, [&](int y) { return o.comparable(y, h); });
}

/// Longest-chain rank of every member, by repeated relaxation.
inline std::map<int, int> ranks(const Order& o, const Set& x) {
  std::map<int, int> r;
  for (int h : x) r[h] = 0;
  for (std::size_t round = 0; round < x.size(); ++round)
    for (int h : x)
      for (int y : x)
        if (o.less(y, h)) r[h] = std::max(r[h], r[y] + 1);
  return r;
}

inline int rank(const Order& o, const Set& x) {
  int best = -1;
  for (auto [h, r] : ranks(o, x)) best = std::max(best, r);
  return best;
}

inline std::vector<Set> components(const Order& o, const Set& x) {
  std::vector<Set> out;
  Set seen;
  for (int start : x) {
    if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
    Set comp{start};
    std::deque<int> queue{start};
    seen.push_back(start);
    while (!queue.empty()) {
      int h = queue.front();
      queue.pop_front();
      for (int y : x)
        if (o.comparable(h, y) && std::find(seen.begin(), seen.end(), y) == seen.end()) {
          seen.push_back(y);
          comp.push_back(y);
          queue.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

inline bool connected(const Order& o, const Set& x) { return components(o, x).size() <= 1; }

inline bool surface_of_rank(const Order& o, const Set& x, int k) {
  if (k == -1) return x.empty();
  if (k == 0) return x.size() == 2 && !o.comparable(x[0], x[1]);
  if (x.empty() || !connected(o, x)) return false;
  for (int h : x)
    if (!surface_of_rank(o, theta(o, x, h), k - 1)) return false;
  return true;
}

inline bool surface(const Order& o, const Set& x) { return surface_of_rank(o, x, rank(o, x)); }

inline bool coherent(const Order& o, const Set& x) {
  const int n = rank(o, x);
  for (int h : x) {
    Set t = theta(o, x, h);
    if (rank(o, t) != n - 1 || !coherent(o, t)) return false;
  }
  return true;
}

inline Set border(const Order& o, const Set& x) {
  const int n = rank(o, x);
  return filter(x, [&](int h) { return !surface_of_rank(o, theta(o, x, h), n - 1); });
}

inline Set unite(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Can `x` be split into separated parts that are all k-surfaces? Parts are
/// unions of components; every grouping of the components is tried.
inline bool separated_union_of_surfaces(const Order& o, const Set& x, int k) {
  const std::vector<Set> comps = components(o, x);
  if (comps.size() > 10) throw std::runtime_error("oracle: too many border components");
  std::vector<Set> groups;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == comps.size()) {
      for (const Set& g : groups)
        if (!surface_of_rank(o, g, k)) return false;
      return true;
    }
    for (Set& g : groups) {
      Set saved = g;
      g = unite(g, comps[i]);
      if (assign(i + 1)) return true;
      g = saved;
    }
    groups.push_back(comps[i]);
    if (assign(i + 1)) return true;
    groups.pop_back();
    return false;
  };
  return !x.empty() && assign(0);
}

inline bool pcm_impl(const Order& o, const Set& x, bool smooth) {
  const int n = rank(o, x);
  if (n == -1) return true;
  if (n == 0) return x.size() == 1;
  if (!connected(o, x)) return false;
  Set delta;
  for (int h : x) {
    Set t = theta(o, x, h);
    if (surface_of_rank(o, t, n - 1)) continue;
    if (rank(o, t) != n - 1 || !pcm_impl(o, t, smooth)) return false;
    delta.push_back(h);
  }
  if (delta.empty()) return false;
  return !smooth || separated_union_of_surfaces(o, delta, n - 1);
}

inline bool pcm(const Order& o, const Set& x) { return pcm_impl(o, x, false); }
inline bool smooth_pcm(const Order& o, const Set& x) { return pcm_impl(o, x, true); }

/// Shortest theta-path from a to b through `allowed`, or nullopt.
inline std::optional<std::vector<int>> find_path(const Order& o, const Set& allowed, int a, int b) {
  std::map<int, int> parent{{a, a}};
  std::deque<int> queue{a};
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    if (h == b) break;
    for (int y : allowed)
      if (!parent.count(y) && o.comparable(h, y)) {
        parent[y] = h;
        queue.push_back(y);
      }
  }
  if (!parent.count(b)) return std::nullopt;
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Codimension-1 connectivity of a pure poset of rank n >= 1 by path repair:
/// start from any theta-path between two top faces, then repeatedly replace
/// the lowest-rank face p on it by a detour through the faces above p of
/// higher rank. When no local detour exists the whole path is recomputed
/// inside the faces of rank above p's, so the answer is exact on any input.
inline bool codim1_connected_by_repair(const Order& o, const Set& x) {
  const auto r = ranks(o, x);
  const int n = rank(o, x);
  const Set top = filter(x, [&](int h) { return r.at(h) == n; });
  if (top.size() <= 1) return true;
  if (n == 0) return false;
  for (std::size_t t = 1; t < top.size(); ++t) {
    const int a = top[0], b = top[t];
    auto path = find_path(o, x, a, b);
    if (!path) return false;
    while (true) {
      auto low = std::min_element(path->begin(), path->end(),
                                  [&](int u, int v) { return r.at(u) < r.at(v); });
      const int lr = r.at(*low);
      if (lr >= n - 1) break;
      const std::size_t i = static_cast<std::size_t>(low - path->begin());
      const int p = *low;
      const int prev = (*path)[i - 1], next = (*path)[i + 1];
      const Set detour_space = filter(beta(o, x, p), [&](int y) { return r.at(y) >= lr + 1; });
      if (auto detour = find_path(o, detour_space, prev, next)) {
        std::vector<int> spliced(path->begin(), path->begin() + static_cast<std::ptrdiff_t>(i - 1));
        spliced.insert(spliced.end(), detour->begin(), detour->end());
        spliced.insert(spliced.end(), path->begin() + static_cast<std::ptrdiff_t>(i + 2), path->end());
        *path = std::move(spliced);
      } else {
        path = find_path(o, filter(x, [&](int y) { return r.at(y) >= lr + 1; }), a, b);
        if (!path) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
