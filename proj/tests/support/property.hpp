#pragma once

// Minimal seeded property runner with greedy shrinking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dtopo/face_set.hpp"
#include "dtopo/poset.hpp"
#include "dtopo/simplicial.hpp"

namespace prop {

using Rng = std::mt19937_64;
using Failure = std::optional<std::string>;

template <class T>
struct Counterexample {
  T value;
  std::string message;
  std::uint64_t seed;
  int shrink_steps;
};

/// Runs `check` on `cases` generated values. On the first failure, repeatedly
/// replaces the value by any failing candidate from `shrink` until none fail.
template <class T>
std::optional<Counterexample<T>> for_all(int cases, std::uint64_t seed,
                                         const std::function<T(Rng&)>& gen,
                                         const std::function<Failure(const T&)>& check,
                                         const std::function<std::vector<T>(const T&)>& shrink = {}) {
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(i);
    Rng rng(case_seed);
    T value = gen(rng);
    Failure f = check(value);
    if (!f) continue;
    int steps = 0;
    for (bool progressed = static_cast<bool>(shrink); progressed;) {
      progressed = false;
      for (T& candidate : shrink(value)) {
        if (Failure g = check(candidate)) {
          value = std::move(candidate);
          f = std::move(g);
          ++steps;
          progressed = true;
          break;
        }
      }
    }
    return Counterexample<T>{std::move(value), *f, case_seed, steps};
  }
  return std::nullopt;
}

inline int uniform(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random DAG on n elements: i < j with probability `density` for i < j in a
/// random relabelling.
inline dtopo::Poset random_poset(Rng& rng, int n, double density) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<dtopo::FaceId>> below(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng))
        below[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])].push_back(
            static_cast<dtopo::FaceId>(perm[static_cast<std::size_t>(i)]));
  return dtopo::Poset(std::move(below));
}

/// Each face kept with probability p.
inline dtopo::FaceSet random_subset(Rng& rng, const dtopo::FaceSet& of, double p) {
  std::bernoulli_distribution keep(p);
  dtopo::FaceSet out(of.universe());
  for (dtopo::FaceId h : of)
    if (keep(rng)) out.insert(h);
  return out;
}

/// Candidates with one member removed.
inline std::vector<dtopo::FaceSet> drop_one(const dtopo::FaceSet& s) {
  std::vector<dtopo::FaceSet> out;
  for (dtopo::FaceId h : s) {
    dtopo::FaceSet t = s;
    t.erase(h);
    out.push_back(std::move(t));
  }
  return out;
}

/// Pure complex with `facets` random d-simplices over v vertices.
inline dtopo::SimplicialComplex random_complex(Rng& rng, int d, int v, int facets) {
  std::vector<dtopo::Simplex> out;
  for (int i = 0; i < facets; ++i) {
    std::vector<int> pool(static_cast<std::size_t>(v));
    for (int x = 0; x < v; ++x) pool[static_cast<std::size_t>(x)] = x;
    std::shuffle(pool.begin(), pool.end(), rng);
    out.emplace_back(std::vector<int>(pool.begin(), pool.begin() + d + 1));
  }
  return dtopo::SimplicialComplex::from_facets(std::move(out));
}

/// Candidates with one facet removed (at least one facet is kept).
inline std::vector<dtopo::SimplicialComplex> drop_facet(const dtopo::SimplicialComplex& k) {
  std::vector<dtopo::SimplicialComplex> out;
  if (k.facets().size() <= 1) return out;
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    std::vector<dtopo::Simplex> rest;
    for (std::size_t j = 0; j < k.facets().size(); ++j)
      if (j != i) rest.push_back(k.facets()[j]);
    out.push_back(dtopo::SimplicialComplex::from_facets(std::move(rest)));
  }
  return out;
}

template <class T>
std::string describe(const Counterexample<T>& c) {
  return c.message + " (seed " + std::to_string(c.seed) + ", shrunk " +
         std::to_string(c.shrink_steps) + " steps)";
}

}  // namespace prop
