#include "dtopo/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dtopo/error.hpp"

namespace dtopo {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::vector<Simplex> ridges_of(const Simplex& s) {
  std::vector<Simplex> out;
  auto v = s.vertices();
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::vector<int> r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != skip) r.push_back(v[i]);
    out.emplace_back(std::move(r));
  }
  return out;
}

// {0, 1, ..., count-1}
Simplex first_vertices(int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = i;
  return Simplex(std::move(v));
}

std::vector<Simplex> cycle(int first, int m) {
  std::vector<Simplex> out;
  for (int i = 0; i < m; ++i) out.push_back({first + i, first + (i + 1) % m});
  return out;
}

// Uniform integer in [0, n). Modulo keeps the output identical across
// standard libraries, unlike std::uniform_int_distribution.
int draw(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

Simplex random_simplex(std::mt19937_64& rng, int size, int v) {
  std::vector<int> pool(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < size; ++i)
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(i + draw(rng, v - i))]);
  return Simplex(std::vector<int>(pool.begin(), pool.begin() + size));
}

std::set<Simplex> uniform_facets(std::mt19937_64& rng, int d, int v, int f) {
  std::set<Simplex> facets;
  for (int i = 0; i < f; ++i) facets.insert(random_simplex(rng, d + 1, v));
  return facets;
}

// Grows a strongly connected complex: each new facet is a cone from a fresh
// or existing vertex over a ridge, mostly one that currently has a single
// cofacet.
std::set<Simplex> glued_facets(std::mt19937_64& rng, int d, int v, int f) {
  std::set<Simplex> facets{random_simplex(rng, d + 1, v)};
  for (int attempt = 0; attempt < 8 * f && static_cast<int>(facets.size()) < f; ++attempt) {
    std::map<Simplex, int> cofaces;
    for (const Simplex& s : facets)
      for (Simplex& r : ridges_of(s)) ++cofaces[std::move(r)];
    std::vector<Simplex> free, all;
    for (auto& [r, c] : cofaces) {
      all.push_back(r);
      if (c == 1) free.push_back(r);
    }
    const bool use_free = !free.empty() && draw(rng, 8) != 0;
    const auto& pick_from = use_free ? free : all;
    const Simplex& ridge = pick_from[static_cast<std::size_t>(draw(rng, static_cast<int>(pick_from.size())))];
    const int apex = draw(rng, v);
    if (ridge.contains(apex)) continue;
    facets.insert(ridge.united(Simplex{apex}));
  }
  return facets;
}

// Boundary of the (d+1)-simplex, stellarly subdivided at random facets, then
// with up to three facets removed.
std::set<Simplex> subdivided_sphere(std::mt19937_64& rng, int d, int v, int f) {
  std::set<Simplex> facets;
  for (Simplex& r : ridges_of(first_vertices(d + 2))) facets.insert(std::move(r));
  int next = d + 2;
  while (next < v && static_cast<int>(facets.size()) < f) {
    std::vector<Simplex> list(facets.begin(), facets.end());
    Simplex target = list[static_cast<std::size_t>(draw(rng, static_cast<int>(list.size())))];
    facets.erase(target);
    for (const Simplex& r : ridges_of(target)) facets.insert(r.united(Simplex{next}));
    ++next;
  }
  const int removals = draw(rng, 4);
  for (int i = 0; i < removals && facets.size() > 1; ++i) {
    auto it = facets.begin();
    std::advance(it, draw(rng, static_cast<int>(facets.size())));
    facets.erase(it);
  }
  return facets;
}

struct Bounds {
  std::size_t count;
  const char* usage;
};

const std::map<std::string, Bounds>& catalogue() {
  static const std::map<std::string, Bounds> table{
      {"simplex", {1, "simplex n              full n-simplex, 0 <= n <= 10"}},
      {"sphere", {1, "sphere n               boundary of the (n+1)-simplex, 0 <= n <= 9"}},
      {"disk", {1, "disk m                 cone over an m-cycle, 3 <= m <= 64"}},
      {"annulus", {1, "annulus m              two m-cycles joined by 2m triangles, 4 <= m <= 64"}},
      {"pinched-sphere", {0, "pinched-sphere         icosahedron with two antipodal vertices identified"}},
      {"pinched-box", {1, "pinched-box m          cone over annulus m, 4 <= m <= 64"}},
      {"bowtie", {0, "bowtie                 two triangles sharing one vertex"}},
      {"khalimsky", {2, "khalimsky w h          w x h block of the 2D Khalimsky grid, 1 <= w, h <= 32"}},
      {"random-pure",
       {4, "random-pure d v f seed pure d-complex, 0 <= d <= 4, d+1 <= v <= 16, 1 <= f <= 64, seed >= 0"}},
  };
  return table;
}

int as_int(std::int64_t x, std::int64_t lo, std::int64_t hi, const std::string& what) {
  require(x >= lo && x <= hi, what + " must lie in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "], got " + std::to_string(x));
  return static_cast<int>(x);
}

}  // namespace

SimplicialComplex full_simplex(int n) {
  require(n >= 0 && n <= 10, "simplex: n must lie in [0, 10]");
  return SimplicialComplex::from_facets({first_vertices(n + 1)});
}

SimplicialComplex sphere(int n) {
  require(n >= 0 && n <= 9, "sphere: n must lie in [0, 9]");
  return SimplicialComplex::from_facets(ridges_of(first_vertices(n + 2)));
}

SimplicialComplex disk(int m) {
  require(m >= 3 && m <= 64, "disk: m must lie in [3, 64]");
  std::vector<Simplex> facets;
  for (const Simplex& e : cycle(0, m)) facets.push_back(e.united(Simplex{m}));
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex annulus(int m) {
  require(m >= 4 && m <= 64, "annulus: m must lie in [4, 64]");
  std::vector<Simplex> facets;
  for (int i = 0; i < m; ++i) {
    const int a = i, a1 = (i + 1) % m, b = m + i, b1 = m + (i + 1) % m;
    facets.push_back({a, a1, b});
    facets.push_back({a1, b, b1});
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex pinched_sphere() {
  // Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, bottom apex
  // identified with 0.
  constexpr int apex = 0;
  auto up = [](int k) { return 1 + (k % 5); };
  auto low = [](int k) { return 6 + (k % 5); };
  std::vector<Simplex> facets;
  for (int k = 0; k < 5; ++k) {
    facets.push_back({apex, up(k), up(k + 1)});
    facets.push_back({up(k), up(k + 1), low(k)});
    facets.push_back({up(k + 1), low(k), low(k + 1)});
    facets.push_back({apex, low(k), low(k + 1)});
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex pinched_box(int m) {
  require(m >= 4 && m <= 64, "pinched-box: m must lie in [4, 64]");
  return simplicial_join(annulus(m), SimplicialComplex::from_facets({Simplex{2 * m}}));
}

SimplicialComplex bowtie() {
  return SimplicialComplex::from_facets({Simplex{0, 1, 2}, Simplex{0, 3, 4}});
}

Poset khalimsky_block(int width, int height) {
  require(width >= 1 && width <= 32 && height >= 1 && height <= 32,
          "khalimsky: w and h must lie in [1, 32]");
  const int nx = 2 * width + 1;
  const int ny = 2 * height + 1;
  auto id = [&](int x, int y) { return static_cast<FaceId>(y * nx + x); };
  std::vector<std::vector<FaceId>> below(static_cast<std::size_t>(nx * ny));
  std::vector<std::string> labels;
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) {
      auto& b = below[id(x, y)];
      if (x % 2) {
        b.push_back(id(x - 1, y));
        b.push_back(id(x + 1, y));
      }
      if (y % 2) {
        b.push_back(id(x, y - 1));
        b.push_back(id(x, y + 1));
      }
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  return Poset(std::move(below), std::move(labels));
}

SimplicialComplex random_pure(int d, int v, int f, std::uint64_t seed) {
  require(d >= 0 && d <= 4, "random-pure: d must lie in [0, 4]");
  require(v >= d + 1 && v <= 16, "random-pure: v must lie in [d+1, 16]");
  require(f >= 1 && f <= 64, "random-pure: f must lie in [1, 64]");
  std::mt19937_64 rng(seed);
  const int mode = d == 0 ? 0 : draw(rng, 3);
  std::set<Simplex> facets;
  switch (mode) {
    case 0: facets = uniform_facets(rng, d, v, f); break;
    case 1: facets = glued_facets(rng, d, v, f); break;
    default: facets = subdivided_sphere(rng, d, v, f); break;
  }
  return SimplicialComplex::from_facets(std::vector<Simplex>(facets.begin(), facets.end()));
}

Instance generate(const GeneratorSpec& spec) {
  auto it = catalogue().find(spec.name);
  require(it != catalogue().end(), "unknown generator '" + spec.name + "'");
  const auto& p = spec.params;
  require(p.size() == it->second.count, "generator '" + spec.name + "' takes " +
                                            std::to_string(it->second.count) + " parameter(s): " +
                                            it->second.usage);
  const std::string& n = spec.name;
  if (n == "simplex") return full_simplex(as_int(p[0], 0, 10, "simplex n"));
  if (n == "sphere") return sphere(as_int(p[0], 0, 9, "sphere n"));
  if (n == "disk") return disk(as_int(p[0], 3, 64, "disk m"));
  if (n == "annulus") return annulus(as_int(p[0], 4, 64, "annulus m"));
  if (n == "pinched-sphere") return pinched_sphere();
  if (n == "pinched-box") return pinched_box(as_int(p[0], 4, 64, "pinched-box m"));
  if (n == "bowtie") return bowtie();
  if (n == "khalimsky")
    return khalimsky_block(as_int(p[0], 1, 32, "khalimsky w"), as_int(p[1], 1, 32, "khalimsky h"));
  const int d = as_int(p[0], 0, 4, "random-pure d");
  const int v = as_int(p[1], d + 1, 16, "random-pure v");
  const int f = as_int(p[2], 1, 64, "random-pure f");
  require(p[3] >= 0, "random-pure seed must be >= 0");
  return random_pure(d, v, f, static_cast<std::uint64_t>(p[3]));
}

std::string generator_usage() {
  std::ostringstream out;
  for (const auto& [name, b] : catalogue()) out << "  " << b.usage << '\n';
  return out.str();
}

std::vector<NamedInstance> generator_corpus() {
  std::vector<NamedInstance> out;
  for (int n = 0; n <= 3; ++n) out.push_back({"simplex " + std::to_string(n), full_simplex(n)});
  for (int n = 0; n <= 4; ++n) out.push_back({"sphere " + std::to_string(n), sphere(n)});
  for (int m : {3, 6}) out.push_back({"disk " + std::to_string(m), disk(m)});
  for (int m : {4, 6}) out.push_back({"annulus " + std::to_string(m), annulus(m)});
  out.push_back({"pinched-sphere", pinched_sphere()});
  for (int m : {4, 6}) out.push_back({"pinched-box " + std::to_string(m), pinched_box(m)});
  out.push_back({"bowtie", bowtie()});
  return out;
}

std::vector<NamedInstance> random_corpus(std::size_t count, std::uint64_t first_seed) {
  std::vector<NamedInstance> out;
  out.reserve(count);
  for (std::uint64_t s = first_seed; s < first_seed + count; ++s) {
    const int d = 1 + static_cast<int>(s % 3);
    const int v = 5 + static_cast<int>((s / 3) % 8);
    const int f = 3 + static_cast<int>((s / 24) % 10);
    out.push_back({"random-pure " + std::to_string(d) + " " + std::to_string(v) + " " +
                       std::to_string(f) + " " + std::to_string(s),
                   random_pure(d, v, f, s)});
  }
  return out;
}

}  // namespace dtopo
