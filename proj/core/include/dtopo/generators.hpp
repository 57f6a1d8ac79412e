#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dtopo/poset.hpp"
#include "dtopo/simplicial.hpp"

namespace dtopo {

struct GeneratorSpec {
  std::string name;
  std::vector<std::int64_t> params;
};

using Instance = std::variant<SimplicialComplex, Poset>;

struct NamedInstance {
  std::string name;
  SimplicialComplex complex;
};

/// Dispatch by name:
///
///   simplex n              full n-simplex
///   sphere n               boundary of the (n+1)-simplex
///   disk m                 cone over an m-cycle (m >= 3)
///   annulus m              two m-cycles joined by 2m triangles (m >= 4)
///   pinched-sphere         icosahedron with two antipodal vertices identified
///   pinched-box m          cone over `annulus m` (m >= 4)
///   bowtie                 two triangles sharing one vertex
///   khalimsky w h          w x h block of the 2D Khalimsky grid (a Poset)
///   random-pure d v f seed seeded pure d-complex on at most v vertices
///
/// Throws DomainError on unknown names, wrong parameter counts or
/// parameters outside the documented bounds.
Instance generate(const GeneratorSpec& spec);

/// One line per generator with its parameters and bounds.
std::string generator_usage();

SimplicialComplex full_simplex(int n);
SimplicialComplex sphere(int n);
SimplicialComplex disk(int m);
SimplicialComplex annulus(int m);
SimplicialComplex pinched_sphere();
SimplicialComplex pinched_box(int m);
SimplicialComplex bowtie();
Poset khalimsky_block(int width, int height);

/// Pure d-dimensional complex over vertices 0..v-1 with about f facets. The
/// seed picks one of three constructions: independent uniform facets,
/// growth by gluing new facets onto (mostly free) ridges, or a stellar
/// subdivision of the (d+1)-simplex boundary with a few facets removed.
/// Bit-exact for a given argument tuple on every platform.
SimplicialComplex random_pure(int d, int v, int f, std::uint64_t seed);

/// Every deterministic simplicial generator at its reference parameters.
std::vector<NamedInstance> generator_corpus();

/// `count` random-pure instances with dimension 1..3 and at most 12
/// vertices, seeds first_seed, first_seed + 1, ...
std::vector<NamedInstance> random_corpus(std::size_t count, std::uint64_t first_seed = 1);

}  // namespace dtopo
