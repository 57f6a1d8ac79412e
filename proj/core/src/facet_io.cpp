#include <istream>
#include <ostream>
#include <sstream>

#include "dtopo/error.hpp"
#include "dtopo/simplicial.hpp"

namespace dtopo {

SimplicialComplex read_facets(std::istream& in) {
  std::vector<Simplex> facets;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
    std::istringstream ss(raw);
    std::vector<int> vertices;
    for (std::string tok; ss >> tok;) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty())
        throw ParseError(lineno, "expected an integer vertex, got '" + tok + "'");
      vertices.push_back(v);
    }
    if (vertices.empty()) continue;
    Simplex f(vertices);
    if (f.size() != vertices.size()) throw ParseError(lineno, "repeated vertex in facet");
    if (f.size() > 20) throw ParseError(lineno, "facet has more than 20 vertices");
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

void write_facets(std::ostream& out, const SimplicialComplex& k) {
  for (const Simplex& f : k.facets()) {
    bool first = true;
    for (int v : f.vertices()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace dtopo
