#include "dtopo/classifier.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>

#include "dtopo/border_pcm.hpp"
#include "dtopo/error.hpp"

namespace dtopo {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

template <class F>
auto timed(std::vector<Timing>& timings, const char* name, F&& f) {
  Stopwatch sw;
  auto result = f();
  timings.push_back({name, sw.elapsed_ms()});
  return result;
}

std::vector<std::size_t> faces_per_rank(const Poset& p) {
  std::vector<std::size_t> out(static_cast<std::size_t>(p.rank() + 1), 0);
  for (FaceId h = 0; h < p.size(); ++h) ++out[static_cast<std::size_t>(p.rank(h))];
  return out;
}

// Components of a closed complex under theta-adjacency are its vertex-connected
// pieces; returns the facets of each piece.
std::vector<std::vector<Simplex>> vertex_components(const SimplicialComplex& k) {
  auto facets = k.facets();
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::size_t> owner;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (int v : facets[i].vertices()) {
      auto [it, inserted] = owner.emplace(v, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (std::size_t i = 0; i < facets.size(); ++i) groups[find(i)].push_back(facets[i]);
  std::vector<std::vector<Simplex>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
  return out.empty() ? "instance" : out;
}

std::filesystem::path dump_instance(const std::filesystem::path& dir, const std::string& name,
                                    const SimplicialComplex& k, const std::string& why) {
  std::filesystem::create_directories(dir);
  auto path = dir / ("disagreement-" + sanitize(name) + ".facets");
  std::ofstream out(path);
  out << "# fast/recursive disagreement on " << name << "\n# " << why << '\n';
  write_facets(out, k);
  return path;
}

}  // namespace

const char* to_string(EvaluationPath path) {
  switch (path) {
    case EvaluationPath::fast: return "fast";
    case EvaluationPath::recursive: return "recursive";
    case EvaluationPath::both: return "both";
  }
  return "?";
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::empty_order: return "empty";
    case Kind::surface: return "surface";
    case Kind::pcm: return "pcm";
    case Kind::neither: return "neither";
  }
  return "?";
}

Kind Classification::kind() const {
  const bool s = is_surface.value_or(false);
  const bool p = is_pcm.value_or(false);
  if (s && p) return Kind::empty_order;
  if (s) return Kind::surface;
  if (p) return Kind::pcm;
  return Kind::neither;
}

double Classification::total_milliseconds() const {
  double t = 0.0;
  for (const Timing& x : timings) t += x.milliseconds;
  return t;
}

Classification classify_recursive(const Poset& p, RecognizerOptions options) {
  Classification c;
  c.path = EvaluationPath::recursive;
  c.rank = p.rank();
  c.faces_per_rank = faces_per_rank(p);
  Recognizer rec(p, options);
  const FaceSet all = p.all();
  c.is_surface = timed(c.timings, "surface", [&] { return rec.surface(all).is_surface; });
  c.is_pcm = timed(c.timings, "pcm", [&] { return rec.pcm(all).holds; });
  c.is_smooth_pcm =
      timed(c.timings, "smooth_pcm", [&] { return *c.is_pcm && rec.smooth_pcm(all).holds; });
  if (c.rank >= 0) {
    auto b = timed(c.timings, "border", [&] { return rec.border(all); });
    c.border_empty = b.border.empty();
    c.border_face_count = b.border.size();
  }
  c.recursive_evaluations = rec.stats().evaluations;
  return c;
}

Classification classify_recursive(const SimplicialComplex& k, RecognizerOptions options) {
  const Poset p = face_poset(k);
  Classification c = classify_recursive(p, options);
  c.is_pseudomanifold = timed(c.timings, "pseudomanifold", [&] { return is_pseudomanifold(k); });
  c.is_normal_pseudomanifold = timed(c.timings, "normal_pseudomanifold", [&] {
    return *c.is_pseudomanifold && is_normal_pseudomanifold(k);
  });
  return c;
}

Classification classify_fast(const SimplicialComplex& k, RecognizerOptions options) {
  if (k.dimension() < 2) {
    Classification c = classify_recursive(k, options);
    c.fast_fell_back = true;
    return c;
  }

  Classification c;
  c.path = EvaluationPath::fast;
  c.rank = k.dimension();
  c.faces_per_rank = k.f_vector();

  c.is_pseudomanifold = timed(c.timings, "pseudomanifold", [&] { return is_pseudomanifold(k); });
  c.is_normal_pseudomanifold = timed(c.timings, "normal_pseudomanifold", [&] {
    return *c.is_pseudomanifold && is_normal_pseudomanifold(k);
  });

  if (!*c.is_normal_pseudomanifold) {
    // Surfaces and PCMs of rank >= 2 are pure, hence normal pseudomanifolds.
    c.is_surface = false;
    c.is_pcm = false;
    c.is_smooth_pcm = false;
    return c;
  }

  // On a normal pseudomanifold the border is the closure of its ridges with
  // a single cofacet.
  const auto ridges = timed(c.timings, "border", [&] { return boundary_ridges(k); });
  const SimplicialComplex delta = SimplicialComplex::from_facets(ridges);
  c.border_empty = ridges.empty();
  c.border_face_count = delta.size();
  c.is_surface = ridges.empty();
  c.is_pcm = !ridges.empty();
  if (!*c.is_pcm) {
    c.is_smooth_pcm = false;
    return c;
  }

  // (C) holds iff every border component is an (n-1)-surface, i.e. a
  // normal pseudomanifold of rank n-1 without border ridges.
  c.condition_c = timed(c.timings, "condition_c", [&] {
    for (auto& facets : vertex_components(delta)) {
      const auto comp = SimplicialComplex::from_facets(std::move(facets));
      if (comp.dimension() != c.rank - 1 || !is_normal_pseudomanifold(comp) ||
          !boundary_ridges(comp).empty())
        return false;
    }
    return true;
  });
  if (*c.condition_c) {
    c.is_smooth_pcm = true;
  } else {
    // (C) is sufficient, not known to be necessary.
    const Poset p = face_poset(k);
    Recognizer rec(p, options);
    c.is_smooth_pcm =
        timed(c.timings, "smooth_pcm", [&] { return rec.smooth_pcm(p.all()).holds; });
    c.recursive_evaluations = rec.stats().evaluations;
  }
  return c;
}

std::optional<std::string> compare_classifications(const Classification& fast,
                                                   const Classification& recursive) {
  auto field = [](const char* name, const std::optional<bool>& a,
                  const std::optional<bool>& b) -> std::optional<std::string> {
    if (a && b && *a != *b)
      return std::string(name) + ": fast=" + (*a ? "true" : "false") +
             " recursive=" + (*b ? "true" : "false");
    return std::nullopt;
  };
  if (fast.rank != recursive.rank)
    return "rank: fast=" + std::to_string(fast.rank) +
           " recursive=" + std::to_string(recursive.rank);
  if (auto m = field("surface", fast.is_surface, recursive.is_surface)) return m;
  if (auto m = field("pcm", fast.is_pcm, recursive.is_pcm)) return m;
  if (auto m = field("smooth_pcm", fast.is_smooth_pcm, recursive.is_smooth_pcm)) return m;
  if (auto m = field("pseudomanifold", fast.is_pseudomanifold, recursive.is_pseudomanifold))
    return m;
  if (auto m = field("normal_pseudomanifold", fast.is_normal_pseudomanifold,
                     recursive.is_normal_pseudomanifold))
    return m;
  if (auto m = field("border_empty", fast.border_empty, recursive.border_empty)) return m;
  if (fast.border_face_count && recursive.border_face_count &&
      *fast.border_face_count != *recursive.border_face_count)
    return "border_face_count: fast=" + std::to_string(*fast.border_face_count) +
           " recursive=" + std::to_string(*recursive.border_face_count);
  return std::nullopt;
}

Classification classify_both(const SimplicialComplex& k, RecognizerOptions options,
                             const std::filesystem::path& dump_dir) {
  Classification fast = classify_fast(k, options);
  Classification rec = classify_recursive(k, options);
  if (auto m = compare_classifications(fast, rec)) {
    auto path = dump_instance(dump_dir, "classify", k, *m);
    throw DisagreementError("fast and recursive classification disagree (" + *m +
                                "); instance written to " + path.string(),
                            path);
  }
  Classification merged = rec;
  merged.path = EvaluationPath::both;
  merged.condition_c = fast.condition_c;
  merged.fast_fell_back = fast.fast_fell_back;
  for (const Timing& t : fast.timings) merged.timings.push_back({"fast:" + t.check, t.milliseconds});
  for (Timing& t : merged.timings)
    if (t.check.rfind("fast:", 0) != 0) t.check = "recursive:" + t.check;
  return merged;
}

std::size_t CrossCheckReport::count(Kind kind) const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.kind == kind ? 1 : 0;
  return n;
}

CrossCheckReport cross_check(std::span<const NamedInstance> instances,
                             const CrossCheckOptions& options) {
  CrossCheckReport report;
  for (const NamedInstance& inst : instances) {
    Classification fast = options.fast ? options.fast(inst.complex)
                                       : classify_fast(inst.complex, options.recognizer);
    Classification rec = classify_recursive(inst.complex, options.recognizer);

    CrossCheckRow row;
    row.name = inst.name;
    row.faces = inst.complex.size();
    row.rank = rec.rank;
    row.kind = rec.kind();
    row.fast_ms = fast.total_milliseconds();
    row.recursive_ms = rec.total_milliseconds();
    row.fast_fell_back = fast.fast_fell_back;
    if (auto m = compare_classifications(fast, rec)) {
      row.agree = false;
      row.mismatch = *m;
      ++report.disagreements;
      auto path = dump_instance(options.dump_dir, inst.name, inst.complex, *m);
      if (options.stop_on_disagreement)
        throw DisagreementError(
            "disagreement on " + inst.name + " (" + *m + "); instance written to " + path.string(),
            path);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace dtopo
