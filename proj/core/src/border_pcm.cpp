#include "dtopo/border_pcm.hpp"

#include "dtopo/error.hpp"

namespace dtopo {

PcmVerdict Recognizer::pcm(const FaceSet& members) {
  return {pcm_flag(members, false), rank(members)};
}

PcmVerdict Recognizer::smooth_pcm(const FaceSet& members) {
  return {pcm_flag(members, true), rank(members)};
}

bool Recognizer::pcm_flag(const FaceSet& m, bool smooth) {
  auto field = smooth ? &Entry::smooth : &Entry::pcm;
  auto cached = lookup(m, field);
  if (cached) return *cached;
  bool value = compute_pcm(m, smooth);
  store(m, field, value);
  return value;
}

bool Recognizer::pcm_of_rank(const FaceSet& m, int k, bool smooth) {
  return rank(m) == k && pcm_flag(m, smooth);
}

bool Recognizer::compute_pcm(const FaceSet& m, bool smooth) {
  const int n = rank(m);
  if (n == -1) return true;
  if (n == 0) return m.size() == 1;
  if (!connected(m)) return false;

  FaceSet border_faces(m.universe());
  for (FaceId h : m) {
    FaceSet nb = neighborhood(h, m);
    if (is_surface_of_rank(nb, n - 1)) continue;
    if (!pcm_of_rank(nb, n - 1, smooth)) return false;
    border_faces.insert(h);
  }
  if (border_faces.empty()) return false;
  if (!smooth) return true;

  // A 0-surface is itself two separated points, so at this rank a separated
  // union of 0-surfaces is any even number of pairwise incomparable faces.
  if (n == 1) return rank(border_faces) == 0 && border_faces.size() % 2 == 0;

  // Distinct components of a suborder are never theta-adjacent inside it,
  // so "separated union of (n-1)-surfaces" reduces to a per-component test.
  for (const FaceSet& comp : connected_components(SuborderView(*poset_, border_faces)))
    if (!is_surface_of_rank(comp, n - 1)) return false;
  return true;
}

BorderDecomposition Recognizer::border(const FaceSet& members) {
  BorderDecomposition out;
  out.rank = rank(members);
  if (out.rank < 0) throw DomainError("border is undefined for the empty order");
  out.border = FaceSet(members.universe());
  out.interior = FaceSet(members.universe());
  for (FaceId h : members) {
    if (is_surface_of_rank(neighborhood(h, members), out.rank - 1))
      out.interior.insert(h);
    else
      out.border.insert(h);
  }
  for (FaceSet& comp : connected_components(SuborderView(*poset_, out.border))) {
    SurfaceVerdict v = surface(comp);
    out.components.push_back({std::move(comp), std::move(v)});
  }
  return out;
}

bool Recognizer::condition_c(const FaceSet& members) {
  const int n = rank(members);
  if (n < 2) throw DomainError("condition (C) needs rank >= 2, got " + std::to_string(n));
  const bool whole = members == poset_->all();
  const bool simplicial =
      whole ? is_simplicial(*poset_) : is_simplicial(SuborderView(*poset_, members).materialize());
  if (!simplicial) throw DomainError("condition (C) needs a simplicial-complex face poset");
  if (!pcm(members)) throw DomainError("condition (C) needs an n-PCM");

  const FaceSet delta = border(members).border;
  for (FaceId h : delta)
    if (!is_surface_of_rank(neighborhood(h, delta), n - 2)) return false;
  return true;
}

// --- free functions ---------------------------------------------------------

BorderDecomposition border(const SuborderView& p, RecognizerOptions options) {
  Recognizer r(p.ambient(), options);
  return r.border(p.members());
}

PcmVerdict is_pcm(const SuborderView& p, RecognizerOptions options) {
  Recognizer r(p.ambient(), options);
  return r.pcm(p.members());
}

PcmVerdict is_smooth_pcm(const SuborderView& p, RecognizerOptions options) {
  Recognizer r(p.ambient(), options);
  return r.smooth_pcm(p.members());
}

bool check_condition_c(const SuborderView& p, RecognizerOptions options) {
  Recognizer r(p.ambient(), options);
  return r.condition_c(p.members());
}

}  // namespace dtopo
