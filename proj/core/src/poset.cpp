#include "dtopo/poset.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>

#include "dtopo/error.hpp"

namespace dtopo {
namespace {

std::uint64_t next_identity() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Poset::Poset() : identity_(next_identity()) {}

Poset::Poset(std::vector<std::vector<FaceId>> below, std::vector<std::string> labels)
    : labels_(std::move(labels)), identity_(next_identity()) {
  const std::size_t n = below.size();
  if (!labels_.empty() && labels_.size() != n)
    throw DomainError("label count " + std::to_string(labels_.size()) +
                      " does not match face count " + std::to_string(n));

  for (std::size_t h = 0; h < n; ++h) {
    auto& b = below[h];
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (FaceId c : b) {
      if (c >= n)
        throw DomainError("face " + std::to_string(h) + " refers to unknown face " +
                          std::to_string(c));
      if (c == h) throw DomainError("face " + std::to_string(h) + " is below itself");
    }
  }

  // Kahn's algorithm: a face is ready once everything it lists as below is.
  std::vector<std::vector<FaceId>> above(n);
  std::vector<std::size_t> pending(n);
  for (std::size_t h = 0; h < n; ++h) {
    pending[h] = below[h].size();
    for (FaceId c : below[h]) above[c].push_back(static_cast<FaceId>(h));
  }
  std::vector<FaceId> topo;
  topo.reserve(n);
  for (std::size_t h = 0; h < n; ++h)
    if (pending[h] == 0) topo.push_back(static_cast<FaceId>(h));
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (FaceId u : above[topo[i]])
      if (--pending[u] == 0) topo.push_back(u);
  if (topo.size() != n) throw DomainError("order relation contains a cycle");

  closure_.assign(n, FaceSet(n));
  for (FaceId h : topo) {
    for (FaceId c : below[h]) {
      closure_[h] |= closure_[c];
      closure_[h].insert(c);
    }
  }

  covers_.assign(n, {});
  covered_by_.assign(n, {});
  opening_.assign(n, FaceSet(n));
  for (std::size_t h = 0; h < n; ++h) {
    for (FaceId c : below[h]) {
      bool implied = std::any_of(below[h].begin(), below[h].end(), [&](FaceId d) {
        return d != c && closure_[d].contains(c);
      });
      if (!implied) covers_[h].push_back(c);
    }
    for (FaceId c : closure_[h]) opening_[c].insert(static_cast<FaceId>(h));
  }
  for (std::size_t h = 0; h < n; ++h)
    for (FaceId c : covers_[h]) covered_by_[c].push_back(static_cast<FaceId>(h));

  ranks_.assign(n, 0);
  for (FaceId h : topo) {
    int r = 0;
    for (FaceId c : covers_[h]) r = std::max(r, ranks_[c] + 1);
    ranks_[h] = r;
    rank_ = std::max(rank_, r);
  }

  order_.resize(n);
  for (std::size_t h = 0; h < n; ++h) order_[h] = static_cast<FaceId>(h);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](FaceId a, FaceId b) { return ranks_[a] < ranks_[b]; });

  layers_.assign(static_cast<std::size_t>(rank_ + 1), FaceSet(n));
  for (std::size_t h = 0; h < n; ++h)
    layers_[static_cast<std::size_t>(ranks_[h])].insert(static_cast<FaceId>(h));
}

void Poset::check(FaceId h) const {
  if (h >= size())
    throw DomainError("unknown face " + std::to_string(h) + " (poset has " +
                      std::to_string(size()) + " faces)");
}

std::span<const FaceId> Poset::covers(FaceId h) const {
  check(h);
  return covers_[h];
}

std::span<const FaceId> Poset::covered_by(FaceId h) const {
  check(h);
  return covered_by_[h];
}

const FaceSet& Poset::strict_closure(FaceId h) const {
  check(h);
  return closure_[h];
}

const FaceSet& Poset::strict_opening(FaceId h) const {
  check(h);
  return opening_[h];
}

FaceSet Poset::strict_neighborhood(FaceId h) const {
  check(h);
  return closure_[h] | opening_[h];
}

bool Poset::less(FaceId a, FaceId b) const {
  check(a);
  check(b);
  return closure_[b].contains(a);
}

int Poset::rank(FaceId h) const {
  check(h);
  return ranks_[h];
}

FaceSet Poset::layer(int r) const {
  if (r < 0 || r > rank_) return none();
  return layers_[static_cast<std::size_t>(r)];
}

std::string_view Poset::label(FaceId h) const {
  check(h);
  if (labels_.empty()) return {};
  return labels_[h];
}

SuborderView Poset::view() const { return SuborderView(*this); }

SuborderView Poset::view(FaceSet members) const { return SuborderView(*this, std::move(members)); }

// --- SuborderView ---------------------------------------------------------

SuborderView::SuborderView(const Poset& ambient, FaceSet members)
    : ambient_(&ambient), members_(std::move(members)) {
  if (members_.universe() != ambient.size())
    throw DomainError("suborder member set does not match the ambient poset");
}

FaceSet SuborderView::strict_closure(FaceId h) const {
  return ambient_->strict_closure(h) & members_;
}

FaceSet SuborderView::strict_opening(FaceId h) const {
  return ambient_->strict_opening(h) & members_;
}

FaceSet SuborderView::strict_neighborhood(FaceId h) const {
  return ambient_->strict_neighborhood(h) & members_;
}

SuborderView SuborderView::restrict(FaceSet subset) const {
  if (!subset.is_subset_of(members_))
    throw DomainError("restriction is not a subset of the suborder");
  return SuborderView(*ambient_, std::move(subset));
}

Poset SuborderView::materialize() const {
  const auto ids = members_.to_vector();
  std::vector<FaceId> remap(ambient_->size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<FaceId>(i);

  std::vector<std::vector<FaceId>> below(ids.size());
  std::vector<std::string> labels;
  if (ambient_->has_labels()) labels.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (FaceId c : strict_closure(ids[i])) below[i].push_back(remap[c]);
    if (ambient_->has_labels()) labels.emplace_back(ambient_->label(ids[i]));
  }
  return Poset(std::move(below), std::move(labels));
}

// --- operators ------------------------------------------------------------

FaceSet local_set(const SuborderView& p, FaceId h, LocalOperator op, bool strict) {
  if (!p.contains(h))
    throw DomainError("face " + std::to_string(h) + " is not in the poset");
  FaceSet out(p.ambient().size());
  switch (op) {
    case LocalOperator::alpha: out = p.strict_closure(h); break;
    case LocalOperator::beta: out = p.strict_opening(h); break;
    case LocalOperator::theta: out = p.strict_neighborhood(h); break;
  }
  if (!strict) out.insert(h);
  return out;
}

FaceSet local_set(const SuborderView& p, const FaceSet& faces, LocalOperator op,
                  bool strict) {
  FaceSet out(p.ambient().size());
  for (FaceId h : faces) out |= local_set(p, h, op, strict);
  return out;
}

std::vector<int> ranks(const SuborderView& p) {
  const Poset& a = p.ambient();
  std::vector<int> r(a.size(), -1);
  // Ambient rank strictly increases along the order, so processing faces by
  // ambient rank visits everything below a face first.
  for (FaceId h : a.linear_extension()) {
    if (!p.contains(h)) continue;
    int best = 0;
    for (FaceId c : a.strict_closure(h))
      if (r[c] >= 0) best = std::max(best, r[c] + 1);
    r[h] = best;
  }
  return r;
}

int rank(const SuborderView& p, FaceId h) {
  if (!p.contains(h))
    throw DomainError("face " + std::to_string(h) + " is not in the poset");
  return ranks(p)[h];
}

int rank(const SuborderView& p) {
  int best = -1;
  for (int r : ranks(p)) best = std::max(best, r);
  return best;
}

std::vector<FaceSet> connected_components(const SuborderView& p) {
  std::vector<FaceSet> out;
  FaceSet remaining = p.members();
  while (auto seed = remaining.first()) {
    FaceSet comp(remaining.universe());
    comp.insert(*seed);
    FaceSet frontier = comp;
    while (!frontier.empty()) {
      FaceSet next(remaining.universe());
      for (FaceId f : frontier) next |= p.ambient().strict_neighborhood(f);
      next &= remaining;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SuborderView& p) { return connected_components(p).size() <= 1; }

Poset join(const Poset& lower, const Poset& upper) {
  const auto offset = static_cast<FaceId>(lower.size());
  std::vector<std::vector<FaceId>> below(lower.size() + upper.size());
  for (FaceId h = 0; h < lower.size(); ++h) {
    auto c = lower.covers(h);
    below[h].assign(c.begin(), c.end());
  }
  for (FaceId h = 0; h < upper.size(); ++h) {
    auto& b = below[offset + h];
    for (FaceId c : upper.covers(h)) b.push_back(offset + c);
    // the whole of lower X upper; the reduction keeps only maximal-to-minimal pairs
    for (FaceId l = 0; l < lower.size(); ++l) b.push_back(l);
  }
  std::vector<std::string> labels;
  if (lower.has_labels() || upper.has_labels()) {
    for (FaceId h = 0; h < lower.size(); ++h) labels.emplace_back(lower.label(h));
    for (FaceId h = 0; h < upper.size(); ++h) labels.emplace_back(upper.label(h));
  }
  return Poset(std::move(below), std::move(labels));
}

bool is_separated_union(const SuborderView& p, const FaceSet& a, const FaceSet& b) {
  if (a.universe() != p.ambient().size() || b.universe() != p.ambient().size())
    throw DomainError("separated union: face sets do not match the poset");
  if (a.intersects(b)) throw DomainError("separated union: parts overlap");
  if ((a | b) != p.members())
    throw DomainError("separated union: parts do not cover the poset");
  return !local_set(p, a, LocalOperator::theta).intersects(b) &&
         !local_set(p, b, LocalOperator::theta).intersects(a);
}

namespace {

struct IsoState {
  const Poset& p;
  const Poset& q;
  std::vector<FaceSet> p_covers, q_covers;
  std::vector<std::vector<FaceId>> candidates;
  std::vector<FaceId> order;
  std::vector<std::int64_t> image;  // p -> q, -1 unassigned
  std::vector<bool> used;

  bool consistent(FaceId x, FaceId y) const {
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] < 0) continue;
      const auto xp = static_cast<FaceId>(i);
      const auto yp = static_cast<FaceId>(image[i]);
      if (p_covers[x].contains(xp) != q_covers[y].contains(yp)) return false;
      if (p_covers[xp].contains(x) != q_covers[yp].contains(y)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    FaceId x = order[depth];
    for (FaceId y : candidates[x]) {
      if (used[y] || !consistent(x, y)) continue;
      image[x] = y;
      used[y] = true;
      if (search(depth + 1)) return true;
      image[x] = -1;
      used[y] = false;
    }
    return false;
  }
};

// rank, cover counts, and the sorted multiset of neighbours' (rank, degree)
std::vector<std::vector<int>> signatures(const Poset& p) {
  std::vector<std::vector<int>> sig(p.size());
  for (FaceId h = 0; h < p.size(); ++h) {
    std::vector<int> s{p.rank(h), static_cast<int>(p.covers(h).size()),
                       static_cast<int>(p.covered_by(h).size()),
                       static_cast<int>(p.strict_closure(h).size()),
                       static_cast<int>(p.strict_opening(h).size())};
    std::vector<int> nb;
    for (FaceId c : p.covers(h))
      nb.push_back(static_cast<int>(p.covered_by(c).size()) * 1000 +
                   static_cast<int>(p.covers(c).size()));
    for (FaceId c : p.covered_by(h))
      nb.push_back(-(static_cast<int>(p.covered_by(c).size()) * 1000 +
                     static_cast<int>(p.covers(c).size())));
    std::sort(nb.begin(), nb.end());
    s.insert(s.end(), nb.begin(), nb.end());
    sig[h] = std::move(s);
  }
  return sig;
}

}  // namespace

bool is_isomorphic(const Poset& p, const Poset& q, std::size_t bound) {
  if (p.size() > bound || q.size() > bound)
    throw DomainError("isomorphism test refused: poset sizes " + std::to_string(p.size()) +
                      " and " + std::to_string(q.size()) + " exceed the bound " +
                      std::to_string(bound));
  if (p.size() != q.size() || p.rank() != q.rank()) return false;

  const auto ps = signatures(p);
  const auto qs = signatures(q);
  {
    auto a = ps, b = qs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  IsoState st{p, q, {}, {}, {}, {}, {}, {}};
  for (FaceId h = 0; h < p.size(); ++h) {
    FaceSet pc(p.size()), qc(q.size());
    for (FaceId c : p.covers(h)) pc.insert(c);
    for (FaceId c : q.covers(h)) qc.insert(c);
    st.p_covers.push_back(std::move(pc));
    st.q_covers.push_back(std::move(qc));
  }
  st.candidates.resize(p.size());
  for (FaceId x = 0; x < p.size(); ++x)
    for (FaceId y = 0; y < q.size(); ++y)
      if (ps[x] == qs[y]) st.candidates[x].push_back(y);
  // most constrained first, then bottom-up so covers are assigned early
  st.order.assign(p.linear_extension().begin(), p.linear_extension().end());
  std::stable_sort(st.order.begin(), st.order.end(), [&](FaceId a, FaceId b) {
    return st.candidates[a].size() < st.candidates[b].size();
  });
  st.image.assign(p.size(), -1);
  st.used.assign(q.size(), false);
  return st.search(0);
}

bool is_simplicial(const Poset& p) {
  const FaceSet vertices = p.layer(0);
  std::set<std::vector<FaceId>> seen;
  for (FaceId h = 0; h < p.size(); ++h) {
    FaceSet ideal = p.strict_closure(h);
    ideal.insert(h);
    auto verts = (ideal & vertices).to_vector();
    const auto k = verts.size();
    if (static_cast<int>(k) != p.rank(h) + 1) return false;
    if (k >= 63 || ideal.size() != (std::size_t{1} << k) - 1) return false;
    if (!seen.insert(std::move(verts)).second) return false;
  }
  return true;
}

}  // namespace dtopo
