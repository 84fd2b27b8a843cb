#include "netmoments/motif.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "netmoments/error.hpp"

namespace nm {
namespace {

// Backtracking over vertex maps from `a` into `b`, keeping adjacency between
// all mapped pairs and matching degrees. Calls visit(map) for every full
// isomorphism; visit returns false to stop.
template <typename Visit>
void search_isomorphisms(const Motif& a, const Motif& b, Visit&& visit) {
  const int k = a.num_vertices();
  std::vector<int> map(k, -1);
  std::uint32_t used = 0;
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == k) {
      if (!visit(map)) stop = true;
      return;
    }
    for (int j = 0; j < k && !stop; ++j) {
      if (used & (1u << j)) continue;
      if (a.degree(i) != b.degree(j)) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p) ok = a.has_edge(p, i) == b.has_edge(map[p], j);
      if (!ok) continue;
      map[i] = j;
      used |= 1u << j;
      self(self, i + 1);
      used &= ~(1u << j);
      map[i] = -1;
    }
  };
  rec(rec, 0);
}

void require_capped(const Motif& m) {
  if (m.num_vertices() > kMaxMotifVertices) {
    throw SizeError("motif has " + std::to_string(m.num_vertices()) +
                    " vertices; exhaustive search is capped at " +
                    std::to_string(kMaxMotifVertices));
  }
}

std::int64_t count_automorphisms(const Motif& m) {
  std::int64_t count = 0;
  search_isomorphisms(m, m, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace

Motif::Motif(int num_vertices, std::vector<Edge> edges) : k_(num_vertices) {
  if (k_ < 2) throw DomainError("a motif needs at least 2 vertices");
  if (k_ > kMaxJoinVertices) {
    throw SizeError("motif with " + std::to_string(k_) + " vertices exceeds the limit of " +
                    std::to_string(kMaxJoinVertices));
  }
  masks_.assign(k_, 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= k_ || v >= k_) throw DomainError("motif edge endpoint out of range");
    if (u == v) throw DomainError("motif edges cannot be self-loops");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw DomainError("motif has a duplicate edge");
  }
  for (const auto& [u, v] : edges) {
    masks_[u] |= 1u << v;
    masks_[v] |= 1u << u;
  }
  edges_ = std::move(edges);
  if (k_ <= kMaxMotifVertices) aut_ = count_automorphisms(*this);
}

Motif Motif::complete(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Motif(k, std::move(e));
}

Motif Motif::cycle(int k) {
  if (k < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Motif(k, std::move(e));
}

Motif Motif::path(int k) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Motif(k, std::move(e));
}

Motif Motif::star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Motif(leaves + 1, std::move(e));
}

bool Motif::has_edge(int a, int b) const { return (masks_[a] >> b) & 1u; }

int Motif::degree(int a) const { return std::popcount(masks_[a]); }

std::int64_t Motif::automorphisms() const {
  require_capped(*this);
  return aut_;
}

std::vector<OrderedPair> Motif::ordered_edges() const {
  std::vector<OrderedPair> out;
  out.reserve(2 * edges_.size());
  for (const auto& [u, v] : edges_) {
    out.emplace_back(u, v);
    out.emplace_back(v, u);
  }
  return out;
}

Motif Motif::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != k_) throw DomainError("permutation has the wrong length");
  std::vector<int> seen(k_, 0);
  for (int p : perm) {
    if (p < 0 || p >= k_ || seen[p]++) throw DomainError("not a permutation");
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return Motif(k_, std::move(e));
}

std::string Motif::to_string() const {
  std::ostringstream os;
  os << "n=" << k_ << ";edges=";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ',';
    os << edges_[i].first + 1 << '-' << edges_[i].second + 1;
  }
  return os.str();
}

MultiMotif::MultiMotif(int num_vertices, std::vector<MultiEdge> edges) : k_(num_vertices) {
  if (k_ < 1) throw DomainError("a multimotif needs at least 1 vertex");
  for (auto& e : edges) {
    auto& [u, v] = e.pair;
    if (u < 0 || v < 0 || u >= k_ || v >= k_) throw DomainError("multimotif edge out of range");
    if (u == v) throw DomainError("multimotif edges cannot be self-loops");
    if (e.multiplicity < 1) throw DomainError("edge multiplicity must be at least 1");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const MultiEdge& x, const MultiEdge& y) { return x.pair < y.pair; });
  // Repeated pairs accumulate multiplicity.
  std::vector<MultiEdge> merged;
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().pair == e.pair) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(e);
    }
  }
  edges_ = std::move(merged);
}

MultiMotif::MultiMotif(const Motif& m) : k_(m.num_vertices()) {
  for (const auto& e : m.edges()) edges_.push_back({e, 1});
}

int MultiMotif::multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_)
    if (e.pair == Edge{a, b}) return e.multiplicity;
  return 0;
}

int MultiMotif::total_multiplicity() const {
  int s = 0;
  for (const auto& e : edges_) s += e.multiplicity;
  return s;
}

bool MultiMotif::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const MultiEdge& e) { return e.multiplicity == 1; });
}

std::optional<Motif> MultiMotif::as_simple() const {
  if (!is_simple() || k_ < 2) return std::nullopt;
  std::vector<Edge> e;
  for (const auto& me : edges_) e.push_back(me.pair);
  return Motif(k_, std::move(e));
}

MultiMotif MultiMotif::without_pair(int a, int b) const {
  if (a > b) std::swap(a, b);
  std::vector<MultiEdge> e;
  for (const auto& me : edges_)
    if (me.pair != Edge{a, b}) e.push_back(me);
  return MultiMotif(k_, std::move(e));
}

std::string MultiMotif::to_string() const {
  std::ostringstream os;
  os << "n=" << k_ << ";edges=";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ',';
    os << edges_[i].pair.first + 1 << '-' << edges_[i].pair.second + 1;
    if (edges_[i].multiplicity > 1) os << 'x' << edges_[i].multiplicity;
  }
  return os.str();
}

std::int64_t automorphism_count(const Motif& m) { return m.automorphisms(); }

std::vector<std::vector<int>> automorphism_group(const Motif& m) {
  require_capped(m);
  std::vector<std::vector<int>> out;
  search_isomorphisms(m, m, [&](const std::vector<int>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<int> vertex_orbits(const Motif& m) {
  std::vector<int> orbit(m.num_vertices());
  std::iota(orbit.begin(), orbit.end(), 0);
  // The group contains a map from every orbit member to every other, so a
  // single pass finds each orbit minimum.
  for (const auto& p : automorphism_group(m)) {
    for (int i = 0; i < m.num_vertices(); ++i) orbit[p[i]] = std::min(orbit[p[i]], i);
  }
  return orbit;
}

std::optional<std::vector<int>> find_isomorphism(const Motif& from, const Motif& to) {
  require_capped(from);
  require_capped(to);
  if (from.num_vertices() != to.num_vertices() || from.num_edges() != to.num_edges()) {
    return std::nullopt;
  }
  std::optional<std::vector<int>> found;
  search_isomorphisms(from, to, [&](const std::vector<int>& p) {
    found = p;
    return false;
  });
  return found;
}

bool is_isomorphic(const Motif& m1, const Motif& m2) {
  return find_isomorphism(m1, m2).has_value();
}

Motif edge_motif() { return Motif::complete(2); }
Motif two_star_motif() { return Motif::star(2); }
Motif triangle_motif() { return Motif::complete(3); }
Motif four_cycle_motif() { return Motif::cycle(4); }
Motif bowtie_motif() { return Motif(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

std::vector<Motif> small_motif_catalog() {
  std::vector<Motif> out;
  for (int k = 2; k <= 4; ++k) {
    std::vector<Edge> all;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) all.emplace_back(i, j);
    const int m = static_cast<int>(all.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<Edge> e;
      for (int b = 0; b < m; ++b)
        if (mask >> b & 1) e.push_back(all[b]);
      Motif cand(k, std::move(e));
      bool fresh = std::none_of(out.begin(), out.end(),
                                [&](const Motif& x) { return is_isomorphic(x, cand); });
      if (fresh) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace nm
