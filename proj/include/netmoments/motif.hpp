#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nm {

// Exhaustive permutation search is used for automorphisms and isomorphism,
// which stays fast up to 8! labelings.
inline constexpr int kMaxMotifVertices = 8;

// Joins of two capped motifs can have up to 2 * 8 - 1 vertices; those are
// still valid motifs for counting and density evaluation.
inline constexpr int kMaxJoinVertices = 2 * kMaxMotifVertices - 1;

// Unordered vertex pair, stored with first < second. Vertices are 0-based.
using Edge = std::pair<int, int>;

// Ordered vertex pair; the set of these for a motif holds both orientations
// of every edge.
using OrderedPair = std::pair<int, int>;

class Motif {
 public:
  Motif(int num_vertices, std::vector<Edge> edges);

  static Motif complete(int k);
  static Motif cycle(int k);
  static Motif path(int k);
  static Motif star(int leaves);

  int num_vertices() const { return k_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  int degree(int a) const;
  std::uint32_t neighbor_mask(int a) const { return masks_[a]; }

  // Throws SizeError when the motif has more than kMaxMotifVertices vertices.
  std::int64_t automorphisms() const;

  std::vector<OrderedPair> ordered_edges() const;

  // perm[i] is the new label of vertex i.
  Motif relabeled(const std::vector<int>& perm) const;

  // "n=3;edges=1-2,1-3,2-3" with 1-based labels.
  std::string to_string() const;

  friend bool operator==(const Motif& a, const Motif& b) {
    return a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> masks_;
  std::int64_t aut_ = 0;
};

// Multigraph on a few vertices; pair -> multiplicity >= 1.
class MultiMotif {
 public:
  struct MultiEdge {
    Edge pair;
    int multiplicity;
    friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
  };

  MultiMotif(int num_vertices, std::vector<MultiEdge> edges);
  explicit MultiMotif(const Motif& m);

  int num_vertices() const { return k_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  int multiplicity(int a, int b) const;
  int total_multiplicity() const;
  bool is_simple() const;
  // Returns the simple motif when every multiplicity is 1.
  std::optional<Motif> as_simple() const;
  MultiMotif without_pair(int a, int b) const;
  std::string to_string() const;

  friend bool operator==(const MultiMotif&, const MultiMotif&) = default;

 private:
  int k_;
  std::vector<MultiEdge> edges_;
};

std::int64_t automorphism_count(const Motif& m);

// All automorphisms as permutations (perm[i] = image of i). Capped.
std::vector<std::vector<int>> automorphism_group(const Motif& m);

// Vertex orbits under the automorphism group; orbit[i] is the smallest
// vertex in the orbit of i.
std::vector<int> vertex_orbits(const Motif& m);

// map[i] = vertex of `to` that vertex i of `from` is sent to.
std::optional<std::vector<int>> find_isomorphism(const Motif& from, const Motif& to);
bool is_isomorphic(const Motif& m1, const Motif& m2);

// Identifies vertex a of h1 with vertex b of h2. h1 keeps labels 0..k1-1, the
// merged vertex is a, and the remaining vertices of h2 follow in order.
Motif vertex_join(const Motif& h1, int a, const Motif& h2, int b);

enum class JoinMode { kWeak, kStrong };

// Identifies a~c and b~d. Both pairs must be edges; the merged edge has
// multiplicity 1 (weak) or 2 (strong).
MultiMotif edge_join(const Motif& h1, OrderedPair ab, const Motif& h2, OrderedPair cd,
                     JoinMode mode);

// Like edge_join but either pair may be a non-edge. A merged pair that is an
// edge in only one motif keeps that single edge; non-edges add nothing.
MultiMotif extended_edge_join(const Motif& h1, OrderedPair ab, const Motif& h2, OrderedPair cd,
                              JoinMode mode);

// "k2", "k3".."k8", "c4".."c8", "p3".."p8" (paths by vertex count), "k12".."k17"
// (stars by leaf count), "bowtie", or "n=4;edges=1-2,2-3,3-4,4-1" (1-based).
Motif parse_motif(std::string_view literal);
std::vector<Motif> parse_motif_list(std::string_view literals);

// Short literal when the motif matches a named shape with the same labeling.
std::string motif_label(const Motif& m);

// Motif fixtures used throughout.
Motif edge_motif();        // K2
Motif two_star_motif();    // K_{1,2}, center 0
Motif triangle_motif();    // K3
Motif four_cycle_motif();  // C4 as 0-1-2-3-0
Motif bowtie_motif();      // two triangles sharing vertex 0

// All non-isomorphic graphs on 2..4 vertices with at least one edge;
// isolated vertices are allowed, giving 14 graphs.
std::vector<Motif> small_motif_catalog();

}  // namespace nm
