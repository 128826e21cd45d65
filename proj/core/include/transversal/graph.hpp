#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace transversal {

using VertexId = std::int32_t;

struct GraphStats {
  int max_degree = 0;
  // Max number of neighbors one vertex has inside a single part that does
  // not contain it.
  int local_degree = 0;
  int min_part_size = 0;
  int part_count = 0;
  std::int64_t edge_count = 0;

  bool operator==(const GraphStats&) const = default;
};

// At most one chosen vertex per part, keyed by part index. A transversal is
// "full" for a graph when every part index is covered.
struct Transversal {
  std::map<int, VertexId> assignment;

  bool operator==(const Transversal&) const = default;
};

// Vertex-partitioned undirected graph. Immutable after construction; all
// mutating operations return a new graph, so instances can be shared across
// threads freely.
//
// Vertex ids live in a fixed id space [0, id_bound()). Ids not present in
// any part are absent; delete_vertices() keeps the id space so that ids stay
// stable across solver pipelines, and empty parts are retained with their
// index (callers decide whether an empty part is a failure).
//
// Intra-part edges are representable (arbitrary inputs must load) but every
// solver rejects graphs that have them; see strip_intra_part_edges().
class MultipartiteGraph {
public:
  MultipartiteGraph() = default;
  // Validates: ids non-negative, no id in two parts, no self-loops, edge
  // endpoints present. Duplicate edges are collapsed.
  MultipartiteGraph(std::vector<std::vector<VertexId>> parts,
                    const std::vector<std::pair<VertexId, VertexId>>& edges);

  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<VertexId>& part(int i) const;
  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }

  // Part index of v, or -1 when v is absent / out of range.
  int part_of(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= part_of_.size()) return -1;
    return part_of_[static_cast<std::size_t>(v)];
  }
  bool contains(VertexId v) const { return part_of(v) >= 0; }

  VertexId id_bound() const { return static_cast<VertexId>(part_of_.size()); }
  std::int64_t vertex_count() const { return vertex_count_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  // Normalized (u < v), sorted lexicographically; the position of an edge in
  // this list is its edge id.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  // Neighbors of v, sorted by (part index of neighbor, id). Empty for absent v.
  std::span<const VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(VertexId u, VertexId v) const;

  std::int64_t intra_part_edge_count() const { return intra_part_edges_; }

  bool operator==(const MultipartiteGraph& o) const {
    return parts_ == o.parts_ && edges_ == o.edges_;
  }

private:
  std::vector<std::vector<VertexId>> parts_;
  std::vector<int> part_of_;  // -1 = absent
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> adj_;          // CSR neighbor storage
  std::vector<std::int64_t> adj_off_;  // size id_bound()+1
  std::int64_t vertex_count_ = 0;
  std::int64_t intra_part_edges_ = 0;
};

GraphStats compute_stats(const MultipartiteGraph& g);

// |N(v) ∩ V_k|. Binary search over the part-sorted neighbor list.
int per_part_degree(const MultipartiteGraph& g, VertexId v, int k);

// Induced subgraph on V \ to_delete, same id space, empty parts retained.
MultipartiteGraph delete_vertices(const MultipartiteGraph& g,
                                  std::span<const VertexId> to_delete);

// True iff t covers every part and no two chosen vertices are adjacent.
// A vertex recorded under the wrong part is an InputError, not `false`.
bool is_independent_transversal(const MultipartiteGraph& g, const Transversal& t);

// True iff t covers every part and the chosen vertices induce no clique of
// size s. s = 2 coincides with is_independent_transversal. Requires s >= 2.
bool is_ks_free_transversal(const MultipartiteGraph& g, const Transversal& t, int s);

// Normalization pass: drops intra-part edges. Returns the cleaned graph and
// the number of edges removed.
std::pair<MultipartiteGraph, std::int64_t> strip_intra_part_edges(const MultipartiteGraph& g);

}  // namespace transversal
