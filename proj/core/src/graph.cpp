#include "transversal/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "transversal/errors.hpp"

namespace transversal {

namespace {

constexpr VertexId kMaxVertexId = 100'000'000;

}  // namespace

MultipartiteGraph::MultipartiteGraph(std::vector<std::vector<VertexId>> parts,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges)
    : parts_(std::move(parts)) {
  VertexId max_id = -1;
  for (const auto& part : parts_)
    for (VertexId v : part) {
      if (v < 0) throw InputError("vertex id " + std::to_string(v) + " is negative");
      if (v > kMaxVertexId) throw InputError("vertex id " + std::to_string(v) + " too large");
      max_id = std::max(max_id, v);
    }
  part_of_.assign(static_cast<std::size_t>(max_id) + 1, -1);
  for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
    for (VertexId v : parts_[static_cast<std::size_t>(i)]) {
      int& slot = part_of_[static_cast<std::size_t>(v)];
      if (slot != -1)
        throw InputError("vertex " + std::to_string(v) + " appears in parts " +
                         std::to_string(slot) + " and " + std::to_string(i));
      slot = i;
      ++vertex_count_;
    }

  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!contains(u))
      throw InputError("edge endpoint " + std::to_string(u) + " is not in any part");
    if (!contains(v))
      throw InputError("edge endpoint " + std::to_string(v) + " is not in any part");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_)
    if (part_of(u) == part_of(v)) ++intra_part_edges_;

  // CSR adjacency, each neighbor list sorted by (part index, id).
  const std::size_t n = part_of_.size();
  adj_off_.assign(n + 1, 0);
  for (auto [u, v] : edges_) {
    ++adj_off_[static_cast<std::size_t>(u) + 1];
    ++adj_off_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) adj_off_[i + 1] += adj_off_[i];
  adj_.resize(static_cast<std::size_t>(adj_off_[n]));
  {
    std::vector<std::int64_t> cursor(adj_off_.begin(), adj_off_.end() - 1);
    for (auto [u, v] : edges_) {
      adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
      adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adj_.begin() + adj_off_[v];
    auto last = adj_.begin() + adj_off_[v + 1];
    std::sort(first, last, [this](VertexId a, VertexId b) {
      const int pa = part_of_[static_cast<std::size_t>(a)];
      const int pb = part_of_[static_cast<std::size_t>(b)];
      return pa != pb ? pa < pb : a < b;
    });
  }
}

const std::vector<VertexId>& MultipartiteGraph::part(int i) const {
  if (i < 0 || i >= part_count())
    throw InputError("part index " + std::to_string(i) + " out of range");
  return parts_[static_cast<std::size_t>(i)];
}

std::span<const VertexId> MultipartiteGraph::neighbors(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= part_of_.size()) return {};
  const auto b = static_cast<std::size_t>(adj_off_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(adj_off_[static_cast<std::size_t>(v) + 1]);
  return {adj_.data() + b, e - b};
}

bool MultipartiteGraph::adjacent(VertexId u, VertexId v) const {
  auto ns = neighbors(u);
  if (neighbors(v).size() < ns.size()) {
    std::swap(u, v);
    ns = neighbors(u);
  }
  const int pv = part_of(v);
  auto it = std::lower_bound(ns.begin(), ns.end(), v, [this, pv](VertexId a, VertexId b) {
    const int pa = part_of(a);
    return pa != pv ? pa < pv : a < b;
  });
  return it != ns.end() && *it == v;
}

GraphStats compute_stats(const MultipartiteGraph& g) {
  GraphStats s;
  s.part_count = g.part_count();
  s.edge_count = g.edge_count();
  s.min_part_size = 0;
  for (int i = 0; i < g.part_count(); ++i) {
    const int size = static_cast<int>(g.part(i).size());
    if (i == 0 || size < s.min_part_size) s.min_part_size = size;
  }
  for (const auto& part : g.parts())
    for (VertexId v : part) {
      const auto ns = g.neighbors(v);
      s.max_degree = std::max(s.max_degree, static_cast<int>(ns.size()));
      const int own = g.part_of(v);
      std::size_t i = 0;
      while (i < ns.size()) {
        const int p = g.part_of(ns[i]);
        std::size_t j = i;
        while (j < ns.size() && g.part_of(ns[j]) == p) ++j;
        if (p != own) s.local_degree = std::max(s.local_degree, static_cast<int>(j - i));
        i = j;
      }
    }
  return s;
}

int per_part_degree(const MultipartiteGraph& g, VertexId v, int k) {
  if (!g.contains(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (k < 0 || k >= g.part_count())
    throw InputError("part index " + std::to_string(k) + " out of range");
  const auto ns = g.neighbors(v);
  auto lo = std::lower_bound(ns.begin(), ns.end(), k,
                             [&g](VertexId a, int key) { return g.part_of(a) < key; });
  auto hi = std::upper_bound(ns.begin(), ns.end(), k,
                             [&g](int key, VertexId a) { return key < g.part_of(a); });
  return static_cast<int>(hi - lo);
}

MultipartiteGraph delete_vertices(const MultipartiteGraph& g,
                                  std::span<const VertexId> to_delete) {
  std::vector<char> dead(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId v : to_delete) {
    if (!g.contains(v))
      throw InputError("cannot delete vertex " + std::to_string(v) + ": not in graph");
    dead[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::vector<VertexId>> parts;
  parts.reserve(static_cast<std::size_t>(g.part_count()));
  for (const auto& part : g.parts()) {
    std::vector<VertexId> kept;
    kept.reserve(part.size());
    for (VertexId v : part)
      if (!dead[static_cast<std::size_t>(v)]) kept.push_back(v);
    parts.push_back(std::move(kept));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges())
    if (!dead[static_cast<std::size_t>(u)] && !dead[static_cast<std::size_t>(v)])
      edges.emplace_back(u, v);
  return MultipartiteGraph(std::move(parts), edges);
}

namespace {

void validate_assignment(const MultipartiteGraph& g, const Transversal& t) {
  for (auto [i, v] : t.assignment) {
    if (i < 0 || i >= g.part_count())
      throw InputError("transversal names part " + std::to_string(i) + " which does not exist");
    if (g.part_of(v) != i)
      throw InputError("vertex " + std::to_string(v) + " is not in its claimed part " +
                       std::to_string(i));
  }
}

bool is_full(const MultipartiteGraph& g, const Transversal& t) {
  if (static_cast<int>(t.assignment.size()) != g.part_count()) return false;
  int expect = 0;
  for (auto [i, v] : t.assignment)
    if (i != expect++) return false;
  return true;
}

// Any clique of size `need` within the candidate set, over a bitset
// adjacency on k vertices.
bool exists_clique(const std::vector<std::vector<std::uint64_t>>& adj,
                   std::vector<std::uint64_t> cands, int need) {
  if (need == 0) return true;
  int avail = 0;
  for (std::uint64_t w : cands) avail += std::popcount(w);
  if (avail < need) return false;
  const int k = static_cast<int>(adj.size());
  for (int v = 0; v < k; ++v) {
    if (!(cands[static_cast<std::size_t>(v) >> 6] & (1ull << (v & 63)))) continue;
    cands[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63));
    std::vector<std::uint64_t> next(cands.size());
    for (std::size_t w = 0; w < cands.size(); ++w)
      next[w] = cands[w] & adj[static_cast<std::size_t>(v)][w];
    if (exists_clique(adj, std::move(next), need - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_independent_transversal(const MultipartiteGraph& g, const Transversal& t) {
  validate_assignment(g, t);
  if (!is_full(g, t)) return false;
  std::vector<VertexId> chosen(static_cast<std::size_t>(g.part_count()));
  for (auto [i, v] : t.assignment) chosen[static_cast<std::size_t>(i)] = v;
  for (VertexId v : chosen)
    for (VertexId w : g.neighbors(v)) {
      const int pw = g.part_of(w);
      if (chosen[static_cast<std::size_t>(pw)] == w) return false;
    }
  return true;
}

bool is_ks_free_transversal(const MultipartiteGraph& g, const Transversal& t, int s) {
  if (s < 2) throw InputError("clique size s must be >= 2, got " + std::to_string(s));
  validate_assignment(g, t);
  if (!is_full(g, t)) return false;
  const int k = g.part_count();
  if (k < s) return true;
  std::vector<VertexId> chosen(static_cast<std::size_t>(k));
  for (auto [i, v] : t.assignment) chosen[static_cast<std::size_t>(i)] = v;
  const std::size_t words = (static_cast<std::size_t>(k) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(static_cast<std::size_t>(k),
                                              std::vector<std::uint64_t>(words, 0));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(chosen[static_cast<std::size_t>(a)], chosen[static_cast<std::size_t>(b)])) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] |= 1ull << (b & 63);
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a) >> 6] |= 1ull << (a & 63);
      }
  std::vector<std::uint64_t> all(words, 0);
  for (int v = 0; v < k; ++v) all[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
  return !exists_clique(adj, std::move(all), s);
}

std::pair<MultipartiteGraph, std::int64_t> strip_intra_part_edges(const MultipartiteGraph& g) {
  if (g.intra_part_edge_count() == 0) return {g, 0};
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges())
    if (g.part_of(u) != g.part_of(v)) edges.emplace_back(u, v);
  const std::int64_t dropped = g.edge_count() - static_cast<std::int64_t>(edges.size());
  return {MultipartiteGraph(g.parts(), edges), dropped};
}

}  // namespace transversal
