#include "transversal/oracle.hpp"

#include <string>
#include <vector>

#include "transversal/errors.hpp"

namespace transversal {

namespace {

struct Searcher {
  const MultipartiteGraph& g;
  int s;
  OracleMode mode;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::int64_t found = 0;
  std::vector<VertexId> chosen;
  std::vector<std::vector<char>> adj;  // adjacency among chosen, by depth

  Searcher(const MultipartiteGraph& graph, int clique_size, OracleMode m, std::int64_t b)
      : g(graph), s(clique_size), mode(m), budget(b) {
    const auto r = static_cast<std::size_t>(g.part_count());
    chosen.resize(r);
    adj.assign(r, std::vector<char>(r, 0));
  }

  // Clique of size `need` among assigned vertices < depth, all adjacent to
  // every vertex already in `stack`, restricted to indices in `cands`.
  bool clique_among(const std::vector<int>& cands, int need) const {
    if (need == 0) return true;
    if (static_cast<int>(cands.size()) < need) return false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      std::vector<int> next;
      next.reserve(cands.size() - i);
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (adj[static_cast<std::size_t>(cands[i])][static_cast<std::size_t>(cands[j])])
          next.push_back(cands[j]);
      if (clique_among(next, need - 1)) return true;
    }
    return false;
  }

  // True when a witness was found in decision mode (unwinds the recursion).
  bool search(int depth) {
    if (depth == g.part_count()) {
      ++found;
      return mode == OracleMode::decide;
    }
    for (VertexId v : g.part(depth)) {
      if (++nodes > budget)
        throw ResourceError("oracle node budget (" + std::to_string(budget) + ") exceeded");
      auto& row = adj[static_cast<std::size_t>(depth)];
      std::vector<int> nbrs;
      for (int i = 0; i < depth; ++i) {
        const bool e = g.adjacent(v, chosen[static_cast<std::size_t>(i)]);
        row[static_cast<std::size_t>(i)] = e;
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(depth)] = e;
        if (e) nbrs.push_back(i);
      }
      // The newest vertex is part of any clique that just appeared.
      if (clique_among(nbrs, s - 1)) continue;
      chosen[static_cast<std::size_t>(depth)] = v;
      if (search(depth + 1)) return true;
    }
    return false;
  }
};

}  // namespace

OracleResult brute_force_transversal(const MultipartiteGraph& g, int s, OracleMode mode,
                                     std::int64_t node_budget) {
  if (s < 2) throw InputError("clique size s must be >= 2, got " + std::to_string(s));
  if (node_budget <= 0) throw InputError("node budget must be positive");
  Searcher searcher(g, s, mode, node_budget);
  const bool witness_found = searcher.search(0);
  OracleResult res;
  res.nodes_explored = searcher.nodes;
  res.exists = searcher.found > 0;
  if (mode == OracleMode::count) res.count = searcher.found;
  if (witness_found) {
    Transversal t;
    for (int i = 0; i < g.part_count(); ++i)
      t.assignment[i] = searcher.chosen[static_cast<std::size_t>(i)];
    res.witness = std::move(t);
  }
  return res;
}

bool certify_no_transversal(const MultipartiteGraph& g, int s, std::int64_t node_budget) {
  return !brute_force_transversal(g, s, OracleMode::decide, node_budget).exists;
}

}  // namespace transversal
