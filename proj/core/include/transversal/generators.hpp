#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "transversal/graph.hpp"

namespace transversal {

// List coloring problem over a host graph with dense vertex ids 0..n-1 and
// dense color ids 0..num_colors-1. color_names maps dense color ids back to
// the ids used in the input file.
struct ListColoringInstance {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> host_edges;
  std::vector<std::vector<int>> lists;  // per host vertex, dense color ids
  std::vector<int> color_names;
};

// n graphs H_1..H_n sharing one vertex set 0..num_vertices-1.
struct GraphFamilyInstance {
  int num_vertices = 0;
  std::vector<std::vector<std::pair<int, int>>> graphs;
};

// Δ cliques of order Δ+1, one vertex of each clique per part: Δ+1 parts of
// size Δ, max degree Δ, local degree 1, and no independent transversal.
// Vertex i of clique c has id c*(Δ+1)+i; part i holds {c*(Δ+1)+i : c}.
MultipartiteGraph gen_disjoint_cliques(int delta);

// Vertex set {1..Δ+1} x {1..n} with parts V_i = {(i, j) : j} and every column
// a clique: max degree Δ, local degree 1. For n(s-1) < Δ+1 there is no
// K_s-free transversal. Id of (i, j) is (i-1)*n + (j-1).
MultipartiteGraph gen_clique_grid(int delta, int n);

// Disjoint union of 2Δ-1 copies of K_{Δ,Δ}; copy b owns ids [b*2Δ, (b+1)*2Δ)
// with the first Δ ids on the left side. part_assignment[v] places vertex v
// into one of 2Δ-1 parts, which must all end up with size exactly 2Δ.
MultipartiteGraph gen_bipartite_union(int delta, const std::vector<int>& part_assignment);

// Exhaustive search (feasible at delta <= 2) for a part assignment whose
// gen_bipartite_union instance has no independent transversal.
std::optional<std::vector<int>> search_no_it_bipartite_assignment(int delta);

// r parts of size n; cross-part edges proposed uniformly at random and
// accepted only while deg(v) <= delta and per-part degree <= c hold for both
// endpoints. Proposal budget: min(N*cap/2, 30e6) with cap = min(delta,
// c*(r-1)), so large instances come out well below saturation. Deterministic
// per seed. Caps that cannot reach delta (c*(r-1) < delta) merely saturate.
MultipartiteGraph gen_random_local_sparse(int r, int n, int delta, int c, std::uint64_t seed);

// Reduction artifacts carry the labeling of the produced graph's vertices so
// that transversals can be mapped back onto the source problem.
struct ListColoringReduction {
  MultipartiteGraph graph;
  // graph vertex id -> (host vertex, dense color id); part i <-> host vertex i.
  std::vector<std::pair<int, int>> label;
};

// One part per host vertex v holding {(v, c) : c in C_v}; (v,c) ~ (w,c) iff
// vw is a host edge and both lists contain c. Local degree <= 1.
ListColoringReduction reduce_list_coloring(const ListColoringInstance& inst);

// Independent transversal of the reduction -> proper list coloring of the
// host (dense color id per host vertex). InputError if t is not independent.
std::vector<int> extract_list_coloring(const ListColoringInstance& inst,
                                       const ListColoringReduction& red, const Transversal& t);

// One part per host vertex holding its n layer-copies; copy i of v is
// adjacent to copy i of w iff vw in H_i. Id of (v, layer i) is v*n + i.
MultipartiteGraph reduce_graph_family(const GraphFamilyInstance& inst);

// Maps an independent transversal of reduce_graph_family(inst) to the classes
// I_1..I_n, where I_i holds the host vertices whose chosen copy is layer i.
// Each I_i is independent in H_i. InputError if t is not independent.
std::vector<std::vector<int>> transversal_to_partition(const GraphFamilyInstance& inst,
                                                       const Transversal& t);

}  // namespace transversal
