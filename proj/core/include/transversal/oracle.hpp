#pragma once

#include <cstdint>
#include <optional>

#include "transversal/graph.hpp"

namespace transversal {

enum class OracleMode { decide, count };

struct OracleResult {
  bool exists = false;
  std::optional<Transversal> witness;    // decision mode, when exists
  std::optional<std::int64_t> count;     // counting mode
  std::int64_t nodes_explored = 0;
};

inline constexpr std::int64_t kDefaultNodeBudget = 100'000'000;

// Depth-first search over parts in index order, one vertex per part. A branch
// is pruned as soon as the newest vertex closes a clique of size s among the
// assigned vertices (for s = 2: an edge). Decision mode stops at the first
// witness; counting mode visits every valid full transversal.
//
// Throws ResourceError once nodes_explored exceeds node_budget.
OracleResult brute_force_transversal(const MultipartiteGraph& g, int s,
                                     OracleMode mode = OracleMode::decide,
                                     std::int64_t node_budget = kDefaultNodeBudget);

// True iff the exhaustive search proves no K_s-free transversal exists.
bool certify_no_transversal(const MultipartiteGraph& g, int s,
                            std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace transversal
