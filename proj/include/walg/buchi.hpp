#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "walg/matrix.hpp"

namespace walg {

/// Finite weighted digraph with Büchi nodes.  The value of a node is the sum,
/// over infinite paths from it that visit accepting nodes infinitely often,
/// of the infinite product of edge weights; for a square matrix with the
/// first t nodes accepting this is M^{omega,t}.
struct BuchiGraph {
  explicit BuchiGraph(Kind k) : kind(k) {}

  Kind kind;
  std::vector<std::vector<std::pair<std::size_t, Value>>> adj;
  std::vector<char> accepting;

  std::size_t add_node(bool acc) {
    adj.emplace_back();
    accepting.push_back(acc ? 1 : 0);
    return adj.size() - 1;
  }
  void add_edge(std::size_t u, std::size_t v, const Value& w) {
    if (!is_zero(w)) adj[u].emplace_back(v, w);
  }
  std::size_t size() const { return adj.size(); }
};

/// Linear-time evaluation by strongly connected components.  Defined for the
/// idempotent instances only; counting throws semiring_error.
std::vector<Value> buchi_values(const BuchiGraph& g);

/// Sum over finite paths from src of the product of edge weights, for every
/// node (accepting flags ignored).  Idempotent instances only.
std::vector<Value> path_sums(const BuchiGraph& g, std::size_t src);

BuchiGraph graph_of(const Matrix& m, std::size_t t);

/// Strongly connected components; comp[v] numbers components in reverse
/// topological order (sinks first).
std::vector<std::size_t> scc(const std::vector<std::vector<std::size_t>>& succ,
                             std::size_t* count);

}  // namespace walg
