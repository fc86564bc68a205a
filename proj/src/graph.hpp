#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace grid {

using Edge = std::pair<int, int>;  // canonical: first < second

// Undirected, unweighted, immutable after construction. No self-loops, no
// duplicate edges; adjacency lists are sorted and mirror the edge set.
struct Graph {
    int num_nodes = 0;
    std::vector<Edge> edges;                    // sorted lexicographically
    std::vector<std::vector<int>> adjacency;    // sorted neighbor lists

    // Canonicalizes (u,v)/(v,u) and drops duplicates; rejects self-loops and
    // out-of-range endpoints.
    static Graph from_edges(int num_nodes, const std::vector<Edge>& raw);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }

    // Edge-list text form, one "u\tv" per line, sorted; used for golden tests.
    std::string serialize_edges() const;
};

struct NodeData {
    std::vector<std::vector<double>> attributes;  // per-node vector, equal dims
    std::vector<int> labels;                      // class index in [0, num_classes)

    int attr_dim() const { return attributes.empty() ? 0 : static_cast<int>(attributes[0].size()); }
    int num_classes() const;
    void validate(int num_nodes) const;
};

// Shortest-path distances from src by BFS, capped at max_hops.
// dist[v] == -1 when v is farther than max_hops (or unreachable).
std::vector<int> bfs_distances(const Graph& g, int src, int max_hops);

// Distance queries capped at n_cap + 1 hops; stateless, safe to share across
// threads.
class HopIndex {
  public:
    HopIndex(const Graph& g, int n_cap) : g_(&g), cap_(n_cap + 1) {}

    int dist(int i, int j) const;                       // -1 beyond the cap
    std::vector<int> at_exact_distance(int i, int n) const;

  private:
    const Graph* g_;
    int cap_;
};

struct Dataset {
    Graph graph;
    NodeData data;
};

// Edge file: "u<TAB>v" per line, '#' comments. Node file: CSV
// "id,label,f0,...,f{d-1}". Node count comes from the node file.
Dataset load_graph(const std::string& edge_path, const std::string& node_path);
void save_graph(const Dataset& ds, const std::string& edge_path, const std::string& node_path);

// Stochastic block model; block id doubles as the label and attributes are
// one-hot(label) plus N(0, 0.3) noise. Deterministic per seed.
Dataset generate_synthetic(uint64_t seed, int blocks, int nodes_per_block, double p_in,
                           double p_out, int attr_dim);

// All pairs (i < j) at shortest-path distance exactly n, uniformly subsampled
// to max_pairs. Empty result when no such pair exists.
std::vector<Edge> n_hop_pairs(const Graph& g, int n, int max_pairs, uint64_t seed);

struct NeighborSets {
    std::vector<int> adjacent;  // P_i: all direct neighbors
    std::vector<int> nhop;      // Q_i: sampled nodes at distance exactly n
};
NeighborSets adjacent_and_nhop_sets(const Graph& g, int node, int n, int max_q, uint64_t seed);

}  // namespace grid
