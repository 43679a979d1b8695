#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gpring {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph with optional loops and an optional root set.
//
// Vertices are 0..vertex_count()-1. Edges are stored normalized (first <= second);
// an edge (v, v) is a loop and is only accepted when allows_loops() is set.
// Instances are immutable once constructed.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Vertex> roots = {},
          bool allows_loops = false);

    static Graph empty() { return Graph(); }
    static Graph single_vertex(bool rooted = false, bool looped = false);
    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph edgeless(std::size_t n);

    std::size_t vertex_count() const noexcept { return m_adj.size(); }
    std::size_t edge_count() const noexcept { return m_edges.size(); }
    const std::vector<Edge> &edges() const noexcept { return m_edges; }
    // Sorted neighbor list; a looped vertex lists itself.
    std::span<const Vertex> neighbors(Vertex v) const { return m_adj[v]; }
    // Number of distinct neighbors, counting a loop once.
    std::size_t degree(Vertex v) const { return m_adj[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_loop(Vertex v) const { return adjacent(v, v); }
    std::size_t loop_count() const;

    bool allows_loops() const noexcept { return m_allows_loops; }
    const std::vector<Vertex> &roots() const noexcept { return m_roots; }
    bool is_root(Vertex v) const { return m_root_flag[v] != 0; }

    Graph with_roots(std::vector<Vertex> roots) const;
    Graph with_all_roots() const;
    Graph without_roots() const { return with_roots({}); }
    Graph with_loops_allowed() const;
    // Relabel so that vertex v becomes perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;
    Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::vector<Vertex>> m_adj;
    std::vector<Edge> m_edges;
    std::vector<Vertex> m_roots;
    std::vector<char> m_root_flag;
    bool m_allows_loops = false;
};

Graph disjoint_union(const Graph &a, const Graph &b);

// Component index per vertex, numbered in order of smallest vertex.
std::vector<std::size_t> component_labels(const Graph &g, std::size_t *count = nullptr);
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph &g);
bool is_connected(const Graph &g);
// True iff g has no odd cycle and no loop.
bool is_bipartite(const Graph &g);
bool is_complete(const Graph &g);

Graph add_loops(const Graph &g);
Graph strip_loops(const Graph &g);

} // namespace gpring
