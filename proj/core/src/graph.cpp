#include <gpring/graph.hpp>

#include <gpring/error.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace gpring {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Vertex> roots, bool allows_loops)
    : m_adj(vertex_count), m_root_flag(vertex_count, 0), m_allows_loops(allows_loops)
{
    for (auto &[u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            fail(ErrorKind::InvalidGraph,
                 "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        }
        if (u > v) {
            std::swap(u, v);
        }
        if (u == v && !allows_loops) {
            fail(ErrorKind::InvalidGraph, "loop at " + std::to_string(u) + " but loops are not allowed");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        fail(ErrorKind::InvalidGraph, "duplicate edge");
    }
    for (const auto &[u, v] : edges) {
        m_adj[u].push_back(v);
        if (u != v) {
            m_adj[v].push_back(u);
        }
    }
    for (auto &list : m_adj) {
        std::sort(list.begin(), list.end());
    }
    m_edges = std::move(edges);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (Vertex r : roots) {
        if (r >= vertex_count) {
            fail(ErrorKind::InvalidGraph, "root " + std::to_string(r) + " out of range");
        }
        m_root_flag[r] = 1;
    }
    m_roots = std::move(roots);
}

Graph Graph::single_vertex(bool rooted, bool looped)
{
    std::vector<Edge> edges;
    if (looped) {
        edges.emplace_back(0, 0);
    }
    std::vector<Vertex> roots;
    if (rooted) {
        roots.push_back(0);
    }
    return Graph(1, std::move(edges), std::move(roots), looped);
}

Graph Graph::complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(v - 1, v);
    }
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n)
{
    if (n < 3) {
        fail(ErrorKind::InvalidGraph, "cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Graph(n, std::move(edges));
}

Graph Graph::edgeless(std::size_t n)
{
    return Graph(n, {});
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto &list = m_adj[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::loop_count() const
{
    return static_cast<std::size_t>(
        std::count_if(m_edges.begin(), m_edges.end(), [](const Edge &e) { return e.first == e.second; }));
}

Graph Graph::with_roots(std::vector<Vertex> roots) const
{
    return Graph(vertex_count(), m_edges, std::move(roots), m_allows_loops);
}

Graph Graph::with_all_roots() const
{
    std::vector<Vertex> roots(vertex_count());
    std::iota(roots.begin(), roots.end(), Vertex{0});
    return with_roots(std::move(roots));
}

Graph Graph::with_loops_allowed() const
{
    return Graph(vertex_count(), m_edges, m_roots, true);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const
{
    std::vector<Edge> edges;
    edges.reserve(m_edges.size());
    for (const auto &[u, v] : m_edges) {
        edges.emplace_back(perm[u], perm[v]);
    }
    std::vector<Vertex> roots;
    roots.reserve(m_roots.size());
    for (Vertex r : m_roots) {
        roots.push_back(perm[r]);
    }
    return Graph(vertex_count(), std::move(edges), std::move(roots), m_allows_loops);
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<Vertex> index(vertex_count(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index[vertices[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    std::vector<Vertex> roots;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex v = vertices[i];
        for (Vertex w : m_adj[v]) {
            if (index[w] != static_cast<Vertex>(-1) && index[w] >= i) {
                edges.emplace_back(static_cast<Vertex>(i), index[w]);
            }
        }
        if (is_root(v)) {
            roots.push_back(static_cast<Vertex>(i));
        }
    }
    return Graph(vertices.size(), std::move(edges), std::move(roots), m_allows_loops);
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
    const auto offset = static_cast<Vertex>(a.vertex_count());
    std::vector<Edge> edges = a.edges();
    for (const auto &[u, v] : b.edges()) {
        edges.emplace_back(u + offset, v + offset);
    }
    std::vector<Vertex> roots = a.roots();
    for (Vertex r : b.roots()) {
        roots.push_back(r + offset);
    }
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges), std::move(roots),
                 a.allows_loops() || b.allows_loops());
}

std::vector<std::size_t> component_labels(const Graph &g, std::size_t *count)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.vertex_count(), unset);
    std::vector<Vertex> stack;
    std::size_t next = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != unset) {
            continue;
        }
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (label[w] == unset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count != nullptr) {
        *count = next;
    }
    return label;
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph &g)
{
    std::size_t count = 0;
    const auto label = component_labels(g, &count);
    std::vector<std::vector<Vertex>> sets(count);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        sets[label[v]].push_back(v);
    }
    return sets;
}

bool is_connected(const Graph &g)
{
    std::size_t count = 0;
    component_labels(g, &count);
    return count == 1;
}

bool is_bipartite(const Graph &g)
{
    std::vector<int> side(g.vertex_count(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false; // odd cycle, or a loop when w == v
                }
            }
        }
    }
    return true;
}

bool is_complete(const Graph &g)
{
    const auto n = g.vertex_count();
    return g.loop_count() == 0 && g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph add_loops(const Graph &g)
{
    std::vector<Edge> edges;
    for (const auto &e : g.edges()) {
        if (e.first != e.second) {
            edges.push_back(e);
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        edges.emplace_back(v, v);
    }
    return Graph(g.vertex_count(), std::move(edges), g.roots(), true);
}

Graph strip_loops(const Graph &g)
{
    std::vector<Edge> edges;
    for (const auto &e : g.edges()) {
        if (e.first != e.second) {
            edges.push_back(e);
        }
    }
    return Graph(g.vertex_count(), std::move(edges), g.roots(), false);
}

} // namespace gpring
