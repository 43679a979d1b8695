#include <gpring/family.hpp>

#include <gpring/error.hpp>

namespace gpring {

void GraphFamily::add(const Graph &g, std::uint64_t mult, const CanonLimits &limits)
{
    if (mult == 0) {
        return;
    }
    for (const auto &vertices : component_vertex_sets(g)) {
        add_connected(g.induced(vertices), mult, limits);
    }
}

void GraphFamily::add_connected(const Graph &connected, std::uint64_t mult, const CanonLimits &limits)
{
    if (mult == 0) {
        return;
    }
    const auto labeling = canonical_labeling(connected, limits);
    auto it = m_components.find(labeling.key);
    if (it != m_components.end()) {
        it->second.multiplicity += mult;
        return;
    }
    m_components.emplace(labeling.key, Component{connected.relabeled(labeling.position), mult});
}

void GraphFamily::add_component(const CanonicalKey &key, const Graph &canonical_rep, std::uint64_t mult)
{
    if (mult == 0) {
        return;
    }
    auto [it, inserted] = m_components.try_emplace(key, Component{canonical_rep, 0});
    it->second.multiplicity += mult;
}

std::uint64_t GraphFamily::component_count() const
{
    std::uint64_t total = 0;
    for (const auto &[key, c] : m_components) {
        total += c.multiplicity;
    }
    return total;
}

std::uint64_t GraphFamily::multiplicity(const CanonicalKey &key) const
{
    auto it = m_components.find(key);
    return it == m_components.end() ? 0 : it->second.multiplicity;
}

std::size_t GraphFamily::total_vertices() const
{
    std::size_t total = 0;
    for (const auto &[key, c] : m_components) {
        total += c.graph.vertex_count() * c.multiplicity;
    }
    return total;
}

bool operator==(const GraphFamily &a, const GraphFamily &b)
{
    if (a.m_components.size() != b.m_components.size()) {
        return false;
    }
    auto ia = a.m_components.begin();
    auto ib = b.m_components.begin();
    for (; ia != a.m_components.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.multiplicity != ib->second.multiplicity) {
            return false;
        }
    }
    return true;
}

GraphFamily family_of(const Graph &g, const CanonLimits &limits)
{
    GraphFamily f;
    f.add(g, 1, limits);
    return f;
}

Graph realize(const GraphFamily &f, const RealizeLimits &limits)
{
    if (f.total_vertices() > limits.max_vertices) {
        fail(ErrorKind::SizeLimitExceeded,
             "realized family would have " + std::to_string(f.total_vertices()) + " vertices");
    }
    bool loops = false;
    std::size_t n = 0;
    for (const auto &[key, c] : f.components()) {
        loops = loops || c.graph.allows_loops() || c.graph.loop_count() > 0;
    }
    std::vector<Edge> edges;
    std::vector<Vertex> roots;
    for (const auto &[key, c] : f.components()) {
        for (std::uint64_t copy = 0; copy < c.multiplicity; ++copy) {
            const auto offset = static_cast<Vertex>(n);
            for (const auto &[u, v] : c.graph.edges()) {
                edges.emplace_back(u + offset, v + offset);
            }
            for (Vertex r : c.graph.roots()) {
                roots.push_back(r + offset);
            }
            n += c.graph.vertex_count();
        }
    }
    return Graph(n, std::move(edges), std::move(roots), loops);
}

} // namespace gpring
