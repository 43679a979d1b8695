#pragma once

#include <gpring/canonical.hpp>
#include <gpring/graph.hpp>

#include <cstdint>
#include <map>
#include <optional>

namespace gpring {

// Finite-support multiset of connected components, keyed by isomorphism class.
// Representatives are stored in canonical vertex order.
class GraphFamily {
public:
    struct Component {
        Graph graph;
        std::uint64_t multiplicity = 0;
    };

    GraphFamily() = default;

    // Adds mult copies of every connected component of g.
    void add(const Graph &g, std::uint64_t mult = 1, const CanonLimits &limits = {});
    // Adds mult copies of an already-connected graph.
    void add_connected(const Graph &connected, std::uint64_t mult = 1, const CanonLimits &limits = {});
    void add_component(const CanonicalKey &key, const Graph &canonical_rep, std::uint64_t mult);

    const std::map<CanonicalKey, Component> &components() const noexcept { return m_components; }
    bool empty() const noexcept { return m_components.empty(); }
    std::uint64_t component_count() const;
    std::uint64_t multiplicity(const CanonicalKey &key) const;
    std::size_t total_vertices() const;

    // When set, the family stands for a truncated infinite family: only
    // components whose factorization degree is at most this bound are kept.
    std::optional<std::uint32_t> degree_bound;

    friend bool operator==(const GraphFamily &a, const GraphFamily &b);

private:
    std::map<CanonicalKey, Component> m_components;
};

GraphFamily family_of(const Graph &g, const CanonLimits &limits = {});

struct RealizeLimits {
    std::size_t max_vertices = 1u << 20;
};

Graph realize(const GraphFamily &f, const RealizeLimits &limits = {});

} // namespace gpring
