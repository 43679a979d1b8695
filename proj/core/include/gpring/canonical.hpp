#pragma once

#include <gpring/graph.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gpring {

struct CanonLimits {
    // Largest connected component that may be canonicalized.
    std::size_t max_component_vertices = 512;
    // Search-tree nodes allowed per component before giving up.
    std::size_t max_search_nodes = 4'000'000;
};

// Byte string identifying a (rooted, possibly looped) graph up to isomorphism.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::string bytes) : m_bytes(std::move(bytes)) {}

    const std::string &bytes() const noexcept { return m_bytes; }
    std::string hex() const;
    static CanonicalKey from_hex(const std::string &hex);

    friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
    friend bool operator==(const CanonicalKey &, const CanonicalKey &) = default;

private:
    std::string m_bytes;
};

struct CanonicalLabeling {
    CanonicalKey key;
    // position[v] is the canonical index of vertex v.
    std::vector<Vertex> position;
};

// Canonical labeling of a connected graph by partition refinement plus
// backtracking with automorphism pruning. Root membership and loops act as
// vertex colors.
CanonicalLabeling canonical_labeling(const Graph &g, const CanonLimits &limits = {});

// Key of an arbitrary graph: connected graphs get their labeling key, other
// graphs the sorted multiset of component keys.
CanonicalKey canonical_form(const Graph &g, const CanonLimits &limits = {});

// g relabeled into its canonical vertex order (connected g only).
Graph canonical_graph(const Graph &g, const CanonLimits &limits = {});

bool is_isomorphic(const Graph &a, const Graph &b, const CanonLimits &limits = {});

// Vertex orbits under the automorphism group (root set and loops preserved),
// as orbit representative per vertex.
std::vector<Vertex> automorphism_orbits(const Graph &g, const CanonLimits &limits = {});

} // namespace gpring
