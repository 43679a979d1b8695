#include <gpring/enumerate.hpp>

#include <gpring/canonical.hpp>
#include <gpring/error.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <set>

namespace gpring {

namespace {

std::mutex cache_mutex;
std::map<std::size_t, std::vector<Graph>> all_cache;
std::map<std::size_t, std::vector<Graph>> connected_cache;

std::vector<Graph> extend(const std::vector<Graph> &smaller, std::size_t n)
{
    std::map<CanonicalKey, Graph> found;
    const auto fresh = static_cast<Vertex>(n - 1);
    for (const Graph &base : smaller) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<Edge> edges = base.edges();
            for (Vertex v = 0; v + 1 < n; ++v) {
                if ((mask >> v) & 1u) {
                    edges.emplace_back(v, fresh);
                }
            }
            Graph g(n, std::move(edges));
            auto key = canonical_form(g);
            if (!found.count(key)) {
                found.emplace(std::move(key), g);
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto &[key, g] : found) {
        out.push_back(is_connected(g) ? canonical_graph(g) : g);
    }
    return out;
}

template <typename Pick>
std::vector<Graph> variants(const Graph &g, Pick &&pick)
{
    std::map<CanonicalKey, Graph> found;
    const auto n = g.vertex_count();
    if (n > 20) {
        fail(ErrorKind::SizeLimitExceeded, "variant enumeration is limited to 20 vertices");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto candidate = pick(mask);
        if (!candidate) {
            continue;
        }
        auto key = canonical_form(*candidate);
        if (!found.count(key)) {
            found.emplace(std::move(key), std::move(*candidate));
        }
    }
    std::vector<Graph> out;
    for (auto &[key, v] : found) {
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

const std::vector<Graph> &all_graphs(std::size_t n)
{
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = all_cache.find(n); it != all_cache.end()) {
            return it->second;
        }
    }
    std::vector<Graph> result;
    if (n == 0) {
        result.push_back(Graph());
    } else {
        result = extend(all_graphs(n - 1), n);
    }
    std::lock_guard lock(cache_mutex);
    return all_cache.try_emplace(n, std::move(result)).first->second;
}

const std::vector<Graph> &connected_graphs(std::size_t n)
{
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = connected_cache.find(n); it != connected_cache.end()) {
            return it->second;
        }
    }
    std::vector<Graph> result;
    if (n > 0) {
        for (const Graph &g : all_graphs(n)) {
            if (is_connected(g)) {
                result.push_back(g);
            }
        }
    }
    std::lock_guard lock(cache_mutex);
    return connected_cache.try_emplace(n, std::move(result)).first->second;
}

std::vector<Graph> root_variants(const Graph &g)
{
    return variants(g, [&](std::uint64_t mask) -> std::optional<Graph> {
        if (mask == 0) {
            return std::nullopt;
        }
        std::vector<Vertex> roots;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if ((mask >> v) & 1u) {
                roots.push_back(v);
            }
        }
        return g.with_roots(std::move(roots));
    });
}

std::vector<Graph> single_root_variants(const Graph &g)
{
    return variants(g, [&](std::uint64_t mask) -> std::optional<Graph> {
        if (mask == 0 || (mask & (mask - 1)) != 0) {
            return std::nullopt;
        }
        Vertex v = 0;
        while (((mask >> v) & 1u) == 0) {
            ++v;
        }
        return g.with_roots({v});
    });
}

std::vector<Graph> loop_variants(const Graph &g)
{
    const Graph base = strip_loops(g);
    return variants(g, [&](std::uint64_t mask) -> std::optional<Graph> {
        std::vector<Edge> edges = base.edges();
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if ((mask >> v) & 1u) {
                edges.emplace_back(v, v);
            }
        }
        return Graph(g.vertex_count(), std::move(edges), g.roots(), true);
    });
}

} // namespace gpring
