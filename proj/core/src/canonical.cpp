#include <gpring/canonical.hpp>

#include <gpring/error.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace gpring {

namespace {

constexpr char hex_digits[] = "0123456789abcdef";

class BitMatrix {
public:
    explicit BitMatrix(const Graph &g) : m_n(g.vertex_count()), m_words((m_n + 63) / 64), m_bits(m_n * m_words, 0)
    {
        for (const auto &[u, v] : g.edges()) {
            set(u, v);
            set(v, u);
        }
    }

    bool test(std::size_t u, std::size_t v) const { return (m_bits[u * m_words + v / 64] >> (v % 64)) & 1u; }

private:
    void set(std::size_t u, std::size_t v) { m_bits[u * m_words + v / 64] |= std::uint64_t{1} << (v % 64); }

    std::size_t m_n;
    std::size_t m_words;
    std::vector<std::uint64_t> m_bits;
};

// Ordered partition: lab holds vertices cell by cell; cell_end[s] is the end
// of the cell starting at position s; cell_of[v] is the start of v's cell.
struct Partition {
    std::vector<Vertex> lab;
    std::vector<std::size_t> cell_end;
    std::vector<std::size_t> cell_of;
    std::size_t cells = 0;

    bool discrete() const { return cells == lab.size(); }
};

class Searcher {
public:
    Searcher(const Graph &g, const CanonLimits &limits) : m_graph(g), m_matrix(g), m_limits(limits)
    {
        m_count.assign(g.vertex_count(), 0);
    }

    CanonicalLabeling run();
    const std::vector<std::vector<Vertex>> &generators() const { return m_generators; }

private:
    Partition initial_partition() const;
    void refine(Partition &p, std::deque<std::size_t> queue);
    void individualize(Partition &p, Vertex v) const;
    std::size_t search(Partition p, std::vector<Vertex> &path);
    std::vector<std::uint64_t> certificate(const Partition &p) const;
    std::vector<Vertex> stabilizer_orbits(const std::vector<Vertex> &prefix) const;
    void record_automorphism(const std::vector<Vertex> &from, const std::vector<Vertex> &to);
    static std::size_t common_prefix(const std::vector<Vertex> &a, const std::vector<Vertex> &b);

    const Graph &m_graph;
    BitMatrix m_matrix;
    CanonLimits m_limits;
    std::vector<std::size_t> m_count;
    std::size_t m_nodes = 0;

    bool m_have_leaf = false;
    std::vector<std::uint64_t> m_first_cert;
    std::vector<Vertex> m_first_lab;
    std::vector<Vertex> m_first_path;
    std::vector<std::uint64_t> m_best_cert;
    std::vector<Vertex> m_best_lab;
    std::vector<Vertex> m_best_path;
    std::vector<std::vector<Vertex>> m_generators;
};

unsigned vertex_color(const Graph &g, Vertex v)
{
    return (g.is_root(v) ? 1u : 0u) | (g.has_loop(v) ? 2u : 0u);
}

Partition Searcher::initial_partition() const
{
    const auto n = m_graph.vertex_count();
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), Vertex{0});
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](Vertex a, Vertex b) {
        return vertex_color(m_graph, a) < vertex_color(m_graph, b);
    });
    p.cell_end.assign(n, 0);
    p.cell_of.assign(n, 0);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || vertex_color(m_graph, p.lab[i]) != vertex_color(m_graph, p.lab[start])) {
            p.cell_end[start] = i;
            for (std::size_t j = start; j < i; ++j) {
                p.cell_of[p.lab[j]] = start;
            }
            ++p.cells;
            start = i;
        }
    }
    return p;
}

void Searcher::refine(Partition &p, std::deque<std::size_t> queue)
{
    std::vector<char> queued(p.lab.size(), 0);
    for (auto s : queue) {
        queued[s] = 1;
    }
    std::vector<Vertex> splitter;
    std::vector<std::size_t> touched;
    while (!queue.empty() && !p.discrete()) {
        const std::size_t s = queue.front();
        queue.pop_front();
        queued[s] = 0;
        splitter.assign(p.lab.begin() + static_cast<std::ptrdiff_t>(s),
                        p.lab.begin() + static_cast<std::ptrdiff_t>(p.cell_end[s]));
        touched.clear();
        for (Vertex w : splitter) {
            for (Vertex u : m_graph.neighbors(w)) {
                if (m_count[u]++ == 0) {
                    touched.push_back(p.cell_of[u]);
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (std::size_t start : touched) {
            const std::size_t end = p.cell_end[start];
            if (end - start == 1) {
                continue;
            }
            auto first = p.lab.begin() + static_cast<std::ptrdiff_t>(start);
            auto last = p.lab.begin() + static_cast<std::ptrdiff_t>(end);
            std::sort(first, last, [&](Vertex a, Vertex b) { return m_count[a] < m_count[b]; });
            if (m_count[p.lab[start]] == m_count[p.lab[end - 1]]) {
                continue;
            }
            const bool was_queued = queued[start] != 0;
            std::size_t frag = start;
            for (std::size_t i = start + 1; i <= end; ++i) {
                if (i == end || m_count[p.lab[i]] != m_count[p.lab[frag]]) {
                    p.cell_end[frag] = i;
                    for (std::size_t j = frag; j < i; ++j) {
                        p.cell_of[p.lab[j]] = frag;
                    }
                    if (frag != start) {
                        ++p.cells;
                    }
                    if (!queued[frag]) {
                        queued[frag] = 1;
                        queue.push_back(frag);
                    }
                    frag = i;
                }
            }
            (void)was_queued;
        }
        for (Vertex w : splitter) {
            for (Vertex u : m_graph.neighbors(w)) {
                m_count[u] = 0;
            }
        }
    }
}

void Searcher::individualize(Partition &p, Vertex v) const
{
    const std::size_t start = p.cell_of[v];
    const std::size_t end = p.cell_end[start];
    auto it = std::find(p.lab.begin() + static_cast<std::ptrdiff_t>(start),
                        p.lab.begin() + static_cast<std::ptrdiff_t>(end), v);
    std::iter_swap(p.lab.begin() + static_cast<std::ptrdiff_t>(start), it);
    p.cell_end[start] = start + 1;
    p.cell_end[start + 1] = end;
    for (std::size_t j = start + 1; j < end; ++j) {
        p.cell_of[p.lab[j]] = start + 1;
    }
    ++p.cells;
}

std::vector<std::uint64_t> Searcher::certificate(const Partition &p) const
{
    const auto n = p.lab.size();
    std::vector<std::uint64_t> bits((n * n + 63) / 64, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            if (m_matrix.test(p.lab[i], p.lab[j])) {
                bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
            }
        }
    }
    return bits;
}

std::vector<Vertex> Searcher::stabilizer_orbits(const std::vector<Vertex> &prefix) const
{
    const auto n = m_graph.vertex_count();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto &gen : m_generators) {
        if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gen[v] == v; })) {
            continue;
        }
        for (Vertex v = 0; v < n; ++v) {
            const Vertex a = find(v);
            const Vertex b = find(gen[v]);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        parent[v] = find(v);
    }
    return parent;
}

void Searcher::record_automorphism(const std::vector<Vertex> &from, const std::vector<Vertex> &to)
{
    std::vector<Vertex> gen(from.size());
    bool identity = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
        gen[from[i]] = to[i];
        identity = identity && from[i] == to[i];
    }
    if (!identity) {
        m_generators.push_back(std::move(gen));
    }
}

std::size_t Searcher::common_prefix(const std::vector<Vertex> &a, const std::vector<Vertex> &b)
{
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
        ++i;
    }
    return i;
}

// Returns the depth the caller should resume at; values below the current
// depth unwind the recursion.
std::size_t Searcher::search(Partition p, std::vector<Vertex> &path)
{
    if (++m_nodes > m_limits.max_search_nodes) {
        fail(ErrorKind::SizeLimitExceeded, "canonical labeling search exceeded node budget");
    }
    const std::size_t depth = path.size();
    if (p.discrete()) {
        auto cert = certificate(p);
        if (!m_have_leaf) {
            m_have_leaf = true;
            m_first_cert = m_best_cert = std::move(cert);
            m_first_lab = m_best_lab = p.lab;
            m_first_path = m_best_path = path;
            return depth;
        }
        if (cert == m_first_cert) {
            record_automorphism(p.lab, m_first_lab);
            return common_prefix(path, m_first_path);
        }
        if (cert == m_best_cert) {
            record_automorphism(p.lab, m_best_lab);
            return common_prefix(path, m_best_path);
        }
        if (cert < m_best_cert) {
            m_best_cert = std::move(cert);
            m_best_lab = p.lab;
            m_best_path = path;
        }
        return depth;
    }

    std::size_t target = 0;
    while (p.cell_end[target] - target == 1) {
        target = p.cell_end[target];
    }
    std::vector<Vertex> children(p.lab.begin() + static_cast<std::ptrdiff_t>(target),
                                 p.lab.begin() + static_cast<std::ptrdiff_t>(p.cell_end[target]));
    std::sort(children.begin(), children.end());
    std::vector<Vertex> explored;
    for (Vertex v : children) {
        if (!explored.empty()) {
            const auto orbit = stabilizer_orbits(path);
            if (std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return orbit[e] == orbit[v]; })) {
                continue;
            }
        }
        explored.push_back(v);
        Partition child = p;
        individualize(child, v);
        refine(child, std::deque<std::size_t>{child.cell_of[v]});
        path.push_back(v);
        const std::size_t resume = search(std::move(child), path);
        path.pop_back();
        if (resume < depth) {
            return resume;
        }
    }
    return depth;
}

CanonicalLabeling Searcher::run()
{
    const auto n = m_graph.vertex_count();
    Partition p = initial_partition();
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n; s = p.cell_end[s]) {
        queue.push_back(s);
    }
    refine(p, std::move(queue));
    std::vector<Vertex> path;
    search(std::move(p), path);

    CanonicalLabeling result;
    result.position.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        result.position[m_best_lab[i]] = static_cast<Vertex>(i);
    }
    std::string bytes;
    bytes.push_back('C');
    for (int shift = 0; shift < 32; shift += 8) {
        bytes.push_back(static_cast<char>((n >> shift) & 0xff));
    }
    for (std::size_t i = 0; i < n; ++i) {
        bytes.push_back(static_cast<char>(vertex_color(m_graph, m_best_lab[i])));
    }
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::size_t b = 0; b < (pairs + 7) / 8; ++b) {
        const auto word = m_best_cert[b / 8];
        bytes.push_back(static_cast<char>((word >> (56 - 8 * (b % 8))) & 0xff));
    }
    result.key = CanonicalKey(std::move(bytes));
    return result;
}

void check_size(const Graph &g, const CanonLimits &limits)
{
    if (g.vertex_count() > limits.max_component_vertices) {
        fail(ErrorKind::SizeLimitExceeded, "component with " + std::to_string(g.vertex_count()) +
                                               " vertices exceeds canonicalization bound " +
                                               std::to_string(limits.max_component_vertices));
    }
}

} // namespace

std::string CanonicalKey::hex() const
{
    std::string out;
    out.reserve(m_bytes.size() * 2);
    for (unsigned char c : m_bytes) {
        out.push_back(hex_digits[c >> 4]);
        out.push_back(hex_digits[c & 0xf]);
    }
    return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string &hex)
{
    if (hex.size() % 2 != 0) {
        fail(ErrorKind::ParseError, "odd-length key hex");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        fail(ErrorKind::ParseError, std::string("bad hex digit '") + c + "'");
    };
    std::string bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    }
    return CanonicalKey(std::move(bytes));
}

CanonicalLabeling canonical_labeling(const Graph &g, const CanonLimits &limits)
{
    check_size(g, limits);
    Searcher searcher(g, limits);
    return searcher.run();
}

CanonicalKey canonical_form(const Graph &g, const CanonLimits &limits)
{
    if (g.vertex_count() > 0 && is_connected(g)) {
        return canonical_labeling(g, limits).key;
    }
    std::map<CanonicalKey, std::size_t> parts;
    for (const auto &vertices : component_vertex_sets(g)) {
        ++parts[canonical_labeling(g.induced(vertices), limits).key];
    }
    std::string bytes = "F";
    for (const auto &[key, count] : parts) {
        for (int shift = 0; shift < 32; shift += 8) {
            bytes.push_back(static_cast<char>((count >> shift) & 0xff));
        }
        for (int shift = 0; shift < 32; shift += 8) {
            bytes.push_back(static_cast<char>((key.bytes().size() >> shift) & 0xff));
        }
        bytes += key.bytes();
    }
    return CanonicalKey(std::move(bytes));
}

Graph canonical_graph(const Graph &g, const CanonLimits &limits)
{
    const auto labeling = canonical_labeling(g, limits);
    return g.relabeled(labeling.position);
}

bool is_isomorphic(const Graph &a, const Graph &b, const CanonLimits &limits)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.roots().size() != b.roots().size() || a.loop_count() != b.loop_count()) {
        return false;
    }
    return canonical_form(a, limits) == canonical_form(b, limits);
}

std::vector<Vertex> automorphism_orbits(const Graph &g, const CanonLimits &limits)
{
    check_size(g, limits);
    Searcher searcher(g, limits);
    searcher.run();
    const auto n = g.vertex_count();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            v = parent[v] = parent[parent[v]];
        }
        return v;
    };
    for (const auto &gen : searcher.generators()) {
        for (Vertex v = 0; v < n; ++v) {
            const Vertex a = find(v);
            const Vertex b = find(gen[v]);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        parent[v] = find(v);
    }
    return parent;
}

} // namespace gpring
