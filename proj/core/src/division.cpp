#include <gpring/factorization.hpp>

#include <gpring/error.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gpring {

namespace {

constexpr std::int8_t unknown = -1;

// Each vertex v of g gets a coordinate pair (layer y in q, vertex b of p).
// q's adjacency and root flags start unknown and are fixed by the first pair
// of vertices whose adjacency depends on them.
//
// For the direct product g and p may be twin quotients: each vertex then
// stands for a class of vertices with equal neighborhoods, carries its class
// size as weight and its degree in the full graph.
struct Weights {
    std::vector<long> g_degree;
    std::vector<long> p_degree;
    std::vector<long> g_weight;
    std::vector<long> p_weight;
    std::size_t full_layers = 0;
};

Weights unit_weights(const Graph &g, const Graph &p)
{
    Weights w;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        w.g_degree.push_back(static_cast<long>(g.degree(v)));
    }
    for (Vertex b = 0; b < p.vertex_count(); ++b) {
        w.p_degree.push_back(static_cast<long>(p.degree(b)));
    }
    w.g_weight.assign(g.vertex_count(), 1);
    w.p_weight.assign(p.vertex_count(), 1);
    w.full_layers = g.vertex_count() / p.vertex_count();
    return w;
}

class Division {
public:
    Division(const Graph &g, const Graph &p, ProductOp op, Side side, std::size_t budget, Weights weights)
        : m_g(g), m_p(p), m_op(op), m_side(side), m_budget(budget), m_n(g.vertex_count()), m_k(p.vertex_count()),
          m_layers(m_n / m_k), m_w(std::move(weights))
    {
        m_adj_g.assign(m_n * m_n, 0);
        for (const auto &[u, v] : g.edges()) {
            m_adj_g[u * m_n + v] = m_adj_g[v * m_n + u] = 1;
        }
        m_adj_q.assign(m_layers * m_layers, unknown);
        if (op != ProductOp::Direct) {
            for (std::size_t y = 0; y < m_layers; ++y) {
                m_adj_q[y * m_layers + y] = 0;
            }
        }
        m_root_q.assign(m_layers, keeps_roots(op) ? unknown : 0);
        m_deg_q.assign(m_layers, -1);
        m_max_deg = static_cast<int>(m_w.full_layers) - (op == ProductOp::Direct ? 0 : 1);
        m_weight_q.assign(m_layers, -1);
        if (op == ProductOp::Direct) {
            m_codeg_g = codegrees(g, m_w.g_weight);
            m_codeg_p = codegrees(p, m_w.p_weight);
            m_codeg_q.assign(m_layers * m_layers, -1);
        }
        const long top = *std::max_element(m_w.g_degree.begin(), m_w.g_degree.end());
        m_avail.assign(static_cast<std::size_t>(top) + 2, 0);
        m_need.assign(m_avail.size(), 0);
        for (Vertex v = 0; v < m_n; ++v) {
            ++m_avail[m_w.g_degree[v]];
        }
        m_layer_of.assign(m_n, -1);
        m_coord_of.assign(m_n, -1);
        m_used.assign(m_layers * m_k, 0);
        m_fiber_size.assign(m_k, 0);
        m_open.resize(m_n);
        for (Vertex v = 0; v < m_n; ++v) {
            m_open[v] = g.degree(v) - (g.has_loop(v) ? 1 : 0);
        }
    }

    std::optional<Graph> run()
    {
        if (!compatible_counts()) {
            return std::nullopt;
        }
        bfs_order();
        find_twins();
        // Orbits ignore class weights, so they only apply to unweighted p.
        std::set<Vertex> reps;
        if (std::all_of(m_w.p_weight.begin(), m_w.p_weight.end(), [](auto w) { return w == 1; })) {
            const auto orbit = automorphism_orbits(m_p);
            reps.insert(orbit.begin(), orbit.end());
        } else {
            for (Vertex b = 0; b < m_k; ++b) {
                reps.insert(b);
            }
        }
        for (Vertex b : reps) {
            if (place(0, 0, b)) {
                return m_result;
            }
        }
        return std::nullopt;
    }

private:
    struct Rel {
        bool equal;
        std::int8_t adjacent;
        std::int8_t root;
    };

    // Degree of a product vertex whose q-layer has degree d and root flag r.
    long degree_formula(long d, int r, Vertex b) const
    {
        const long dp = m_w.p_degree[b];
        const bool right = m_side == Side::Right;
        switch (m_op) {
        case ProductOp::Cartesian: return d + dp;
        case ProductOp::Strong: return (d + 1) * (dp + 1) - 1;
        case ProductOp::Direct: return d * dp;
        case ProductOp::Lex:
        case ProductOp::ModLex:
            return right ? d * static_cast<long>(m_k) + dp : dp * static_cast<long>(m_layers) + d;
        case ProductOp::Hierarchical:
        case ProductOp::RootedHierarchical:
            return right ? dp + (m_p.is_root(b) ? d : 0) : d + (r ? dp : 0);
        }
        return -1;
    }

    bool uses_root_in_degree() const
    {
        return keeps_roots(m_op) && m_side == Side::Left;
    }

    // Calls visit(d, r) for every layer degree / root flag consistent with
    // placing a vertex of degree deg on p-vertex b of layer y.
    template <typename Visit>
    void degree_options(std::size_t y, Vertex b, long deg, Visit &&visit) const
    {
        const int d_lo = m_deg_q[y] >= 0 ? m_deg_q[y] : 0;
        const int d_hi = m_deg_q[y] >= 0 ? m_deg_q[y] : m_max_deg;
        const bool root_free = uses_root_in_degree() && m_root_q[y] == unknown;
        const int r_fixed = m_root_q[y] == 1 ? 1 : 0;
        for (int d = d_lo; d <= d_hi; ++d) {
            for (int r = 0; r < (root_free ? 2 : 1); ++r) {
                const int rr = root_free ? r : r_fixed;
                if (degree_formula(d, rr, b) == deg) {
                    visit(d, rr);
                }
            }
        }
    }

    bool compatible(Vertex v, Vertex b) const
    {
        bool any = false;
        const long deg = m_w.g_degree[v];
        if (m_w.g_weight[v] % m_w.p_weight[b] != 0) {
            return false;
        }
        const int d_hi = m_max_deg;
        for (int d = 0; d <= d_hi && !any; ++d) {
            for (int r = 0; r < 2 && !any; ++r) {
                any = degree_formula(d, r, b) == deg;
            }
        }
        return any;
    }

    bool compatible_counts()
    {
        std::vector<std::size_t> per_b(m_k, 0);
        m_choices.assign(m_n, 0);
        for (Vertex v = 0; v < m_n; ++v) {
            for (Vertex b = 0; b < m_k; ++b) {
                if (compatible(v, b)) {
                    ++per_b[b];
                    ++m_choices[v];
                }
            }
            if (m_choices[v] == 0) {
                return false;
            }
        }
        return std::all_of(per_b.begin(), per_b.end(), [&](std::size_t c) { return c >= m_layers; });
    }

    void bfs_order()
    {
        std::vector<char> seen(m_n, 0);
        std::vector<Vertex> starts(m_n);
        for (Vertex v = 0; v < m_n; ++v) {
            starts[v] = v;
        }
        std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
            if (keeps_roots(m_op) && m_g.is_root(a) != m_g.is_root(b)) {
                return m_g.is_root(a);
            }
            return m_choices[a] < m_choices[b];
        });
        for (Vertex s : starts) {
            if (seen[s]) {
                continue;
            }
            std::deque<Vertex> queue{s};
            seen[s] = 1;
            while (!queue.empty()) {
                const Vertex v = queue.front();
                queue.pop_front();
                m_order.push_back(v);
                for (Vertex w : m_g.neighbors(v)) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    // Pairs whose transposition is an automorphism of g. Any solution can be
    // permuted so that the earlier vertex of such a pair takes the smaller
    // slot; with the layer and first-vertex conventions this keeps the
    // lexicographically least solution reachable.
    void find_twins()
    {
        std::vector<std::size_t> position(m_n);
        for (std::size_t i = 0; i < m_n; ++i) {
            position[m_order[i]] = i;
        }
        m_twins_before.assign(m_n, {});
        for (Vertex u = 0; u < m_n; ++u) {
            for (Vertex w = u + 1; w < m_n; ++w) {
                if (m_w.g_degree[u] != m_w.g_degree[w] || m_w.g_weight[u] != m_w.g_weight[w] || m_g.has_loop(u) != m_g.has_loop(w) ||
                    m_g.is_root(u) != m_g.is_root(w)) {
                    continue;
                }
                bool twins = true;
                for (Vertex x : m_g.neighbors(u)) {
                    if (x != u && x != w && !m_adj_g[w * m_n + x]) {
                        twins = false;
                        break;
                    }
                }
                if (twins) {
                    const bool u_first = position[u] < position[w];
                    m_twins_before[u_first ? w : u].push_back(u_first ? u : w);
                }
            }
        }
    }

    bool twin_order_ok(Vertex v, std::size_t y, Vertex b) const
    {
        const auto slot = static_cast<int>(y * m_k + b);
        for (Vertex u : m_twins_before[v]) {
            if (m_layer_of[u] * static_cast<int>(m_k) + m_coord_of[u] >= slot) {
                return false;
            }
        }
        return true;
    }

    bool place(std::size_t depth, std::size_t y, Vertex b)
    {
        if (++m_nodes > m_budget) {
            fail(ErrorKind::SizeLimitExceeded, "division search budget exhausted");
        }
        const Vertex v = m_order[depth];
        const std::size_t mark = m_trail.size();
        const std::size_t layers_before = m_layer_count;
        m_layer_count = std::max(m_layer_count, y + 1);
        m_layer_of[v] = static_cast<int>(y);
        m_coord_of[v] = static_cast<int>(b);
        m_used[y * m_k + b] = 1;
        ++m_fiber_size[b];
        --m_avail[m_w.g_degree[v]];
        for (Vertex w : m_g.neighbors(v)) {
            if (w != v) {
                --m_open[w];
            }
        }
        bool ok = infer_weight(y, b, v) && infer_degree(y, b, m_w.g_degree[v]) && consistent(depth, v) && closed_ok(v) &&
                  layers_ok() && slots_ok() && fiber_ok(b);
        for (Vertex w : m_g.neighbors(v)) {
            if (ok && w != v && m_open[w] == 0 && m_layer_of[w] >= 0) {
                ok = closed_ok(w);
            }
        }
        if (ok) {
            if (depth + 1 == m_n) {
                m_result = build();
                if (m_result) {
                    return true;
                }
            }
            const std::size_t limit = depth + 1 == m_n ? 0 : std::min(m_layer_count + 1, m_layers);
            for (std::size_t y2 = 0; y2 < limit; ++y2) {
                for (Vertex b2 = 0; b2 < m_k; ++b2) {
                    if (!m_used[y2 * m_k + b2] && twin_order_ok(m_order[depth + 1], y2, b2) &&
                        place(depth + 1, y2, b2)) {
                        return true;
                    }
                }
            }
        }
        for (Vertex w : m_g.neighbors(v)) {
            if (w != v) {
                ++m_open[w];
            }
        }
        m_used[y * m_k + b] = 0;
        --m_fiber_size[b];
        ++m_avail[m_w.g_degree[v]];
        m_layer_of[v] = -1;
        m_coord_of[v] = -1;
        m_layer_count = layers_before;
        undo(mark);
        return false;
    }

    Rel q_rel(std::size_t y, std::size_t y2) const
    {
        return {y == y2, m_adj_q[y * m_layers + y2], m_root_q[y]};
    }

    Rel p_rel(Vertex b, Vertex b2) const
    {
        return {b == b2, static_cast<std::int8_t>(m_p.adjacent(b, b2)), static_cast<std::int8_t>(m_p.is_root(b))};
    }

    bool evaluate(const Rel &q, const Rel &p, bool adj, bool root) const
    {
        const CoordRelation qr{q.equal, q.adjacent == unknown ? adj : q.adjacent == 1,
                               q.root == unknown ? root : q.root == 1};
        const CoordRelation pr{p.equal, p.adjacent == 1, p.root == 1};
        return m_side == Side::Right ? product_adjacent(m_op, qr, pr) : product_adjacent(m_op, pr, qr);
    }

    // Requires the product adjacency between layers (y, y2) and p-vertices
    // (b, b2) to equal target, fixing q's unknowns when they decide it.
    bool require(std::size_t y, std::size_t y2, Vertex b, Vertex b2, bool target)
    {
        const Rel q = q_rel(y, y2);
        const Rel p = p_rel(b, b2);
        bool fits[2][2];
        int count = 0;
        for (int a = 0; a < 2; ++a) {
            for (int r = 0; r < 2; ++r) {
                const bool valid_a = q.adjacent == unknown || q.adjacent == a;
                const bool valid_r = q.root == unknown || q.root == r;
                fits[a][r] = valid_a && valid_r && evaluate(q, p, a, r) == target;
                count += fits[a][r];
            }
        }
        if (count == 0) {
            return false;
        }
        if (q.adjacent == unknown) {
            const bool any0 = fits[0][0] || fits[0][1];
            const bool any1 = fits[1][0] || fits[1][1];
            if (any0 != any1) {
                set_adj(y, y2, any1 ? 1 : 0);
            }
        }
        if (q.root == unknown) {
            const bool any0 = fits[0][0] || fits[1][0];
            const bool any1 = fits[0][1] || fits[1][1];
            if (any0 != any1) {
                set_root(y, any1 ? 1 : 0);
            }
        }
        return true;
    }

    bool consistent(std::size_t depth, Vertex v)
    {
        const auto y = static_cast<std::size_t>(m_layer_of[v]);
        const auto b = static_cast<Vertex>(m_coord_of[v]);
        if (!require(y, y, b, b, m_g.has_loop(v))) {
            return false;
        }
        if (keeps_roots(m_op)) {
            if (m_p.is_root(b)) {
                const std::int8_t want = m_g.is_root(v) ? 1 : 0;
                if (m_root_q[y] == unknown) {
                    set_root(y, want);
                } else if (m_root_q[y] != want) {
                    return false;
                }
            } else if (m_g.is_root(v)) {
                return false;
            }
        }
        for (std::size_t i = 0; i < depth; ++i) {
            const Vertex w = m_order[i];
            const auto yw = static_cast<std::size_t>(m_layer_of[w]);
            const auto bw = static_cast<Vertex>(m_coord_of[w]);
            if (!require(y, yw, b, bw, m_adj_g[v * m_n + w] != 0) || !codegree_ok(y, yw, b, bw, v, w)) {
                return false;
            }
        }
        return true;
    }

    // Direct product: common neighborhoods are products, so the common degree
    // of two vertices is the product of their coordinates' common degrees.
    bool codegree_ok(std::size_t y, std::size_t yw, Vertex b, Vertex bw, Vertex v, Vertex w)
    {
        if (m_op != ProductOp::Direct) {
            return true;
        }
        const long in_g = m_codeg_g[v * m_n + w];
        const long in_p = m_codeg_p[b * m_k + bw];
        if (in_p == 0) {
            return in_g == 0;
        }
        if (in_g % in_p != 0) {
            return false;
        }
        const long in_q = in_g / in_p;
        if (y == yw) {
            if (m_deg_q[y] < 0) {
                set_degree(y, static_cast<int>(in_q));
                return true;
            }
            return m_deg_q[y] == in_q;
        }
        long &known = m_codeg_q[y * m_layers + yw];
        if (known < 0) {
            known = in_q;
            m_codeg_q[yw * m_layers + y] = in_q;
            m_trail.push_back(m_layers * m_layers + 3 * m_layers + y * m_layers + yw);
            return true;
        }
        return known == in_q;
    }

    static std::vector<long> codegrees(const Graph &g, const std::vector<long> &weight)
    {
        const std::size_t n = g.vertex_count();
        std::vector<long> out(n * n, 0);
        std::vector<long> hood(n, 0);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex x : g.neighbors(u)) {
                hood[x] = weight[x];
            }
            for (Vertex w = 0; w < n; ++w) {
                long sum = 0;
                for (Vertex x : g.neighbors(w)) {
                    sum += hood[x];
                }
                out[u * n + w] = sum;
            }
            for (Vertex x : g.neighbors(u)) {
                hood[x] = 0;
            }
        }
        return out;
    }

    // With q on the right of a lexicographic product, each full fiber
    // {b} x V(q) induces a copy of q, which has to be connected.
    bool fiber_ok(Vertex b) const
    {
        if (m_side != Side::Left || (m_op != ProductOp::Lex && m_op != ProductOp::ModLex) ||
            m_fiber_size[b] != m_layers) {
            return true;
        }
        std::vector<Vertex> stack;
        std::vector<char> seen(m_n, 0);
        for (Vertex v = 0; v < m_n && stack.empty(); ++v) {
            if (m_coord_of[v] == static_cast<int>(b)) {
                stack.push_back(v);
                seen[v] = 1;
            }
        }
        std::size_t reached = 0;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            ++reached;
            for (Vertex w : m_g.neighbors(v)) {
                if (!seen[w] && m_coord_of[w] == static_cast<int>(b)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return reached == m_layers;
    }

    // Class sizes multiply: weight(v) = weight(layer) * weight(b).
    bool infer_weight(std::size_t y, Vertex b, Vertex v)
    {
        if (m_w.g_weight[v] % m_w.p_weight[b] != 0) {
            return false;
        }
        const long w = m_w.g_weight[v] / m_w.p_weight[b];
        if (m_weight_q[y] < 0) {
            m_weight_q[y] = w;
            m_trail.push_back(m_layers * m_layers + 2 * m_layers + y);
            return true;
        }
        return m_weight_q[y] == w;
    }

    bool infer_degree(std::size_t y, Vertex b, long deg)
    {
        int count = 0;
        int d_seen = -2;
        int r_seen = -2;
        degree_options(y, b, deg, [&](int d, int r) {
            ++count;
            d_seen = d_seen == -2 || d_seen == d ? d : -1;
            r_seen = r_seen == -2 || r_seen == r ? r : -1;
        });
        if (count == 0) {
            return false;
        }
        if (m_deg_q[y] < 0 && d_seen >= 0) {
            set_degree(y, d_seen);
        }
        if (uses_root_in_degree() && m_root_q[y] == unknown && r_seen >= 0) {
            set_root(y, static_cast<std::int8_t>(r_seen));
        }
        return true;
    }

    // Known layer degrees bound the number of known and possible q-edges.
    bool layers_ok() const
    {
        for (std::size_t y = 0; y < m_layers; ++y) {
            if (m_deg_q[y] < 0) {
                continue;
            }
            long least = 0;
            long most = 0;
            for (std::size_t y2 = 0; y2 < m_layers; ++y2) {
                const auto a = m_adj_q[y * m_layers + y2];
                if (a == 0) {
                    continue;
                }
                const long w = m_weight_q[y2];
                least += a == 1 ? std::max(w, 1L) : 0;
                most += w < 0 ? static_cast<long>(m_w.full_layers) : w;
            }
            if (least > m_deg_q[y] || most < m_deg_q[y]) {
                return false;
            }
        }
        return true;
    }

    // Empty slots whose degree is already determined must be fillable by the
    // unplaced vertices of that degree.
    bool slots_ok()
    {
        bool ok = true;
        m_touched.clear();
        for (std::size_t y = 0; y < m_layers; ++y) {
            const bool root_known = !uses_root_in_degree() || m_root_q[y] != unknown;
            for (Vertex b = 0; b < m_k; ++b) {
                if (m_used[y * m_k + b]) {
                    continue;
                }
                long deg = -1;
                if (m_deg_q[y] >= 0 && root_known) {
                    deg = degree_formula(m_deg_q[y], m_root_q[y] == 1, b);
                } else if (m_side == Side::Right && keeps_roots(m_op) && !m_p.is_root(b)) {
                    deg = m_w.p_degree[b];
                }
                if (deg < 0) {
                    continue;
                }
                if (deg >= static_cast<long>(m_need.size())) {
                    ok = false;
                    break;
                }
                if (m_need[deg]++ == 0) {
                    m_touched.push_back(static_cast<std::size_t>(deg));
                }
                if (m_need[deg] > m_avail[deg]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                break;
            }
        }
        for (std::size_t d : m_touched) {
            m_need[d] = 0;
        }
        return ok;
    }

    // A vertex whose neighbors are all placed must not need an empty slot of
    // its own layer as a neighbor.
    bool closed_ok(Vertex v) const
    {
        if (m_open[v] != 0) {
            return true;
        }
        const auto y = static_cast<std::size_t>(m_layer_of[v]);
        const auto b = static_cast<Vertex>(m_coord_of[v]);
        const Rel q = q_rel(y, y);
        if (q.adjacent == unknown || q.root == unknown) {
            return true;
        }
        for (Vertex b2 = 0; b2 < m_k; ++b2) {
            if (b2 != b && !m_used[y * m_k + b2] && evaluate(q, p_rel(b, b2), false, false)) {
                return false;
            }
        }
        return true;
    }

    void set_adj(std::size_t y, std::size_t y2, std::int8_t value)
    {
        m_adj_q[y * m_layers + y2] = value;
        m_adj_q[y2 * m_layers + y] = value;
        m_trail.push_back(y * m_layers + y2);
        m_trail.push_back(y2 * m_layers + y);
    }

    void set_root(std::size_t y, std::int8_t value)
    {
        m_root_q[y] = value;
        m_trail.push_back(m_layers * m_layers + y);
    }

    void set_degree(std::size_t y, int value)
    {
        m_deg_q[y] = value;
        m_trail.push_back(m_layers * m_layers + m_layers + y);
    }

    void undo(std::size_t mark)
    {
        const std::size_t square = m_layers * m_layers;
        while (m_trail.size() > mark) {
            const std::size_t index = m_trail.back();
            m_trail.pop_back();
            if (index < square) {
                m_adj_q[index] = unknown;
            } else if (index < square + m_layers) {
                m_root_q[index - square] = unknown;
            } else if (index < square + 2 * m_layers) {
                m_deg_q[index - square - m_layers] = -1;
            } else if (index < square + 3 * m_layers) {
                m_weight_q[index - square - 2 * m_layers] = -1;
            } else {
                const std::size_t pair = index - square - 3 * m_layers;
                m_codeg_q[pair] = -1;
                m_codeg_q[(pair % m_layers) * m_layers + pair / m_layers] = -1;
            }
        }
    }

    std::optional<Graph> build() const
    {
        std::vector<Edge> edges;
        std::vector<Vertex> roots;
        for (std::size_t y = 0; y < m_layers; ++y) {
            for (std::size_t y2 = y; y2 < m_layers; ++y2) {
                if (m_adj_q[y * m_layers + y2] == 1) {
                    edges.emplace_back(static_cast<Vertex>(y), static_cast<Vertex>(y2));
                }
            }
            if (m_root_q[y] == 1) {
                roots.push_back(static_cast<Vertex>(y));
            }
        }
        const bool loops = m_op == ProductOp::Direct;
        Graph q(m_layers, std::move(edges), std::move(roots), loops);
        try {
            check_operand(q, m_op);
        } catch (const Error &) {
            return std::nullopt;
        }
        const Graph prod = m_side == Side::Right ? product(q, m_p, m_op, {m_n}) : product(m_p, q, m_op, {m_n});
        auto index = [&](Vertex v) {
            const auto y = static_cast<Vertex>(m_layer_of[v]);
            const auto b = static_cast<Vertex>(m_coord_of[v]);
            return m_side == Side::Right ? y * static_cast<Vertex>(m_k) + b : b * static_cast<Vertex>(m_layers) + y;
        };
        for (Vertex v = 0; v < m_n; ++v) {
            if (prod.is_root(index(v)) != m_g.is_root(v)) {
                return std::nullopt;
            }
            for (Vertex w = v; w < m_n; ++w) {
                if (prod.adjacent(index(v), index(w)) != (m_adj_g[v * m_n + w] != 0)) {
                    return std::nullopt;
                }
            }
        }
        return expanded(q);
    }

    // Replaces every layer by weight-many copies with the same neighborhood.
    Graph expanded(const Graph &q) const
    {
        if (std::all_of(m_weight_q.begin(), m_weight_q.end(), [](long w) { return w == 1; })) {
            return q;
        }
        std::vector<Vertex> first(m_layers + 1, 0);
        for (std::size_t y = 0; y < m_layers; ++y) {
            first[y + 1] = first[y] + static_cast<Vertex>(m_weight_q[y]);
        }
        std::vector<Edge> edges;
        for (const auto &[a, b] : q.edges()) {
            for (Vertex u = first[a]; u < first[a + 1]; ++u) {
                for (Vertex v = first[b]; v < first[b + 1]; ++v) {
                    if (a != b || u <= v) {
                        edges.emplace_back(u, v);
                    }
                }
            }
        }
        return Graph(first.back(), std::move(edges), {}, q.allows_loops());
    }

    const Graph &m_g;
    const Graph &m_p;
    ProductOp m_op;
    Side m_side;
    std::size_t m_budget;
    std::size_t m_nodes = 0;
    std::size_t m_n;
    std::size_t m_k;
    std::size_t m_layers;
    std::size_t m_layer_count = 0;
    Weights m_w;
    std::vector<long> m_weight_q;
    std::vector<long> m_codeg_g;
    std::vector<long> m_codeg_p;
    std::vector<long> m_codeg_q;
    std::optional<Graph> m_result;
    std::vector<char> m_adj_g;
    std::vector<std::int8_t> m_adj_q;
    std::vector<std::int8_t> m_root_q;
    std::vector<int> m_deg_q;
    int m_max_deg = 0;
    std::vector<std::size_t> m_avail;
    std::vector<std::size_t> m_need;
    std::vector<std::size_t> m_touched;
    std::vector<std::size_t> m_choices;
    std::vector<int> m_layer_of;
    std::vector<int> m_coord_of;
    std::vector<char> m_used;
    std::vector<std::size_t> m_fiber_size;
    std::vector<std::size_t> m_open;
    std::vector<Vertex> m_order;
    std::vector<std::vector<Vertex>> m_twins_before;
    std::vector<std::size_t> m_trail;
};

// Degree of a product vertex from the degrees of its coordinates, for the
// products where it depends on nothing else. Increasing in both arguments.
std::optional<long> product_degree(ProductOp op, Side side, long dq, long dp, std::size_t layers, std::size_t k)
{
    switch (op) {
    case ProductOp::Cartesian: return dq + dp;
    case ProductOp::Strong: return (dq + 1) * (dp + 1) - 1;
    case ProductOp::Direct: return dq * dp;
    case ProductOp::Lex:
    case ProductOp::ModLex:
        return side == Side::Right ? dq * static_cast<long>(k) + dp : dp * static_cast<long>(layers) + dq;
    default: return std::nullopt;
    }
}

// The degree multiset of g must be the image of some multiset of layer degrees
// combined with the degrees of p. The least remaining degree of g always pairs
// the least remaining layer degree with the least degree of p.
bool degrees_divide(const Graph &g, const Graph &p, ProductOp op, Side side)
{
    const std::size_t k = p.vertex_count();
    const std::size_t layers = g.vertex_count() / k;
    if (!product_degree(op, side, 0, 0, layers, k) || (op == ProductOp::Direct && !is_connected(p))) {
        return true;
    }
    std::map<long, std::size_t> left;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ++left[static_cast<long>(g.degree(v))];
    }
    std::vector<long> pd;
    for (Vertex b = 0; b < k; ++b) {
        pd.push_back(static_cast<long>(p.degree(b)));
    }
    std::sort(pd.begin(), pd.end());
    const long max_dq = static_cast<long>(layers);
    for (std::size_t y = 0; y < layers; ++y) {
        const long m = left.begin()->first;
        long dq = 0;
        while (dq <= max_dq && *product_degree(op, side, dq, pd.front(), layers, k) < m) {
            ++dq;
        }
        if (dq > max_dq || *product_degree(op, side, dq, pd.front(), layers, k) != m) {
            return false;
        }
        for (long d : pd) {
            auto it = left.find(*product_degree(op, side, dq, d, layers, k));
            if (it == left.end()) {
                return false;
            }
            if (--it->second == 0) {
                left.erase(it);
            }
        }
    }
    return left.empty();
}

__extension__ typedef __int128 Wide;

// tr(A^L) for L = 1..count, where A is the adjacency matrix plus shift * I.
std::vector<Wide> walk_traces(const Graph &g, int shift, std::size_t count)
{
    const std::size_t n = g.vertex_count();
    std::vector<Wide> m(n * n, 0);
    std::vector<Wide> next(n * n, 0);
    for (Vertex v = 0; v < n; ++v) {
        m[v * n + v] = 1;
    }
    std::vector<Wide> out;
    for (std::size_t l = 1; l <= count; ++l) {
        Wide trace = 0;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                Wide sum = shift * m[i * n + j];
                for (Vertex w : g.neighbors(j)) {
                    sum += m[i * n + w];
                }
                next[i * n + j] = sum;
            }
            trace += next[i * n + i];
        }
        m.swap(next);
        out.push_back(trace);
    }
    return out;
}

// The power sums t_1..t_m of some integer spectrum give integral elementary
// symmetric functions (Newton's identities). Stops quietly on overflow.
bool newton_integral(const std::vector<Wide> &t)
{
    std::vector<Wide> e{1};
    for (std::size_t j = 1; j <= t.size(); ++j) {
        Wide sum = 0;
        for (std::size_t i = 1; i <= j; ++i) {
            Wide term = 0;
            if (__builtin_mul_overflow(e[j - i], t[i - 1], &term)) {
                return true;
            }
            const bool ok = i % 2 == 1 ? !__builtin_add_overflow(sum, term, &sum) : !__builtin_sub_overflow(sum, term, &sum);
            if (!ok) {
                return true;
            }
        }
        if (sum % static_cast<Wide>(j) != 0) {
            return false;
        }
        e.push_back(sum / static_cast<Wide>(j));
    }
    return true;
}

// Closed walk counts of a product are determined by those of its factors:
// they multiply for the direct product (and for the strong product after
// adding the identity), and convolve binomially for the Cartesian product.
bool traces_divide(const Graph &g, const Graph &p, ProductOp op)
{
    constexpr std::size_t count = 8;
    const std::size_t k = p.vertex_count();
    const std::size_t layers = g.vertex_count() / k;
    if (op != ProductOp::Direct && op != ProductOp::Strong && op != ProductOp::Cartesian) {
        return true;
    }
    const int shift = op == ProductOp::Strong ? 1 : 0;
    const auto tg = walk_traces(g, shift, count);
    const auto tp = walk_traces(p, shift, count);
    std::vector<Wide> tq;
    if (op == ProductOp::Cartesian) {
        // t_L(g) = sum_i C(L, i) t_i(q) t_{L-i}(p), with t_0 the vertex count.
        std::vector<Wide> q_all{static_cast<Wide>(layers)};
        std::vector<Wide> p_all{static_cast<Wide>(k)};
        p_all.insert(p_all.end(), tp.begin(), tp.end());
        for (std::size_t l = 1; l <= count; ++l) {
            Wide rest = tg[l - 1];
            Wide binom = 1;
            for (std::size_t i = 0; i < l; ++i) {
                rest -= binom * q_all[i] * p_all[l - i];
                binom = binom * static_cast<Wide>(l - i) / static_cast<Wide>(i + 1);
            }
            if (rest % static_cast<Wide>(k) != 0) {
                return false;
            }
            q_all.push_back(rest / static_cast<Wide>(k));
        }
        tq.assign(q_all.begin() + 1, q_all.end());
    } else {
        for (std::size_t l = 0; l < count; ++l) {
            if (tp[l] == 0 ? tg[l] != 0 : tg[l] % tp[l] != 0) {
                return false;
            }
            tq.push_back(tp[l] == 0 ? 0 : tg[l] / tp[l]);
        }
        if (std::any_of(tp.begin(), tp.end(), [](Wide t) { return t == 0; })) {
            return true;
        }
    }
    // q has non-negative walk counts, even ones positive unless q is edgeless.
    for (std::size_t l = 0; l < count; ++l) {
        if (tq[l] < 0) {
            return false;
        }
    }
    tq.resize(std::min(count, layers));
    return newton_integral(tq);
}

// Searches the partitions of g into modules of the given size that induce
// connected graphs. When the fibers of a lexicographic product are connected
// they form such a partition, so g = quotient o fiber for the first accepted
// partition. accept sees the quotient and the graph induced by one module.
template <typename Accept>
class ModulePartition {
public:
    ModulePartition(const Graph &g, std::size_t size, std::size_t budget, Accept accept)
        : m_g(g), m_n(g.vertex_count()), m_size(size), m_budget(budget), m_accept(std::move(accept)),
          m_adj(m_n, std::vector<char>(m_n, 0)), m_owner(m_n, -1), m_forbidden(m_n, 0)
    {
        for (const auto &[u, v] : g.edges()) {
            m_adj[u][v] = m_adj[v][u] = 1;
        }
    }

    std::optional<Graph> run()
    {
        next();
        return m_result;
    }

private:
    bool next()
    {
        const auto free = std::find(m_owner.begin(), m_owner.end(), -1);
        if (free == m_owner.end()) {
            return finish();
        }
        const auto saved = m_forbidden;
        for (Vertex v = 0; v < m_n; ++v) {
            m_forbidden[v] = m_owner[v] >= 0;
        }
        const bool found = grow({static_cast<Vertex>(free - m_owner.begin())});
        m_forbidden = saved;
        return found;
    }

    // Closes members under the module condition; false when the closure
    // leaves the allowed vertices or outgrows the size.
    bool close(std::vector<Vertex> &members) const
    {
        std::vector<char> in(m_n, 0);
        for (Vertex v : members) {
            in[v] = 1;
        }
        bool grew = true;
        while (grew) {
            grew = false;
            for (Vertex z = 0; z < m_n; ++z) {
                if (in[z]) {
                    continue;
                }
                std::size_t seen = 0;
                for (Vertex v : members) {
                    seen += m_adj[z][v];
                }
                if (seen != 0 && seen != members.size()) {
                    if (m_forbidden[z] || members.size() == m_size) {
                        return false;
                    }
                    in[z] = 1;
                    members.push_back(z);
                    grew = true;
                }
            }
        }
        return true;
    }

    bool grow(std::vector<Vertex> members)
    {
        if (++m_nodes > m_budget) {
            fail(ErrorKind::SizeLimitExceeded, "division search budget exhausted");
        }
        if (!close(members)) {
            return false;
        }
        if (members.size() == m_size) {
            return place(members);
        }
        Vertex pick = static_cast<Vertex>(m_n);
        for (Vertex v : members) {
            for (Vertex z : m_g.neighbors(v)) {
                if (!m_forbidden[z] && std::find(members.begin(), members.end(), z) == members.end()) {
                    pick = z;
                    break;
                }
            }
            if (pick != m_n) {
                break;
            }
        }
        if (pick == m_n) {
            return false;
        }
        std::vector<Vertex> with = members;
        with.push_back(pick);
        if (grow(std::move(with))) {
            return true;
        }
        m_forbidden[pick] = 1;
        const bool found = grow(std::move(members));
        m_forbidden[pick] = 0;
        return found;
    }

    bool place(std::vector<Vertex> &members)
    {
        std::sort(members.begin(), members.end());
        const Graph inner = m_g.induced(members);
        if (!is_connected(inner) || (!m_modules.empty() && !is_isomorphic(inner, m_g.induced(m_modules.front())))) {
            return false;
        }
        for (Vertex v : members) {
            m_owner[v] = static_cast<int>(m_modules.size());
        }
        m_modules.push_back(members);
        const bool found = next();
        m_modules.pop_back();
        for (Vertex v : members) {
            m_owner[v] = -1;
        }
        return found;
    }

    bool finish()
    {
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < m_modules.size(); ++a) {
            for (std::size_t b = a + 1; b < m_modules.size(); ++b) {
                if (m_adj[m_modules[a].front()][m_modules[b].front()]) {
                    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
                }
            }
        }
        m_result = m_accept(Graph(m_modules.size(), std::move(edges)), m_g.induced(m_modules.front()));
        return m_result.has_value();
    }

    const Graph &m_g;
    std::size_t m_n;
    std::size_t m_size;
    std::size_t m_budget;
    Accept m_accept;
    std::vector<std::vector<char>> m_adj;
    std::vector<int> m_owner;
    std::vector<char> m_forbidden;
    std::vector<std::vector<Vertex>> m_modules;
    std::size_t m_nodes = 0;
    std::optional<Graph> m_result;
};

// Left quotients of a connected rooted hierarchical product p * q. The copy of
// p is a connected layer through the root; deleting the layer's edges leaves
// one copy of q hanging from each layer vertex. Enumerates the connected
// vertex sets of size |V(p)| that contain the root.
class RootLayer {
public:
    RootLayer(const Graph &g, const Graph &p, std::size_t budget)
        : m_g(g), m_p(p), m_k(p.vertex_count()), m_budget(budget), m_state(g.vertex_count(), Free),
          m_target(g.vertex_count(), 0), m_inside(g.vertex_count(), 0)
    {
        // A layer vertex (a, r) has degree deg_p(a) + deg_q(r), and the root
        // fixes deg_q(r).
        const Vertex root = g.roots().front();
        const long shift = static_cast<long>(g.degree(root)) - static_cast<long>(p.degree(p.roots().front()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            m_target[v] = static_cast<long>(g.degree(v)) - shift;
            if (m_target[v] < 1) {
                m_state[v] = Banned;
            }
        }
        m_valid = shift >= 0;
        for (Vertex a = 0; a < m_k; ++a) {
            m_degrees.push_back(static_cast<long>(p.degree(a)));
        }
        std::sort(m_degrees.begin(), m_degrees.end());
    }

    std::optional<Graph> run()
    {
        if (!m_valid) {
            return std::nullopt;
        }
        const Vertex root = m_g.roots().front();
        m_state[root] = In;
        m_layer.push_back(root);
        std::vector<Vertex> candidates;
        offer(root, candidates);
        grow(candidates);
        return m_result;
    }

private:
    enum State : char { Free, In, Candidate, Banned };

    void offer(Vertex v, std::vector<Vertex> &candidates)
    {
        for (Vertex w : m_g.neighbors(v)) {
            if (m_state[w] == Free) {
                m_state[w] = Candidate;
                candidates.push_back(w);
            }
        }
    }

    bool grow(std::vector<Vertex> candidates)
    {
        if (++m_nodes > m_budget) {
            fail(ErrorKind::SizeLimitExceeded, "division search budget exhausted");
        }
        if (m_layer.size() == m_k) {
            return check();
        }
        if (candidates.empty()) {
            return false;
        }
        const Vertex c = candidates.back();
        candidates.pop_back();

        bool fits = true;
        for (Vertex w : m_g.neighbors(c)) {
            if (m_state[w] == In) {
                ++m_inside[c];
                fits = fits && ++m_inside[w] <= m_target[w];
            }
        }
        fits = fits && m_inside[c] <= m_target[c];
        bool found = false;
        if (fits) {
            m_state[c] = In;
            m_layer.push_back(c);
            std::vector<Vertex> with = candidates;
            const std::size_t before = with.size();
            offer(c, with);
            found = grow(with);
            for (std::size_t i = before; i < with.size(); ++i) {
                m_state[with[i]] = Free;
            }
            m_layer.pop_back();
        }
        for (Vertex w : m_g.neighbors(c)) {
            if (m_state[w] == In) {
                --m_inside[w];
            }
        }
        m_inside[c] = 0;
        if (!found) {
            m_state[c] = Banned;
            found = grow(std::move(candidates));
        }
        m_state[c] = Candidate;
        return found;
    }

    bool check()
    {
        std::vector<long> degrees;
        for (Vertex v : m_layer) {
            if (m_inside[v] != m_target[v]) {
                return false;
            }
            degrees.push_back(m_inside[v]);
        }
        std::sort(degrees.begin(), degrees.end());
        if (degrees != m_degrees || !is_isomorphic(m_g.induced(m_layer).with_roots({0}), m_p)) {
            return false;
        }
        const Vertex root = m_g.roots().front();
        const std::size_t n = m_g.vertex_count();
        const std::size_t size = n / m_k;
        std::vector<int> part(n, -1);
        std::optional<CanonicalKey> shape;
        Graph fiber;
        for (std::size_t i = 0; i < m_k; ++i) {
            std::vector<Vertex> members{m_layer[i]};
            part[m_layer[i]] = static_cast<int>(i);
            for (std::size_t at = 0; at < members.size(); ++at) {
                for (Vertex w : m_g.neighbors(members[at])) {
                    if (m_state[w] == In && m_state[members[at]] == In) {
                        continue;
                    }
                    if (part[w] == -1) {
                        part[w] = static_cast<int>(i);
                        members.push_back(w);
                    }
                }
                if (members.size() > size) {
                    return false;
                }
            }
            if (members.size() != size) {
                return false;
            }
            const Graph rooted = m_g.induced(members).with_roots({0});
            const CanonicalKey key = canonical_form(rooted);
            if (shape && *shape != key) {
                return false;
            }
            if (members.front() == root) {
                fiber = rooted;
            }
            shape = key;
        }
        m_result = canonical_graph(fiber);
        return true;
    }

    const Graph &m_g;
    const Graph &m_p;
    std::size_t m_k;
    std::size_t m_budget;
    std::vector<State> m_state;
    std::vector<long> m_target;
    std::vector<long> m_inside;
    std::vector<long> m_degrees;
    bool m_valid = true;
    std::vector<Vertex> m_layer;
    std::size_t m_nodes = 0;
    std::optional<Graph> m_result;
};

// Classes of vertices with equal neighborhoods (a loop puts a vertex in its
// own neighborhood). The direct product of two such quotients is the
// quotient of the product, with class sizes multiplied.
struct TwinQuotient {
    Graph graph;
    std::vector<long> weight;
    std::vector<long> degree;
};

TwinQuotient twin_quotient(const Graph &g)
{
    std::map<std::vector<Vertex>, Vertex> classes;
    std::vector<Vertex> class_of(g.vertex_count());
    std::vector<Vertex> rep;
    TwinQuotient out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> hood(g.neighbors(v).begin(), g.neighbors(v).end());
        std::sort(hood.begin(), hood.end());
        auto [it, fresh] = classes.try_emplace(std::move(hood), static_cast<Vertex>(rep.size()));
        if (fresh) {
            rep.push_back(v);
            out.weight.push_back(0);
            out.degree.push_back(static_cast<long>(g.degree(v)));
        }
        class_of[v] = it->second;
        ++out.weight[it->second];
    }
    std::vector<Edge> edges;
    for (const auto &[u, v] : g.edges()) {
        const Vertex a = class_of[u];
        const Vertex b = class_of[v];
        if (rep[a] == u && rep[b] == v) {
            edges.emplace_back(a, b);
        }
    }
    out.graph = Graph(rep.size(), std::move(edges), {}, g.allows_loops());
    return out;
}

bool same_counts(const Graph &g, const Graph &p, ProductOp op, Side side)
{
    const std::size_t n = g.vertex_count();
    const std::size_t k = p.vertex_count();
    if (k == 0 || n % k != 0) {
        return false;
    }
    if (keeps_roots(op) && (p.roots().empty() || g.roots().size() % p.roots().size() != 0)) {
        return false;
    }
    if (!degrees_divide(g, p, op, side) || !traces_divide(g, p, op)) {
        return false;
    }
    const std::size_t layers = n / k;
    const std::size_t e = g.edge_count();
    switch (op) {
    case ProductOp::Cartesian: {
        // |E| = |V(q)| |E(p)| + |E(q)| |V(p)|
        const std::size_t fixed = layers * p.edge_count();
        return e >= fixed && (e - fixed) % k == 0;
    }
    case ProductOp::Hierarchical:
    case ProductOp::RootedHierarchical:
        if (side == Side::Right) {
            // |E| = |V(q)| |E(p)| + |E(q)| |R(p)|
            const std::size_t fixed = layers * p.edge_count();
            return e >= fixed && (e - fixed) % p.roots().size() == 0;
        }
        return true;
    default:
        return true;
    }
}

} // namespace

std::optional<Graph> divide(const Graph &g, const Graph &p, ProductOp op, Side side, std::size_t budget)
{
    if (!same_counts(g, p, op, side)) {
        return std::nullopt;
    }
    if (p.vertex_count() == g.vertex_count()) {
        if (!is_isomorphic(g, p)) {
            return std::nullopt;
        }
        return unit_graph(op);
    }
    // Fibers are connected modules when the second factor is connected.
    const bool lexlike = op == ProductOp::Lex || op == ProductOp::ModLex;
    if (lexlike && (side == Side::Right ? is_connected(p) : op == ProductOp::ModLex && is_connected(g))) {
        const std::size_t size = side == Side::Right ? p.vertex_count() : g.vertex_count() / p.vertex_count();
        auto accept = [&](const Graph &outer, const Graph &inner) -> std::optional<Graph> {
            const Graph &known = side == Side::Right ? inner : outer;
            const Graph &other = side == Side::Right ? outer : inner;
            if (!is_isomorphic(known, p)) {
                return std::nullopt;
            }
            return canonical_graph(other);
        };
        return ModulePartition(g, size, budget, accept).run();
    }
    if (op == ProductOp::RootedHierarchical && side == Side::Left && is_connected(g) && is_connected(p)) {
        return RootLayer(g, p, budget).run();
    }
    if (op == ProductOp::Strong) {
        // g = q strong p exactly when g with loops = (q with loops) x (p with loops).
        if (auto q = divide(add_loops(g), add_loops(p), ProductOp::Direct, side, budget)) {
            return strip_loops(*q);
        }
        return std::nullopt;
    }
    if (op == ProductOp::Direct) {
        const TwinQuotient gq = twin_quotient(g);
        const TwinQuotient pq = twin_quotient(p);
        if (gq.graph.vertex_count() % pq.graph.vertex_count() != 0) {
            return std::nullopt;
        }
        Weights w{gq.degree, pq.degree, gq.weight, pq.weight, g.vertex_count() / p.vertex_count()};
        return Division(gq.graph, pq.graph, op, side, budget, std::move(w)).run();
    }
    return Division(g, p, op, side, budget, unit_weights(g, p)).run();
}

} // namespace gpring
