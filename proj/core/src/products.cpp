#include <gpring/products.hpp>

#include <gpring/error.hpp>

#include <algorithm>
#include <string>

namespace gpring {

std::string_view product_name(ProductOp op) noexcept
{
    switch (op) {
    case ProductOp::Cartesian: return "cartesian";
    case ProductOp::Hierarchical: return "hierarchical";
    case ProductOp::RootedHierarchical: return "rooted-hierarchical";
    case ProductOp::Strong: return "strong";
    case ProductOp::Direct: return "direct";
    case ProductOp::Lex: return "lex";
    case ProductOp::ModLex: return "modlex";
    }
    return "?";
}

ProductOp parse_product(std::string_view name)
{
    for (ProductOp op : all_products) {
        if (product_name(op) == name) {
            return op;
        }
    }
    fail(ErrorKind::ParseError, "unknown product '" + std::string(name) + "'");
}

bool is_commutative(ProductOp op) noexcept
{
    return op == ProductOp::Cartesian || op == ProductOp::Strong || op == ProductOp::Direct;
}

bool is_semiring_product(ProductOp op) noexcept
{
    return op != ProductOp::Lex;
}

bool keeps_roots(ProductOp op) noexcept
{
    return op == ProductOp::Hierarchical || op == ProductOp::RootedHierarchical;
}

bool product_adjacent(ProductOp op, CoordRelation first, CoordRelation second) noexcept
{
    switch (op) {
    case ProductOp::Hierarchical:
    case ProductOp::RootedHierarchical:
        return (first.equal && second.adjacent) || (first.adjacent && second.equal && second.root);
    case ProductOp::Cartesian:
        return (first.equal && second.adjacent) || (first.adjacent && second.equal);
    case ProductOp::Strong:
        return (first.equal && second.adjacent) || (first.adjacent && second.equal) ||
               (first.adjacent && second.adjacent);
    case ProductOp::Direct:
        return first.adjacent && second.adjacent;
    case ProductOp::Lex:
    case ProductOp::ModLex:
        return first.adjacent || (first.equal && second.adjacent);
    }
    return false;
}

namespace {

void check_size(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    const auto n = g.vertex_count() * h.vertex_count();
    if (g.vertex_count() != 0 && n / g.vertex_count() != h.vertex_count()) {
        fail(ErrorKind::SizeLimitExceeded, "product size overflow");
    }
    if (n > limits.max_vertices) {
        fail(ErrorKind::SizeLimitExceeded,
             "product would have " + std::to_string(n) + " vertices (limit " + std::to_string(limits.max_vertices) + ")");
    }
}

void check_loopless(const Graph &g, ProductOp op)
{
    if (g.loop_count() > 0) {
        fail(ErrorKind::LoopsNotAllowed, std::string(product_name(op)) + " product is defined on loopless graphs");
    }
}

// Shared edge generator. second_component restricts second-coordinate moves
// to one component of h (modified lexicographic product).
Graph build(const Graph &g, const Graph &h, ProductOp op, const ProductLimits &limits,
            const std::vector<std::size_t> *second_component = nullptr)
{
    check_size(g, h, limits);
    const auto nh = static_cast<Vertex>(h.vertex_count());
    auto index = [nh](Vertex s, Vertex t) { return s * nh + t; };
    const bool lexical = op == ProductOp::Lex || op == ProductOp::ModLex;

    std::vector<Edge> edges;
    std::vector<Vertex> candidates_first;
    std::vector<Vertex> candidates_second;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        candidates_first.assign(g.neighbors(s).begin(), g.neighbors(s).end());
        if (!g.has_loop(s)) {
            candidates_first.push_back(s);
        }
        for (Vertex t = 0; t < h.vertex_count(); ++t) {
            const Vertex from = index(s, t);
            for (Vertex s2 : candidates_first) {
                const CoordRelation first{s == s2, g.adjacent(s, s2), g.is_root(s)};
                candidates_second.clear();
                if (lexical && first.adjacent) {
                    for (Vertex t2 = 0; t2 < nh; ++t2) {
                        if (second_component == nullptr || (*second_component)[t2] == (*second_component)[t]) {
                            candidates_second.push_back(t2);
                        }
                    }
                } else {
                    candidates_second.assign(h.neighbors(t).begin(), h.neighbors(t).end());
                    if (!h.has_loop(t)) {
                        candidates_second.push_back(t);
                    }
                }
                for (Vertex t2 : candidates_second) {
                    const Vertex to = index(s2, t2);
                    if (to < from) {
                        continue;
                    }
                    const CoordRelation second{t == t2, h.adjacent(t, t2), h.is_root(t)};
                    if (product_adjacent(op, first, second)) {
                        edges.emplace_back(from, to);
                    }
                }
            }
        }
    }
    std::vector<Vertex> roots;
    if (keeps_roots(op)) {
        for (Vertex s : g.roots()) {
            for (Vertex t : h.roots()) {
                roots.push_back(index(s, t));
            }
        }
    }
    const bool loops = op == ProductOp::Direct && (g.allows_loops() || h.allows_loops());
    return Graph(g.vertex_count() * h.vertex_count(), std::move(edges), std::move(roots), loops);
}

void check_component_roots(const Graph &g, ProductOp op)
{
    std::size_t count = 0;
    const auto label = component_labels(g, &count);
    std::vector<std::size_t> roots(count, 0);
    for (Vertex r : g.roots()) {
        ++roots[label[r]];
    }
    for (std::size_t c = 0; c < count; ++c) {
        if (op == ProductOp::Hierarchical && roots[c] == 0) {
            fail(ErrorKind::EmptyRootSet, "a connected component has an empty root set");
        }
        if (op == ProductOp::RootedHierarchical && roots[c] != 1) {
            fail(ErrorKind::NotSinglyRooted, "a connected component has " + std::to_string(roots[c]) + " roots");
        }
    }
}

} // namespace

void check_operand(const Graph &g, ProductOp op)
{
    switch (op) {
    case ProductOp::Hierarchical:
    case ProductOp::RootedHierarchical:
        check_loopless(g, op);
        check_component_roots(g, op);
        break;
    case ProductOp::Cartesian:
    case ProductOp::Strong:
    case ProductOp::Lex:
    case ProductOp::ModLex:
        check_loopless(g, op);
        break;
    case ProductOp::Direct:
        break;
    }
}

Graph hierarchical(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    check_operand(g, ProductOp::Hierarchical);
    check_operand(h, ProductOp::Hierarchical);
    return build(g, h, ProductOp::Hierarchical, limits);
}

Graph rooted_hierarchical(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    check_operand(g, ProductOp::RootedHierarchical);
    check_operand(h, ProductOp::RootedHierarchical);
    return build(g, h, ProductOp::RootedHierarchical, limits);
}

Graph cartesian(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    check_operand(g, ProductOp::Cartesian);
    check_operand(h, ProductOp::Cartesian);
    // Full root sets turn the hierarchical edge rule into the Cartesian one.
    return build(g.with_all_roots(), h.with_all_roots(), ProductOp::Hierarchical, limits).without_roots();
}

Graph strong(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    check_operand(g, ProductOp::Strong);
    check_operand(h, ProductOp::Strong);
    return build(g, h, ProductOp::Strong, limits);
}

Graph direct(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    return build(g, h, ProductOp::Direct, limits);
}

Graph lexicographic(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    check_operand(g, ProductOp::Lex);
    check_operand(h, ProductOp::Lex);
    return build(g, h, ProductOp::Lex, limits);
}

Graph modified_lexicographic(const Graph &g, const Graph &h, const ProductLimits &limits)
{
    check_operand(g, ProductOp::ModLex);
    check_operand(h, ProductOp::ModLex);
    const auto components = component_labels(h);
    return build(g, h, ProductOp::ModLex, limits, &components);
}

Graph product(const Graph &g, const Graph &h, ProductOp op, const ProductLimits &limits)
{
    switch (op) {
    case ProductOp::Cartesian: return cartesian(g, h, limits);
    case ProductOp::Hierarchical: return hierarchical(g, h, limits);
    case ProductOp::RootedHierarchical: return rooted_hierarchical(g, h, limits);
    case ProductOp::Strong: return strong(g, h, limits);
    case ProductOp::Direct: return direct(g, h, limits);
    case ProductOp::Lex: return lexicographic(g, h, limits);
    case ProductOp::ModLex: return modified_lexicographic(g, h, limits);
    }
    return {};
}

Graph power(const Graph &g, unsigned n, ProductOp op, const ProductLimits &limits)
{
    if (n == 0) {
        fail(ErrorKind::InvalidGraph, "power exponent must be positive");
    }
    check_operand(g, op);
    Graph result = g;
    for (unsigned i = 1; i < n; ++i) {
        result = product(result, g, op, limits);
    }
    return result;
}

Graph unit_graph(ProductOp op)
{
    switch (op) {
    case ProductOp::Hierarchical:
    case ProductOp::RootedHierarchical: return Graph::single_vertex(true);
    case ProductOp::Direct: return Graph::single_vertex(false, true);
    default: return Graph::single_vertex();
    }
}

GraphFamily product(const GraphFamily &a, const GraphFamily &b, ProductOp op, const ProductLimits &limits)
{
    if (op == ProductOp::Lex) {
        return family_of(product(realize(a), realize(b), op, limits));
    }
    GraphFamily result;
    for (const auto &[ka, ca] : a.components()) {
        for (const auto &[kb, cb] : b.components()) {
            result.add(product(ca.graph, cb.graph, op, limits), ca.multiplicity * cb.multiplicity);
        }
    }
    return result;
}

GraphFamily power(const GraphFamily &a, unsigned n, ProductOp op, const ProductLimits &limits)
{
    if (n == 0) {
        fail(ErrorKind::InvalidGraph, "power exponent must be positive");
    }
    GraphFamily result = a;
    for (unsigned i = 1; i < n; ++i) {
        result = product(result, a, op, limits);
    }
    return result;
}

} // namespace gpring
