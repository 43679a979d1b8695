#include "checks.hpp"

#include <gpring/canonical.hpp>
#include <gpring/error.hpp>

#include <algorithm>
#include <chrono>

namespace gpring::checks {

void Check::expect(bool condition, const std::string &what)
{
    if (!condition) {
        if (failures == 0) {
            first_failure = what;
        }
        ++failures;
    }
}

namespace {

bool coin(Rng &rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph shuffled(Rng &rng, const Graph &g)
{
    std::vector<Vertex> perm(g.vertex_count());
    for (Vertex v = 0; v < perm.size(); ++v) {
        perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

Graph with_random_roots(Rng &rng, const Graph &g, bool single)
{
    std::vector<Vertex> roots;
    for (const auto &component : component_vertex_sets(g)) {
        if (single) {
            roots.push_back(component[uniform(rng, 0, component.size() - 1)]);
            continue;
        }
        bool any = false;
        for (Vertex v : component) {
            if (coin(rng)) {
                roots.push_back(v);
                any = true;
            }
        }
        if (!any) {
            roots.push_back(component[uniform(rng, 0, component.size() - 1)]);
        }
    }
    return g.with_roots(std::move(roots));
}

Graph with_random_loops(Rng &rng, const Graph &g, double p)
{
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (coin(rng, p)) {
            edges.emplace_back(v, v);
        }
    }
    return Graph(g.vertex_count(), std::move(edges), g.roots(), true);
}

template <typename Body>
Check timed(std::string name, Body &&body)
{
    Check check;
    check.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    body(check);
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return check;
}

// Runs one case, turning a library error into a recorded failure.
template <typename Body>
void guarded(Check &check, std::size_t index, Body &&body)
{
    ++check.cases;
    try {
        body();
    } catch (const std::exception &e) {
        check.expect(false, "case " + std::to_string(index) + ": " + e.what());
    }
}

} // namespace

Graph random_graph(Rng &rng, std::size_t n, double p)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng, p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_connected(Rng &rng, std::size_t n, double extra)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(uniform(rng, 0, v - 1)), v);
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng, extra) && std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end()) {
                edges.emplace_back(u, v);
            }
        }
    }
    return shuffled(rng, Graph(n, std::move(edges)));
}

Graph random_operand(Rng &rng, ProductOp op, std::size_t max_n, bool connected)
{
    const std::size_t n = uniform(rng, 1, max_n);
    Graph g = connected ? random_connected(rng, n) : random_graph(rng, n, 0.4);
    switch (op) {
    case ProductOp::Hierarchical: return with_random_roots(rng, g, false);
    case ProductOp::RootedHierarchical: return with_random_roots(rng, g, true);
    case ProductOp::Direct: return with_random_loops(rng, g, 0.4);
    default: return g;
    }
}

Graph random_factorable(Rng &rng, ProductOp op, std::size_t max_n)
{
    while (true) {
        Graph g = random_operand(rng, op, max_n, true);
        if (op == ProductOp::Direct && is_bipartite(g)) {
            continue;
        }
        if (op == ProductOp::ModLex && g.vertex_count() > 1 && is_complete(g)) {
            continue;
        }
        return g;
    }
}

GraphFamily random_family(Rng &rng, ProductOp op, std::size_t max_components, std::size_t max_n,
                          std::uint64_t max_mult)
{
    GraphFamily f;
    const std::size_t count = uniform(rng, 1, max_components);
    for (std::size_t i = 0; i < count; ++i) {
        f.add_connected(random_factorable(rng, op, max_n), uniform(rng, 1, max_mult));
    }
    return f;
}

Check product_laws(ProductOp op, Rng &rng, std::size_t cases)
{
    const std::string name(product_name(op));
    return timed("product laws (" + name + ")", [&](Check &check) {
        const Graph unit = unit_graph(op);
        for (std::size_t i = 0; i < cases; ++i) {
            guarded(check, i, [&] {
                const std::string at = " [case " + std::to_string(i) + "]";
                const Graph g = random_operand(rng, op, 5, coin(rng));
                check.expect(is_isomorphic(product(g, unit, op), g) && is_isomorphic(product(unit, g, op), g),
                             "identity" + at);

                const Graph a = random_operand(rng, op, 3, coin(rng));
                const Graph b = random_operand(rng, op, 3, coin(rng));
                const Graph c = random_operand(rng, op, 3, coin(rng));
                check.expect(is_isomorphic(product(product(a, b, op), c, op), product(a, product(b, c, op), op)),
                             "associativity" + at);

                const Graph ab = product(a, b, op);
                check.expect(ab.vertex_count() == a.vertex_count() * b.vertex_count(), "vertex count" + at);

                const Graph x = random_operand(rng, op, 3, coin(rng));
                const Graph y = random_operand(rng, op, 2, coin(rng));
                const Graph z = random_operand(rng, op, 5, coin(rng));
                const Graph sum = disjoint_union(x, y);
                check.expect(is_isomorphic(product(sum, z, op), disjoint_union(product(x, z, op), product(y, z, op))),
                             "right distributivity" + at);
                if (op != ProductOp::Lex) {
                    check.expect(
                        is_isomorphic(product(z, sum, op), disjoint_union(product(z, x, op), product(z, y, op))),
                        "left distributivity" + at);
                }

                if (op == ProductOp::Hierarchical || op == ProductOp::RootedHierarchical ||
                    op == ProductOp::Cartesian || op == ProductOp::Strong) {
                    check.expect(is_connected(ab) == (is_connected(a) && is_connected(b)), "connectivity" + at);
                }
                if (is_commutative(op)) {
                    check.expect(is_isomorphic(ab, product(b, a, op)), "commutativity" + at);
                }
                if (op == ProductOp::Strong) {
                    check.expect(is_isomorphic(strip_loops(direct(add_loops(a), add_loops(b))), ab),
                                 "strong from looped direct" + at);
                }
                if (op == ProductOp::ModLex && is_connected(a) && is_connected(b)) {
                    check.expect(is_isomorphic(ab, lexicographic(a, b)), "modlex equals lex on connected" + at);
                }
            });
        }
    });
}

Check lex_left_distributivity_fails()
{
    return timed("lex left distributivity fails on K2 o 2K1", [&](Check &check) {
        ++check.cases;
        const Graph k2 = Graph::complete(2);
        const Graph k1 = Graph::single_vertex();
        const Graph left = lexicographic(k2, Graph::edgeless(2));
        const Graph split = disjoint_union(lexicographic(k2, k1), lexicographic(k2, k1));
        check.expect(left.edge_count() == 4 && split.edge_count() == 2 && !is_isomorphic(left, split),
                     "K2 o 2K1 matched K2 o K1 + K2 o K1");
        check.expect(is_isomorphic(modified_lexicographic(k2, Graph::edgeless(2)), split),
                     "modlex K2 o' 2K1 is not 2K2");
    });
}

std::vector<ProductOp> semiring_products()
{
    std::vector<ProductOp> out;
    for (ProductOp op : all_products) {
        if (is_semiring_product(op)) {
            out.push_back(op);
        }
    }
    return out;
}

Check graph_root_roundtrip(ProductOp op, Rng &rng, std::size_t cases, const std::vector<unsigned> &exponents)
{
    return timed("unique root roundtrip (" + std::string(product_name(op)) + ")", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            const GraphFamily g = random_family(rng, op, 3, 4);
            const unsigned n = exponents[i % exponents.size()];
            guarded(check, i, [&] {
                const GraphFamily h = power(g, n, op);
                check.expect(graph_nth_root(h, n, op) == g, "root of power differs [case " + std::to_string(i) + "]");
            });
        }
    });
}

Check graph_cancel_roundtrip(ProductOp op, Rng &rng, std::size_t cases)
{
    return timed("cancellation roundtrip (" + std::string(product_name(op)) + ")", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            const GraphFamily a = random_family(rng, op, 3, 4);
            const GraphFamily c = random_family(rng, op, 3, 4);
            guarded(check, i, [&] {
                const std::string at = " [case " + std::to_string(i) + "]";
                check.expect(graph_cancel(product(a, c, op), c, Side::Right, op) == a, "right cancellation" + at);
                if (!is_commutative(op)) {
                    check.expect(graph_cancel(product(c, a, op), c, Side::Left, op) == a, "left cancellation" + at);
                }
            });
        }
    });
}

Check encode_homomorphism(ProductOp op, Rng &rng, std::size_t cases)
{
    return timed("encode homomorphism (" + std::string(product_name(op)) + ")", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            const GraphFamily a = random_family(rng, op, 3, 4);
            const GraphFamily b = random_family(rng, op, 3, 4);
            guarded(check, i, [&] {
                const GraphFamily ab = product(a, b, op);
                const PrimeRegistry registry = registry_for({&a, &b, &ab}, op);
                const Series lhs = encode(ab, op, registry);
                const Series rhs = encode(a, op, registry) * encode(b, op, registry);
                check.expect(lhs == rhs, "encode(A B) != encode(A) encode(B) [case " + std::to_string(i) + "]");
                check.expect(decode(lhs, op, registry) == ab, "decode(encode(A B)) != A B [case " +
                                                                  std::to_string(i) + "]");
            });
        }
    });
}

} // namespace gpring::checks
