#include "oracles.hpp"

#include <checks.hpp>
#include <doctest.h>
#include <gpring/canonical.hpp>
#include <gpring/enumerate.hpp>
#include <gpring/error.hpp>
#include <gpring/family.hpp>

using namespace gpring;

namespace {

Graph end_rooted_k2()
{
    return Graph::complete(2).with_roots({0});
}

} // namespace

TEST_CASE("hierarchical examples")
{
    const Graph k1 = Graph::single_vertex(true);
    const Graph g = Graph::cycle(4).with_roots({0, 2});
    CHECK(is_isomorphic(hierarchical(g, k1), g));
    CHECK(is_isomorphic(hierarchical(k1, g), g));

    const Graph p = hierarchical(end_rooted_k2(), end_rooted_k2());
    CHECK(p.edge_count() == 3);
    CHECK(is_isomorphic(p.without_roots(), Graph::path(4)));
    REQUIRE(p.roots().size() == 1);
    const Vertex r = p.roots().front();
    CHECK(p.degree(r) == 2);

    const Graph a = Graph::path(3).with_roots({1});
    const Graph b = Graph::complete(3).with_roots({0, 1});
    const Graph c = Graph::cycle(4).with_roots({3});
    const Graph ab = disjoint_union(a, b);
    CHECK(is_isomorphic(hierarchical(ab, c), disjoint_union(hierarchical(a, c), hierarchical(b, c))));
    CHECK(is_isomorphic(hierarchical(c, ab), disjoint_union(hierarchical(c, a), hierarchical(c, b))));

    const Graph x = Graph::path(4).with_roots({1, 3});
    const Graph y = Graph::cycle(5).with_roots({0, 2, 4});
    CHECK(hierarchical(x, y).edge_count() == 4 * 5 + 3 * 3);
    CHECK(hierarchical(x, y).roots().size() == 6);
}

TEST_CASE("hierarchical domain errors")
{
    auto kind_of = [](auto &&call) {
        try {
            call();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::NoRoot;
    };
    const Graph unrooted = Graph::complete(2);
    CHECK(kind_of([&] { hierarchical(unrooted, end_rooted_k2()); }) == ErrorKind::EmptyRootSet);
    const Graph half = disjoint_union(end_rooted_k2(), Graph::complete(2));
    CHECK(kind_of([&] { hierarchical(end_rooted_k2(), half); }) == ErrorKind::EmptyRootSet);
    const Graph two = Graph::complete(2).with_all_roots();
    CHECK(kind_of([&] { rooted_hierarchical(two, end_rooted_k2()); }) == ErrorKind::NotSinglyRooted);
    const Graph looped = Graph::single_vertex(false, true);
    CHECK(kind_of([&] { strong(looped, Graph::complete(2)); }) == ErrorKind::LoopsNotAllowed);
}

TEST_CASE("rooted hierarchical examples")
{
    const Graph p = rooted_hierarchical(end_rooted_k2(), end_rooted_k2());
    CHECK(is_isomorphic(p.without_roots(), Graph::path(4)));
    CHECK(p.roots().size() == 1);

    const Graph cube = power(end_rooted_k2(), 3, ProductOp::RootedHierarchical);
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 7);
    CHECK(is_connected(cube));

    bool witness = false;
    for (std::size_t n = 2; n <= 3 && !witness; ++n) {
        for (const Graph &g : connected_graphs(n)) {
            for (const Graph &a : single_root_variants(g)) {
                for (std::size_t m = 2; m <= 3; ++m) {
                    for (const Graph &h : connected_graphs(m)) {
                        for (const Graph &b : single_root_variants(h)) {
                            witness = witness ||
                                      !is_isomorphic(rooted_hierarchical(a, b), rooted_hierarchical(b, a));
                        }
                    }
                }
            }
        }
    }
    CHECK(witness);
}

TEST_CASE("cartesian examples")
{
    CHECK(is_isomorphic(cartesian(Graph::complete(2), Graph::complete(2)), Graph::cycle(4)));
    CHECK(is_isomorphic(cartesian(Graph::cycle(5), Graph::single_vertex()), Graph::cycle(5)));
    CHECK(cartesian(Graph::path(2), Graph::path(3)).edge_count() == 7);
    const Graph g = Graph::path(3);
    const Graph h = Graph::cycle(3);
    CHECK(is_isomorphic(cartesian(g, h), hierarchical(g.with_all_roots(), h.with_all_roots()).without_roots()));
    CHECK(is_isomorphic(power(Graph::complete(2), 2, ProductOp::Cartesian), Graph::cycle(4)));
}

TEST_CASE("strong examples")
{
    CHECK(is_isomorphic(strong(Graph::complete(2), Graph::complete(2)), Graph::complete(4)));
    CHECK(is_isomorphic(strong(Graph::path(4), Graph::single_vertex()), Graph::path(4)));
    const Graph g = Graph::path(3);
    const Graph h = Graph::cycle(4);
    CHECK(is_isomorphic(strip_loops(direct(add_loops(g), add_loops(h))), strong(g, h)));
}

TEST_CASE("direct examples")
{
    const Graph k2k2 = direct(Graph::complete(2), Graph::complete(2));
    CHECK(is_isomorphic(k2k2, disjoint_union(Graph::complete(2), Graph::complete(2))));
    CHECK_FALSE(is_connected(k2k2));
    const Graph looped_k1 = Graph::single_vertex(false, true);
    CHECK(is_isomorphic(direct(Graph::cycle(5), looped_k1), Graph::cycle(5)));
    const Graph c3c3 = direct(Graph::cycle(3), Graph::cycle(3));
    CHECK(c3c3.vertex_count() == 9);
    CHECK(c3c3.edge_count() == 18);
    CHECK(is_connected(c3c3));
    CHECK(direct(Graph::cycle(3), Graph::path(3)).loop_count() == 0);
}

TEST_CASE("lexicographic examples")
{
    CHECK(is_isomorphic(lexicographic(Graph::complete(2), Graph::edgeless(2)), Graph::cycle(4)));
    const Graph a = Graph::path(3);
    const Graph b = Graph::complete(2);
    const Graph c = Graph::cycle(4);
    CHECK(is_isomorphic(lexicographic(disjoint_union(a, b), c),
                        disjoint_union(lexicographic(a, c), lexicographic(b, c))));
    const Graph left = lexicographic(Graph::complete(2), Graph::edgeless(2));
    CHECK(left.edge_count() == 4);
    CHECK_FALSE(is_isomorphic(left, disjoint_union(Graph::complete(2), Graph::complete(2))));
}

TEST_CASE("modified lexicographic examples")
{
    const Graph g = Graph::path(3);
    const Graph h = Graph::cycle(4);
    CHECK(is_isomorphic(modified_lexicographic(g, h), lexicographic(g, h)));
    CHECK(is_isomorphic(modified_lexicographic(Graph::complete(2), Graph::edgeless(2)),
                        disjoint_union(Graph::complete(2), Graph::complete(2))));
    const Graph x = Graph::complete(2);
    const Graph y = Graph::path(3);
    CHECK(is_isomorphic(modified_lexicographic(g, disjoint_union(x, y)),
                        disjoint_union(modified_lexicographic(g, x), modified_lexicographic(g, y))));
}

TEST_CASE("units and powers")
{
    checks::Rng rng(5);
    for (ProductOp op : all_products) {
        CAPTURE(product_name(op));
        const Graph g = checks::random_operand(rng, op, 4, true);
        CHECK(is_isomorphic(power(g, 1, op), g));
        CHECK(is_isomorphic(product(g, unit_graph(op), op), g));
        CHECK(is_isomorphic(power(g, 3, op), product(product(g, g, op), g, op)));
    }
    CHECK(unit_graph(ProductOp::Direct).has_loop(0));
    CHECK(unit_graph(ProductOp::Hierarchical).is_root(0));
    CHECK(unit_graph(ProductOp::Cartesian).roots().empty());
}

TEST_CASE("product names")
{
    for (ProductOp op : all_products) {
        CHECK(parse_product(product_name(op)) == op);
    }
    CHECK_THROWS_AS(parse_product("tensor"), Error);
    CHECK(is_commutative(ProductOp::Direct));
    CHECK_FALSE(is_commutative(ProductOp::ModLex));
    CHECK_FALSE(is_semiring_product(ProductOp::Lex));
}

TEST_CASE("products match the edge definitions")
{
    checks::Rng rng(21);
    for (ProductOp op : all_products) {
        CAPTURE(product_name(op));
        for (int i = 0; i < 60; ++i) {
            const Graph a = checks::random_operand(rng, op, 4, rng() % 2);
            const Graph b = checks::random_operand(rng, op, 3, rng() % 2);
            const Graph fast = product(a, b, op);
            const Graph slow = oracle::product(a, b, op);
            CHECK(fast.vertex_count() == slow.vertex_count());
            if (op == ProductOp::ModLex) {
                CHECK(is_isomorphic(fast, slow));
            } else {
                CHECK(fast.edges() == slow.edges());
                CHECK(fast.roots() == slow.roots());
            }
        }
    }
}

TEST_CASE("connectivity of products on small graphs")
{
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const Graph &g : all_graphs(n)) {
            graphs.push_back(g);
        }
    }
    for (const Graph &a : graphs) {
        for (const Graph &b : graphs) {
            const bool both = is_connected(a) && is_connected(b);
            CHECK(is_connected(cartesian(a, b)) == both);
            CHECK(is_connected(strong(a, b)) == both);
            CHECK(is_connected(hierarchical(a.with_all_roots(), b.with_all_roots())) == both);
            const Graph ra = a.with_roots({0});
            if (is_connected(a) && is_connected(b)) {
                CHECK(is_connected(hierarchical(ra, b.with_roots({0}))));
            }
        }
    }
}

TEST_CASE("family products distribute")
{
    checks::Rng rng(22);
    for (ProductOp op : all_products) {
        for (int i = 0; i < 20; ++i) {
            const GraphFamily a = checks::random_family(rng, op, 2, 3);
            const GraphFamily b = checks::random_family(rng, op, 2, 3);
            CHECK(family_of(realize(product(a, b, op))) == product(a, b, op));
            if (op != ProductOp::Lex) {
                CHECK(product(a, b, op) == family_of(product(realize(a), realize(b), op)));
            }
        }
    }
}

TEST_CASE("product size limit")
{
    ProductLimits limits;
    limits.max_vertices = 10;
    CHECK_THROWS_AS(cartesian(Graph::path(4), Graph::path(3), limits), Error);
}
