#include "oracles.hpp"

#include <checks.hpp>
#include <doctest.h>
#include <gpring/canonical.hpp>
#include <gpring/enumerate.hpp>
#include <gpring/error.hpp>
#include <gpring/family.hpp>
#include <gpring/grf.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace gpring;

namespace {

Graph two_k2_k1()
{
    return Graph(5, {{0, 1}, {2, 3}});
}

Graph shuffled(checks::Rng &rng, const Graph &g)
{
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

Graph random_decorated(checks::Rng &rng, std::size_t n)
{
    const Graph base = checks::random_graph(rng, n, 0.4);
    std::vector<Edge> edges = base.edges();
    std::vector<Vertex> roots;
    for (Vertex v = 0; v < n; ++v) {
        if (rng() % 4 == 0) {
            edges.emplace_back(v, v);
        }
        if (rng() % 3 == 0) {
            roots.push_back(v);
        }
    }
    return Graph(n, std::move(edges), std::move(roots), true);
}

} // namespace

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_NOTHROW(Graph(2, {{0, 0}}, {}, true));
    CHECK_THROWS_AS(Graph(2, {}, {5}), Error);
    CHECK_THROWS_AS(Graph(3, {{1, 0}, {0, 1}}), Error);
    const Graph g(3, {{1, 0}, {2, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(Graph::empty().vertex_count() == 0);
}

TEST_CASE("connected components")
{
    const GraphFamily p3 = family_of(Graph::path(3));
    REQUIRE(p3.components().size() == 1);
    CHECK(p3.components().begin()->second.multiplicity == 1);

    const GraphFamily f = family_of(two_k2_k1());
    CHECK(f.component_count() == 3);
    CHECK(f.multiplicity(canonical_form(Graph::complete(2))) == 2);
    CHECK(f.multiplicity(canonical_form(Graph::single_vertex())) == 1);

    CHECK(family_of(Graph::empty()).empty());
}

TEST_CASE("components keep their roots")
{
    const Graph g(4, {{0, 1}, {2, 3}}, {0, 2, 3});
    const GraphFamily f = family_of(g);
    CHECK(f.multiplicity(canonical_form(Graph::complete(2).with_roots({0}))) == 1);
    CHECK(f.multiplicity(canonical_form(Graph::complete(2).with_all_roots())) == 1);
}

TEST_CASE("canonical form examples")
{
    const Graph p3(3, {{0, 1}, {1, 2}});
    const Graph p3b(3, {{0, 2}, {2, 1}});
    CHECK(canonical_form(p3) == canonical_form(p3b));
    CHECK(canonical_form(p3.with_roots({0})) != canonical_form(p3.with_roots({1})));
    CHECK(canonical_form(p3.with_roots({0})) == canonical_form(p3b.with_roots({1})));

    std::set<CanonicalKey> keys;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<Edge> edges;
        unsigned bit = 0;
        for (Vertex u = 0; u < 4; ++u) {
            for (Vertex v = u + 1; v < 4; ++v, ++bit) {
                if (mask >> bit & 1) {
                    edges.emplace_back(u, v);
                }
            }
        }
        keys.insert(canonical_form(Graph(4, std::move(edges))));
    }
    CHECK(keys.size() == 11);
}

TEST_CASE("isomorphism examples")
{
    CHECK(is_isomorphic(Graph::cycle(4), cartesian(Graph::complete(2), Graph::complete(2))));
    CHECK(oracle::isomorphic(Graph::cycle(4), cartesian(Graph::complete(2), Graph::complete(2))));
    CHECK_FALSE(is_isomorphic(Graph::path(3), Graph::complete(3)));
    CHECK_FALSE(is_isomorphic(Graph::path(3).with_roots({0}), Graph::path(3).with_roots({0, 1})));
    const Graph looped(2, {{0, 1}, {0, 0}}, {}, true);
    const Graph other(2, {{0, 1}, {1, 1}}, {}, true);
    CHECK(is_isomorphic(looped, other));
    CHECK_FALSE(is_isomorphic(looped, add_loops(Graph::complete(2))));
}

TEST_CASE("isomorphism agrees with permutation search")
{
    checks::Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 1 + rng() % 6;
        const Graph a = random_decorated(rng, n);
        const Graph b = rng() % 2 ? shuffled(rng, a) : random_decorated(rng, n);
        CAPTURE(i);
        CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("canonical form is invariant under relabeling")
{
    checks::Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const Graph a = random_decorated(rng, 1 + rng() % 9);
        CHECK(canonical_form(a) == canonical_form(shuffled(rng, a)));
        const Graph c = canonical_graph(a);
        if (is_connected(a)) {
            CHECK(canonical_graph(shuffled(rng, a)) == c);
        }
    }
}

TEST_CASE("canonical labeling handles larger regular graphs")
{
    const Graph c12 = Graph::cycle(12);
    const Graph prism = cartesian(Graph::cycle(6), Graph::complete(2));
    CHECK_FALSE(is_isomorphic(c12, prism));
    const Graph h = strong(Graph::cycle(5), Graph::cycle(5));
    checks::Rng rng(13);
    CHECK(is_isomorphic(h, shuffled(rng, h)));
    const Graph big = cartesian(cartesian(Graph::cycle(8), Graph::cycle(8)), Graph::complete(2));
    CHECK(is_isomorphic(big, shuffled(rng, big)));
}

TEST_CASE("canonical form size limit")
{
    CanonLimits limits;
    limits.max_component_vertices = 4;
    CHECK_THROWS_AS(canonical_form(Graph::path(5), limits), Error);
    CHECK_NOTHROW(canonical_form(Graph::edgeless(9), limits));
}

TEST_CASE("enumeration matches brute force")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto &fast = connected_graphs(n);
        const auto slow = oracle::connected_graphs(n);
        CHECK(fast.size() == slow.size());
        for (const Graph &g : slow) {
            CHECK(std::any_of(fast.begin(), fast.end(), [&](const Graph &h) { return oracle::isomorphic(g, h); }));
        }
    }
    CHECK(connected_graphs(6).size() == 112);
    CHECK(all_graphs(4).size() == 11);
}

TEST_CASE("disjoint union")
{
    const Graph a = Graph::path(3).with_roots({1});
    CHECK(is_isomorphic(disjoint_union(a, Graph::empty()), a));
    const Graph k2k2 = disjoint_union(Graph::complete(2), Graph::complete(2));
    CHECK(family_of(k2k2).multiplicity(canonical_form(Graph::complete(2))) == 2);
    const Graph b = Graph(2, {{1, 1}}, {}, true);
    const Graph ab = disjoint_union(a, b);
    CHECK(ab.vertex_count() == 5);
    CHECK(ab.edge_count() == 3);
    CHECK(ab.roots().size() == 1);
    CHECK(ab.allows_loops());
    CHECK(is_isomorphic(ab, disjoint_union(b, a)));
}

TEST_CASE("bipartiteness")
{
    CHECK(is_bipartite(Graph::cycle(4)));
    CHECK_FALSE(is_bipartite(Graph::cycle(5)));
    CHECK_FALSE(is_bipartite(Graph::single_vertex(false, true)));
    CHECK(is_bipartite(Graph::empty()));
}

TEST_CASE("family roundtrip")
{
    CHECK(realize(GraphFamily{}).vertex_count() == 0);
    checks::Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_decorated(rng, rng() % 9);
        const GraphFamily f = family_of(g);
        std::size_t vertices = 0;
        for (const auto &[key, c] : f.components()) {
            CHECK(is_connected(c.graph));
            vertices += c.graph.vertex_count() * c.multiplicity;
        }
        CHECK(vertices == g.vertex_count());
        CHECK(is_isomorphic(realize(f), g));
        CHECK(family_of(realize(f)) == f);
    }
}

TEST_CASE("grf roundtrip and errors")
{
    const std::string text = "# two blocks\n"
                             "graph a mult=2\nvertices 3\nroots 0\nedge 0 1\nedge 1 2\nend\n"
                             "graph b loops=1\nvertices 1\nedge 0 0\nend\n";
    const GrfDocument doc = parse_grf(text);
    REQUIRE(doc.blocks.size() == 2);
    CHECK(doc.blocks[0].multiplicity == 2);
    CHECK(doc.blocks[1].graph.has_loop(0));
    CHECK(parse_grf(render_grf(doc)) == doc);
    const GraphFamily f = to_family(doc);
    CHECK(f.component_count() == 3);
    CHECK(to_family(parse_grf(render_grf(to_document(f)))) == f);

    const GrfDocument bounded = parse_grf("bound 3\ngraph a\nvertices 1\nend\n");
    CHECK(bounded.degree_bound == 3u);

    auto kind_of = [](const std::string &bad) {
        try {
            parse_grf(bad);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::NoRoot;
    };
    CHECK(kind_of("graph a\nvertices 2\nedge 0 5\nend\n") == ErrorKind::ParseError);
    CHECK(kind_of("graph a\nvertices 1\nedge 0 0\nend\n") == ErrorKind::ParseError);
    CHECK(kind_of("graph a\nvertices 2\n") == ErrorKind::ParseError);
    CHECK(kind_of("vertex 2\n") == ErrorKind::ParseError);
    CHECK(kind_of("graph a mult=x\nvertices 1\nend\n") == ErrorKind::ParseError);
}
