#include "oracles.hpp"

#include <checks.hpp>
#include <doctest.h>
#include <gpring/canonical.hpp>
#include <gpring/enumerate.hpp>
#include <gpring/error.hpp>
#include <gpring/factorization.hpp>

#include <algorithm>
#include <numeric>

using namespace gpring;

namespace {

Graph end_rooted_k2()
{
    return Graph::complete(2).with_roots({0});
}

bool has_pair(const std::vector<std::pair<Graph, Graph>> &pairs, const Graph &a, const Graph &b)
{
    return std::any_of(pairs.begin(), pairs.end(), [&](const auto &p) {
        return is_isomorphic(p.first, a) && is_isomorphic(p.second, b);
    });
}

Graph multiply(const std::vector<Prime> &word, ProductOp op)
{
    Graph g = unit_graph(op);
    for (const Prime &p : word) {
        g = product(g, p.graph, op);
    }
    return g;
}

ErrorKind factor_error(const Graph &g, ProductOp op)
{
    try {
        factor_word(g, op);
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::NoRoot;
}

} // namespace

TEST_CASE("divisor pair examples")
{
    const auto c4 = divisor_pairs(Graph::cycle(4), ProductOp::Cartesian);
    CHECK(c4.size() == 3);
    CHECK(has_pair(c4, Graph::complete(2), Graph::complete(2)));
    CHECK(has_pair(c4, Graph::single_vertex(), Graph::cycle(4)));
    CHECK(has_pair(c4, Graph::cycle(4), Graph::single_vertex()));
    CHECK(divisor_pairs(Graph::path(3), ProductOp::Cartesian).size() == 2);
    for (ProductOp op : all_products) {
        if (op != ProductOp::Lex) {
            CHECK(divisor_pairs(unit_graph(op), op).size() == 1);
        }
    }
}

TEST_CASE("primality examples")
{
    CHECK(is_prime(Graph::complete(2), ProductOp::Cartesian));
    CHECK_FALSE(is_prime(Graph::cycle(4), ProductOp::Cartesian));
    CHECK_FALSE(is_prime(Graph::complete(4), ProductOp::Strong));
    CHECK(is_prime(Graph::path(3), ProductOp::Cartesian));
    CHECK_FALSE(is_prime(Graph::single_vertex(), ProductOp::Cartesian));
}

TEST_CASE("factorization examples")
{
    const auto c4 = factor_word(Graph::cycle(4), ProductOp::Cartesian);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].key == c4[1].key);
    CHECK(is_isomorphic(c4[0].graph, Graph::complete(2)));
    CHECK(c4[0].kind == LetterKind::Y);

    const Graph p4 = rooted_hierarchical(end_rooted_k2(), end_rooted_k2());
    const auto rooted = factor_word(p4, ProductOp::RootedHierarchical);
    REQUIRE(rooted.size() == 2);
    CHECK(is_isomorphic(rooted[0].graph, end_rooted_k2()));
    CHECK(rooted[0].kind == LetterKind::X);

    CHECK(factor_word(Graph::complete(2), ProductOp::Strong).size() == 1);
    CHECK(factor_word(Graph::path(3), ProductOp::Cartesian).size() == 1);
}

TEST_CASE("classification")
{
    CHECK(classify(Graph::complete(2).with_all_roots(), ProductOp::Hierarchical) == LetterKind::Y);
    CHECK(classify(end_rooted_k2(), ProductOp::Hierarchical) == LetterKind::X);
    CHECK(classify(Graph::complete(2), ProductOp::Cartesian) == LetterKind::Y);
    CHECK(classify(add_loops(Graph::complete(2)), ProductOp::Direct) == LetterKind::Y);
    CHECK(classify(Graph::path(3), ProductOp::ModLex) == LetterKind::X);
    CHECK(classify(end_rooted_k2(), ProductOp::RootedHierarchical) == LetterKind::X);
}

TEST_CASE("domain errors")
{
    CHECK(factor_error(Graph::cycle(4), ProductOp::Direct) == ErrorKind::UnsupportedDomain);
    CHECK(factor_error(Graph::path(3), ProductOp::Lex) == ErrorKind::UnsupportedDomain);
    const Graph k2_p3 = modified_lexicographic(Graph::complete(2), Graph::path(3));
    CHECK(factor_error(k2_p3, ProductOp::ModLex) == ErrorKind::UnsupportedDomain);
    CHECK(factor_error(Graph::complete(3), ProductOp::ModLex) == ErrorKind::UnsupportedDomain);
    CHECK(factor_error(Graph::path(3), ProductOp::Hierarchical) == ErrorKind::EmptyRootSet);
    CHECK(factor_error(Graph::path(3).with_all_roots(), ProductOp::RootedHierarchical) ==
          ErrorKind::NotSinglyRooted);
}

TEST_CASE("divisor pairs agree with exhaustive products")
{
    checks::Rng rng(51);
    for (ProductOp op : {ProductOp::Cartesian, ProductOp::Strong, ProductOp::Hierarchical, ProductOp::Direct,
                         ProductOp::ModLex, ProductOp::RootedHierarchical}) {
        CAPTURE(product_name(op));
        for (int i = 0; i < 15; ++i) {
            const Graph a = checks::random_factorable(rng, op, 3);
            const Graph b = checks::random_factorable(rng, op, 3);
            const Graph g = oracle::product(a, b, op);
            if (!is_connected(g)) {
                continue;
            }
            const auto pairs = divisor_pairs(g, op);
            CHECK(has_pair(pairs, a, b));
            for (const auto &[x, y] : pairs) {
                CHECK(is_isomorphic(oracle::product(x, y, op), factor_domain(g, op)));
            }
        }
    }
}

TEST_CASE("factor words multiply back")
{
    checks::Rng rng(52);
    for (ProductOp op : {ProductOp::Cartesian, ProductOp::Strong, ProductOp::Hierarchical, ProductOp::Direct,
                         ProductOp::ModLex, ProductOp::RootedHierarchical}) {
        CAPTURE(product_name(op));
        for (int i = 0; i < 25; ++i) {
            Graph g = checks::random_factorable(rng, op, 3);
            const std::size_t parts = 1 + rng() % 3;
            for (std::size_t k = 1; k < parts; ++k) {
                g = product(g, checks::random_factorable(rng, op, 3), op);
            }
            if (!is_connected(g)) {
                continue;
            }
            const auto word = factor_word(g, op);
            CHECK(is_isomorphic(multiply(word, op), factor_domain(g, op)));
        }
    }
}

TEST_CASE("hierarchical normal forms commute only Cartesian or equal factors")
{
    const Graph a = Graph::complete(2).with_all_roots();
    const Graph b = Graph::path(3).with_all_roots();
    const Graph x = end_rooted_k2();
    const Graph z = Graph::path(3).with_roots({1});
    const ProductOp op = ProductOp::Hierarchical;
    CHECK(is_isomorphic(product(a, b, op), product(b, a, op)));
    CHECK_FALSE(is_isomorphic(product(a, x, op), product(x, a, op)));
    CHECK_FALSE(is_isomorphic(product(x, z, op), product(z, x, op)));

    const auto ab = factor_word(product(product(x, a, op), b, op), op);
    const auto ba = factor_word(product(product(x, b, op), a, op), op);
    REQUIRE(ab.size() == 3);
    CHECK(std::equal(ab.begin(), ab.end(), ba.begin(), ba.end(),
                     [](const Prime &p, const Prime &q) { return p.key == q.key; }));
    const auto xz = factor_word(product(x, z, op), op);
    const auto zx = factor_word(product(z, x, op), op);
    REQUIRE(xz.size() == 2);
    CHECK(xz[0].key != zx[0].key);
}

TEST_CASE("registry order and dump")
{
    std::vector<Prime> primes;
    for (const Graph &g : {Graph::path(3), Graph::complete(2), Graph::complete(3), Graph::complete(2)}) {
        const auto w = factor_word(g, ProductOp::Cartesian);
        primes.insert(primes.end(), w.begin(), w.end());
    }
    const PrimeRegistry reg(ProductOp::Cartesian, primes);
    REQUIRE(reg.primes().size() == 3);
    CHECK(reg.primes()[0].graph.vertex_count() == 2);
    CHECK(reg.letter(0) == y_letter(1));
    CHECK(reg.letter(2) == y_letter(3));
    const std::string dump = reg.dump();
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 3);
    CHECK(dump.rfind("Y 1 2 ", 0) == 0);
    CHECK(is_isomorphic(reg.realize(Monomial{y_letter(1), y_letter(1)}), Graph::cycle(4)));
    const Monomial c4 = factor_connected(Graph::cycle(4), ProductOp::Cartesian, reg);
    CHECK(c4 == Monomial{y_letter(1), y_letter(1)});
    CHECK_THROWS_AS(factor_connected(Graph::cycle(4), ProductOp::Strong, reg), Error);
}

TEST_CASE("division recovers the cofactor under any vertex order")
{
    checks::Rng rng(53);
    for (ProductOp op : {ProductOp::Cartesian, ProductOp::Strong, ProductOp::Direct, ProductOp::ModLex,
                         ProductOp::Hierarchical, ProductOp::RootedHierarchical}) {
        CAPTURE(product_name(op));
        for (int i = 0; i < 20; ++i) {
            const Graph q = checks::random_factorable(rng, op, 4);
            const Graph p = checks::random_factorable(rng, op, 4);
            const Graph g = canonical_graph(product(q, p, op));
            if (!is_connected(g)) {
                continue;
            }
            std::vector<Vertex> perm(p.vertex_count());
            std::iota(perm.begin(), perm.end(), Vertex{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto right = divide(g, p.relabeled(perm), op, Side::Right);
            REQUIRE(right.has_value());
            CHECK(is_isomorphic(oracle::product(*right, p, op), g));
            const Graph h = canonical_graph(product(p, q, op));
            const auto left = divide(h, p.relabeled(perm), op, Side::Left);
            REQUIRE(left.has_value());
            CHECK(is_isomorphic(oracle::product(p, *left, op), h));
        }
    }
}

TEST_CASE("division regressions")
{
    // Twin classes of different sizes that an unweighted automorphism swaps.
    const Graph a(4, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 3}}, {}, true);
    const Graph a2 = direct(a, a);
    std::vector<Vertex> perm = {0, 1, 2, 3};
    do {
        CHECK(divide(a2, a.relabeled(perm), ProductOp::Direct, Side::Right).has_value());
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Graph star(4, {{0, 3}, {1, 3}, {2, 3}});
    const Graph star3 = canonical_graph(power(star, 3, ProductOp::Strong));
    CHECK(divide(star3, star, ProductOp::Strong, Side::Right).has_value());
    CHECK(factor_word(star3, ProductOp::Strong).size() == 3);

    const Graph c4 = Graph::cycle(4);
    const Graph c43 = canonical_graph(power(c4, 3, ProductOp::ModLex));
    CHECK_FALSE(divide(c43, Graph::complete(2), ProductOp::ModLex, Side::Left).has_value());
    CHECK(divide(c43, c4, ProductOp::ModLex, Side::Left).has_value());
    CHECK(factor_word(c43, ProductOp::ModLex).size() == 3);

    // Leaf-rooted star times two center-rooted stars: left division by K2 has
    // no solution and must not exhaust the search.
    const ProductOp rooted = ProductOp::RootedHierarchical;
    const Graph center(4, {{0, 3}, {1, 3}, {2, 3}}, {3});
    const Graph leaf(4, {{0, 2}, {1, 2}, {2, 3}}, {3});
    const Graph word = canonical_graph(product(product(leaf, center, rooted), center, rooted));
    CHECK_FALSE(divide(word, end_rooted_k2(), rooted, Side::Left).has_value());
    const auto left = divide(word, leaf, rooted, Side::Left);
    REQUIRE(left.has_value());
    CHECK(is_isomorphic(*left, product(center, center, rooted)));
    CHECK(factor_word(word, rooted).size() == 3);
}

TEST_CASE("catalogs")
{
    CHECK(catalog(ProductOp::Cartesian, 4).size() == 6);
    CHECK(catalog_primes(ProductOp::Cartesian, 4).size() == 5);
    CHECK(catalog(ProductOp::RootedHierarchical, 3).size() == 3);
    for (const Graph &g : catalog(ProductOp::Direct, 2)) {
        CHECK_FALSE(is_bipartite(g));
    }
}
