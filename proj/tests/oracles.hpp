#pragma once

// Slow reference implementations used to cross-check the library.

#include <gpring/canonical.hpp>
#include <gpring/graph.hpp>
#include <gpring/monomial.hpp>
#include <gpring/products.hpp>

#include <set>
#include <utility>
#include <vector>

namespace oracle {

using gpring::Graph;
using gpring::Monomial;
using gpring::ProductOp;

// Tries every vertex permutation; roots and loops must match.
bool isomorphic(const Graph &a, const Graph &b);

// Product straight from the edge definitions, vertex (i, j) -> i * |V(h)| + j.
// Modified lexicographic is applied componentwise.
Graph product(const Graph &g, const Graph &h, ProductOp op);

// All (u, v) with u * v == m, found by splitting every word that normalizes to m.
std::set<std::pair<Monomial, Monomial>> monomial_divisors(const Monomial &m);

// All connected graphs on n vertices up to isomorphism, by brute force over
// edge subsets (n <= 5).
std::vector<Graph> connected_graphs(std::size_t n);

} // namespace oracle
