#pragma once

#include <gpring/graph.hpp>

#include <cstddef>
#include <vector>

namespace gpring {

// All loopless unrooted graphs on n vertices, one canonical representative
// per isomorphism class. Built by vertex extension and memoized.
const std::vector<Graph> &all_graphs(std::size_t n);
const std::vector<Graph> &connected_graphs(std::size_t n);

// Every nonempty root set of g up to isomorphism.
std::vector<Graph> root_variants(const Graph &g);
// Every single-vertex root set of g up to isomorphism.
std::vector<Graph> single_root_variants(const Graph &g);
// Every loop pattern on g up to isomorphism (result allows loops).
std::vector<Graph> loop_variants(const Graph &g);

} // namespace gpring
