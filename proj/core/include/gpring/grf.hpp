#pragma once

#include <gpring/family.hpp>
#include <gpring/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpring {

// Line-oriented graph format:
//
//   # comment
//   bound <d>                           (optional, declares a truncated family)
//   graph <name> [mult=<m>] [loops=<0|1>]
//   vertices <n>
//   roots <i> <i> ...                   (optional)
//   edge <u> <v>                        (0-based; u == v is a loop)
//   end
//
// A file is a sequence of blocks; the family is their weighted disjoint union.
struct GrfBlock {
    std::string name;
    Graph graph;
    std::uint64_t multiplicity = 1;

    friend bool operator==(const GrfBlock &, const GrfBlock &) = default;
};

struct GrfDocument {
    std::vector<GrfBlock> blocks;
    std::optional<std::uint32_t> degree_bound;

    friend bool operator==(const GrfDocument &, const GrfDocument &) = default;
};

GrfDocument parse_grf(std::string_view text);
GrfDocument read_grf_file(const std::string &path);
std::string render_grf(const GrfDocument &doc);

GraphFamily to_family(const GrfDocument &doc);
// One block per component class, named <prefix><index>, in key order.
GrfDocument to_document(const GraphFamily &family, const std::string &prefix = "c");
// The single graph of a document with one block of multiplicity 1, else the
// realized disjoint union.
Graph to_graph(const GrfDocument &doc);

} // namespace gpring
