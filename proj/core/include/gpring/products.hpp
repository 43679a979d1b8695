#pragma once

#include <gpring/family.hpp>
#include <gpring/graph.hpp>

#include <array>
#include <cstddef>
#include <string_view>

namespace gpring {

enum class ProductOp {
    Cartesian,
    Hierarchical,       // generalized rooted hierarchical
    RootedHierarchical, // singly rooted components
    Strong,
    Direct,
    Lex,
    ModLex,
};

inline constexpr std::array<ProductOp, 7> all_products = {
    ProductOp::Cartesian, ProductOp::Hierarchical, ProductOp::RootedHierarchical, ProductOp::Strong,
    ProductOp::Direct,    ProductOp::Lex,          ProductOp::ModLex,
};

// CLI names: cartesian, hierarchical, rooted-hierarchical, strong, direct, lex, modlex.
std::string_view product_name(ProductOp op) noexcept;
ProductOp parse_product(std::string_view name);

bool is_commutative(ProductOp op) noexcept;
// Products whose graph semiring is distributive on both sides.
bool is_semiring_product(ProductOp op) noexcept;
bool keeps_roots(ProductOp op) noexcept;

// Relation between two coordinate values inside one factor.
struct CoordRelation {
    bool equal = false;
    bool adjacent = false; // a loop when equal
    bool root = false;     // root flag of the coordinate value (meaningful when equal)
};

// Adjacency of (s, t) and (s', t') in first x second, given how s, s' relate in
// the first factor and t, t' in the second. Modified lexicographic is reported
// with its connected-operand rule.
bool product_adjacent(ProductOp op, CoordRelation first, CoordRelation second) noexcept;

struct ProductLimits {
    std::size_t max_vertices = 1u << 16;
};

// Domain checks; throw EmptyRootSet / NotSinglyRooted / LoopsNotAllowed.
void check_operand(const Graph &g, ProductOp op);

Graph hierarchical(const Graph &g, const Graph &h, const ProductLimits &limits = {});
Graph rooted_hierarchical(const Graph &g, const Graph &h, const ProductLimits &limits = {});
Graph cartesian(const Graph &g, const Graph &h, const ProductLimits &limits = {});
Graph strong(const Graph &g, const Graph &h, const ProductLimits &limits = {});
Graph direct(const Graph &g, const Graph &h, const ProductLimits &limits = {});
Graph lexicographic(const Graph &g, const Graph &h, const ProductLimits &limits = {});
Graph modified_lexicographic(const Graph &g, const Graph &h, const ProductLimits &limits = {});

// Vertex (i, j) of the result is numbered i * |V(h)| + j.
Graph product(const Graph &g, const Graph &h, ProductOp op, const ProductLimits &limits = {});
// Left-associated n-fold product.
Graph power(const Graph &g, unsigned n, ProductOp op, const ProductLimits &limits = {});

// Neutral element of op.
Graph unit_graph(ProductOp op);

// Componentwise product of families (realizes the lexicographic product,
// which is not left distributive).
GraphFamily product(const GraphFamily &a, const GraphFamily &b, ProductOp op, const ProductLimits &limits = {});
GraphFamily power(const GraphFamily &a, unsigned n, ProductOp op, const ProductLimits &limits = {});

} // namespace gpring
