#pragma once

#include <gpring/engine.hpp>
#include <gpring/family.hpp>
#include <gpring/graph.hpp>
#include <gpring/monomial.hpp>
#include <gpring/products.hpp>
#include <gpring/series.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gpring::checks {

using Rng = std::mt19937_64;

// Tally of one randomized law.
struct Check {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0;

    bool ok() const noexcept { return failures == 0 && cases > 0; }
    void expect(bool condition, const std::string &what);
};

// Random graphs.
Graph random_graph(Rng &rng, std::size_t n, double p);
Graph random_connected(Rng &rng, std::size_t n, double extra = 0.3);
// A graph (connected or not) inside op's product domain.
Graph random_operand(Rng &rng, ProductOp op, std::size_t max_n, bool connected);
// A connected graph inside op's factorization domain.
Graph random_factorable(Rng &rng, ProductOp op, std::size_t max_n);
GraphFamily random_family(Rng &rng, ProductOp op, std::size_t max_components, std::size_t max_n,
                          std::uint64_t max_mult = 3);

// Random algebra.
Letter random_letter(Rng &rng, std::uint32_t letters_per_kind);
Monomial random_monomial(Rng &rng, std::size_t max_degree, std::uint32_t letters_per_kind);
Series random_series(Rng &rng, CoefficientKind kind, std::size_t max_terms, std::size_t max_degree,
                     std::uint32_t letters_per_kind, std::int64_t max_coeff,
                     std::optional<std::size_t> bound = std::nullopt);

// Identity, associativity, distributivity, vertex counts, connectivity and
// commutativity laws for one product.
Check product_laws(ProductOp op, Rng &rng, std::size_t cases);
// K2 o 2K1 is not K2 o K1 + K2 o K1.
Check lex_left_distributivity_fails();

Check monomial_order_laws(Rng &rng, std::size_t cases);
Check series_order_laws(Rng &rng, std::size_t cases);
Check divisor_soundness(Rng &rng, std::size_t cases);
Check semiring_laws(Rng &rng, std::size_t cases);
Check series_cancel_roundtrip(Rng &rng, std::size_t cases);
Check series_root_roundtrip(Rng &rng, std::size_t cases);
Check domain_property(Rng &rng, std::size_t cases, std::size_t max_degree = 5);
Check counterexample(std::size_t bound = 8);

Check graph_root_roundtrip(ProductOp op, Rng &rng, std::size_t cases, const std::vector<unsigned> &exponents = {2, 3});
Check graph_cancel_roundtrip(ProductOp op, Rng &rng, std::size_t cases);
Check encode_homomorphism(ProductOp op, Rng &rng, std::size_t cases);

// Products with a semiring encoding.
std::vector<ProductOp> semiring_products();

// Full randomized suite at the given scale.
std::vector<Check> run_suite(std::uint64_t seed, std::size_t iterations);

} // namespace gpring::checks
