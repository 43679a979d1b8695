#pragma once

#include <gpring/canonical.hpp>
#include <gpring/graph.hpp>
#include <gpring/monomial.hpp>
#include <gpring/products.hpp>

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpring {

// Y for factors that commute with each other, X otherwise.
LetterKind classify(const Graph &prime, ProductOp op);

struct Prime {
    CanonicalKey key;
    Graph graph; // canonical representative
    LetterKind kind = LetterKind::X;
};

struct FactorOptions {
    // Candidate prime factors are drawn from catalogs up to this many vertices.
    std::size_t catalog_bound = 6;
    // Recheck the normal form against every prime right divisor of the input.
    bool verify_uniqueness = true;
    // Search nodes per division attempt.
    std::size_t division_budget = 2'000'000;
};

// The product's domain as seen by factorization: unrooted products drop roots;
// throws UnsupportedDomain / EmptyRootSet / NotSinglyRooted / LoopsNotAllowed.
Graph factor_domain(const Graph &g, ProductOp op);

// Connected graphs of op's universe with n vertices, up to isomorphism.
const std::vector<Graph> &catalog(ProductOp op, std::size_t n);
// The prime members of catalog(op, n).
const std::vector<Graph> &catalog_primes(ProductOp op, std::size_t n);

// All ordered pairs (a, b) up to isomorphism with a * b isomorphic to g,
// including the trivial pairs with the unit.
std::vector<std::pair<Graph, Graph>> divisor_pairs(const Graph &g, ProductOp op, const FactorOptions &options = {});
bool is_prime(const Graph &g, ProductOp op, const FactorOptions &options = {});

// The q with q * p == g (right) or p * q == g (left), if any. Exact search over
// coordinate assignments of g's vertices.
std::optional<Graph> divide(const Graph &g, const Graph &p, ProductOp op, Side side,
                            std::size_t budget = FactorOptions{}.division_budget);

// Prime factors of a connected g, left to right, in normal form.
std::vector<Prime> factor_word(const Graph &g, ProductOp op, const FactorOptions &options = {});

// Frozen, ordered set of prime letters for one product. Ranks follow the
// letter order: Y before X, then vertex count, then key bytes; they are
// numbered from 1 within each kind.
class PrimeRegistry {
public:
    PrimeRegistry(ProductOp op, std::vector<Prime> primes);

    ProductOp op() const noexcept { return m_op; }
    std::uint64_t id() const noexcept { return m_id; }
    const std::vector<Prime> &primes() const noexcept { return m_primes; }

    std::optional<Letter> find(const CanonicalKey &key) const;
    const Prime &prime(Letter letter) const;
    Letter letter(std::size_t index) const;

    Monomial monomial(const std::vector<Prime> &word) const;
    // Product of the letters' primes; the unit for the identity.
    Graph realize(const Monomial &m, const ProductLimits &limits = {}) const;

    // One line per letter: <kind> <rank> <vertex_count> <key-hex>
    std::string dump() const;

private:
    ProductOp m_op;
    std::uint64_t m_id;
    std::vector<Prime> m_primes;
    std::size_t m_y_count = 0;
    std::map<CanonicalKey, std::size_t> m_index;
};

Monomial factor_connected(const Graph &g, ProductOp op, const PrimeRegistry &registry,
                          const FactorOptions &options = {});

} // namespace gpring
