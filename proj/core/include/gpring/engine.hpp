#pragma once

#include <gpring/factorization.hpp>
#include <gpring/family.hpp>
#include <gpring/products.hpp>
#include <gpring/series.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace gpring {

struct EngineOptions {
    FactorOptions factor;
    ProductLimits limits;
};

// Registry holding every prime factor of every component of the families.
PrimeRegistry registry_for(const std::vector<const GraphFamily *> &families, ProductOp op,
                           const EngineOptions &options = {});

// Component m with multiplicity f_m becomes the term f_m * factor_connected(m).
// The series bound is `bound`, else the family's own degree bound, else none;
// a component of larger degree raises TruncationExceeded.
Series encode(const GraphFamily &f, ProductOp op, const PrimeRegistry &registry,
              std::optional<std::size_t> bound = std::nullopt, const EngineOptions &options = {});
GraphFamily decode(const Series &s, ProductOp op, const PrimeRegistry &registry, const EngineOptions &options = {});

// The family g with g^n == h (componentwise product power).
GraphFamily graph_nth_root(const GraphFamily &h, unsigned n, ProductOp op, const EngineOptions &options = {});
// The family a with a * c == p (right) or c * a == p (left).
GraphFamily graph_cancel(const GraphFamily &p, const GraphFamily &c, Side side, ProductOp op,
                         const EngineOptions &options = {});

} // namespace gpring
