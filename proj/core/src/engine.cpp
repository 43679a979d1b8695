#include <gpring/engine.hpp>

#include <gpring/error.hpp>

#include <limits>

namespace gpring {

namespace {

void require_semiring(ProductOp op)
{
    if (!is_semiring_product(op)) {
        fail(ErrorKind::UnsupportedDomain, "the lexicographic product is not left distributive; use modlex");
    }
}

void require_registry(const PrimeRegistry &registry, ProductOp op)
{
    if (registry.op() != op) {
        fail(ErrorKind::RegistryMismatch,
             "registry belongs to the " + std::string(product_name(registry.op())) + " product");
    }
}

std::optional<std::size_t> family_bound(const GraphFamily &f)
{
    if (f.degree_bound) {
        return *f.degree_bound;
    }
    return std::nullopt;
}

} // namespace

PrimeRegistry registry_for(const std::vector<const GraphFamily *> &families, ProductOp op,
                           const EngineOptions &options)
{
    require_semiring(op);
    std::vector<Prime> primes;
    for (const GraphFamily *f : families) {
        for (const auto &[key, component] : f->components()) {
            for (Prime &p : factor_word(component.graph, op, options.factor)) {
                primes.push_back(std::move(p));
            }
        }
    }
    return PrimeRegistry(op, std::move(primes));
}

Series encode(const GraphFamily &f, ProductOp op, const PrimeRegistry &registry, std::optional<std::size_t> bound,
              const EngineOptions &options)
{
    require_semiring(op);
    require_registry(registry, op);
    if (!bound) {
        bound = family_bound(f);
    }
    Series out(CoefficientKind::Natural, bound, registry.id());
    for (const auto &[key, component] : f.components()) {
        const Monomial m = factor_connected(component.graph, op, registry, options.factor);
        if (bound && m.degree() > *bound) {
            fail(ErrorKind::TruncationExceeded, "component of degree " + std::to_string(m.degree()) +
                                                    " exceeds the degree bound " + std::to_string(*bound));
        }
        if (component.multiplicity > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            fail(ErrorKind::SizeLimitExceeded, "multiplicity too large");
        }
        out.accumulate(m, {static_cast<std::int64_t>(component.multiplicity), false});
    }
    return out;
}

GraphFamily decode(const Series &s, ProductOp op, const PrimeRegistry &registry, const EngineOptions &options)
{
    require_registry(registry, op);
    if (s.registry() != 0 && s.registry() != registry.id()) {
        fail(ErrorKind::RegistryMismatch, "series was built over another registry");
    }
    if (s.kind() == CoefficientKind::Extended) {
        fail(ErrorKind::VariantMismatch, "extended coefficients have no finite family");
    }
    GraphFamily out;
    for (const auto &[m, c] : s.terms()) {
        if (c.value < 0) {
            fail(ErrorKind::VariantMismatch, "negative coefficient has no family");
        }
        out.add(registry.realize(m, options.limits), static_cast<std::uint64_t>(c.value));
    }
    if (s.bound()) {
        out.degree_bound = static_cast<std::uint32_t>(*s.bound());
    }
    return out;
}

GraphFamily graph_nth_root(const GraphFamily &h, unsigned n, ProductOp op, const EngineOptions &options)
{
    if (n == 0) {
        fail(ErrorKind::NoRoot, "root degree must be positive");
    }
    const PrimeRegistry registry = registry_for({&h}, op, options);
    const Series root = nth_root(encode(h, op, registry, std::nullopt, options), n);
    return decode(root, op, registry, options);
}

GraphFamily graph_cancel(const GraphFamily &p, const GraphFamily &c, Side side, ProductOp op,
                         const EngineOptions &options)
{
    if (c.empty()) {
        fail(ErrorKind::ZeroDivisor, "cannot cancel the empty family");
    }
    const PrimeRegistry registry = registry_for({&p, &c}, op, options);
    const Series ps = encode(p, op, registry, std::nullopt, options);
    const Series cs = encode(c, op, registry, std::nullopt, options);
    return decode(cancel(ps, cs, side), op, registry, options);
}

} // namespace gpring
