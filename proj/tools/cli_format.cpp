#include "cli_format.hpp"

#include <gpring/grf.hpp>

namespace gpring::cli {

int exit_code(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidGraph:
        return 2;
    case ErrorKind::UnsupportedDomain:
    case ErrorKind::EmptyRootSet:
    case ErrorKind::NotSinglyRooted:
    case ErrorKind::LoopsNotAllowed:
        return 3;
    case ErrorKind::NoRoot:
    case ErrorKind::NotDivisible:
    case ErrorKind::ZeroDivisor:
        return 4;
    case ErrorKind::SizeLimitExceeded:
    case ErrorKind::TruncationExceeded:
        return 5;
    default:
        return 1;
    }
}

json graph_json(const Graph &g)
{
    json edges = json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"vertices", g.vertex_count()},
            {"roots", g.roots()},
            {"loops", g.allows_loops()},
            {"edges", std::move(edges)}};
}

json family_json(const GraphFamily &f)
{
    json components = json::array();
    const GrfDocument doc = to_document(f);
    for (const GrfBlock &block : doc.blocks) {
        json c = graph_json(block.graph);
        c["name"] = block.name;
        c["multiplicity"] = block.multiplicity;
        components.push_back(std::move(c));
    }
    return components;
}

json series_json(const Series &s)
{
    json terms = json::array();
    for (const auto &[m, c] : s.terms()) {
        json coefficient = c.omega ? json("w") : json(c.value);
        terms.push_back({{"monomial", to_string(m)}, {"coefficient", std::move(coefficient)}});
    }
    return {{"kind", std::string(to_string(s.kind()))},
            {"text", to_string(s)},
            {"terms", std::move(terms)}};
}

json registry_json(const PrimeRegistry &registry)
{
    json letters = json::array();
    for (std::size_t i = 0; i < registry.primes().size(); ++i) {
        const Letter l = registry.letter(i);
        const Prime &p = registry.prime(l);
        letters.push_back({{"letter", to_string(Monomial{l})},
                           {"kind", l.kind == LetterKind::Y ? "Y" : "X"},
                           {"rank", l.rank},
                           {"vertices", p.graph.vertex_count()},
                           {"key", p.key.hex()}});
    }
    return {{"product", std::string(product_name(registry.op()))}, {"letters", letters}};
}

json bound_json(std::optional<std::size_t> bound)
{
    return bound ? json(*bound) : json(nullptr);
}

} // namespace gpring::cli
