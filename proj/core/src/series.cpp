#include <gpring/series.hpp>

#include <gpring/error.hpp>

#include <algorithm>

namespace gpring {

std::string_view to_string(CoefficientKind kind) noexcept
{
    switch (kind) {
    case CoefficientKind::Natural: return "natural";
    case CoefficientKind::Integer: return "integer";
    case CoefficientKind::Extended: return "extended";
    }
    return "?";
}

Coefficient operator+(Coefficient a, Coefficient b)
{
    if (a.omega || b.omega) {
        return Coefficient::infinite();
    }
    Coefficient out;
    if (__builtin_add_overflow(a.value, b.value, &out.value)) {
        fail(ErrorKind::SizeLimitExceeded, "coefficient overflow");
    }
    return out;
}

Coefficient operator*(Coefficient a, Coefficient b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.omega || b.omega) {
        return Coefficient::infinite();
    }
    Coefficient out;
    if (__builtin_mul_overflow(a.value, b.value, &out.value)) {
        fail(ErrorKind::SizeLimitExceeded, "coefficient overflow");
    }
    return out;
}

std::string to_string(Coefficient c)
{
    return c.omega ? "w" : std::to_string(c.value);
}

Series::Series(CoefficientKind kind, std::optional<std::size_t> bound, std::uint64_t registry)
    : m_kind(kind), m_bound(bound), m_registry(registry)
{
}

Series Series::one(CoefficientKind kind, std::optional<std::size_t> bound, std::uint64_t registry)
{
    return term(Monomial(), {1, false}, kind, bound, registry);
}

Series Series::term(const Monomial &m, Coefficient c, CoefficientKind kind, std::optional<std::size_t> bound,
                    std::uint64_t registry)
{
    Series s(kind, bound, registry);
    s.set(m, c);
    return s;
}

void Series::check(Coefficient c) const
{
    if (c.omega && m_kind != CoefficientKind::Extended) {
        fail(ErrorKind::VariantMismatch, "omega needs extended coefficients");
    }
    if (c.value < 0 && m_kind != CoefficientKind::Integer) {
        fail(ErrorKind::VariantMismatch, "negative coefficient in " + std::string(to_string(m_kind)) + " series");
    }
}

Coefficient Series::coefficient(const Monomial &m) const
{
    auto it = m_terms.find(m);
    return it == m_terms.end() ? Coefficient{} : it->second;
}

void Series::set(const Monomial &m, Coefficient c)
{
    check(c);
    if (m_bound && m.degree() > *m_bound) {
        return;
    }
    if (c.is_zero()) {
        m_terms.erase(m);
    } else {
        m_terms[m] = c;
    }
}

void Series::accumulate(const Monomial &m, Coefficient c)
{
    set(m, coefficient(m) + c);
}

std::size_t Series::max_degree() const
{
    std::size_t d = 0;
    for (const auto &[m, c] : m_terms) {
        d = std::max(d, m.degree());
    }
    return d;
}

Series Series::truncated(std::optional<std::size_t> bound) const
{
    Series out(m_kind, bound, m_registry);
    for (const auto &[m, c] : m_terms) {
        out.set(m, c);
    }
    return out;
}

Series Series::with_kind(CoefficientKind kind) const
{
    Series out(kind, m_bound, m_registry);
    for (const auto &[m, c] : m_terms) {
        out.set(m, c);
    }
    return out;
}

Series Series::with_registry(std::uint64_t registry) const
{
    Series out = *this;
    out.m_registry = registry;
    return out;
}

namespace {

std::optional<std::size_t> min_bound(const Series &f, const Series &g)
{
    if (!f.bound()) {
        return g.bound();
    }
    if (!g.bound()) {
        return f.bound();
    }
    return std::min(*f.bound(), *g.bound());
}

std::uint64_t joint_registry(const Series &f, const Series &g)
{
    if (f.registry() != 0 && g.registry() != 0 && f.registry() != g.registry()) {
        fail(ErrorKind::RegistryMismatch, "series built over different prime registries");
    }
    return f.registry() != 0 ? f.registry() : g.registry();
}

void same_kind(const Series &f, const Series &g)
{
    if (f.kind() != g.kind()) {
        fail(ErrorKind::VariantMismatch, std::string("cannot mix ") + std::string(to_string(f.kind())) + " and " +
                                             std::string(to_string(g.kind())) + " coefficients");
    }
}

} // namespace

Series operator+(const Series &f, const Series &g)
{
    same_kind(f, g);
    Series out(f.kind(), min_bound(f, g), joint_registry(f, g));
    for (const auto &[m, c] : f.terms()) {
        out.accumulate(m, c);
    }
    for (const auto &[m, c] : g.terms()) {
        out.accumulate(m, c);
    }
    return out;
}

Series operator-(const Series &f)
{
    if (f.kind() != CoefficientKind::Integer) {
        fail(ErrorKind::VariantMismatch, "negation needs integer coefficients");
    }
    Series out(f.kind(), f.bound(), f.registry());
    for (const auto &[m, c] : f.terms()) {
        out.set(m, c * Coefficient{-1, false});
    }
    return out;
}

Series operator-(const Series &f, const Series &g)
{
    return f + (-g);
}

Series operator*(const Series &f, const Series &g)
{
    same_kind(f, g);
    Series out(f.kind(), min_bound(f, g), joint_registry(f, g));
    const auto bound = out.bound();
    for (const auto &[a, ca] : f.terms()) {
        for (const auto &[b, cb] : g.terms()) {
            if (bound && a.degree() + b.degree() > *bound) {
                continue;
            }
            out.accumulate(a * b, ca * cb);
        }
    }
    return out;
}

Series pow(const Series &f, unsigned n)
{
    Series out = Series::one(f.kind(), f.bound(), f.registry());
    for (unsigned i = 0; i < n; ++i) {
        out = out * f;
    }
    return out;
}

std::strong_ordering compare(const Series &f, const Series &g)
{
    if (f.kind() == CoefficientKind::Extended || g.kind() == CoefficientKind::Extended) {
        fail(ErrorKind::IncomparableVariant, "extended coefficients are not strictly ordered");
    }
    joint_registry(f, g);
    if (f.bound() != g.bound()) {
        fail(ErrorKind::VariantMismatch, "series with different degree bounds are not comparable");
    }
    auto i = f.terms().begin();
    auto j = g.terms().begin();
    while (i != f.terms().end() || j != g.terms().end()) {
        std::int64_t a = 0;
        std::int64_t b = 0;
        if (j == g.terms().end() || (i != f.terms().end() && i->first < j->first)) {
            a = i->second.value;
            ++i;
        } else if (i == f.terms().end() || j->first < i->first) {
            b = j->second.value;
            ++j;
        } else {
            a = i->second.value;
            b = j->second.value;
            ++i;
            ++j;
        }
        if (a != b) {
            return a <=> b;
        }
    }
    return std::strong_ordering::equal;
}

} // namespace gpring
