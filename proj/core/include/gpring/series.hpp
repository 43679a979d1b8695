#pragma once

#include <gpring/monomial.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpring {

enum class CoefficientKind {
    Natural,  // nonnegative integers
    Integer,  // ring of differences
    Extended, // nonnegative integers plus omega, saturating
};

std::string_view to_string(CoefficientKind kind) noexcept;

struct Coefficient {
    std::int64_t value = 0;
    bool omega = false;

    static Coefficient infinite() { return {0, true}; }
    bool is_zero() const noexcept { return !omega && value == 0; }

    friend bool operator==(const Coefficient &, const Coefficient &) = default;
};

Coefficient operator+(Coefficient a, Coefficient b);
Coefficient operator*(Coefficient a, Coefficient b);
std::string to_string(Coefficient c);

// Finite-support map Monomial -> nonzero coefficient. A degree bound, when
// present, drops every term of higher degree. Registry id 0 means "no letters
// bound yet" and is compatible with every registry.
class Series {
public:
    using Terms = std::map<Monomial, Coefficient>;

    explicit Series(CoefficientKind kind = CoefficientKind::Natural, std::optional<std::size_t> bound = std::nullopt,
                    std::uint64_t registry = 0);

    static Series one(CoefficientKind kind = CoefficientKind::Natural, std::optional<std::size_t> bound = std::nullopt,
                      std::uint64_t registry = 0);
    static Series term(const Monomial &m, Coefficient c, CoefficientKind kind = CoefficientKind::Natural,
                       std::optional<std::size_t> bound = std::nullopt, std::uint64_t registry = 0);

    CoefficientKind kind() const noexcept { return m_kind; }
    std::optional<std::size_t> bound() const noexcept { return m_bound; }
    std::uint64_t registry() const noexcept { return m_registry; }
    const Terms &terms() const noexcept { return m_terms; }

    bool is_zero() const noexcept { return m_terms.empty(); }
    Coefficient coefficient(const Monomial &m) const;
    // Adds c to the coefficient of m; terms beyond the bound are ignored.
    void accumulate(const Monomial &m, Coefficient c);
    void set(const Monomial &m, Coefficient c);
    std::size_t max_degree() const;

    Series truncated(std::optional<std::size_t> bound) const;
    Series with_kind(CoefficientKind kind) const;
    Series with_registry(std::uint64_t registry) const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    void check(Coefficient c) const;

    CoefficientKind m_kind;
    std::optional<std::size_t> m_bound;
    std::uint64_t m_registry;
    Terms m_terms;
};

Series operator+(const Series &f, const Series &g);
Series operator-(const Series &f); // Integer only
Series operator-(const Series &f, const Series &g);
Series operator*(const Series &f, const Series &g);
Series pow(const Series &f, unsigned n);

// f < g iff f(m) < g(m) at the least monomial where they differ.
std::strong_ordering compare(const Series &f, const Series &g);

// Right: the f with f * c == p. Left: the f with c * f == p.
Series cancel(const Series &p, const Series &c, Side side);
// The nonnegative f with f^n == h.
Series nth_root(const Series &h, unsigned n);

// "0", or "c*mono" terms joined by " + " in increasing monomial order; w is omega.
std::string to_string(const Series &f);
Series parse_series(std::string_view text, CoefficientKind kind = CoefficientKind::Natural,
                    std::optional<std::size_t> bound = std::nullopt, std::uint64_t registry = 0);

struct CounterexampleReport {
    std::size_t bound = 0;
    Series h_a;
    Series h_b;
    Series square_a;
    Series square_b;
    Series omega_plus_one;  // w*g + g
    Series omega_plus_five; // w*g + 5*g
    bool distinct = false;          // h_a != h_b
    bool squares_equal = false;     // h_a^2 == h_b^2
    bool additive_collapse = false; // w*g + g == w*g + 5*g while g != 5*g
};

// Sequences give the coefficients of g^2, g^3, ...; a short sequence repeats
// its last entry.
CounterexampleReport demo_counterexample(std::size_t bound, const std::vector<std::uint64_t> &seq_a,
                                         const std::vector<std::uint64_t> &seq_b);

} // namespace gpring
