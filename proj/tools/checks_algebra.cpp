#include "checks.hpp"

#include <gpring/error.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace gpring::checks {

namespace {

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <typename Body>
Check timed(std::string name, Body &&body)
{
    Check check;
    check.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception &e) {
        check.expect(false, std::string("unexpected error: ") + e.what());
    }
    check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return check;
}

std::string show(const Monomial &a, const Monomial &b, const Monomial &c)
{
    return to_string(a) + ", " + to_string(b) + ", " + to_string(c);
}

std::string show(const Series &a, const Series &b)
{
    return "(" + to_string(a) + ") vs (" + to_string(b) + ")";
}

Series nonzero_series(Rng &rng, CoefficientKind kind, std::size_t terms, std::size_t degree, std::int64_t coeff)
{
    Series s(kind);
    while (s.is_zero()) {
        s = random_series(rng, kind, terms, degree, 3, coeff);
    }
    return s;
}

} // namespace

Letter random_letter(Rng &rng, std::uint32_t letters_per_kind)
{
    const auto rank = static_cast<std::uint32_t>(uniform(rng, 1, letters_per_kind));
    return uniform(rng, 0, 1) == 0 ? y_letter(rank) : x_letter(rank);
}

Monomial random_monomial(Rng &rng, std::size_t max_degree, std::uint32_t letters_per_kind)
{
    std::vector<Letter> word(uniform(rng, 0, max_degree));
    for (Letter &l : word) {
        l = random_letter(rng, letters_per_kind);
    }
    return Monomial(std::move(word));
}

Series random_series(Rng &rng, CoefficientKind kind, std::size_t max_terms, std::size_t max_degree,
                     std::uint32_t letters_per_kind, std::int64_t max_coeff, std::optional<std::size_t> bound)
{
    Series s(kind, bound);
    const std::size_t terms = uniform(rng, 0, max_terms);
    for (std::size_t i = 0; i < terms; ++i) {
        auto value = static_cast<std::int64_t>(uniform(rng, 1, static_cast<std::size_t>(max_coeff)));
        if (kind == CoefficientKind::Integer && uniform(rng, 0, 1) == 0) {
            value = -value;
        }
        s.accumulate(random_monomial(rng, max_degree, letters_per_kind), {value, false});
    }
    return s;
}

Check monomial_order_laws(Rng &rng, std::size_t cases)
{
    return timed("monomial strict order", [&](Check &check) {
        const Monomial one;
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            const Monomial a = random_monomial(rng, 4, 3);
            const Monomial b = random_monomial(rng, 4, 3);
            const Monomial c = random_monomial(rng, 4, 3);
            const std::string at = " at " + show(a, b, c);
            check.expect((a < b) + (a == b) + (b < a) == 1 && compare(a, b) == (0 <=> compare(b, a)), "totality" + at);
            if (a <= b && b <= c) {
                check.expect(a <= c, "transitivity" + at);
            }
            if (a < b) {
                check.expect(a * c < b * c && c * a < c * b, "monotonicity" + at);
            }
            check.expect((a * b) * c == a * (b * c), "associativity" + at);
            check.expect(a * one == a && one * a == a, "identity" + at);
            check.expect((a * b).degree() == a.degree() + b.degree(), "degree grading" + at);
            check.expect(a == one || one < a, "identity is least" + at);
            check.expect(a <= a * b && b <= a * b, "factors below product" + at);
        }
    });
}

Check series_order_laws(Rng &rng, std::size_t cases)
{
    return timed("series strict order", [&](Check &check) {
        const Series zero(CoefficientKind::Integer);
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            const Series f = random_series(rng, CoefficientKind::Integer, 4, 3, 2, 3);
            const Series g = random_series(rng, CoefficientKind::Integer, 4, 3, 2, 3);
            Series h = random_series(rng, CoefficientKind::Integer, 4, 3, 2, 3);
            if (h.is_zero()) {
                h = Series::one(CoefficientKind::Integer);
            } else if (compare(h, zero) < 0) {
                h = -h;
            }
            const std::string at = " at " + show(f, g);
            const auto fg = compare(f, g);
            check.expect((fg == 0) == (f == g) && fg == (0 <=> compare(g, f)), "totality" + at);
            if (compare(f, g) <= 0 && compare(g, h) <= 0) {
                check.expect(compare(f, h) <= 0, "transitivity" + at);
            }
            if (fg < 0) {
                check.expect(compare(f + h, g + h) < 0, "additive monotonicity" + at);
                check.expect(compare(f * h, g * h) < 0, "right multiplicative monotonicity" + at);
                check.expect(compare(h * f, h * g) < 0, "left multiplicative monotonicity" + at);
            }
        }
    });
}

Check divisor_soundness(Rng &rng, std::size_t cases)
{
    return timed("divisor soundness", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            const Monomial m = random_monomial(rng, 6, 3);
            const auto pairs = divisors(m);
            const std::set<std::pair<Monomial, Monomial>> unique(pairs.begin(), pairs.end());
            check.expect(unique.size() == pairs.size(), "duplicate divisor pair of " + to_string(m));
            check.expect(unique.count({Monomial(), m}) && unique.count({m, Monomial()}),
                         "trivial pairs missing for " + to_string(m));
            for (const auto &[u, v] : pairs) {
                check.expect(u * v == m && u <= m && v <= m, "unsound pair for " + to_string(m));
                check.expect(left_quotient(m, u) == v && right_quotient(m, v) == u, "quotients disagree for " +
                                                                                        to_string(m));
            }
        }
    });
}

Check semiring_laws(Rng &rng, std::size_t cases)
{
    return timed("semiring laws", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            std::optional<std::size_t> bound;
            if (uniform(rng, 0, 1) == 0) {
                bound = uniform(rng, 2, 5);
            }
            auto draw = [&] { return random_series(rng, CoefficientKind::Natural, 4, 3, 2, 3, bound); };
            const Series f = draw();
            const Series g = draw();
            const Series h = draw();
            const Series zero(CoefficientKind::Natural, bound);
            const Series one = Series::one(CoefficientKind::Natural, bound);
            const std::string at = " at " + show(f, g);
            check.expect((f + g) + h == f + (g + h) && f + g == g + f, "additive laws" + at);
            check.expect((f * g) * h == f * (g * h), "multiplicative associativity" + at);
            check.expect(f * (g + h) == f * g + f * h, "left distributivity" + at);
            check.expect((f + g) * h == f * h + g * h, "right distributivity" + at);
            check.expect(f * zero == zero && zero * f == zero && f + zero == f, "zero" + at);
            check.expect(f * one == f && one * f == f, "one" + at);
        }
    });
}

Check series_cancel_roundtrip(Rng &rng, std::size_t cases)
{
    return timed("series cancellation roundtrip", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            const auto kind = i % 2 == 0 ? CoefficientKind::Natural : CoefficientKind::Integer;
            const Series f = random_series(rng, kind, 4, 3, 2, 3);
            const Series c = nonzero_series(rng, kind, 3, 2, 3);
            const std::string at = " at " + show(f, c);
            try {
                check.expect(cancel(f * c, c, Side::Right) == f, "right" + at);
                check.expect(cancel(c * f, c, Side::Left) == f, "left" + at);
            } catch (const Error &e) {
                check.expect(false, std::string(e.what()) + at);
            }
        }
    });
}

Check series_root_roundtrip(Rng &rng, std::size_t cases)
{
    return timed("series root roundtrip", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            const Series f = nonzero_series(rng, CoefficientKind::Natural, 3, 2, 3);
            const unsigned n = 2 + static_cast<unsigned>(i % 3);
            const std::string at = " at (" + to_string(f) + ")^" + std::to_string(n);
            try {
                check.expect(nth_root(pow(f, n), n) == f, "root" + at);
            } catch (const Error &e) {
                check.expect(false, std::string(e.what()) + at);
            }
            const Series z = f.with_kind(CoefficientKind::Integer);
            check.expect((-z) * (-z) == z * z, "sign ambiguity" + at);
        }
    });
}

Check domain_property(Rng &rng, std::size_t cases, std::size_t max_degree)
{
    return timed("integer series have no zero divisors", [&](Check &check) {
        for (std::size_t i = 0; i < cases; ++i) {
            ++check.cases;
            const Series f = nonzero_series(rng, CoefficientKind::Integer, 5, max_degree, 4);
            const Series g = nonzero_series(rng, CoefficientKind::Integer, 5, max_degree, 4);
            check.expect(!(f * g).is_zero(), "zero product at " + show(f, g));
        }
    });
}

Check counterexample(std::size_t bound)
{
    return timed("cardinal coefficient counterexample", [&](Check &check) {
        ++check.cases;
        std::vector<std::uint64_t> ones(bound, 1);
        std::vector<std::uint64_t> rising;
        for (std::uint64_t d = 2; d <= bound; ++d) {
            rising.push_back(d);
        }
        const auto r = demo_counterexample(bound, ones, rising);
        check.expect(r.distinct, "H_a == H_b");
        check.expect(r.squares_equal, "H_a^2 != H_b^2");
        check.expect(r.additive_collapse, "w g + g != w g + 5 g");
        bool all_omega = r.square_a.terms().size() + 1 == bound;
        for (const auto &[m, c] : r.square_a.terms()) {
            all_omega = all_omega && c.omega && m.degree() >= 2;
        }
        check.expect(all_omega, "H^2 is not w g^2 + w g^3 + ...");
        check.expect(!demo_counterexample(bound, rising, rising).distinct, "identical sequences differ");
        const auto small = demo_counterexample(2, ones, rising);
        check.expect(small.square_a.terms().size() == 1 && small.square_a.terms().begin()->second.omega,
                     "bound 2 square is not w g^2");
    });
}

std::vector<Check> run_suite(std::uint64_t seed, std::size_t iterations)
{
    Rng rng(seed);
    std::vector<Check> out;
    for (ProductOp op : all_products) {
        out.push_back(product_laws(op, rng, iterations));
    }
    out.push_back(lex_left_distributivity_fails());
    out.push_back(monomial_order_laws(rng, iterations * 20));
    out.push_back(series_order_laws(rng, iterations * 20));
    out.push_back(divisor_soundness(rng, iterations));
    out.push_back(semiring_laws(rng, iterations));
    out.push_back(series_cancel_roundtrip(rng, iterations));
    out.push_back(series_root_roundtrip(rng, iterations));
    out.push_back(domain_property(rng, iterations * 20));
    out.push_back(counterexample());
    for (ProductOp op : semiring_products()) {
        const std::size_t graph_cases = std::max<std::size_t>(1, iterations / 5);
        out.push_back(encode_homomorphism(op, rng, graph_cases));
        out.push_back(graph_root_roundtrip(op, rng, graph_cases));
        out.push_back(graph_cancel_roundtrip(op, rng, graph_cases));
    }
    return out;
}

} // namespace gpring::checks
