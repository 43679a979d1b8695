#include <gpring/series.hpp>

#include <gpring/error.hpp>

#include <charconv>
#include <cmath>
#include <set>

namespace gpring {

namespace {

void require_ordered(const Series &s, const char *what)
{
    if (s.kind() == CoefficientKind::Extended) {
        fail(ErrorKind::IncomparableVariant, std::string(what) + " is undefined for extended coefficients");
    }
}

std::optional<std::int64_t> checked_pow(std::int64_t base, unsigned n)
{
    std::int64_t out = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<std::int64_t> integer_root(std::int64_t c, unsigned n)
{
    auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<long double>(c), 1.0L / n)));
    for (std::int64_t r = std::max<std::int64_t>(0, guess - 2); r <= guess + 2; ++r) {
        auto p = checked_pow(r, n);
        if (p && *p == c) {
            return r;
        }
    }
    return std::nullopt;
}

} // namespace

Series cancel(const Series &p, const Series &c, Side side)
{
    require_ordered(p, "cancellation");
    require_ordered(c, "cancellation");
    if (p.kind() != c.kind()) {
        fail(ErrorKind::VariantMismatch, "cancellation operands use different coefficient kinds");
    }
    if (c.is_zero()) {
        fail(ErrorKind::ZeroDivisor, "cannot cancel the zero series");
    }
    const Series divisor = c.with_kind(CoefficientKind::Integer);
    Series residual = (p.with_kind(CoefficientKind::Integer) + Series(CoefficientKind::Integer, c.bound()));
    const auto bound = residual.bound();
    const auto &[low, low_coeff] = *divisor.terms().begin();
    std::optional<std::size_t> max_degree;
    if (!bound) {
        if (!p.is_zero() && p.max_degree() < c.max_degree()) {
            fail(ErrorKind::NotDivisible, "divisor has higher degree than the dividend");
        }
        max_degree = p.is_zero() ? 0 : p.max_degree() - c.max_degree();
    }
    std::optional<std::size_t> result_bound;
    if (bound) {
        result_bound = *bound - low.degree();
    }
    Series f(CoefficientKind::Integer, result_bound, residual.registry());
    while (!residual.is_zero()) {
        const auto [m, rv] = *residual.terms().begin();
        auto u = side == Side::Right ? right_quotient(m, low) : left_quotient(m, low);
        if (!u) {
            fail(ErrorKind::NotDivisible, "least term " + to_string(m) + " is not a multiple of " + to_string(low));
        }
        if (max_degree && u->degree() > *max_degree) {
            fail(ErrorKind::NotDivisible, "quotient degree exceeds the degree difference");
        }
        if (rv.value % low_coeff.value != 0) {
            fail(ErrorKind::NotDivisible, "coefficient " + to_string(rv) + " is not divisible by " + to_string(low_coeff));
        }
        const Series t = Series::term(*u, {rv.value / low_coeff.value, false}, CoefficientKind::Integer, bound);
        f.accumulate(*u, t.coefficient(*u));
        residual = residual - (side == Side::Right ? t * divisor : divisor * t);
    }
    if (p.kind() == CoefficientKind::Natural) {
        for (const auto &[m, v] : f.terms()) {
            if (v.value < 0) {
                fail(ErrorKind::NotDivisible, "quotient has a negative coefficient");
            }
        }
    }
    return f.with_kind(p.kind());
}

namespace {

class RootSearch {
public:
    RootSearch(const Series &h, unsigned n, Monomial a) : m_h(h.with_kind(CoefficientKind::Integer)), m_n(n), m_a(a)
    {
        m_pows.push_back(Monomial());
        for (unsigned i = 1; i < n; ++i) {
            m_pows.push_back(m_pows.back() * a);
        }
        if (!h.bound()) {
            m_max_degree = h.max_degree() / n;
        }
    }

    std::optional<Series> solve(const Series &f, std::int64_t scale)
    {
        if (++m_nodes > 200000) {
            fail(ErrorKind::SizeLimitExceeded, "root search budget exhausted");
        }
        const Series residual = m_h - pow(f, m_n).truncated(m_h.bound());
        if (residual.is_zero()) {
            return f;
        }
        const auto [w, rv] = *residual.terms().begin();
        if (rv.value < 0 || rv.value % scale != 0) {
            return std::nullopt;
        }
        std::vector<std::pair<Monomial, std::int64_t>> candidates;
        for (const Monomial &b : explanations(w)) {
            if (!f.coefficient(b).is_zero() || (m_max_degree && b.degree() > *m_max_degree)) {
                continue;
            }
            std::int64_t k = 0;
            bool least = true;
            for (unsigned i = 0; i < m_n; ++i) {
                const Monomial image = m_pows[i] * b * m_pows[m_n - 1 - i];
                k += image == w;
                least = least && !(image < w);
            }
            if (least) {
                candidates.emplace_back(b, k);
            }
        }
        return distribute(f, scale, candidates, 0, rv.value / scale);
    }

private:
    std::set<Monomial> explanations(const Monomial &w) const
    {
        std::set<Monomial> out;
        for (unsigned i = 0; i < m_n; ++i) {
            if (auto left = left_quotient(w, m_pows[i])) {
                if (auto b = right_quotient(*left, m_pows[m_n - 1 - i])) {
                    out.insert(*b);
                }
            }
        }
        return out;
    }

    // Nonnegative x_b with sum k_b * x_b == remaining.
    std::optional<Series> distribute(const Series &f, std::int64_t scale,
                                     const std::vector<std::pair<Monomial, std::int64_t>> &candidates, std::size_t index,
                                     std::int64_t remaining)
    {
        if (index == candidates.size()) {
            return remaining == 0 ? solve(f, scale) : std::nullopt;
        }
        const auto &[b, k] = candidates[index];
        for (std::int64_t x = remaining / k; x >= 0; --x) {
            Series next = f;
            next.set(b, {x, false});
            if (auto r = distribute(next, scale, candidates, index + 1, remaining - k * x)) {
                return r;
            }
        }
        return std::nullopt;
    }

    Series m_h;
    unsigned m_n;
    Monomial m_a;
    std::vector<Monomial> m_pows;
    std::optional<std::size_t> m_max_degree;
    std::size_t m_nodes = 0;
};

} // namespace

Series nth_root(const Series &h, unsigned n)
{
    if (h.kind() != CoefficientKind::Natural) {
        fail(ErrorKind::VariantMismatch, "roots are taken of nonnegative integer series");
    }
    if (n == 0) {
        fail(ErrorKind::NoRoot, "root degree must be positive");
    }
    if (n == 1 || h.is_zero()) {
        return h;
    }
    const auto &[low, low_coeff] = *h.terms().begin();
    auto a = nth_root(low, n);
    if (!a) {
        fail(ErrorKind::NoRoot, "least monomial " + to_string(low) + " has no root of degree " + std::to_string(n));
    }
    auto ca = integer_root(low_coeff.value, n);
    if (!ca) {
        fail(ErrorKind::NoRoot, "least coefficient " + to_string(low_coeff) + " is not a perfect power");
    }
    if (!h.bound() && h.max_degree() % n != 0) {
        fail(ErrorKind::NoRoot, "top degree is not a multiple of " + std::to_string(n));
    }
    const std::int64_t scale = *checked_pow(*ca, n - 1);
    Series start(CoefficientKind::Integer, h.bound(), h.registry());
    start.set(*a, {*ca, false});
    RootSearch search(h, n, *a);
    auto f = search.solve(start, scale);
    if (!f) {
        fail(ErrorKind::NoRoot, "no nonnegative series has this power");
    }
    std::optional<std::size_t> bound;
    if (h.bound()) {
        bound = *h.bound() - (n - 1) * a->degree();
    }
    return f->truncated(bound).with_kind(CoefficientKind::Natural);
}

std::string to_string(const Series &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : f.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(c);
        out += '*';
        out += to_string(m);
    }
    return out;
}

Series parse_series(std::string_view text, CoefficientKind kind, std::optional<std::size_t> bound,
                    std::uint64_t registry)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    Series out(kind, bound, registry);
    if (text == "0") {
        return out;
    }
    while (true) {
        const auto plus = text.find(" + ");
        const std::string_view token = trim(text.substr(0, plus));
        const auto star = token.find('*');
        if (star == std::string_view::npos) {
            fail(ErrorKind::ParseError, "bad series term '" + std::string(token) + "'");
        }
        const std::string_view coeff = token.substr(0, star);
        Coefficient c;
        if (coeff == "w") {
            c = Coefficient::infinite();
        } else {
            auto [ptr, ec] = std::from_chars(coeff.data(), coeff.data() + coeff.size(), c.value);
            if (ec != std::errc() || ptr != coeff.data() + coeff.size()) {
                fail(ErrorKind::ParseError, "bad coefficient '" + std::string(coeff) + "'");
            }
        }
        out.accumulate(parse_monomial(token.substr(star + 1)), c);
        if (plus == std::string_view::npos) {
            break;
        }
        text = text.substr(plus + 3);
    }
    return out;
}

CounterexampleReport demo_counterexample(std::size_t bound, const std::vector<std::uint64_t> &seq_a,
                                         const std::vector<std::uint64_t> &seq_b)
{
    const Monomial g{y_letter(1)};
    auto build = [&](const std::vector<std::uint64_t> &seq) {
        Series h = Series::term(g, Coefficient::infinite(), CoefficientKind::Extended, bound);
        for (std::size_t d = 2; d <= bound; ++d) {
            const std::uint64_t value = seq.empty() ? 1 : seq[std::min(d - 2, seq.size() - 1)];
            h.accumulate(pow(g, static_cast<unsigned>(d)), {static_cast<std::int64_t>(value), false});
        }
        return h;
    };
    CounterexampleReport r;
    r.bound = bound;
    r.h_a = build(seq_a);
    r.h_b = build(seq_b);
    r.square_a = r.h_a * r.h_a;
    r.square_b = r.h_b * r.h_b;
    const Series omega_g = Series::term(g, Coefficient::infinite(), CoefficientKind::Extended, bound);
    const Series one_g = Series::term(g, {1, false}, CoefficientKind::Extended, bound);
    const Series five_g = Series::term(g, {5, false}, CoefficientKind::Extended, bound);
    r.omega_plus_one = omega_g + one_g;
    r.omega_plus_five = omega_g + five_g;
    r.distinct = r.h_a != r.h_b;
    r.squares_equal = r.square_a == r.square_b;
    r.additive_collapse = r.omega_plus_one == r.omega_plus_five && one_g != five_g;
    return r;
}

} // namespace gpring
