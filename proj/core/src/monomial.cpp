#include <gpring/monomial.hpp>

#include <gpring/error.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gpring {

namespace {

void normalize(std::vector<Letter> &word)
{
    auto begin = word.begin();
    while (begin != word.end()) {
        auto end = std::find_if(begin, word.end(), [](const Letter &l) { return l.kind == LetterKind::X; });
        std::sort(begin, end);
        begin = end == word.end() ? end : end + 1;
    }
}

// m = runs[0] xs[0] runs[1] ... xs[k-1] runs[k]
struct Runs {
    std::vector<std::vector<Letter>> runs{{}};
    std::vector<Letter> xs;
};

Runs split(const Monomial &m)
{
    Runs r;
    for (const Letter &l : m.word()) {
        if (l.kind == LetterKind::X) {
            r.xs.push_back(l);
            r.runs.emplace_back();
        } else {
            r.runs.back().push_back(l);
        }
    }
    return r;
}

bool is_submultiset(const std::vector<Letter> &a, const std::vector<Letter> &b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Letter> minus(const std::vector<Letter> &b, const std::vector<Letter> &a)
{
    std::vector<Letter> out;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out));
    return out;
}

// Sub-multisets of a sorted run.
void submultisets(const std::vector<Letter> &run, std::vector<std::vector<Letter>> &out)
{
    std::vector<std::pair<Letter, std::size_t>> groups;
    for (const Letter &l : run) {
        if (!groups.empty() && groups.back().first == l) {
            ++groups.back().second;
        } else {
            groups.emplace_back(l, 1);
        }
    }
    std::vector<std::size_t> take(groups.size(), 0);
    while (true) {
        std::vector<Letter> a;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            a.insert(a.end(), take[g], groups[g].first);
        }
        out.push_back(std::move(a));
        std::size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) {
            take[g] = 0;
            ++g;
        }
        if (g == groups.size()) {
            return;
        }
        ++take[g];
    }
}

} // namespace

Monomial::Monomial(std::vector<Letter> word) : m_word(std::move(word))
{
    normalize(m_word);
}

namespace {

std::vector<std::uint32_t> x_skeleton(const Monomial &m)
{
    std::vector<std::uint32_t> out;
    for (const Letter &l : m.word()) {
        if (l.kind == LetterKind::X) {
            out.push_back(l.rank);
        }
    }
    return out;
}

// Image under y_rank -> t, other y -> 1, x -> x, with t encoded as 0.
std::vector<std::uint64_t> y_trace(const Monomial &m, std::uint32_t rank)
{
    std::vector<std::uint64_t> out;
    for (const Letter &l : m.word()) {
        if (l.kind == LetterKind::X) {
            out.push_back(std::uint64_t{l.rank} + 1);
        } else if (l.rank == rank) {
            out.push_back(0);
        }
    }
    return out;
}

} // namespace

// Lexicographic combination of homomorphisms into strictly ordered monoids:
// the degree, the X skeleton under shortlex, then for each y in rank order the
// trace of that y among the X letters, longer first and lexicographic with y
// below every x. Together they separate monomials, so the result is a strict
// order compatible with multiplication on both sides.
std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    const auto xa = x_skeleton(a);
    const auto xb = x_skeleton(b);
    if (auto c = xa.size() <=> xb.size(); c != 0) {
        return c;
    }
    if (auto c = std::lexicographical_compare_three_way(xa.begin(), xa.end(), xb.begin(), xb.end()); c != 0) {
        return c;
    }
    std::vector<std::uint32_t> ranks;
    for (const Monomial *m : {&a, &b}) {
        for (const Letter &l : m->word()) {
            if (l.kind == LetterKind::Y) {
                ranks.push_back(l.rank);
            }
        }
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (std::uint32_t rank : ranks) {
        const auto ta = y_trace(a, rank);
        const auto tb = y_trace(b, rank);
        if (auto c = tb.size() <=> ta.size(); c != 0) {
            return c;
        }
        if (auto c = std::lexicographical_compare_three_way(ta.begin(), ta.end(), tb.begin(), tb.end()); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial &a, const Monomial &b)
{
    return a <=> b;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    std::vector<Letter> w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return Monomial(std::move(w));
}

Monomial pow(const Monomial &m, unsigned n)
{
    Monomial out;
    for (unsigned i = 0; i < n; ++i) {
        out = out * m;
    }
    return out;
}

std::vector<std::pair<Monomial, Monomial>> divisors(const Monomial &m)
{
    const Runs r = split(m);
    std::vector<std::pair<Monomial, Monomial>> out;
    std::vector<Letter> prefix;
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        std::vector<std::vector<Letter>> parts;
        submultisets(r.runs[i], parts);
        for (const auto &a : parts) {
            std::vector<Letter> u = prefix;
            u.insert(u.end(), a.begin(), a.end());
            std::vector<Letter> v = minus(r.runs[i], a);
            for (std::size_t j = i; j < r.xs.size(); ++j) {
                v.push_back(r.xs[j]);
                v.insert(v.end(), r.runs[j + 1].begin(), r.runs[j + 1].end());
            }
            out.emplace_back(Monomial(std::move(u)), Monomial(std::move(v)));
        }
        prefix.insert(prefix.end(), r.runs[i].begin(), r.runs[i].end());
        if (i < r.xs.size()) {
            prefix.push_back(r.xs[i]);
        }
    }
    return out;
}

std::optional<Monomial> left_quotient(const Monomial &m, const Monomial &u)
{
    const Runs rm = split(m);
    const Runs ru = split(u);
    const std::size_t i = ru.xs.size();
    if (i > rm.xs.size()) {
        return std::nullopt;
    }
    for (std::size_t j = 0; j < i; ++j) {
        if (rm.runs[j] != ru.runs[j] || rm.xs[j] != ru.xs[j]) {
            return std::nullopt;
        }
    }
    if (!is_submultiset(ru.runs[i], rm.runs[i])) {
        return std::nullopt;
    }
    std::vector<Letter> v = minus(rm.runs[i], ru.runs[i]);
    for (std::size_t j = i; j < rm.xs.size(); ++j) {
        v.push_back(rm.xs[j]);
        v.insert(v.end(), rm.runs[j + 1].begin(), rm.runs[j + 1].end());
    }
    return Monomial(std::move(v));
}

std::optional<Monomial> right_quotient(const Monomial &m, const Monomial &v)
{
    const Runs rm = split(m);
    const Runs rv = split(v);
    const std::size_t j = rv.xs.size();
    const std::size_t k = rm.xs.size();
    if (j > k) {
        return std::nullopt;
    }
    for (std::size_t t = 0; t < j; ++t) {
        if (rm.runs[k - t] != rv.runs[j - t] || rm.xs[k - 1 - t] != rv.xs[j - 1 - t]) {
            return std::nullopt;
        }
    }
    const std::size_t i = k - j;
    if (!is_submultiset(rv.runs[0], rm.runs[i])) {
        return std::nullopt;
    }
    std::vector<Letter> u;
    for (std::size_t t = 0; t < i; ++t) {
        u.insert(u.end(), rm.runs[t].begin(), rm.runs[t].end());
        u.push_back(rm.xs[t]);
    }
    const auto rest = minus(rm.runs[i], rv.runs[0]);
    u.insert(u.end(), rest.begin(), rest.end());
    return Monomial(std::move(u));
}

std::optional<Monomial> nth_root(const Monomial &m, unsigned n)
{
    if (n == 0) {
        fail(ErrorKind::NoRoot, "root degree must be positive");
    }
    if (n == 1) {
        return m;
    }
    if (m.degree() % n != 0) {
        return std::nullopt;
    }
    const Runs r = split(m);
    std::vector<Letter> u;
    if (r.xs.empty()) {
        const auto &run = r.runs[0];
        for (std::size_t s = 0; s < run.size();) {
            std::size_t e = s;
            while (e < run.size() && run[e] == run[s]) {
                ++e;
            }
            if ((e - s) % n != 0) {
                return std::nullopt;
            }
            u.insert(u.end(), (e - s) / n, run[s]);
            s = e;
        }
        return Monomial(std::move(u));
    }
    if (r.xs.size() % n != 0) {
        return std::nullopt;
    }
    const std::size_t i = r.xs.size() / n;
    if (!is_submultiset(r.runs[0], r.runs[i])) {
        return std::nullopt;
    }
    for (std::size_t t = 0; t < i; ++t) {
        u.insert(u.end(), r.runs[t].begin(), r.runs[t].end());
        u.push_back(r.xs[t]);
    }
    const auto tail = minus(r.runs[i], r.runs[0]);
    u.insert(u.end(), tail.begin(), tail.end());
    Monomial root(std::move(u));
    if (pow(root, n) != m) {
        return std::nullopt;
    }
    return root;
}

std::string to_string(const Monomial &m)
{
    if (m.is_identity()) {
        return "1";
    }
    std::string out;
    const auto &w = m.word();
    for (std::size_t s = 0; s < w.size();) {
        std::size_t e = s;
        while (e < w.size() && w[e] == w[s]) {
            ++e;
        }
        out += w[s].kind == LetterKind::Y ? 'y' : 'x';
        out += std::to_string(w[s].rank);
        if (e - s > 1) {
            out += '^';
            out += std::to_string(e - s);
        }
        s = e;
    }
    return out;
}

Monomial parse_monomial(std::string_view text)
{
    auto bad = [&]() -> Monomial { fail(ErrorKind::ParseError, "bad monomial '" + std::string(text) + "'"); };
    if (text == "1") {
        return {};
    }
    if (text.empty()) {
        return bad();
    }
    std::vector<Letter> word;
    const char *p = text.data();
    const char *end = p + text.size();
    while (p != end) {
        Letter l;
        if (*p == 'y') {
            l.kind = LetterKind::Y;
        } else if (*p == 'x') {
            l.kind = LetterKind::X;
        } else {
            return bad();
        }
        ++p;
        auto [q, ec] = std::from_chars(p, end, l.rank);
        if (ec != std::errc() || q == p || l.rank == 0) {
            return bad();
        }
        p = q;
        unsigned count = 1;
        if (p != end && *p == '^') {
            ++p;
            auto [q2, ec2] = std::from_chars(p, end, count);
            if (ec2 != std::errc() || q2 == p || count == 0) {
                return bad();
            }
            p = q2;
        }
        word.insert(word.end(), count, l);
    }
    return Monomial(std::move(word));
}

} // namespace gpring
