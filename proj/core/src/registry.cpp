#include <gpring/factorization.hpp>

#include <gpring/error.hpp>

#include <algorithm>
#include <tuple>

namespace gpring {

namespace {

std::atomic<std::uint64_t> next_registry_id{1};

} // namespace

PrimeRegistry::PrimeRegistry(ProductOp op, std::vector<Prime> primes) : m_op(op), m_id(next_registry_id++)
{
    std::sort(primes.begin(), primes.end(), [](const Prime &a, const Prime &b) {
        return std::make_tuple(a.kind, a.graph.vertex_count(), a.key) <
               std::make_tuple(b.kind, b.graph.vertex_count(), b.key);
    });
    for (Prime &p : primes) {
        if (m_index.count(p.key)) {
            continue;
        }
        m_index.emplace(p.key, m_primes.size());
        m_y_count += p.kind == LetterKind::Y;
        m_primes.push_back(std::move(p));
    }
}

Letter PrimeRegistry::letter(std::size_t index) const
{
    const Prime &p = m_primes.at(index);
    if (p.kind == LetterKind::Y) {
        return y_letter(static_cast<std::uint32_t>(index + 1));
    }
    return x_letter(static_cast<std::uint32_t>(index - m_y_count + 1));
}

std::optional<Letter> PrimeRegistry::find(const CanonicalKey &key) const
{
    auto it = m_index.find(key);
    if (it == m_index.end()) {
        return std::nullopt;
    }
    return letter(it->second);
}

const Prime &PrimeRegistry::prime(Letter letter) const
{
    const std::size_t count = letter.kind == LetterKind::Y ? m_y_count : m_primes.size() - m_y_count;
    if (letter.rank == 0 || letter.rank > count) {
        fail(ErrorKind::RegistryMismatch, "letter " + to_string(Monomial{letter}) + " is not in the registry");
    }
    const std::size_t offset = letter.kind == LetterKind::Y ? 0 : m_y_count;
    return m_primes[offset + letter.rank - 1];
}

Monomial PrimeRegistry::monomial(const std::vector<Prime> &word) const
{
    std::vector<Letter> letters;
    letters.reserve(word.size());
    for (const Prime &p : word) {
        auto l = find(p.key);
        if (!l) {
            fail(ErrorKind::RegistryMismatch, "prime factor missing from the registry");
        }
        letters.push_back(*l);
    }
    return Monomial(std::move(letters));
}

Graph PrimeRegistry::realize(const Monomial &m, const ProductLimits &limits) const
{
    if (m.is_identity()) {
        return unit_graph(m_op);
    }
    Graph out = prime(m.word().front()).graph;
    for (std::size_t i = 1; i < m.word().size(); ++i) {
        out = product(out, prime(m.word()[i]).graph, m_op, limits);
    }
    return out;
}

std::string PrimeRegistry::dump() const
{
    std::string out;
    for (std::size_t i = 0; i < m_primes.size(); ++i) {
        const Letter l = letter(i);
        out += l.kind == LetterKind::Y ? "Y " : "X ";
        out += std::to_string(l.rank);
        out += ' ';
        out += std::to_string(m_primes[i].graph.vertex_count());
        out += ' ';
        out += m_primes[i].key.hex();
        out += '\n';
    }
    return out;
}

} // namespace gpring
