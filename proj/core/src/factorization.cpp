#include <gpring/factorization.hpp>

#include <gpring/enumerate.hpp>
#include <gpring/error.hpp>

#include <algorithm>
#include <mutex>
#include <tuple>

namespace gpring {

LetterKind classify(const Graph &prime, ProductOp op)
{
    switch (op) {
    case ProductOp::Hierarchical:
        return prime.roots().size() == prime.vertex_count() ? LetterKind::Y : LetterKind::X;
    case ProductOp::Cartesian:
    case ProductOp::Strong:
    case ProductOp::Direct:
        return LetterKind::Y;
    default:
        return LetterKind::X;
    }
}

namespace {

Graph domain_graph(const Graph &g, ProductOp op)
{
    if (!is_connected(g)) {
        fail(ErrorKind::UnsupportedDomain, "factorization needs a connected graph");
    }
    check_operand(g, op);
    switch (op) {
    case ProductOp::Hierarchical:
    case ProductOp::RootedHierarchical:
        return g;
    case ProductOp::Direct:
        if (is_bipartite(g)) {
            fail(ErrorKind::UnsupportedDomain, "direct product factorization needs a non-bipartite graph");
        }
        return g.without_roots().with_loops_allowed();
    default:
        return g.without_roots();
    }
}

std::mutex memo_mutex;
std::map<std::pair<ProductOp, std::size_t>, std::vector<Graph>> catalog_memo;
std::map<std::pair<ProductOp, std::size_t>, std::vector<Graph>> prime_memo;
using TableKey = std::tuple<ProductOp, std::size_t, std::size_t>;
using Table = std::map<CanonicalKey, std::vector<std::pair<Graph, Graph>>>;
std::map<TableKey, Table> table_memo;
using WordKey = std::tuple<ProductOp, std::size_t, CanonicalKey>;
std::map<WordKey, std::vector<Prime>> word_memo;

template <typename Map, typename Key, typename Make>
const typename Map::mapped_type &memoized(Map &map, const Key &key, Make &&make)
{
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = map.find(key); it != map.end()) {
            return it->second;
        }
    }
    auto value = make();
    std::lock_guard lock(memo_mutex);
    return map.try_emplace(key, std::move(value)).first->second;
}

std::vector<Graph> build_catalog(ProductOp op, std::size_t n)
{
    if (n == 1) {
        return {canonical_graph(unit_graph(op))};
    }
    std::map<CanonicalKey, Graph> found;
    auto keep = [&](const Graph &g) { found.try_emplace(canonical_form(g), canonical_graph(g)); };
    for (const Graph &base : connected_graphs(n)) {
        switch (op) {
        case ProductOp::Hierarchical:
            for (const Graph &g : root_variants(base)) {
                keep(g);
            }
            break;
        case ProductOp::RootedHierarchical:
            for (const Graph &g : single_root_variants(base)) {
                keep(g);
            }
            break;
        case ProductOp::Direct:
            for (const Graph &g : loop_variants(base)) {
                if (!is_bipartite(g)) {
                    keep(g);
                }
            }
            break;
        default:
            keep(base);
        }
    }
    std::vector<Graph> out;
    for (auto &[key, g] : found) {
        out.push_back(std::move(g));
    }
    return out;
}

const Table &product_table(ProductOp op, std::size_t s, std::size_t t)
{
    return memoized(table_memo, TableKey{op, s, t}, [&] {
        Table table;
        for (const Graph &a : catalog(op, s)) {
            for (const Graph &b : catalog(op, t)) {
                Graph ab = product(a, b, op);
                if (is_connected(ab)) {
                    table[canonical_form(ab)].emplace_back(a, b);
                }
            }
        }
        return table;
    });
}

Prime make_prime(const Graph &g, ProductOp op)
{
    return {canonical_form(g), canonical_graph(g), classify(g, op)};
}

std::vector<Prime> normal_form(std::vector<Prime> word)
{
    auto less = [](const Prime &a, const Prime &b) {
        return std::make_tuple(a.graph.vertex_count(), a.key) < std::make_tuple(b.graph.vertex_count(), b.key);
    };
    auto begin = word.begin();
    while (begin != word.end()) {
        auto end = std::find_if(begin, word.end(), [](const Prime &p) { return p.kind == LetterKind::X; });
        std::stable_sort(begin, end, less);
        begin = end == word.end() ? end : end + 1;
    }
    return word;
}

bool same_word(const std::vector<Prime> &a, const std::vector<Prime> &b)
{
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const Prime &x, const Prime &y) { return x.key == y.key; });
}

std::vector<std::size_t> proper_sizes(std::size_t n, std::size_t bound)
{
    std::vector<std::size_t> out;
    for (std::size_t s = 2; s < n && s <= bound; ++s) {
        if (n % s == 0) {
            out.push_back(s);
        }
    }
    return out;
}

struct Split {
    Graph prime;
    Graph rest;
    Side side;
};

// Every way to split off a catalog prime on the given side.
template <typename Visit>
void prime_divisors(const Graph &g, ProductOp op, Side side, const FactorOptions &options, Visit &&visit)
{
    for (std::size_t s : proper_sizes(g.vertex_count(), options.catalog_bound)) {
        for (const Graph &p : catalog_primes(op, s)) {
            if (auto q = divide(g, p, op, side, options.division_budget)) {
                if (!visit(Split{p, *q, side})) {
                    return;
                }
            }
        }
    }
}

std::vector<Prime> join(const Split &split, std::vector<Prime> rest, ProductOp op)
{
    if (split.side == Side::Right) {
        rest.push_back(make_prime(split.prime, op));
        return rest;
    }
    rest.insert(rest.begin(), make_prime(split.prime, op));
    return rest;
}

const std::vector<Prime> &factor_rec(const Graph &g, ProductOp op, const FactorOptions &options)
{
    const CanonicalKey key = canonical_form(g);
    return memoized(word_memo, WordKey{op, options.catalog_bound, key}, [&]() -> std::vector<Prime> {
        if (key == canonical_form(unit_graph(op))) {
            return {};
        }
        std::optional<Split> found;
        auto take = [&](Split split) {
            found = std::move(split);
            return false;
        };
        prime_divisors(g, op, Side::Right, options, take);
        if (!found && !is_commutative(op)) {
            prime_divisors(g, op, Side::Left, options, take);
        }
        if (!found) {
            return {make_prime(g, op)};
        }
        return normal_form(join(*found, factor_rec(found->rest, op, options), op));
    });
}

} // namespace

Graph factor_domain(const Graph &g, ProductOp op)
{
    if (op == ProductOp::Lex) {
        fail(ErrorKind::UnsupportedDomain, "the lexicographic product is not left distributive; use modlex");
    }
    return domain_graph(g, op);
}

const std::vector<Graph> &catalog(ProductOp op, std::size_t n)
{
    return memoized(catalog_memo, std::pair{op, n}, [&] { return build_catalog(op, n); });
}

const std::vector<Graph> &catalog_primes(ProductOp op, std::size_t n)
{
    return memoized(prime_memo, std::pair{op, n}, [&] {
        std::vector<Graph> out;
        if (n < 2) {
            return out;
        }
        for (const Graph &g : catalog(op, n)) {
            const auto key = canonical_form(g);
            bool composite = false;
            for (std::size_t s : proper_sizes(n, n)) {
                if (product_table(op, s, n / s).count(key)) {
                    composite = true;
                    break;
                }
            }
            if (!composite) {
                out.push_back(g);
            }
        }
        return out;
    });
}

std::vector<std::pair<Graph, Graph>> divisor_pairs(const Graph &g, ProductOp op, const FactorOptions &options)
{
    const Graph h = domain_graph(g, op);
    const Graph unit = canonical_graph(unit_graph(op));
    const Graph rep = canonical_graph(h);
    std::vector<std::pair<Graph, Graph>> out;
    if (is_isomorphic(h, unit)) {
        out.emplace_back(unit, unit);
        return out;
    }
    out.emplace_back(unit, rep);
    out.emplace_back(rep, unit);
    const auto key = canonical_form(h);
    for (std::size_t s : proper_sizes(h.vertex_count(), h.vertex_count())) {
        const std::size_t t = h.vertex_count() / s;
        if (s > options.catalog_bound || t > options.catalog_bound) {
            fail(ErrorKind::SizeLimitExceeded, "divisor enumeration needs factors with " +
                                                   std::to_string(std::max(s, t)) + " vertices (catalog bound " +
                                                   std::to_string(options.catalog_bound) + ")");
        }
        const Table &table = product_table(op, s, t);
        if (auto it = table.find(key); it != table.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
        }
    }
    return out;
}

bool is_prime(const Graph &g, ProductOp op, const FactorOptions &options)
{
    return g.vertex_count() >= 2 && divisor_pairs(g, op, options).size() == 2;
}

std::vector<Prime> factor_word(const Graph &g, ProductOp op, const FactorOptions &options)
{
    const Graph h = factor_domain(g, op);
    std::vector<Prime> word = factor_rec(h, op, options);
    if (op == ProductOp::ModLex) {
        for (const Prime &p : word) {
            if (p.graph.vertex_count() > 1 && is_complete(p.graph)) {
                fail(ErrorKind::UnsupportedDomain, "modified lexicographic factorization with a complete factor K" +
                                                       std::to_string(p.graph.vertex_count()));
            }
        }
    }
    if (options.verify_uniqueness) {
        auto check = [&](Split split) {
            const auto other = normal_form(join(split, factor_rec(split.rest, op, options), op));
            if (!same_word(other, word)) {
                fail(ErrorKind::FactorizationNotUnique, "two prime factorizations with different normal forms");
            }
            return true;
        };
        prime_divisors(h, op, Side::Right, options, check);
        if (!is_commutative(op)) {
            prime_divisors(h, op, Side::Left, options, check);
        }
    }
    return word;
}

Monomial factor_connected(const Graph &g, ProductOp op, const PrimeRegistry &registry, const FactorOptions &options)
{
    if (registry.op() != op) {
        fail(ErrorKind::RegistryMismatch, "registry belongs to the " + std::string(product_name(registry.op())) +
                                              " product");
    }
    return registry.monomial(factor_word(g, op, options));
}

} // namespace gpring
