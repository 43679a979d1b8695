// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracles.hpp"

#include <checks.hpp>
#include <gpring/canonical.hpp>
#include <gpring/enumerate.hpp>
#include <gpring/error.hpp>
#include <gpring/factorization.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace gpring;

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::vector<CanonicalKey>;

struct Verdict {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string &what)
    {
        ++cases;
        if (!ok && failures++ == 0) {
            first = what;
        }
    }
    void absorb(const checks::Check &c)
    {
        cases += c.cases;
        if (c.failures > 0 && failures == 0) {
            first = c.name + ": " + c.first_failure;
        }
        failures += c.failures;
        if (c.cases == 0 && failures++ == 0) {
            first = c.name + ": no cases ran";
        }
    }
};

int failed_criteria = 0;

template <typename Body>
void criterion(int id, const std::string &title, double limit_seconds, Body &&body)
{
    Verdict v;
    const auto start = Clock::now();
    try {
        body(v);
    } catch (const std::exception &e) {
        v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool slow = limit_seconds > 0 && secs > limit_seconds;
    const bool ok = v.failures == 0 && !slow;
    failed_criteria += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << ' ' << id << ' ' << title << " (" << v.cases << " checks, " << v.failures
         << " failures, " << std::fixed;
    line.precision(1);
    line << secs << "s)";
    if (slow) {
        line << " over the " << limit_seconds << "s budget";
    }
    if (v.failures > 0) {
        line << ": " << v.first;
    }
    std::cout << line.str() << std::endl;
}

CanonicalKey key_of(const Graph &g)
{
    return canonical_form(g);
}

// Every factorization into primes that the brute-force product table admits,
// each as an ordered word of canonical keys.
class BruteFactorizer {
public:
    BruteFactorizer(ProductOp op, const std::vector<Graph> &graphs, std::size_t max_n)
    {
        for (const Graph &g : graphs) {
            m_graphs.emplace(key_of(g), g);
        }
        for (const auto &[ka, a] : m_graphs) {
            for (const auto &[kb, b] : m_graphs) {
                if (a.vertex_count() < 2 || b.vertex_count() < 2 || a.vertex_count() * b.vertex_count() > max_n) {
                    continue;
                }
                m_splits[key_of(oracle::product(a, b, op))].emplace_back(ka, kb);
            }
        }
    }

    const std::vector<std::pair<CanonicalKey, CanonicalKey>> &splits(const CanonicalKey &k) const
    {
        static const std::vector<std::pair<CanonicalKey, CanonicalKey>> none;
        const auto it = m_splits.find(k);
        return it == m_splits.end() ? none : it->second;
    }

    std::set<Word> factorizations(const CanonicalKey &k)
    {
        if (const auto it = m_memo.find(k); it != m_memo.end()) {
            return it->second;
        }
        std::set<Word> out;
        const auto &s = splits(k);
        if (s.empty()) {
            out.insert(Word{k});
        }
        for (const auto &[a, b] : s) {
            for (const Word &wa : factorizations(a)) {
                for (const Word &wb : factorizations(b)) {
                    Word w = wa;
                    w.insert(w.end(), wb.begin(), wb.end());
                    out.insert(w);
                }
            }
        }
        return m_memo[k] = out;
    }

private:
    std::map<CanonicalKey, Graph> m_graphs;
    std::map<CanonicalKey, std::vector<std::pair<CanonicalKey, CanonicalKey>>> m_splits;
    std::map<CanonicalKey, std::set<Word>> m_memo;
};

// Normal form of a brute-force word: free for X letters, sorted within runs of
// Y letters. Letters are compared by key, the kind comes from the library.
Word normal_form(Word w, const std::map<CanonicalKey, LetterKind> &kinds)
{
    auto is_y = [&](const CanonicalKey &k) { return kinds.at(k) == LetterKind::Y; };
    for (auto it = w.begin(); it != w.end();) {
        auto end = std::find_if_not(it, w.end(), is_y);
        std::sort(it, end);
        it = end == w.end() ? end : end + 1;
    }
    return w;
}

void factor_against_oracle(Verdict &v, ProductOp op, const std::vector<Graph> &graphs, std::size_t max_n)
{
    BruteFactorizer brute(op, graphs, max_n);
    const std::string name(product_name(op));
    for (const Graph &g : graphs) {
        const CanonicalKey k = key_of(g);
        const auto word = factor_word(g, op);
        if (g.vertex_count() == 1) {
            v.expect(word.empty() && divisor_pairs(g, op).size() == 1, "the unit is not the empty word");
            continue;
        }
        Word lib;
        std::map<CanonicalKey, LetterKind> kinds;
        Graph back = unit_graph(op);
        for (const Prime &p : word) {
            lib.push_back(p.key);
            kinds[p.key] = p.kind;
            back = oracle::product(back, p.graph, op);
        }
        const std::string at = " (" + name + ", " + std::to_string(g.vertex_count()) + " vertices)";
        v.expect(key_of(back) == k, "factors do not multiply back" + at);

        const auto all = brute.factorizations(k);
        std::set<Word> forms;
        bool letters_known = true;
        for (const Word &w : all) {
            for (const CanonicalKey &l : w) {
                if (!kinds.count(l)) {
                    letters_known = false;
                }
            }
        }
        v.expect(letters_known, "brute-force factorization uses a prime the library missed" + at);
        if (!letters_known) {
            continue;
        }
        for (const Word &w : all) {
            forms.insert(normal_form(w, kinds));
        }
        v.expect(forms.size() == 1, "brute-force factorizations have different normal forms" + at);
        v.expect(forms.count(lib) == 1, "library word differs from brute-force factorization" + at);

        std::set<std::pair<CanonicalKey, CanonicalKey>> expected(brute.splits(k).begin(), brute.splits(k).end());
        const CanonicalKey one = key_of(unit_graph(op));
        expected.emplace(one, k);
        expected.emplace(k, one);
        std::set<std::pair<CanonicalKey, CanonicalKey>> found;
        for (const auto &[a, b] : divisor_pairs(g, op)) {
            found.emplace(key_of(factor_domain(a, op)), key_of(factor_domain(b, op)));
        }
        v.expect(found == expected, "divisor pairs differ from the product table" + at);
    }
}

} // namespace

int main()
{
    checks::Rng rng(20261016);
    const auto products = all_products;

    criterion(1, "product identity, associativity and distributivity laws", 120, [&](Verdict &v) {
        for (ProductOp op : products) {
            v.absorb(checks::product_laws(op, rng, 500));
            for (int i = 0; i < 500; ++i) {
                const Graph a = checks::random_operand(rng, op, 5, rng() % 2);
                const Graph b = checks::random_operand(rng, op, 5, rng() % 2);
                v.expect(is_isomorphic(product(a, b, op), oracle::product(a, b, op)),
                         "product differs from its edge definition (" + std::string(product_name(op)) + ")");
            }
        }
        v.absorb(checks::lex_left_distributivity_fails());
    });

    criterion(2, "factorization agrees with exhaustive products", 0, [&](Verdict &v) {
        for (ProductOp op : {ProductOp::Cartesian, ProductOp::Strong}) {
            std::vector<Graph> graphs;
            for (std::size_t n = 1; n <= 8; ++n) {
                const auto &c = connected_graphs(n);
                graphs.insert(graphs.end(), c.begin(), c.end());
            }
            factor_against_oracle(v, op, graphs, 8);
        }
        std::vector<Graph> rooted;
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const Graph &g : connected_graphs(n)) {
                const auto variants = single_root_variants(g);
                rooted.insert(rooted.end(), variants.begin(), variants.end());
            }
        }
        factor_against_oracle(v, ProductOp::RootedHierarchical, rooted, 6);
    });

    criterion(3, "strict order laws for monomials and series", 0, [&](Verdict &v) {
        v.absorb(checks::monomial_order_laws(rng, 10000));
        v.absorb(checks::series_order_laws(rng, 10000));
    });

    criterion(4, "monomial divisors match brute force", 0, [&](Verdict &v) {
        v.absorb(checks::divisor_soundness(rng, 500));
        for (int i = 0; i < 500; ++i) {
            const Monomial m = checks::random_monomial(rng, 6, 3);
            const auto d = divisors(m);
            const std::set<std::pair<Monomial, Monomial>> found(d.begin(), d.end());
            v.expect(found == oracle::monomial_divisors(m), "divisors of " + to_string(m));
        }
    });

    criterion(5, "unique root roundtrip", 300, [&](Verdict &v) {
        for (ProductOp op : checks::semiring_products()) {
            v.absorb(checks::graph_root_roundtrip(op, rng, 200));
        }
        GraphFamily two_k2;
        two_k2.add(Graph::complete(2), 2);
        bool no_root = false;
        try {
            graph_nth_root(two_k2, 2, ProductOp::Cartesian);
        } catch (const Error &e) {
            no_root = e.kind() == ErrorKind::NoRoot;
        }
        v.expect(no_root, "2K2 under the Cartesian product has a square root");
    });

    criterion(6, "cancellation roundtrip", 0, [&](Verdict &v) {
        for (ProductOp op : checks::semiring_products()) {
            v.absorb(checks::graph_cancel_roundtrip(op, rng, 200));
        }
    });

    criterion(7, "encode is a semiring homomorphism", 0, [&](Verdict &v) {
        for (ProductOp op : checks::semiring_products()) {
            v.absorb(checks::encode_homomorphism(op, rng, 200));
        }
    });

    criterion(8, "truncated counterexample with distinct sequences", 0, [&](Verdict &v) {
        v.absorb(checks::counterexample(8));
        const auto r = demo_counterexample(8, {1, 4}, {2, 3, 7});
        v.expect(r.distinct && r.squares_equal && r.additive_collapse, "second sequence pair");
    });

    criterion(9, "integer series have no zero divisors", 0, [&](Verdict &v) {
        v.absorb(checks::domain_property(rng, 10000, 5));
    });

    return failed_criteria == 0 ? 0 : 1;
}
