#include <gpring/canonical.hpp>
#include <gpring/factorization.hpp>
#include <gpring/series.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace gpring;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph shuffled(const Graph &g, std::uint64_t seed)
{
    std::vector<Vertex> perm(g.vertex_count());
    for (Vertex v = 0; v < perm.size(); ++v) {
        perm[v] = v;
    }
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

void canonical_random(benchmark::State &state)
{
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(canonical_random)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void canonical_hypercube(benchmark::State &state)
{
    const Graph g = shuffled(power(Graph::complete(2), static_cast<unsigned>(state.range(0)), ProductOp::Cartesian), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(g));
    }
}
BENCHMARK(canonical_hypercube)->DenseRange(3, 7);

void divide_cartesian(benchmark::State &state)
{
    const Graph p = Graph::path(3);
    const Graph g = canonical_graph(power(p, static_cast<unsigned>(state.range(0)), ProductOp::Cartesian));
    for (auto _ : state) {
        benchmark::DoNotOptimize(divide(g, p, ProductOp::Cartesian, Side::Right));
    }
}
BENCHMARK(divide_cartesian)->DenseRange(2, 4);

void factor(benchmark::State &state, ProductOp op, Graph a, Graph b)
{
    const Graph g = canonical_graph(product(product(a, b, op), a, op));
    // Words are memoized, so after the first iteration this times the
    // uniqueness pass, which divides by every catalog prime again.
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_word(g, op));
    }
}
BENCHMARK_CAPTURE(factor, cartesian, ProductOp::Cartesian, Graph::path(3), Graph::cycle(5));
BENCHMARK_CAPTURE(factor, strong, ProductOp::Strong, Graph::path(3), Graph::cycle(4));
BENCHMARK_CAPTURE(factor, rooted_hierarchical, ProductOp::RootedHierarchical, Graph::path(3).with_roots({0}),
                  Graph::cycle(4).with_roots({0}));

Series dense(std::size_t terms, std::size_t degree, std::uint64_t seed, std::optional<std::size_t> bound)
{
    std::mt19937_64 rng(seed);
    std::vector<Monomial> ms;
    std::string text;
    for (std::size_t i = 0; i < terms; ++i) {
        std::vector<Letter> word;
        const std::size_t d = 1 + rng() % degree;
        for (std::size_t k = 0; k < d; ++k) {
            const auto rank = static_cast<std::uint32_t>(1 + rng() % 3);
            word.push_back(rng() % 2 ? y_letter(rank) : x_letter(rank));
        }
        text += (text.empty() ? "" : " + ") + std::to_string(1 + rng() % 5) + "*" + to_string(Monomial(word));
    }
    return parse_series(text, CoefficientKind::Natural, bound);
}

void series_multiply(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Series a = dense(n, 4, 1, std::nullopt);
    const Series b = dense(n, 4, 2, std::nullopt);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(series_multiply)->Arg(8)->Arg(32)->Arg(128);

void series_root(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Series h = pow(dense(n, 3, 3, std::nullopt), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nth_root(h, 2));
    }
}
BENCHMARK(series_root)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
