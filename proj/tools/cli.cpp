#include "cli.hpp"

#include "checks.hpp"
#include "cli_format.hpp"

#include <gpring/canonical.hpp>
#include <gpring/engine.hpp>
#include <gpring/grf.hpp>

#include <CLI11.hpp>

#include <ostream>

namespace gpring::cli {

namespace {

struct Settings {
    bool json = false;
    std::string op = "cartesian";
    unsigned n = 2;
    std::size_t bound = 0;
    CLI::Option *bound_option = nullptr;
    std::string side = "right";
    std::vector<std::string> files;
    std::vector<std::uint64_t> seq_a{1};
    std::vector<std::uint64_t> seq_b{2};
    std::uint64_t seed = 1;
    std::size_t iterations = 50;
};

std::optional<std::size_t> given_bound(const Settings &s)
{
    if (s.bound_option != nullptr && s.bound_option->count() > 0) {
        return s.bound;
    }
    return std::nullopt;
}

bool single_graph(const GrfDocument &doc)
{
    return doc.blocks.size() == 1 && doc.blocks.front().multiplicity == 1 && is_connected(doc.blocks.front().graph);
}

GraphFamily load_family(const std::string &path)
{
    GraphFamily f = to_family(read_grf_file(path));
    return f;
}

class Runner {
public:
    Runner(const Settings &s, std::ostream &out) : m_s(s), m_out(out) {}

    int emit(const std::string &command, json payload, const std::string &text)
    {
        if (m_s.json) {
            payload["command"] = command;
            payload["result"] = "ok";
            m_out << payload.dump(2) << '\n';
        } else {
            m_out << text;
        }
        return 0;
    }

    int emit_family(const std::string &command, const GraphFamily &f)
    {
        GrfDocument doc = to_document(f);
        doc.degree_bound = f.degree_bound;
        json payload{{"family", family_json(f)}};
        payload["bound"] = f.degree_bound ? json(*f.degree_bound) : json(nullptr);
        return emit(command, std::move(payload), render_grf(doc));
    }

    int emit_graph(const std::string &command, const Graph &g)
    {
        GrfDocument doc;
        doc.blocks.push_back({command, g, 1});
        json payload{{"family", json::array({graph_json(g)})}, {"bound", nullptr}};
        payload["family"][0]["name"] = command;
        payload["family"][0]["multiplicity"] = 1;
        return emit(command, std::move(payload), render_grf(doc));
    }

    int canon()
    {
        const GrfDocument doc = read_grf_file(m_s.files.at(0));
        GrfDocument result = doc;
        json blocks = json::array();
        std::string comments;
        for (GrfBlock &block : result.blocks) {
            const std::string key = canonical_form(block.graph).hex();
            block.graph = canonical_graph(block.graph);
            comments += "# " + block.name + " key " + key + "\n";
            json b = graph_json(block.graph);
            b["name"] = block.name;
            b["multiplicity"] = block.multiplicity;
            b["key"] = key;
            blocks.push_back(std::move(b));
        }
        json payload{{"family", std::move(blocks)}, {"bound", nullptr}};
        if (doc.degree_bound) {
            payload["bound"] = *doc.degree_bound;
        }
        return emit("canon", std::move(payload), comments + render_grf(result));
    }

    int components()
    {
        return emit_family("components", load_family(m_s.files.at(0)));
    }

    int product_cmd()
    {
        const ProductOp op = parse_product(m_s.op);
        const GrfDocument a = read_grf_file(m_s.files.at(0));
        const GrfDocument b = read_grf_file(m_s.files.at(1));
        if (single_graph(a) && single_graph(b)) {
            return emit_graph("product", product(to_graph(a), to_graph(b), op));
        }
        return emit_family("product", product(to_family(a), to_family(b), op));
    }

    int power_cmd()
    {
        const ProductOp op = parse_product(m_s.op);
        const GrfDocument a = read_grf_file(m_s.files.at(0));
        if (single_graph(a)) {
            return emit_graph("power", power(to_graph(a), m_s.n, op));
        }
        return emit_family("power", power(to_family(a), m_s.n, op));
    }

    int factor()
    {
        const ProductOp op = parse_product(m_s.op);
        const GraphFamily f = load_family(m_s.files.at(0));
        const PrimeRegistry registry = registry_for({&f}, op);
        const GrfDocument doc = to_document(f);
        std::string text = registry.dump();
        json words = json::array();
        for (const GrfBlock &block : doc.blocks) {
            const Monomial m = factor_connected(block.graph, op, registry);
            text += block.name + " " + to_string(m) + "\n";
            words.push_back({{"name", block.name}, {"multiplicity", block.multiplicity}, {"monomial", to_string(m)}});
        }
        json payload{{"registry", registry_json(registry)}, {"factors", std::move(words)}, {"bound", nullptr}};
        return emit("factor", std::move(payload), text);
    }

    int encode_cmd()
    {
        const ProductOp op = parse_product(m_s.op);
        const GraphFamily f = load_family(m_s.files.at(0));
        const PrimeRegistry registry = registry_for({&f}, op);
        const Series s = encode(f, op, registry, given_bound(m_s));
        std::string text = registry.dump();
        text += "series " + to_string(s) + "\n";
        text += "bound " + (s.bound() ? std::to_string(*s.bound()) : std::string("none")) + "\n";
        json payload{{"registry", registry_json(registry)}, {"series", series_json(s)}, {"bound", bound_json(s.bound())}};
        return emit("encode", std::move(payload), text);
    }

    int root()
    {
        const ProductOp op = parse_product(m_s.op);
        GraphFamily h = load_family(m_s.files.at(0));
        if (auto bound = given_bound(m_s)) {
            h.degree_bound = static_cast<std::uint32_t>(*bound);
        }
        return emit_family("root", graph_nth_root(h, m_s.n, op));
    }

    int cancel_cmd()
    {
        const ProductOp op = parse_product(m_s.op);
        const Side side = m_s.side == "left" ? Side::Left : Side::Right;
        const GraphFamily p = load_family(m_s.files.at(0));
        const GraphFamily c = load_family(m_s.files.at(1));
        return emit_family("cancel", graph_cancel(p, c, side, op));
    }

    int demo()
    {
        const std::size_t bound = given_bound(m_s).value_or(8);
        const CounterexampleReport r = demo_counterexample(bound, m_s.seq_a, m_s.seq_b);
        auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
        std::string text = "bound " + std::to_string(bound) + "\n";
        text += "H_a = " + to_string(r.h_a) + "\n";
        text += "H_b = " + to_string(r.h_b) + "\n";
        text += "H_a^2 = " + to_string(r.square_a) + "\n";
        text += "H_b^2 = " + to_string(r.square_b) + "\n";
        text += "w*g + g = " + to_string(r.omega_plus_one) + "\n";
        text += "w*g + 5*g = " + to_string(r.omega_plus_five) + "\n";
        text += "distinct " + yes(r.distinct) + "\n";
        text += "squares_equal " + yes(r.squares_equal) + "\n";
        text += "additive_collapse " + yes(r.additive_collapse) + "\n";
        json payload{{"bound", bound},
                     {"series",
                      {{"h_a", series_json(r.h_a)},
                       {"h_b", series_json(r.h_b)},
                       {"square_a", series_json(r.square_a)},
                       {"square_b", series_json(r.square_b)},
                       {"omega_plus_one", series_json(r.omega_plus_one)},
                       {"omega_plus_five", series_json(r.omega_plus_five)}}},
                     {"distinct", r.distinct},
                     {"squares_equal", r.squares_equal},
                     {"additive_collapse", r.additive_collapse}};
        emit("demo-counterexample", std::move(payload), text);
        return r.distinct && r.squares_equal && r.additive_collapse ? 0 : 1;
    }

    int selftest()
    {
        const auto checks = checks::run_suite(m_s.seed, m_s.iterations);
        std::string text;
        json rows = json::array();
        bool ok = true;
        for (const auto &c : checks) {
            ok = ok && c.ok();
            text += (c.ok() ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + " cases)";
            if (!c.ok()) {
                text += ": " + std::to_string(c.failures) + " failures, first: " + c.first_failure;
            }
            text += "\n";
            rows.push_back({{"name", c.name},
                            {"cases", c.cases},
                            {"failures", c.failures},
                            {"first_failure", c.first_failure}});
        }
        json payload{{"checks", std::move(rows)}, {"seed", m_s.seed}, {"iterations", m_s.iterations}};
        emit("selftest", std::move(payload), text);
        if (m_s.json) {
            return ok ? 0 : 1;
        }
        m_out << (ok ? "selftest passed\n" : "selftest FAILED\n");
        return ok ? 0 : 1;
    }

private:
    const Settings &m_s;
    std::ostream &m_out;
};

void add_op(CLI::App *sub, Settings &s)
{
    sub->add_option("--op", s.op, "product: cartesian, hierarchical, rooted-hierarchical, strong, direct, lex, modlex")
        ->required();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Settings s;
    CLI::App app{"Graph products as monoid semirings: factor, encode, take roots, cancel", "gpring"};
    app.require_subcommand(1);
    app.add_flag("--json", s.json, "machine-readable output");
    app.fallthrough();

    auto *canon = app.add_subcommand("canon", "canonical form of every graph in a file");
    canon->add_option("file", s.files)->required()->expected(1);
    auto *components = app.add_subcommand("components", "connected components with multiplicities");
    components->add_option("file", s.files)->required()->expected(1);

    auto *prod = app.add_subcommand("product", "product of two graphs or families");
    add_op(prod, s);
    prod->add_option("files", s.files, "A B")->required()->expected(2);

    auto *pow = app.add_subcommand("power", "n-fold product");
    add_op(pow, s);
    pow->add_option("-n", s.n, "exponent")->required();
    pow->add_option("file", s.files)->required()->expected(1);

    auto *factor = app.add_subcommand("factor", "prime factorization of every component");
    add_op(factor, s);
    factor->add_option("file", s.files)->required()->expected(1);

    auto *enc = app.add_subcommand("encode", "family as a series over the prime letters");
    add_op(enc, s);
    auto *enc_bound = enc->add_option("--bound", s.bound, "degree bound");
    enc->add_option("file", s.files)->required()->expected(1);

    auto *root = app.add_subcommand("root", "unique n-th root of a family");
    add_op(root, s);
    root->add_option("-n", s.n, "root degree")->required()->check(CLI::PositiveNumber);
    auto *root_bound = root->add_option("--bound", s.bound, "degree bound of a truncated input");
    root->add_option("file", s.files)->required()->expected(1);

    auto *canc = app.add_subcommand("cancel", "the a with a*C = PROD (right) or C*a = PROD (left)");
    add_op(canc, s);
    canc->add_option("--side", s.side)->check(CLI::IsMember({"left", "right"}));
    canc->add_option("files", s.files, "PROD C")->required()->expected(2);

    auto *demo = app.add_subcommand("demo-counterexample", "squares collapse with cardinal coefficients");
    auto *demo_bound = demo->add_option("--bound", s.bound, "degree bound")->check(CLI::Range(2, 64));
    demo->add_option("--seq-a", s.seq_a, "coefficients of g^2, g^3, ... for H_a");
    demo->add_option("--seq-b", s.seq_b, "coefficients of g^2, g^3, ... for H_b");

    auto *self = app.add_subcommand("selftest", "randomized property suite");
    self->add_option("--seed", s.seed);
    self->add_option("--iters", s.iterations)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Runner runner(s, out);
    CLI::App *chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (chosen == enc) {
        s.bound_option = enc_bound;
    } else if (chosen == root) {
        s.bound_option = root_bound;
    } else if (chosen == demo) {
        s.bound_option = demo_bound;
    }
    try {
        if (chosen == canon) return runner.canon();
        if (chosen == components) return runner.components();
        if (chosen == prod) return runner.product_cmd();
        if (chosen == pow) return runner.power_cmd();
        if (chosen == factor) return runner.factor();
        if (chosen == enc) return runner.encode_cmd();
        if (chosen == root) return runner.root();
        if (chosen == canc) return runner.cancel_cmd();
        if (chosen == demo) return runner.demo();
        return runner.selftest();
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        if (s.json) {
            out << json{{"command", name}, {"result", "error"}, {"error", std::string(to_string(e.kind()))},
                        {"message", e.what()}}
                       .dump(2)
                << '\n';
        }
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace gpring::cli
