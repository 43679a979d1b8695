#include <gpring/grf.hpp>

#include <gpring/error.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace gpring {

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string &message)
{
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

template <typename T>
T number(std::string_view text, std::size_t line)
{
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        parse_fail(line, "expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

struct Pending {
    std::string name;
    std::uint64_t multiplicity = 1;
    bool loops = false;
    std::optional<std::size_t> vertices;
    std::vector<Vertex> roots;
    std::vector<Edge> edges;
    std::size_t line = 0;
};

} // namespace

GrfDocument parse_grf(std::string_view text)
{
    GrfDocument doc;
    std::optional<Pending> block;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto t = tokens(line);
        if (t.empty()) {
            continue;
        }
        const std::string_view word = t[0];
        if (!block) {
            if (word == "bound" && t.size() == 2) {
                doc.degree_bound = number<std::uint32_t>(t[1], line_no);
                continue;
            }
            if (word != "graph" || t.size() < 2) {
                parse_fail(line_no, "expected 'graph <name>'");
            }
            block.emplace();
            block->name = std::string(t[1]);
            block->line = line_no;
            for (std::size_t i = 2; i < t.size(); ++i) {
                if (t[i].starts_with("mult=")) {
                    block->multiplicity = number<std::uint64_t>(t[i].substr(5), line_no);
                    if (block->multiplicity == 0) {
                        parse_fail(line_no, "multiplicity must be positive");
                    }
                } else if (t[i] == "loops=0" || t[i] == "loops=1") {
                    block->loops = t[i] == "loops=1";
                } else {
                    parse_fail(line_no, "unknown attribute '" + std::string(t[i]) + "'");
                }
            }
            continue;
        }
        if (word == "vertices" && t.size() == 2 && !block->vertices) {
            block->vertices = number<std::size_t>(t[1], line_no);
        } else if (word == "roots" && block->vertices) {
            for (std::size_t i = 1; i < t.size(); ++i) {
                block->roots.push_back(number<Vertex>(t[i], line_no));
            }
        } else if (word == "edge" && t.size() == 3 && block->vertices) {
            block->edges.emplace_back(number<Vertex>(t[1], line_no), number<Vertex>(t[2], line_no));
        } else if (word == "end" && t.size() == 1 && block->vertices) {
            try {
                Graph g(*block->vertices, std::move(block->edges), std::move(block->roots), block->loops);
                doc.blocks.push_back({block->name, std::move(g), block->multiplicity});
            } catch (const Error &e) {
                parse_fail(block->line, "graph '" + block->name + "': " + e.what());
            }
            block.reset();
        } else {
            parse_fail(line_no, "unexpected '" + std::string(line) + "'");
        }
    }
    if (block) {
        parse_fail(block->line, "graph '" + block->name + "' is missing 'end'");
    }
    return doc;
}

GrfDocument read_grf_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_grf(buffer.str());
}

std::string render_grf(const GrfDocument &doc)
{
    std::string out;
    if (doc.degree_bound) {
        out += "bound " + std::to_string(*doc.degree_bound) + "\n";
    }
    for (const GrfBlock &b : doc.blocks) {
        out += "graph " + b.name;
        if (b.multiplicity != 1) {
            out += " mult=" + std::to_string(b.multiplicity);
        }
        if (b.graph.allows_loops()) {
            out += " loops=1";
        }
        out += "\nvertices " + std::to_string(b.graph.vertex_count()) + "\n";
        if (!b.graph.roots().empty()) {
            out += "roots";
            for (Vertex r : b.graph.roots()) {
                out += ' ' + std::to_string(r);
            }
            out += '\n';
        }
        for (const auto &[u, v] : b.graph.edges()) {
            out += "edge " + std::to_string(u) + ' ' + std::to_string(v) + '\n';
        }
        out += "end\n";
    }
    return out;
}

GraphFamily to_family(const GrfDocument &doc)
{
    GraphFamily f;
    for (const GrfBlock &b : doc.blocks) {
        f.add(b.graph, b.multiplicity);
    }
    f.degree_bound = doc.degree_bound;
    return f;
}

GrfDocument to_document(const GraphFamily &family, const std::string &prefix)
{
    GrfDocument doc;
    std::size_t index = 0;
    for (const auto &[key, component] : family.components()) {
        doc.blocks.push_back({prefix + std::to_string(index++), component.graph, component.multiplicity});
    }
    doc.degree_bound = family.degree_bound;
    return doc;
}

Graph to_graph(const GrfDocument &doc)
{
    if (doc.blocks.size() == 1 && doc.blocks[0].multiplicity == 1) {
        return doc.blocks[0].graph;
    }
    return realize(to_family(doc));
}

} // namespace gpring
