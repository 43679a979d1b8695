#include <cli.hpp>
#include <doctest.h>
#include <gpring/canonical.hpp>
#include <gpring/grf.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace gpring;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : m_dir(fs::temp_directory_path() / ("gpring-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(m_dir);
    }
    ~Scratch() { fs::remove_all(m_dir); }

    std::string file(const std::string &name, const std::string &text) const
    {
        const fs::path p = m_dir / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    fs::path m_dir;
};

const char *c4_text = "graph c4\nvertices 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\nend\n";
const char *k2_text = "graph k2\nvertices 2\nedge 0 1\nend\n";
const char *p3_text = "# path\n\ngraph p3\nvertices 3\nedge 0 1\nedge 1 2\nend\n";
const char *h_text = "graph a\nvertices 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\nend\n"
                     "graph b mult=2\nvertices 2\nedge 0 1\nend\n"
                     "graph c\nvertices 1\nend\n";

GraphFamily family_text(const std::string &text)
{
    return to_family(parse_grf(text));
}

} // namespace

TEST_CASE("root command")
{
    Scratch s;
    const auto h = s.file("h.grf", h_text);
    const auto r = call({"root", "--op=cartesian", "-n", "2", h});
    REQUIRE(r.code == 0);
    CHECK(family_text(r.out) == family_text("graph a\nvertices 2\nedge 0 1\nend\ngraph b\nvertices 1\nend\n"));
    CHECK(call({"root", "--op=cartesian", "-n", "2", h}).out == r.out);

    const auto j = call({"--json", "root", "--op=cartesian", "-n", "2", h});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["command"] == "root");
    CHECK(doc["result"] == "ok");
    CHECK(doc["family"].size() == 2);
    CHECK(doc.contains("bound"));

    const auto k2 = s.file("2k2.grf", "graph b mult=2\nvertices 2\nedge 0 1\nend\n");
    const auto no = call({"root", "--op=cartesian", "-n", "2", k2});
    CHECK(no.code == 4);
    CHECK(no.err.find("NoRoot") != std::string::npos);
}

TEST_CASE("factor command")
{
    Scratch s;
    const auto p3 = call({"--json", "factor", "--op=cartesian", s.file("p3.grf", p3_text)});
    REQUIRE(p3.code == 0);
    const auto doc = nlohmann::json::parse(p3.out);
    CHECK(doc["factors"][0]["monomial"] == "y1");
    CHECK(doc["registry"]["letters"].size() == 1);

    const auto c4 = call({"--json", "factor", "--op=cartesian", s.file("c4.grf", c4_text)});
    REQUIRE(c4.code == 0);
    CHECK(nlohmann::json::parse(c4.out)["factors"][0]["monomial"] == "y1^2");

    CHECK(call({"factor", "--op=direct", s.file("c4b.grf", c4_text)}).code == 3);
    CHECK(call({"factor", "--op=hierarchical", s.file("c4c.grf", c4_text)}).code == 3);
}

TEST_CASE("cancel command")
{
    Scratch s;
    const auto c4 = s.file("c4.grf", c4_text);
    const auto k2 = s.file("k2.grf", k2_text);
    const auto empty = s.file("empty.grf", "# nothing\n");
    const auto ok = call({"cancel", "--op=cartesian", "--side=right", c4, k2});
    REQUIRE(ok.code == 0);
    CHECK(family_text(ok.out) == family_text(k2_text));
    const auto zero = call({"cancel", "--op=cartesian", c4, empty});
    CHECK(zero.code == 4);
    CHECK_FALSE(zero.err.empty());
    CHECK(call({"cancel", "--op=cartesian", k2, c4}).code == 4);
}

TEST_CASE("encode, product, power, canon and components")
{
    Scratch s;
    const auto h = s.file("h.grf", h_text);
    const auto k2 = s.file("k2.grf", k2_text);
    const auto enc = call({"--json", "encode", "--op=cartesian", "--bound=2", h});
    REQUIRE(enc.code == 0);
    const auto doc = nlohmann::json::parse(enc.out);
    CHECK(doc["series"]["text"] == "1*1 + 2*y1 + 1*y1^2");
    CHECK(doc["bound"] == 2);
    CHECK(call({"encode", "--op=cartesian", "--bound=1", h}).code == 5);
    CHECK(call({"encode", "--op=lex", h}).code == 3);

    const auto prod = call({"product", "--op=cartesian", k2, k2});
    REQUIRE(prod.code == 0);
    CHECK(is_isomorphic(realize(family_text(prod.out)), Graph::cycle(4)));
    const auto pw = call({"power", "--op=cartesian", "-n", "2", k2});
    REQUIRE(pw.code == 0);
    CHECK(family_text(pw.out) == family_text(prod.out));

    const auto canon = call({"canon", s.file("c4.grf", c4_text)});
    REQUIRE(canon.code == 0);
    CHECK(is_isomorphic(realize(family_text(canon.out)), Graph::cycle(4)));
    const auto comps = call({"--json", "components", h});
    REQUIRE(comps.code == 0);
    CHECK(nlohmann::json::parse(comps.out)["family"].size() == 3);
}

TEST_CASE("errors and usage")
{
    Scratch s;
    CHECK(call({"canon", s.file("bad.grf", "graph g\nvertices 2\nedge 0 5\nend\n")}).code == 2);
    CHECK(call({"canon", s.file("loop.grf", "graph g\nvertices 1\nedge 0 0\nend\n")}).code == 2);
    CHECK(call({"product", "--op=nosuch", "a", "b"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"canon", "/nonexistent/file.grf"}).code != 0);
}

TEST_CASE("demo and selftest")
{
    const auto demo = call({"--json", "demo-counterexample", "--bound=4"});
    REQUIRE(demo.code == 0);
    const auto doc = nlohmann::json::parse(demo.out);
    CHECK(doc["command"] == "demo-counterexample");
    CHECK(doc.dump().find("true") != std::string::npos);
    const auto self = call({"selftest", "--seed=2", "--iters=5"});
    CHECK(self.code == 0);
    CHECK(call({"selftest", "--seed=2", "--iters=5"}).out == self.out);
}
