#include "svckit/connectivity.hpp"
#include "svckit/families.hpp"
#include "svckit/io.hpp"
#include "svckit/report_json.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

using namespace svckit;

namespace {

IngestResult parse(const std::string &text, IngestOptions opts = {}) {
    std::istringstream in(text);
    return parse_edgelist(in, opts);
}

IngestResult parse_xml(const std::string &text) {
    std::istringstream in(text);
    return parse_graphml(in);
}

std::filesystem::path fixture(const char *name) { return std::filesystem::path(SVCKIT_FIXTURES) / name; }

} // namespace

TEST_CASE("edge list basics", "[io]") {
    auto two = parse("a b\nb a\n");
    CHECK(two.graph.vertex_count() == 2);
    CHECK(two.graph == DirectedGraph(2, {{0, 1}, {1, 0}}, {"a", "b"}));

    auto loop = parse("# comment\n\na a\na b 0.5\na b\n");
    CHECK(loop.self_loops_dropped == 1);
    CHECK(loop.duplicates_dropped == 1);
    CHECK(loop.graph.edge_count() == 1);

    auto csv = parse("src,dst,weight\nx,y,1\ny,x,3\n", {.delimiter = ',', .has_header = true});
    CHECK(csv.graph.edge_count() == 2);
    CHECK(csv.graph.label(0) == "x");
}

TEST_CASE("edge list errors carry line numbers", "[io]") {
    try {
        parse("a b\nlonely\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse("# nothing here\n"), ParseError);
}

TEST_CASE("GraphML subset", "[io]") {
    auto r = ingest(fixture("small.graphml"));
    CHECK(r.format == Format::graphml);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 3);
    CHECK(r.self_loops_dropped == 1);
    CHECK(is_strongly_connected(r.graph));
    CHECK(r.graph.label(1) == "b");

    CHECK_THROWS_AS(parse_xml("<graphml><graph edgedefault=\"undirected\"><node id=\"a\"/></graph></graphml>"),
                    ParseError);
    CHECK_THROWS_AS(parse_xml("<graphml><graph edgedefault=\"directed\"><hyperedge/></graph></graphml>"),
                    ParseError);
    CHECK_THROWS_AS(parse_xml("<graphml><graph><graph/></graph></graphml>"), ParseError);
    CHECK_THROWS_AS(parse_xml("<graphml><graph><edge source=\"a\" target=\"b\" directed=\"false\"/></graph></graphml>"),
                    ParseError);
    CHECK_THROWS_AS(parse_xml("<graphml></graphml>"), ParseError);
}

TEST_CASE("format detection", "[io]") {
    CHECK(detect_format(fixture("small.graphml")) == Format::graphml);
    CHECK(detect_format(fixture("gamma_1_3.edges")) == Format::edgelist);
    CHECK(parse_format("graphml") == Format::graphml);
    CHECK_FALSE(parse_format("gml").has_value());
}

TEST_CASE("fixture files match the generated family", "[io][families]") {
    for (auto [name, params] : {std::pair{"gamma_1_3.edges", FamilyParams{1, 3}}, std::pair{"gamma_2_3.edges", FamilyParams{2, 3}}}) {
        const auto file = read_graph(fixture(name));
        const auto generated = gamma(params);
        REQUIRE(file.vertex_count() == generated.vertex_count());
        // File vertex k is generated id k-1.
        std::vector<Edge> relabelled;
        for (const Edge &e : file.edges())
            relabelled.push_back({static_cast<Vertex>(std::stoul(file.label(e.from)) - 1),
                                  static_cast<Vertex>(std::stoul(file.label(e.to)) - 1)});
        CHECK(DirectedGraph(file.vertex_count(), relabelled).edges().size() == generated.edge_count());
        const DirectedGraph mapped(file.vertex_count(), relabelled);
        CHECK(std::equal(mapped.edges().begin(), mapped.edges().end(), generated.edges().begin(),
                         generated.edges().end()));
    }
}

TEST_CASE("edge list round trip", "[io][property]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_digraph(10, 0.3, seed);
        std::ostringstream out;
        write_edgelist(g, out);
        const auto back = parse(out.str()).graph;
        // Same edges once labels are translated back to the original ids.
        std::vector<Edge> translated;
        for (const Edge &e : back.edges())
            translated.push_back({static_cast<Vertex>(std::stoul(back.label(e.from))),
                                  static_cast<Vertex>(std::stoul(back.label(e.to)))});
        std::sort(translated.begin(), translated.end());
        CHECK(std::equal(translated.begin(), translated.end(), g.edges().begin(), g.edges().end()));
    }
    CHECK_THROWS_AS([] {
        std::ostringstream out;
        write_edgelist(DirectedGraph(2, {{0, 1}}, {"has space", "b"}), out);
    }(), InputError);
}

TEST_CASE("DOT export", "[io]") {
    const auto two = export_dot(directed_cycle(2));
    CHECK(two == "digraph G {\n  0 -> 1;\n  1 -> 0;\n}\n");

    const auto fig1 = read_graph(fixture("gamma_1_3.edges"));
    const auto witnesses = weakening_vertex_sets(fig1);
    REQUIRE(witnesses.sets.size() == 1);
    const auto dot = export_dot(fig1, &witnesses.sets.front());
    const Vertex one = witnesses.sets.front().vertices.front();
    CHECK(fig1.label(one) == "1");
    CHECK(dot.find("  " + std::to_string(one) + " [label=\"1\", style=filled") != std::string::npos);
    CHECK(export_dot(fig1) == export_dot(fig1));

    const DirectedGraph quoted(2, {{0, 1}}, {"a \"x\"", "b"});
    CHECK(export_dot(quoted).find("label=\"a \\\"x\\\"\"") != std::string::npos);

    const auto edges = weakening_edge_sets(directed_cycle(3));
    CHECK(export_dot(directed_cycle(3), &edges.sets[0]).find("0 -> 1 [color=red") != std::string::npos);
}

TEST_CASE("report JSON", "[io][report]") {
    const auto g = gamma({1, 3});
    const auto r = report(g, {.enumerate = true});
    const Json j = to_json(r, g);
    CHECK(j["schema"] == "svckit-report/1");
    CHECK(j["sigma0"] == 1);
    CHECK(j["witness_counts"][0] == 1);
    CHECK(j["vertex_witnesses"][0]["labels"][0] == "W1");
    const std::string text = canonical(j);
    CHECK(canonical(Json::parse(text)) == text);

    const auto plain = to_json(report(g), g);
    CHECK(plain["witness_counts"].is_null());
    CHECK(plain["vertex_witnesses"].empty());
    CHECK(plain["edge_witnesses"].empty());

    const auto out = std::filesystem::temp_directory_path() / "svckit_report_test.json";
    write_report(r, g, out);
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == text);
    std::filesystem::remove(out);
}
