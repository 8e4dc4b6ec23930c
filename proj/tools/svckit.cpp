// Command-line front end: svckit <command> ...
// Exit codes: 0 ok, 1 usage, 2 input or parse error, 3 precondition failure.

#include "svckit/svckit.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace svckit;

namespace {

struct InputArgs {
    std::string file;
    std::string format = "auto";
    std::optional<char> delimiter;
    bool header = false;
    unsigned threads = 0;
};

void add_input(CLI::App *cmd, InputArgs &in) {
    cmd->add_option("file", in.file, "edge list or GraphML file")->required();
    cmd->add_option("--format", in.format, "auto, edgelist or graphml")->check(CLI::IsMember({"auto", "edgelist", "graphml"}));
    cmd->add_option("--delimiter", in.delimiter, "single-character field separator for edge lists");
    cmd->add_flag("--header", in.header, "skip the first non-comment line of an edge list");
    cmd->add_option("--threads", in.threads, "worker threads, 0 = all cores");
}

DirectedGraph load(const InputArgs &in) {
    IngestOptions opts;
    opts.format = *parse_format(in.format);
    opts.delimiter = in.delimiter;
    opts.has_header = in.header;
    IngestResult r = ingest(in.file, opts);
    if (r.self_loops_dropped)
        std::cerr << "warning: dropped " << r.self_loops_dropped << " self-loop(s)\n";
    if (r.duplicates_dropped)
        std::cerr << "warning: dropped " << r.duplicates_dropped << " duplicate edge(s)\n";
    return std::move(r.graph);
}

void emit(const std::string &text, const std::string &out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) throw InputError("cannot write " + out);
}

Json enumeration_json(const WeakeningEnumeration &e, WeakeningKind kind, const DirectedGraph &g) {
    Json sets = Json::array();
    for (const auto &w : e.sets) sets.push_back(to_json(w, &g));
    return Json{{"schema", kReportSchema},
                {"kind", "weakening"},
                {"set_kind", kind == WeakeningKind::vertex ? "vertex" : "edge"},
                {"sigma", e.sigma},
                {"total", e.total},
                {"capped", e.capped},
                {"sets", sets}};
}

int run(int argc, char **argv) {
    CLI::App app{"Strong vertex and edge connectivity of directed graphs"};
    app.require_subcommand(1);

    InputArgs in;
    std::string out;

    bool enumerate = false, scc_largest = false, allow_large = false;
    std::optional<std::size_t> limit;
    auto *analyze = app.add_subcommand("analyze", "full connectivity report as JSON");
    add_input(analyze, in);
    analyze->add_flag("--enumerate", enumerate, "list all minimum weakening vertex and edge sets");
    analyze->add_flag("--scc-largest", scc_largest, "analyse only the largest strongly connected component");
    analyze->add_flag("--allow-large", allow_large, "enumerate even when sigma >= 3");
    analyze->add_option("--limit", limit, "keep at most this many sets per kind");
    analyze->add_option("--out", out, "write the report here instead of stdout");

    auto *svc_cmd = app.add_subcommand("svc", "print the strong vertex connectivity");
    add_input(svc_cmd, in);
    auto *sec_cmd = app.add_subcommand("sec", "print the strong edge connectivity");
    add_input(sec_cmd, in);

    std::string kind = "vertex";
    auto *weak = app.add_subcommand("weakening", "list minimum weakening sets as JSON");
    add_input(weak, in);
    weak->add_option("--kind", kind, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
    weak->add_option("--limit", limit, "keep at most this many sets");
    weak->add_flag("--allow-large", allow_large, "enumerate even when sigma >= 3");
    weak->add_option("--out", out, "write JSON here instead of stdout");

    std::size_t depth = 1, budget = DecomposeOptions{}.enumeration_budget;
    bool all_witnesses = false;
    auto *iter = app.add_subcommand("iterate", "iterated weakening decomposition");
    add_input(iter, in);
    iter->add_option("--depth", depth, "tree levels including the root")->required()->check(CLI::PositiveNumber);
    iter->add_flag("--all-witnesses", all_witnesses, "record every minimum set at each node");
    iter->add_option("--budget", budget, "largest C(n, sigma-1) enumerated at a node");
    iter->add_option("--out", out, "write the tree as JSON");

    auto *gen = app.add_subcommand("generate", "write a generated graph as an edge list");
    gen->require_subcommand(1);
    std::size_t a = 1, b = 1, n = 2;
    double p = 0.5;
    std::uint64_t seed = 0;
    auto *gen_gamma = gen->add_subcommand("gamma", "witness family with sigma0 = a, underlying connectivity b");
    gen_gamma->add_option("--a", a)->required();
    gen_gamma->add_option("--b", b)->required();
    auto *gen_dk = gen->add_subcommand("dk", "complete bidirected graph");
    gen_dk->add_option("--n", n)->required();
    auto *gen_cycle = gen->add_subcommand("cycle", "directed cycle");
    gen_cycle->add_option("--n", n)->required();
    auto *gen_random = gen->add_subcommand("random", "each ordered pair present with probability p");
    gen_random->add_option("--n", n)->required();
    gen_random->add_option("--p", p)->required();
    gen_random->add_option("--seed", seed)->required();
    for (auto *sub : {gen_gamma, gen_dk, gen_cycle, gen_random}) sub->add_option("--out", out, "output file");

    bool highlight = false;
    auto *dot = app.add_subcommand("export-dot", "render the graph in DOT");
    add_input(dot, in);
    dot->add_flag("--highlight-first-witness", highlight, "style the first minimum weakening vertex set");
    dot->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*analyze) {
        DirectedGraph g = load(in);
        Json extra;
        if (scc_largest && g.vertex_count() > 0) {
            extra = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
            g = induced(g, largest_scc(g)).graph;
        }
        ReportOptions opts;
        opts.enumerate = enumerate;
        opts.enumeration.limit = limit;
        opts.enumeration.allow_large_sigma = allow_large;
        opts.threads = in.threads;
        Json j = to_json(report(g, opts), g);
        if (!extra.is_null()) j["restricted_from"] = extra;
        emit(canonical(j), out);
    } else if (*svc_cmd) {
        std::cout << svc(load(in), {in.threads}) << '\n';
    } else if (*sec_cmd) {
        std::cout << sec(load(in), {in.threads}) << '\n';
    } else if (*weak) {
        const DirectedGraph g = load(in);
        EnumerationOptions opts;
        opts.limit = limit;
        opts.allow_large_sigma = allow_large;
        opts.threads = in.threads;
        const bool vertices = kind == "vertex";
        const auto e = vertices ? weakening_vertex_sets(g, opts) : weakening_edge_sets(g, opts);
        emit(canonical(enumeration_json(e, vertices ? WeakeningKind::vertex : WeakeningKind::edge, g)), out);
    } else if (*iter) {
        const DirectedGraph g = load(in);
        DecomposeOptions opts;
        opts.max_depth = depth;
        opts.selection = all_witnesses ? Selection::all_witnesses_report : Selection::first_lexicographic;
        opts.threads = in.threads;
        opts.enumeration_budget = budget;
        const DecompositionNode tree = iterate(g, opts);
        std::cout << "sigma_trace " << Json(sigma_trace(tree)).dump() << '\n'
                  << "zeta_trace " << Json(zeta_trace(tree)).dump() << '\n';
        if (!out.empty()) write_report(tree, g, out);
    } else if (*gen) {
        DirectedGraph g;
        if (*gen_gamma) g = gamma({a, b});
        else if (*gen_dk) g = doubled_complete(n);
        else if (*gen_cycle) g = directed_cycle(n);
        else g = random_digraph(n, p, seed);
        std::ostringstream text;
        write_edgelist(g, text);
        emit(text.str(), out);
    } else if (*dot) {
        const DirectedGraph g = load(in);
        std::optional<WeakeningSet> first;
        if (highlight) {
            EnumerationOptions opts;
            opts.limit = 1;
            opts.allow_large_sigma = true;
            opts.threads = in.threads;
            first = weakening_vertex_sets(g, opts).sets.front();
        }
        emit(export_dot(g, first ? &*first : nullptr), out);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const PreconditionError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
