// Acceptance run: one PASS/FAIL/SKIP line per criterion.
//
//   acceptance --cli path/to/svckit [--data DIR]
//
// The connectome criterion needs the public data files (see README); it looks
// in --data DIR or $SVCKIT_DATA_DIR and reports SKIP when they are missing.

#include "svckit/svckit.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace svckit;
namespace fs = std::filesystem;

namespace {

enum class Outcome { pass, fail, skip };

struct Result {
    Outcome outcome = Outcome::pass;
    std::string detail;
};

Result fail(std::string why) { return {Outcome::fail, std::move(why)}; }
Result skip(std::string why) { return {Outcome::skip, std::move(why)}; }

std::string cli_path;
fs::path data_dir;
fs::path scratch;
int failures = 0;

void criterion(const std::string &name, double limit_seconds, const std::function<Result()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception &e) {
        r = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.outcome == Outcome::pass && limit_seconds > 0 && secs > limit_seconds) {
        std::ostringstream why;
        why << "took " << secs << " s, limit " << limit_seconds << " s";
        r = fail(why.str() + (r.detail.empty() ? "" : "; " + r.detail));
    }
    const char *tag = r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::fail ? "FAIL" : "SKIP";
    if (r.outcome == Outcome::fail) ++failures;
    std::printf("%s %s (%.2f s)%s%s\n", tag, name.c_str(), secs, r.detail.empty() ? "" : ": ", r.detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string quote(const std::string &s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun cli(const std::string &args, const std::string &tag) {
    const fs::path out = scratch / (tag + ".stdout");
    const std::string command = quote(cli_path) + " " + args + " > " + quote(out.string()) + " 2>/dev/null";
    const int raw = std::system(command.c_str());
    CliRun r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    return r;
}

fs::path fixture(const char *name) { return fs::path(SVCKIT_FIXTURES) / name; }

// Every graph the oracle criterion checks; the inequality criterion reuses them.
std::vector<DirectedGraph> oracle_graphs() {
    std::vector<DirectedGraph> graphs;
    std::uint64_t seed = 1000;
    for (std::size_t n = 2; n <= 8; ++n)
        for (double p : {0.15, 0.3, 0.5, 0.8}) {
            auto batch = testing::strongly_connected_samples(n, p, 8, seed);
            seed += 100000;
            for (auto &g : batch) graphs.push_back(std::move(g));
        }
    return graphs;
}

Result oracle_equivalence(const std::vector<DirectedGraph> &graphs) {
    if (graphs.size() < 200) return fail("only " + std::to_string(graphs.size()) + " graphs sampled");
    std::mt19937_64 rng(7);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto &g = graphs[i];
        const std::size_t n = g.vertex_count();
        if (svc(g) != oracle::oracle_svc(g)) return fail("svc mismatch on graph " + std::to_string(i));
        if (sec(g) != oracle::oracle_sec(g)) return fail("sec mismatch on graph " + std::to_string(i));
        for (int k = 0; k < 10; ++k) {
            const auto u = static_cast<Vertex>(rng() % n);
            auto v = static_cast<Vertex>(rng() % (n - 1));
            if (v >= u) ++v;
            if (local_sigma(g, u, v) != oracle::oracle_local_sigma(g, u, v))
                return fail("local_sigma mismatch on graph " + std::to_string(i));
            ++pairs;
        }
    }
    return {Outcome::pass, std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) + " pairs"};
}

Result gamma_sweep() {
    for (std::size_t b = 1; b <= 5; ++b)
        for (std::size_t a = 1; a <= b; ++a) {
            const auto g = gamma({a, b});
            const std::size_t s = svc(g), z = undirected_vertex_connectivity(underlying(g));
            if (s != a || z != b)
                return fail("gamma(" + std::to_string(a) + "," + std::to_string(b) + ") gave " + std::to_string(s) +
                            "," + std::to_string(z));
        }
    return {Outcome::pass, "15 cases"};
}

Result inequality_checks(const std::vector<DirectedGraph> &graphs) {
    std::size_t checked = 0;
    auto bound_holds = [&](const DirectedGraph &g) {
        ++checked;
        return svc(g) <= undirected_vertex_connectivity(underlying(g));
    };
    for (const auto &g : graphs)
        if (!bound_holds(g)) return fail("sigma0 exceeds zeta0 on an oracle graph");
    for (std::size_t b = 1; b <= 5; ++b)
        for (std::size_t a = 1; a <= b; ++a)
            if (!bound_holds(gamma({a, b}))) return fail("sigma0 exceeds zeta0 on a gamma graph");

    std::size_t doubled_cases = 0;
    for (std::uint64_t seed = 0; doubled_cases < 120 && seed < 100000; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const double p = 0.2 + 0.1 * static_cast<double>(seed % 7);
        const auto d = testing::random_undirected(n, p, seed);
        if (!is_connected(d)) continue;
        ++doubled_cases;
        if (svc(doubled(d)) != oracle::oracle_undirected_vertex_connectivity(d))
            return fail("sigma0(doubled(d)) differs from brute-force zeta0, seed " + std::to_string(seed));
    }
    if (doubled_cases < 100) return fail("too few connected samples");
    return {Outcome::pass, std::to_string(checked) + " bound checks, " + std::to_string(doubled_cases) + " doubled graphs"};
}

std::vector<std::string> labels_of(const DirectedGraph &g, const WeakeningSet &w) {
    std::vector<std::string> out;
    for (Vertex v : w.vertices) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

Result fixtures() {
    const auto fig1 = read_graph(fixture("gamma_1_3.edges"));
    const auto fig2 = read_graph(fixture("gamma_2_3.edges"));
    if (svc(fig1) != 1) return fail("gamma_1_3 fixture: sigma0 != 1");
    const auto w1 = weakening_vertex_sets(fig1);
    if (w1.total != 1 || labels_of(fig1, w1.sets[0]) != std::vector<std::string>{"1"})
        return fail("gamma_1_3 fixture: expected the single set {1}");
    if (svc(fig2) != 2) return fail("gamma_2_3 fixture: sigma0 != 2");
    const auto w2 = weakening_vertex_sets(fig2);
    if (w2.total != 1 || labels_of(fig2, w2.sets[0]) != std::vector<std::string>{"1", "2"})
        return fail("gamma_2_3 fixture: expected the single set {1,2}");
    return {};
}

std::optional<fs::path> dataset(const std::string &stem) {
    if (data_dir.empty()) return std::nullopt;
    for (const char *ext : {".edges", ".txt", ".csv", ".graphml", ".el", ".edgelist", ".tsv"}) {
        fs::path p = data_dir / (stem + ext);
        if (fs::exists(p)) return p;
    }
    return std::nullopt;
}

DirectedGraph largest_component(const DirectedGraph &g) { return induced(g, largest_scc(g)).graph; }

std::string trace_text(const std::vector<std::size_t> &t) { return Json(t).dump(); }

Result connectome() {
    const auto cat = dataset("cat"), fly = dataset("fly");
    const auto rat1 = dataset("rat1"), rat2 = dataset("rat2"), rat3 = dataset("rat3");
    if (!cat || !fly || !rat1 || !rat2 || !rat3)
        return skip("data files not found (set SVCKIT_DATA_DIR, see README)");

    {
        const auto g = read_graph(*cat);
        if (g.vertex_count() != 65 || g.edge_count() != 1139)
            return fail("cat: n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()));
        const auto r = report(g, {.enumerate = true});
        if (r.sigma0 != 1 || r.sigma1 != 1 || r.zeta0_underlying != 3) return fail("cat: connectivity values differ");
        if (r.vertex_witnesses->total != 1 ||
            r.vertex_witnesses->sets[0].resulting_scc_sizes != std::vector<std::size_t>{63, 1})
            return fail("cat: weakening vertex differs");
    }
    {
        const auto raw = read_graph(*fly);
        if (raw.vertex_count() != 1781 || raw.edge_count() > 9735)
            return fail("fly: n=" + std::to_string(raw.vertex_count()) + " m=" + std::to_string(raw.edge_count()));
        const auto g = largest_component(raw);
        if (g.vertex_count() != 785) return fail("fly: largest SCC has " + std::to_string(g.vertex_count()));
        const auto r = report(g, {.enumerate = true});
        if (r.sigma0 != 1 || r.sigma1 != 1) return fail("fly: sigma values differ");
        if (r.vertex_witnesses->total != 173 || r.edge_witnesses->total != 245)
            return fail("fly: " + std::to_string(r.vertex_witnesses->total) + " vertices, " +
                        std::to_string(r.edge_witnesses->total) + " edges");
    }
    for (const auto &path : {*rat1, *rat2, *rat3}) {
        const auto g = largest_component(read_graph(path));
        const std::string name = path.stem().string();
        if (g.vertex_count() != 502 && g.vertex_count() != 493)
            return fail(name + ": largest SCC has " + std::to_string(g.vertex_count()));
        const auto r = report(g, {.enumerate = true});
        if (r.sigma0 != 2 || r.sigma1 != 2) return fail(name + ": sigma values differ");
        if (r.vertex_witnesses->total != 1) return fail(name + ": " + std::to_string(r.vertex_witnesses->total) + " pairs");
    }
    return {};
}

// Best effort: a mismatch is reported, with the witness count where the
// traces part, but does not count as a failure.
Result cat_traces() {
    const auto cat = dataset("cat");
    if (!cat) return skip("data files not found");
    const auto g = read_graph(*cat);
    const auto tree = iterate(g, {.max_depth = 7});
    const std::vector<std::size_t> want_sigma{1, 2, 3, 3, 3, 3, 2}, want_zeta{3, 3, 7, 7, 7, 6};
    const auto sigma = sigma_trace(tree), zeta = zeta_trace(tree);
    std::string text = "sigma " + trace_text(sigma) + ", zeta " + trace_text(zeta);
    auto diverge = [](const auto &got, const auto &want) {
        std::size_t i = 0;
        while (i < got.size() && i < want.size() && got[i] == want[i]) ++i;
        return i;
    };
    const std::size_t ds = diverge(sigma, want_sigma), dz = diverge(zeta, want_zeta);
    if (ds == want_sigma.size() && dz == want_zeta.size()) return {Outcome::pass, text};
    const std::size_t level = std::min(ds, dz);
    text += "; traces part at level " + std::to_string(level + 1);
    // The set removed one level up decides what the diverging level sees.
    const auto path = detail::largest_per_level(tree);
    const DecompositionNode *parent = path[std::min(level, path.size()) - (level > 0 ? 1 : 0)];
    if (parent->witness_count)
        text += ", the removal before it had " + std::to_string(*parent->witness_count) + " minimum choices";
    return {Outcome::pass, text};
}

Result performance() {
    DirectedGraph g;
    std::uint64_t seed = 0;
    for (;; ++seed) {
        g = random_digraph(500, 0.02, seed);
        if (is_strongly_connected(g)) break;
    }
    const fs::path file = scratch / "random500.edges";
    {
        std::ofstream out(file);
        write_edgelist(g, out);
    }
    std::string first;
    std::string detail = "seed " + std::to_string(seed);
    for (const char *threads : {"1", "0"}) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = cli("analyze --threads " + std::string(threads) + " " + quote(file.string()), "perf");
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.status != 0) return fail("analyze exited with " + std::to_string(r.status));
        if (secs > 300) return fail("threads=" + std::string(threads) + " took " + std::to_string(secs) + " s");
        if (first.empty()) first = r.out;
        else if (first != r.out) return fail("report depends on --threads");
        const Json j = Json::parse(r.out);
        std::ostringstream line;
        line << ", threads=" << threads << ": sigma0=" << j["sigma0"] << " sigma1=" << j["sigma1"] << " in "
             << static_cast<int>(secs * 10) / 10.0 << " s";
        detail += line.str();
    }
    return {Outcome::pass, detail};
}

Result determinism() {
    const std::string fig1 = quote(fixture("gamma_1_3.edges").string());
    const std::string fig2 = quote(fixture("gamma_2_3.edges").string());
    const std::string tree = quote((scratch / "tree.json").string());
    const std::string report_file = quote((scratch / "report.json").string());
    const std::vector<std::pair<std::string, std::string>> commands{
        {"analyze " + fig1 + " --enumerate", ""},
        {"analyze " + fig2 + " --enumerate --allow-large --out " + report_file, "report.json"},
        {"analyze " + fig2 + " --scc-largest", ""},
        {"svc " + fig2, ""},
        {"sec " + fig2, ""},
        {"weakening " + fig1 + " --kind vertex", ""},
        {"weakening " + fig2 + " --kind edge --limit 3", ""},
        {"iterate " + fig2 + " --depth 3 --all-witnesses --out " + tree, "tree.json"},
        {"generate gamma --a 2 --b 5", ""},
        {"generate dk --n 5", ""},
        {"generate cycle --n 6", ""},
        {"generate random --n 30 --p 0.2 --seed 9", ""},
        {"export-dot " + fig1 + " --highlight-first-witness", ""},
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const auto &[args, file] = commands[i];
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto r = cli(args, "det" + std::to_string(i));
            if (r.status != 0) return fail("`" + args + "` exited with " + std::to_string(r.status));
            outputs[run] = r.out + (file.empty() ? "" : slurp(scratch / file));
            if (!file.empty()) fs::remove(scratch / file);
        }
        if (outputs[0] != outputs[1]) return fail("`" + args + "` output differs between runs");
        if (outputs[0].empty()) return fail("`" + args + "` produced no output");
    }
    const auto bad = cli("svc " + quote((scratch / "missing.edges").string()), "bad");
    if (bad.status != 2) return fail("missing file should exit 2");
    return {Outcome::pass, std::to_string(commands.size()) + " commands"};
}

} // namespace

int main(int argc, char **argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) cli_path = argv[++i];
        else if (arg == "--data" && i + 1 < argc) data_dir = argv[++i];
        else {
            std::cerr << "usage: acceptance --cli PATH [--data DIR]\n";
            return 1;
        }
    }
    if (cli_path.empty()) {
        std::cerr << "usage: acceptance --cli PATH [--data DIR]\n";
        return 1;
    }
    if (data_dir.empty())
        if (const char *env = std::getenv("SVCKIT_DATA_DIR")) data_dir = env;
    scratch = fs::temp_directory_path() / ("svckit_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(scratch);

    const auto graphs = oracle_graphs();
    criterion("oracle_equivalence", 60, [&] { return oracle_equivalence(graphs); });
    criterion("gamma_family_sweep", 10, gamma_sweep);
    criterion("connectivity_bound_and_doubled_graphs", 0, [&] { return inequality_checks(graphs); });
    criterion("gamma_fixtures", 0, fixtures);
    criterion("connectome_reproduction", 0, connectome);
    criterion("cat_iteration_traces_best_effort", 0, cat_traces);
    criterion("performance_n500", 600, performance);
    criterion("cli_determinism", 0, determinism);

    fs::remove_all(scratch);
    return failures == 0 ? 0 : 1;
}
