#pragma once

// Graph ingestion (edge lists and a minimal GraphML subset), edge-list
// output and Graphviz DOT export.

#include "svckit/connectivity.hpp"
#include "svckit/error.hpp"
#include "svckit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace svckit {

enum class Format { auto_detect, edgelist, graphml };

struct IngestOptions {
    Format format = Format::auto_detect;
    std::optional<char> delimiter; // default: any run of whitespace
    bool has_header = false;
    // Edge weights and attributes are never read; every edge counts once.
    static constexpr bool drop_weights = true;
};

struct IngestResult {
    DirectedGraph graph;
    Format format = Format::edgelist;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

inline std::optional<Format> parse_format(std::string_view name) {
    if (name == "auto") return Format::auto_detect;
    if (name == "edgelist") return Format::edgelist;
    if (name == "graphml") return Format::graphml;
    return std::nullopt;
}

namespace detail {

// Assigns dense ids in order of first appearance and drops self-loops and
// repeated edges, counting both.
class GraphAssembler {
  public:
    Vertex intern(const std::string &name) {
        auto [it, inserted] = ids_.try_emplace(name, static_cast<Vertex>(names_.size()));
        if (inserted) names_.push_back(name);
        return it->second;
    }

    void add_edge(const std::string &from, const std::string &to) {
        const Vertex a = intern(from), b = intern(to);
        if (a == b) {
            ++self_loops_;
            return;
        }
        if (!seen_.insert({a, b}).second) {
            ++duplicates_;
            return;
        }
        edges_.push_back({a, b});
    }

    IngestResult finish(Format format) {
        if (names_.empty()) throw ParseError("empty graph: no vertices found");
        IngestResult r;
        r.format = format;
        r.self_loops_dropped = self_loops_;
        r.duplicates_dropped = duplicates_;
        const std::size_t n = names_.size();
        r.graph = DirectedGraph(n, std::move(edges_), std::move(names_));
        return r;
    }

  private:
    std::unordered_map<std::string, Vertex> ids_;
    std::vector<std::string> names_;
    std::set<Edge> seen_;
    std::vector<Edge> edges_;
    std::size_t self_loops_ = 0;
    std::size_t duplicates_ = 0;
};

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_fields(std::string_view line, std::optional<char> delimiter) {
    std::vector<std::string> fields;
    if (delimiter) {
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = line.find(*delimiter, start);
            fields.emplace_back(trim(line.substr(start, pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
    } else {
        std::istringstream in{std::string(line)};
        for (std::string f; in >> f;) fields.push_back(std::move(f));
    }
    return fields;
}

// --- minimal GraphML ------------------------------------------------------

struct XmlTag {
    std::string name;
    std::map<std::string, std::string> attributes;
    bool closing = false;
    bool self_closing = false;
    std::size_t line = 0;
};

inline std::string xml_unescape(std::string_view s, std::size_t line) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '&') {
            out += s[i];
            continue;
        }
        const std::size_t end = s.find(';', i);
        if (end == std::string_view::npos) throw ParseError("unterminated character entity", line);
        const std::string_view entity = s.substr(i + 1, end - i - 1);
        if (entity == "amp") out += '&';
        else if (entity == "lt") out += '<';
        else if (entity == "gt") out += '>';
        else if (entity == "quot") out += '"';
        else if (entity == "apos") out += '\'';
        else throw ParseError("unsupported character entity &" + std::string(entity) + ";", line);
        i = end;
    }
    return out;
}

class XmlScanner {
  public:
    explicit XmlScanner(std::string text) : text_(std::move(text)) {}

    std::optional<XmlTag> next() {
        while (true) {
            const std::size_t open = text_.find('<', pos_);
            if (open == std::string::npos) return std::nullopt;
            advance_to(open);
            if (starts_with("<!--")) {
                skip_past("-->");
            } else if (starts_with("<?")) {
                skip_past("?>");
            } else if (starts_with("<![CDATA[")) {
                skip_past("]]>");
            } else if (starts_with("<!")) {
                skip_past(">");
            } else {
                return read_tag();
            }
        }
    }

  private:
    bool starts_with(std::string_view p) const { return std::string_view(text_).substr(pos_, p.size()) == p; }

    void advance_to(std::size_t target) {
        line_ += static_cast<std::size_t>(std::count(text_.begin() + pos_, text_.begin() + target, '\n'));
        pos_ = target;
    }

    void skip_past(std::string_view terminator) {
        const std::size_t end = text_.find(terminator, pos_);
        if (end == std::string::npos) throw ParseError("unterminated markup", line_);
        advance_to(end + terminator.size());
    }

    XmlTag read_tag() {
        XmlTag tag;
        tag.line = line_;
        const std::size_t end = find_tag_end();
        std::string_view body(text_.data() + pos_ + 1, end - pos_ - 1);
        advance_to(end + 1);

        if (!body.empty() && body.front() == '/') {
            tag.closing = true;
            body.remove_prefix(1);
        }
        if (!body.empty() && body.back() == '/') {
            tag.self_closing = true;
            body.remove_suffix(1);
        }
        std::size_t i = 0;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        tag.name = std::string(body.substr(0, i));
        if (tag.name.empty()) throw ParseError("malformed tag", tag.line);
        // Drop a namespace prefix ("gml:node" -> "node").
        if (auto colon = tag.name.find(':'); colon != std::string::npos) tag.name.erase(0, colon + 1);

        while (true) {
            while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
            if (i >= body.size()) break;
            const std::size_t eq = body.find('=', i);
            if (eq == std::string_view::npos) throw ParseError("malformed attribute in <" + tag.name + ">", tag.line);
            const std::string key(trim(body.substr(i, eq - i)));
            std::size_t q = eq + 1;
            while (q < body.size() && std::isspace(static_cast<unsigned char>(body[q]))) ++q;
            if (q >= body.size() || (body[q] != '"' && body[q] != '\''))
                throw ParseError("unquoted attribute value in <" + tag.name + ">", tag.line);
            const std::size_t close = body.find(body[q], q + 1);
            if (close == std::string_view::npos)
                throw ParseError("unterminated attribute value in <" + tag.name + ">", tag.line);
            tag.attributes[key] = xml_unescape(body.substr(q + 1, close - q - 1), tag.line);
            i = close + 1;
        }
        return tag;
    }

    std::size_t find_tag_end() const {
        char quote = 0;
        for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
            const char c = text_[i];
            if (quote) {
                if (c == quote) quote = 0;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (c == '>') {
                return i;
            }
        }
        throw ParseError("unterminated tag", line_);
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

inline std::string read_all(std::istream &in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace detail

/// Edge-list grammar: one edge per line as `source target [ignored...]`;
/// `#` starts a comment; blank lines are skipped. Direction is source -> target.
inline IngestResult parse_edgelist(std::istream &in, const IngestOptions &opts = {}) {
    detail::GraphAssembler graph;
    std::string raw;
    std::size_t line_no = 0;
    bool header_pending = opts.has_header;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        const auto fields = detail::split_fields(line, opts.delimiter);
        if (fields.size() < 2 || fields[0].empty() || fields[1].empty())
            throw ParseError("expected 'source target', got '" + std::string(line) + "'", line_no);
        graph.add_edge(fields[0], fields[1]);
    }
    return graph.finish(Format::edgelist);
}

/// Accepts directed graphs made of <node id> and <edge source target>
/// elements. <key>, <data>, <default> and <desc> are ignored; anything else
/// (undirected graphs, hyperedges, ports, nested graphs) is rejected.
inline IngestResult parse_graphml(std::istream &in) {
    detail::XmlScanner scanner(detail::read_all(in));
    detail::GraphAssembler graph;
    std::size_t graph_depth = 0;
    bool saw_graph = false;
    static const std::set<std::string> ignored = {"graphml", "key", "default", "data", "desc"};

    while (auto tag = scanner.next()) {
        if (ignored.count(tag->name)) continue;
        if (tag->name == "graph") {
            if (tag->closing) {
                if (graph_depth > 0) --graph_depth;
                continue;
            }
            if (graph_depth > 0) throw ParseError("nested <graph> elements are not supported", tag->line);
            auto dir = tag->attributes.find("edgedefault");
            if (dir != tag->attributes.end() && dir->second != "directed")
                throw ParseError("only edgedefault=\"directed\" graphs are supported", tag->line);
            saw_graph = true;
            if (!tag->self_closing) ++graph_depth;
            continue;
        }
        if (tag->closing) continue;
        if (tag->name == "node") {
            auto id = tag->attributes.find("id");
            if (id == tag->attributes.end()) throw ParseError("<node> without id", tag->line);
            graph.intern(id->second);
        } else if (tag->name == "edge") {
            auto s = tag->attributes.find("source"), t = tag->attributes.find("target");
            if (s == tag->attributes.end() || t == tag->attributes.end())
                throw ParseError("<edge> needs source and target", tag->line);
            auto directed = tag->attributes.find("directed");
            if (directed != tag->attributes.end() && directed->second != "true")
                throw ParseError("undirected <edge> is not supported", tag->line);
            graph.add_edge(s->second, t->second);
        } else {
            throw ParseError("unsupported GraphML element <" + tag->name + ">", tag->line);
        }
    }
    if (!saw_graph) throw ParseError("no <graph> element found");
    return graph.finish(Format::graphml);
}

/// Resolves Format::auto_detect by extension, then by the first non-blank character.
inline Format detect_format(const std::filesystem::path &path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".graphml" || ext == ".xml") return Format::graphml;
    if (ext == ".txt" || ext == ".edges" || ext == ".el" || ext == ".edgelist" || ext == ".tsv" || ext == ".csv")
        return Format::edgelist;
    std::ifstream in(path);
    char c;
    while (in.get(c))
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '<' ? Format::graphml : Format::edgelist;
    return Format::edgelist;
}

inline IngestResult ingest(const std::filesystem::path &path, const IngestOptions &opts = {}) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    Format format = opts.format == Format::auto_detect ? detect_format(path) : opts.format;
    if (format == Format::graphml) return parse_graphml(in);
    IngestOptions eo = opts;
    if (!eo.delimiter && opts.format == Format::auto_detect && path.extension() == ".csv") eo.delimiter = ',';
    return parse_edgelist(in, eo);
}

inline DirectedGraph read_graph(const std::filesystem::path &path, const IngestOptions &opts = {}) {
    return ingest(path, opts).graph;
}

/// Writes g in the edge-list grammar, using labels when present. Isolated
/// vertices cannot be expressed and are lost.
inline void write_edgelist(const DirectedGraph &g, std::ostream &out) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::string name = g.label(v);
        if (name.empty() || std::any_of(name.begin(), name.end(), [](unsigned char c) {
                return std::isspace(c) || c == '#';
            }))
            throw InputError("label '" + name + "' cannot be written to an edge list");
    }
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    for (const Edge &e : g.edges()) out << g.label(e.from) << ' ' << g.label(e.to) << '\n';
}

namespace detail {

inline std::string dot_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace detail

/// Graphviz digraph; members of `highlight` are drawn filled (vertices) or
/// red (edges). Labelled graphs get one node line per vertex.
inline std::string export_dot(const DirectedGraph &g, const WeakeningSet *highlight = nullptr) {
    std::vector<bool> marked_vertex(g.vertex_count(), false);
    std::set<Edge> marked_edges;
    if (highlight) {
        for (Vertex v : highlight->vertices) marked_vertex.at(v) = true;
        marked_edges.insert(highlight->edges.begin(), highlight->edges.end());
    }
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!g.has_labels() && !marked_vertex[v]) continue;
        out << "  " << v << " [";
        if (g.has_labels()) out << "label=" << detail::dot_quote(g.label(v));
        if (marked_vertex[v]) out << (g.has_labels() ? ", " : "") << "style=filled, fillcolor=\"#e76f51\"";
        out << "];\n";
    }
    for (const Edge &e : g.edges()) {
        out << "  " << e.from << " -> " << e.to;
        if (marked_edges.count(e)) out << " [color=red, penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace svckit
