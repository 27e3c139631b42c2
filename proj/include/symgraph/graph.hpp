#pragma once

// Oriented multigraphs: the input format of every pipeline stage.
//
// Vertices and arrows carry unique string labels (one shared namespace).
// Arrows are directed, parallel arrows are allowed, loops are rejected.
// All containers keep declaration order; every enumeration downstream
// iterates in that order, so results are reproducible across runs.

#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgraph {

/// Domain error raised by every module in this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct Arrow {
    std::string label;
    int src = -1;  // vertex index
    int tgt = -1;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class OrientedGraph {
public:
    OrientedGraph() = default;

    /// Builds a graph from vertex labels and (label, src, tgt) triples given
    /// by vertex label. Rejects loops and duplicate labels.
    static OrientedGraph make(std::vector<std::string> vertices,
                              const std::vector<std::array<std::string, 3>>& arrows) {
        OrientedGraph g;
        for (auto& v : vertices) g.add_vertex(std::move(v));
        for (const auto& [label, src, tgt] : arrows) g.add_arrow(label, src, tgt);
        return g;
    }

    void add_vertex(std::string label) {
        if (index_.count(label)) throw error("duplicate label '" + label + "'");
        index_.emplace(label, Ref{true, vertices_.size()});
        vertices_.push_back(std::move(label));
        out_.emplace_back();
        in_.emplace_back();
    }

    void add_arrow(const std::string& label, const std::string& src, const std::string& tgt) {
        if (index_.count(label)) throw error("duplicate label '" + label + "'");
        int s = vertex_index_checked(src);
        int t = vertex_index_checked(tgt);
        if (s == t) throw error("loop arrow '" + label + "' at vertex '" + src + "'");
        index_.emplace(label, Ref{false, arrows_.size()});
        out_[s].push_back(static_cast<int>(arrows_.size()));
        in_[t].push_back(static_cast<int>(arrows_.size()));
        arrows_.push_back(Arrow{label, s, t});
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// Arrows directed away from v (v is the source).
    const std::vector<int>& outgoing(int v) const { return out_.at(v); }
    /// Arrows directed towards v (v is the target).
    const std::vector<int>& incoming(int v) const { return in_.at(v); }

    int vertex_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end() || !it->second.is_vertex) return -1;
        return static_cast<int>(it->second.pos);
    }
    int arrow_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end() || it->second.is_vertex) return -1;
        return static_cast<int>(it->second.pos);
    }

    /// Graph-file rendition (one vertex per line, then `src -> tgt : label`).
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& v : vertices_) os << v << '\n';
        for (const auto& a : arrows_)
            os << vertices_[a.src] << " -> " << vertices_[a.tgt] << " : " << a.label << '\n';
        return os.str();
    }

    friend bool operator==(const OrientedGraph& x, const OrientedGraph& y) {
        return x.vertices_ == y.vertices_ && x.arrows_ == y.arrows_;
    }

private:
    struct Ref {
        bool is_vertex;
        std::size_t pos;
    };

    int vertex_index_checked(const std::string& name) const {
        int v = vertex_index(name);
        if (v < 0) throw error("unknown vertex '" + name + "'");
        return v;
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
    std::map<std::string, Ref> index_;
};

/// Source/sink split of a bipartitely oriented graph.
struct VertexPartition {
    std::vector<int> sources;  // V+: only outgoing arrows (isolated vertices land here)
    std::vector<int> sinks;    // V-: only incoming arrows
};

namespace detail {

// Positions in a graph-file line, for error messages. 1-based.
struct Token {
    std::string text;
    int column = 0;
};

inline std::vector<Token> lex_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        // '#' opens a comment only at the start of a token; expansion arrow
        // labels such as g#2 keep their '#'.
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

}  // namespace detail

/// Parses the graph-file format. A bare token declares a vertex,
/// `SRC -> TGT : LABEL` declares an arrow (LABEL optional, auto-generated as
/// e<k> with k the 1-based arrow declaration index). Vertices must be
/// declared before use. Syntax errors report line and column.
inline OrientedGraph parse_graph(const std::string& text) {
    OrientedGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int arrow_count = 0;
    auto fail = [&](const std::string& msg, int col) {
        throw error("syntax error (line " + std::to_string(lineno) + ", column " +
                    std::to_string(col) + "): " + msg);
    };
    auto wrap = [&](auto&& fn, int col) {
        try {
            fn();
        } catch (const error& e) {
            throw error(std::string(e.what()) + " (line " + std::to_string(lineno) +
                        ", column " + std::to_string(col) + ")");
        }
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::lex_line(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            wrap([&] { g.add_vertex(tokens[0].text); }, tokens[0].column);
            continue;
        }
        if (tokens.size() != 3 && tokens.size() != 5)
            fail("expected 'VERTEX' or 'SRC -> TGT [: LABEL]'",
                 tokens.size() >= 2 ? tokens[1].column : tokens[0].column);
        if (tokens[1].text != "->") fail("expected '->'", tokens[1].column);
        std::string label;
        if (tokens.size() == 5) {
            if (tokens[3].text != ":") fail("expected ':'", tokens[3].column);
            label = tokens[4].text;
        } else {
            label = "e" + std::to_string(arrow_count + 1);
        }
        wrap([&] { g.add_arrow(label, tokens[0].text, tokens[2].text); }, tokens[0].column);
        ++arrow_count;
    }
    return g;
}

/// True iff the underlying undirected multigraph has an odd cycle,
/// i.e. iff no bipartite orientation exists. Two-colouring; parallel
/// arrows only create even cycles.
inline bool has_odd_cycle(const OrientedGraph& g) {
    std::vector<int> colour(g.vertex_count(), -1);
    std::vector<int> stack;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return true;
                }
                return false;
            };
            for (int a : g.outgoing(v))
                if (visit(g.arrow(a).tgt)) return true;
            for (int a : g.incoming(v))
                if (visit(g.arrow(a).src)) return true;
        }
    }
    return false;
}

/// Splits the vertices into pure sources V+ and pure sinks V-. Throws when
/// some vertex has both incoming and outgoing arrows (names the vertex).
inline VertexPartition bipartite_partition(const OrientedGraph& g) {
    VertexPartition p;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool has_out = !g.outgoing(v).empty();
        bool has_in = !g.incoming(v).empty();
        if (has_out && has_in)
            throw error("orientation is not bipartite: vertex '" + g.vertex_name(v) +
                        "' has both incoming and outgoing arrows");
        if (has_in)
            p.sinks.push_back(v);
        else
            p.sources.push_back(v);  // isolated vertices join V+
    }
    return p;
}

inline bool is_bipartitely_oriented(const OrientedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.outgoing(v).empty() && !g.incoming(v).empty()) return false;
    return true;
}

/// True iff the graph has a directed cycle.
inline bool has_directed_cycle(const OrientedGraph& g) {
    // Kahn: peel vertices of in-degree zero.
    std::vector<int> indeg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) indeg[v] = static_cast<int>(g.incoming(v).size());
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int a : g.outgoing(v))
            if (--indeg[g.arrow(a).tgt] == 0) queue.push_back(g.arrow(a).tgt);
    }
    return seen != g.vertex_count();
}

inline int component_count(const OrientedGraph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    int comps = 0;
    std::vector<int> stack;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        ++comps;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a : g.outgoing(v)) {
                int w = g.arrow(a).tgt;
                if (!seen[w]) seen[w] = true, stack.push_back(w);
            }
            for (int a : g.incoming(v)) {
                int w = g.arrow(a).src;
                if (!seen[w]) seen[w] = true, stack.push_back(w);
            }
        }
    }
    return comps;
}

inline bool is_connected(const OrientedGraph& g) { return component_count(g) <= 1; }

/// True iff the underlying undirected multigraph is connected and acyclic.
inline bool is_tree(const OrientedGraph& g) {
    return g.vertex_count() > 0 && is_connected(g) &&
           g.arrow_count() == g.vertex_count() - 1;
}

}  // namespace symgraph
