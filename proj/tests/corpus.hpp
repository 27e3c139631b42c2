#pragma once

// Shared test corpus: named graphs, exhaustive small-graph generation, and
// independent brute-force oracles. Everything in here is deliberately naive
// and separate from the library's code paths.

#include <array>
#include <string>
#include <vector>

#include "symgraph/graph.hpp"
#include "symgraph/stability.hpp"

namespace corpus {

using symgraph::OrientedGraph;

inline OrientedGraph edge() {
    return OrientedGraph::make({"v", "w"}, {{{"g", "v", "w"}}});
}
inline OrientedGraph cycle2() {
    return OrientedGraph::make({"v", "w"}, {{{"g1", "v", "w"}, {"g2", "v", "w"}}});
}
inline OrientedGraph cycle4() {
    return OrientedGraph::make({"v1", "w1", "v2", "w2"},
                               {{{"a1", "v1", "w1"},
                                 {"a2", "v2", "w1"},
                                 {"a3", "v2", "w2"},
                                 {"a4", "v1", "w2"}}});
}
/// Two sources feeding one sink.
inline OrientedGraph path2() {
    return OrientedGraph::make({"v1", "w", "v2"}, {{{"g1", "v1", "w"}, {"g2", "v2", "w"}}});
}
/// One source feeding two sinks.
inline OrientedGraph star2() {
    return OrientedGraph::make({"v", "w1", "w2"}, {{{"g1", "v", "w1"}, {"g2", "v", "w2"}}});
}
/// Two even 2-cycles sharing the vertex u: homotopy bouquet of two circles.
inline OrientedGraph bouquet2() {
    return OrientedGraph::make(
        {"u", "v", "w"},
        {{{"a1", "u", "v"}, {"a2", "u", "v"}, {"b1", "u", "w"}, {"b2", "u", "w"}}});
}
/// Alternating path on four vertices.
inline OrientedGraph zigzag() {
    return OrientedGraph::make({"v1", "w1", "v2", "w2"},
                               {{{"a", "v1", "w1"}, {"b", "v2", "w1"}, {"c", "v2", "w2"}}});
}
inline OrientedGraph triple_edge() {
    return OrientedGraph::make(
        {"v", "w"}, {{{"g1", "v", "w"}, {"g2", "v", "w"}, {"g3", "v", "w"}}});
}

/// Bipartitely oriented named graphs (inputs for the strata layer).
inline std::vector<std::pair<std::string, OrientedGraph>> bipartite_corpus() {
    return {{"edge", edge()},          {"cycle2", cycle2()}, {"cycle4", cycle4()},
            {"path2", path2()},        {"star2", star2()},   {"bouquet2", bouquet2()},
            {"zigzag", zigzag()},      {"triple_edge", triple_edge()}};
}

/// All labeled loop-free multigraphs with exactly nv vertices and at most
/// max_arrows arrows (arrow multisets over the ordered vertex pairs).
inline std::vector<OrientedGraph> all_multigraphs(int nv, int max_arrows) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::vector<std::string> names;
    for (int i = 1; i <= nv; ++i) names.push_back("v" + std::to_string(i));

    std::vector<OrientedGraph> out;
    std::vector<int> chosen;  // nondecreasing pair indices = multiset
    auto emit = [&] {
        OrientedGraph g;
        for (const auto& n : names) g.add_vertex(n);
        for (std::size_t k = 0; k < chosen.size(); ++k)
            g.add_arrow("e" + std::to_string(k + 1), names[pairs[chosen[k]].first],
                        names[pairs[chosen[k]].second]);
        out.push_back(std::move(g));
    };
    auto rec = [&](auto&& self, std::size_t lo) -> void {
        emit();
        if (static_cast<int>(chosen.size()) == max_arrows) return;
        for (std::size_t p = lo; p < pairs.size(); ++p) {
            chosen.push_back(static_cast<int>(p));
            self(self, p);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Same, over all vertex counts 1..max_vertices.
inline std::vector<OrientedGraph> all_multigraphs_upto(int max_vertices, int max_arrows) {
    std::vector<OrientedGraph> out;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        auto part = all_multigraphs(nv, max_arrows);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// Reverses every arrow.
inline OrientedGraph reversed(const OrientedGraph& g) {
    OrientedGraph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const auto& a : g.arrows())
        out.add_arrow(a.label, g.vertex_name(a.tgt), g.vertex_name(a.src));
    return out;
}

// ---- independent oracles ---------------------------------------------------

/// Odd-cycle oracle: exhaustive two-colouring. A proper colouring exists
/// iff there is no odd cycle.
inline bool oracle_has_odd_cycle(const OrientedGraph& g) {
    const int V = g.vertex_count();
    for (unsigned mask = 0; mask < (1u << V); ++mask) {
        bool proper = true;
        for (const auto& a : g.arrows())
            if (((mask >> a.src) & 1u) == ((mask >> a.tgt) & 1u)) {
                proper = false;
                break;
            }
        if (proper) return false;
    }
    return true;
}

/// Directed-cycle oracle: depth-bounded walk search.
inline bool oracle_has_directed_cycle(const OrientedGraph& g) {
    const int V = g.vertex_count();
    for (int start = 0; start < V; ++start) {
        // any walk of length V returning to start implies a directed cycle
        std::vector<bool> reach(V, false);
        std::vector<int> frontier{start};
        for (int step = 0; step < V; ++step) {
            std::vector<int> next;
            for (int v : frontier)
                for (int a : g.outgoing(v)) {
                    int w = g.arrow(a).tgt;
                    if (w == start) return true;
                    if (!reach[w]) {
                        reach[w] = true;
                        next.push_back(w);
                    }
                }
            frontier = std::move(next);
        }
    }
    return false;
}

/// Brute-force stratum oracle: every (b, s) with entries bounded by n,
/// filtered through is_stable. Entries above n never sum to target
/// components, which are at most n.
inline std::vector<symgraph::StratumIndex> oracle_strata(const OrientedGraph& g,
                                                         const symgraph::IndexSet& I) {
    const int V = g.vertex_count();
    const int E = g.arrow_count();
    const int stages = I.size() - 1;
    const int slots = V + E * stages;
    std::vector<symgraph::StratumIndex> out;
    std::vector<int> vec(slots, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == slots) {
            symgraph::StratumIndex idx;
            idx.b.assign(vec.begin(), vec.begin() + V);
            idx.s.resize(E);
            for (int a = 0; a < E; ++a)
                idx.s[a].assign(vec.begin() + V + a * stages, vec.begin() + V + (a + 1) * stages);
            if (symgraph::is_stable(g, I, idx)) out.push_back(std::move(idx));
            return;
        }
        for (int val = 0; val <= I.n; ++val) {
            vec[pos] = val;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

/// n! / (prod b_v! * prod s_{g,l}!): the number of tuples with the given
/// occurrence counts.
inline unsigned long long tuple_multinomial(int n, const symgraph::StratumIndex& idx) {
    unsigned long long m = factorial(n);
    for (int b : idx.b) m /= factorial(b);
    for (const auto& t : idx.s)
        for (int s : t) m /= factorial(s);
    return m;
}

}  // namespace corpus
