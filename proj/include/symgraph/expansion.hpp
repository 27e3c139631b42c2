#pragma once

// Expanded graphs: each arrow of the base graph is subdivided into |I|
// arrows through |I|-1 new white nodes, for an index set I inside [n+1].
// Black nodes keep the base vertices; the chain for an arrow v -> v' is
//
//   v_I --(stage 1)--> (I,g,i_1) --(stage 2)--> ... --(stage r)--> v'_I.
//
// White nodes are stored positionally by (arrow, l) with l = 1..r-1; display
// names use the actual members i_l of I.

#include <string>
#include <vector>

#include "symgraph/graph.hpp"

namespace symgraph {

/// A nonempty subset of [n+1] = {1,...,n+1}, strictly increasing.
/// Carries n so that [n+1] is unambiguous.
struct IndexSet {
    int n = 0;
    std::vector<int> members;

    IndexSet() = default;
    IndexSet(int n_, std::vector<int> members_) : n(n_), members(std::move(members_)) {
        if (n < 1) throw error("index set: n must be positive");
        if (members.empty()) throw error("index set: must be nonempty");
        int prev = 0;
        for (int m : members) {
            if (m <= prev) throw error("index set: members must be strictly increasing");
            if (m > n + 1)
                throw error("index set: member " + std::to_string(m) + " exceeds n+1 = " +
                            std::to_string(n + 1));
            prev = m;
        }
    }

    int size() const { return static_cast<int>(members.size()); }

    /// The subset J \ {j_k}, k being 1-based.
    IndexSet drop(int k) const {
        if (k < 1 || k > size()) throw error("index set: drop position out of range");
        std::vector<int> rest;
        rest.reserve(members.size() - 1);
        for (int i = 0; i < size(); ++i)
            if (i != k - 1) rest.push_back(members[i]);
        return IndexSet(n, std::move(rest));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(members[i]);
        }
        return out;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

class ExpandedGraph {
public:
    /// Node ids: 0..V-1 are black nodes (base vertex order); white nodes
    /// follow in arrow-major, stage-minor order.
    struct Arc {
        int arrow = -1;  // base arrow index
        int stage = 0;   // 1..r, positional
        int from = -1;   // node id
        int to = -1;     // node id
    };

    ExpandedGraph(const OrientedGraph& g, IndexSet I) : base_(g), set_(std::move(I)) {
        const int r = set_.size();
        for (int a = 0; a < base_.arrow_count(); ++a) {
            for (int stage = 1; stage <= r; ++stage) {
                Arc arc;
                arc.arrow = a;
                arc.stage = stage;
                arc.from = stage == 1 ? black_node(base_.arrow(a).src) : white_node(a, stage - 1);
                arc.to = stage == r ? black_node(base_.arrow(a).tgt) : white_node(a, stage);
                arcs_.push_back(arc);
            }
        }
    }

    const OrientedGraph& base() const { return base_; }
    const IndexSet& set() const { return set_; }

    int black_count() const { return base_.vertex_count(); }
    int white_count() const { return base_.arrow_count() * (set_.size() - 1); }
    int node_count() const { return black_count() + white_count(); }

    int black_node(int vertex) const { return vertex; }
    /// White node for base arrow `arrow` at position l = 1..r-1.
    int white_node(int arrow, int l) const {
        return black_count() + arrow * (set_.size() - 1) + (l - 1);
    }

    bool is_black(int node) const { return node < black_count(); }
    /// Base vertex of a black node.
    int vertex_of(int node) const { return node; }
    /// (arrow, l) of a white node.
    std::pair<int, int> white_of(int node) const {
        int off = node - black_count();
        return {off / (set_.size() - 1), off % (set_.size() - 1) + 1};
    }

    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Display name: `v@I` for black nodes, `(I|g|i_l)` for white nodes.
    std::string node_name(int node) const {
        if (is_black(node)) return base_.vertex_name(node) + "@" + set_.to_string();
        auto [a, l] = white_of(node);
        return "(" + set_.to_string() + "|" + base_.arrow(a).label + "|" +
               std::to_string(set_.members[l - 1]) + ")";
    }

    std::string arc_label(const Arc& arc) const {
        return base_.arrow(arc.arrow).label + "#" + std::to_string(arc.stage);
    }

    /// The expansion as a plain graph, using the display names.
    OrientedGraph to_graph() const {
        OrientedGraph out;
        for (int node = 0; node < node_count(); ++node) out.add_vertex(node_name(node));
        for (const auto& arc : arcs_)
            out.add_arrow(arc_label(arc), node_name(arc.from), node_name(arc.to));
        return out;
    }

private:
    OrientedGraph base_;
    IndexSet set_;
    std::vector<Arc> arcs_;
};

/// Subdivides every arrow of g into |I| arrows through |I|-1 white nodes.
inline ExpandedGraph expand(const OrientedGraph& g, const IndexSet& I) {
    return ExpandedGraph(g, I);
}

}  // namespace symgraph
