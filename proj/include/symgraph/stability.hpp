#pragma once

// Stability combinatorics: which distributions of n points over the
// components of an expanded central fibre are GIT-stable, and how the
// corresponding strata degenerate when one more coordinate vanishes.
//
// A stratum index (b, s) records b_v points on the original component of
// vertex v and s_{g,l} points on the l-th inserted component of arrow g.
// It is stable w.r.t. I when its numerical support equals the combinatorial
// support of I; the facet maps push a stratum stable w.r.t. J down to one
// stable w.r.t. J minus one member.

#include <cstdint>
#include <string>
#include <vector>

#include "symgraph/expansion.hpp"
#include "symgraph/graph.hpp"

namespace symgraph {

using SupportVector = std::vector<int>;

/// Per-vertex counts b and per-arrow stage tuples s, indexed by the base
/// graph's vertex/arrow order. All s tuples share one length r-1.
struct StratumIndex {
    std::vector<int> b;
    std::vector<std::vector<int>> s;

    friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
    friend auto operator<=>(const StratumIndex&, const StratumIndex&) = default;
};

/// A length-n tuple of node ids of expand(g, I).
struct TupleIndex {
    std::vector<int> nodes;

    friend bool operator==(const TupleIndex&, const TupleIndex&) = default;
};

/// Gap vector of I = {a_1 < ... < a_r} inside [n+1]: with a_0 = 1 and
/// a_{r+1} = n+1, the entries are a_i - a_{i-1}. They sum to n.
inline SupportVector combinatorial_support(const IndexSet& I) {
    std::vector<int> a;
    a.push_back(1);
    a.insert(a.end(), I.members.begin(), I.members.end());
    a.push_back(I.n + 1);
    SupportVector v(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) v[i] = a[i + 1] - a[i];
    return v;
}

namespace detail {

inline int stage_count(const StratumIndex& idx) {
    if (idx.s.empty()) return 0;
    std::size_t len = idx.s.front().size();
    for (const auto& t : idx.s)
        if (t.size() != len) throw error("ragged stage tuples in stratum index");
    return static_cast<int>(len);
}

inline SupportVector numerical_support_with_stages(const OrientedGraph& g,
                                                   const StratumIndex& idx, int stages) {
    if (static_cast<int>(idx.b.size()) != g.vertex_count() ||
        static_cast<int>(idx.s.size()) != g.arrow_count())
        throw error("stratum index does not match the graph");
    VertexPartition part = bipartite_partition(g);
    SupportVector v(stages + 2, 0);
    for (int src : part.sources) v.front() += idx.b[src];
    for (int snk : part.sinks) v.back() += idx.b[snk];
    for (const auto& t : idx.s)
        for (int l = 0; l < stages; ++l) v[l + 1] += t[l];
    return v;
}

}  // namespace detail

/// The distribution vector (sum_{V+} b, sum_g s_{g,1}, ..., sum_g s_{g,r-1},
/// sum_{V-} b) of a stratum index, of length r+1. The s tuples must all
/// share one length.
inline SupportVector numerical_support(const OrientedGraph& g, const StratumIndex& idx) {
    return detail::numerical_support_with_stages(g, idx, detail::stage_count(idx));
}

/// Stability of (b, s) with respect to I: numerical support == combinatorial
/// support. The s tuples must have length |I|-1.
inline bool is_stable(const OrientedGraph& g, const IndexSet& I, const StratumIndex& idx) {
    const int stages = I.size() - 1;
    if (g.arrow_count() > 0 && detail::stage_count(idx) != stages)
        throw error("stage-length mismatch: expected " + std::to_string(stages) +
                    " stages, got " + std::to_string(detail::stage_count(idx)));
    // An arrowless graph has empty stage sums, so only |I| = 1 can be stable.
    return detail::numerical_support_with_stages(g, idx, stages) == combinatorial_support(I);
}

/// All stable (b, s) with respect to I, ordered lexicographically by the
/// concatenated vector (b in vertex order, then the s tuples in arrow order).
inline std::vector<StratumIndex> enumerate_strata(const OrientedGraph& g, const IndexSet& I) {
    VertexPartition part = bipartite_partition(g);
    SupportVector target = combinatorial_support(I);
    const int V = g.vertex_count();
    const int E = g.arrow_count();
    const int stages = I.size() - 1;
    if (E == 0 && I.size() != 1) return {};

    // Group of each slot: 0 = V+ sum, 1 = V- sum, 2+l = stage-l sum. Each
    // group's entries must add up to the matching component of the target.
    std::vector<int> group;
    for (int v = 0; v < V; ++v) group.push_back(g.incoming(v).empty() ? 0 : 1);
    for (int a = 0; a < E; ++a)
        for (int l = 0; l < stages; ++l) group.push_back(2 + l);

    std::vector<int> remaining(2 + stages);
    remaining[0] = target.front();
    remaining[1] = target.back();
    for (int l = 0; l < stages; ++l) remaining[2 + l] = target[l + 1];

    std::vector<int> slots(2 + stages, 0);  // open slots per group, for pruning
    for (int gr : group) ++slots[gr];

    std::vector<StratumIndex> out;
    std::vector<int> vec(group.size());
    auto emit = [&] {
        StratumIndex idx;
        idx.b.assign(vec.begin(), vec.begin() + V);
        idx.s.resize(E);
        for (int a = 0; a < E; ++a)
            idx.s[a].assign(vec.begin() + V + a * stages, vec.begin() + V + (a + 1) * stages);
        out.push_back(std::move(idx));
    };
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == group.size()) {
            for (int rem : remaining)
                if (rem != 0) return;
            emit();
            return;
        }
        int gr = group[pos];
        --slots[gr];
        int lo = slots[gr] == 0 ? remaining[gr] : 0;
        for (int val = lo; val <= remaining[gr]; ++val) {
            vec[pos] = val;
            remaining[gr] -= val;
            self(self, pos + 1);
            remaining[gr] += val;
        }
        vec[pos] = 0;
        ++slots[gr];
    };
    rec(rec, 0);
    return out;
}

/// Facet map: a stratum stable w.r.t. J with |J| = r+1 degenerates into a
/// unique stratum over I(k) = J \ {j_k} when the k-th coordinate also
/// vanishes. Returns (I(k), (b, s)) for 1 <= k <= r+1:
///   k = 1:     b_v = b'_v + sum over arrows leaving v of s'_{g,1}; drop stage 1
///   1<k<r+1:   merge stages k-1 and k
///   k = r+1:   b_v = b'_v + sum over arrows entering v of s'_{g,r}; drop stage r
inline std::pair<IndexSet, StratumIndex> stratum_facet(const OrientedGraph& g, const IndexSet& J,
                                                       const StratumIndex& idx, int k) {
    if (J.size() < 2) throw error("facet requires |J| >= 2");
    if (k < 1 || k > J.size())
        throw error("facet position k = " + std::to_string(k) + " out of range 1.." +
                    std::to_string(J.size()));
    if (!is_stable(g, J, idx))
        throw error("stratum index is not stable with respect to the given set");
    const int r = J.size() - 1;  // stage count of the input
    StratumIndex out;
    out.b = idx.b;
    out.s.resize(idx.s.size());
    if (k == 1) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int a : g.outgoing(v)) out.b[v] += idx.s[a][0];
        for (std::size_t a = 0; a < idx.s.size(); ++a)
            out.s[a].assign(idx.s[a].begin() + 1, idx.s[a].end());
    } else if (k == r + 1) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int a : g.incoming(v)) out.b[v] += idx.s[a][r - 1];
        for (std::size_t a = 0; a < idx.s.size(); ++a)
            out.s[a].assign(idx.s[a].begin(), idx.s[a].end() - 1);
    } else {
        for (std::size_t a = 0; a < idx.s.size(); ++a) {
            out.s[a] = idx.s[a];
            out.s[a][k - 2] += out.s[a][k - 1];
            out.s[a].erase(out.s[a].begin() + (k - 1));
        }
    }
    return {J.drop(k), std::move(out)};
}

/// Occurrence counts of a tuple: b_v = multiplicity of the black node v_I,
/// s_{g,l} = multiplicity of the white node (I,g,l).
inline StratumIndex tuple_counts(const ExpandedGraph& ex, const TupleIndex& z) {
    StratumIndex idx;
    idx.b.assign(ex.base().vertex_count(), 0);
    idx.s.assign(ex.base().arrow_count(), std::vector<int>(ex.set().size() - 1, 0));
    for (int node : z.nodes) {
        if (node < 0 || node >= ex.node_count()) throw error("tuple references unknown node");
        if (ex.is_black(node)) {
            ++idx.b[ex.vertex_of(node)];
        } else {
            auto [a, l] = ex.white_of(node);
            ++idx.s[a][l - 1];
        }
    }
    return idx;
}

/// All stable length-n tuples over the nodes of expand(g, I), in
/// lexicographic node order.
inline std::vector<TupleIndex> enumerate_tuples(const OrientedGraph& g, const IndexSet& I,
                                                std::uint64_t max_tuples = 100'000'000) {
    ExpandedGraph ex = expand(g, I);
    const int n = I.n;
    const int N = ex.node_count();
    // search space guard
    unsigned __int128 predicted = 1;
    for (int i = 0; i < n && predicted <= max_tuples; ++i) predicted *= N;
    if (predicted > max_tuples)
        throw error("tuple enumeration would scan more than " + std::to_string(max_tuples) +
                    " tuples; raise the limit to proceed");

    std::vector<TupleIndex> out;
    TupleIndex z;
    z.nodes.assign(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            if (is_stable(g, I, tuple_counts(ex, z))) out.push_back(z);
            return;
        }
        for (int node = 0; node < N; ++node) {
            z.nodes[pos] = node;
            self(self, pos + 1);
        }
    };
    if (N > 0) rec(rec, 0);
    return out;
}

/// Entrywise relabeling of a stable tuple over J to its facet over I(k):
/// black nodes persist; the white node at J-position l maps to position l
/// (l < k) or l-1 (l >= k), with position 0 collapsing to the source black
/// node and position r collapsing to the target black node.
inline TupleIndex tuple_facet(const OrientedGraph& g, const IndexSet& J, const TupleIndex& z,
                              int k) {
    if (J.size() < 2) throw error("facet requires |J| >= 2");
    if (k < 1 || k > J.size())
        throw error("facet position k = " + std::to_string(k) + " out of range 1.." +
                    std::to_string(J.size()));
    ExpandedGraph exJ = expand(g, J);
    if (!is_stable(g, J, tuple_counts(exJ, z)))
        throw error("tuple is not stable with respect to the given set");
    const int r = J.size() - 1;  // white positions in the J-expansion run 1..r
    IndexSet I = J.drop(k);
    ExpandedGraph exI = expand(g, I);
    TupleIndex out;
    out.nodes.reserve(z.nodes.size());
    for (int node : z.nodes) {
        if (exJ.is_black(node)) {
            out.nodes.push_back(exI.black_node(exJ.vertex_of(node)));
            continue;
        }
        auto [a, l] = exJ.white_of(node);
        int pos = l < k ? l : l - 1;
        if (pos == 0)
            out.nodes.push_back(exI.black_node(g.arrow(a).src));
        else if (pos == r)
            out.nodes.push_back(exI.black_node(g.arrow(a).tgt));
        else
            out.nodes.push_back(exI.white_node(a, pos));
    }
    return out;
}

}  // namespace symgraph
