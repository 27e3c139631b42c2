#pragma once

// The n-fold product complex of an oriented graph (cube decomposition plus
// shuffle subdivision), its direct symmetric-product model, the symmetric
// group quotient identifying the two, and weight-minimal subcomplexes.
//
// Product cells: a cube S_1 x ... x S_n (each factor a vertex or an arrow)
// together with an ordered partition of the arrow positions into k nonempty
// blocks; the block order records the chain 0 <= x_{block 1} <= ... <= 1.
// Faces: d_0 sends block 1 to the arrow sources (coordinate 0), d_i merges
// blocks i and i+1, d_k sends block k to the arrow targets (coordinate 1).
//
// Symmetric cells: a k-cell is a pair (a, r) with sum_v a_v + sum r_{g,i} = n
// and every stage sum positive; faces follow the same source/merge/target
// pattern through the occurrence counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symgraph/delta_complex.hpp"
#include "symgraph/graph.hpp"
#include "symgraph/stability.hpp"

namespace symgraph {

inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;

struct SymCell {
    std::vector<int> a;                 // per vertex index
    std::vector<std::vector<int>> r;    // per arrow index, length k

    int dimension() const { return r.empty() ? 0 : static_cast<int>(r.front().size()); }

    friend bool operator==(const SymCell&, const SymCell&) = default;
    friend auto operator<=>(const SymCell&, const SymCell&) = default;
};

struct ProductCell {
    // factors[p] = vertex index v, or V + arrow index for arrows
    std::vector<int> factors;
    std::vector<std::vector<int>> blocks;  // ordered partition of arrow positions

    int dimension() const { return static_cast<int>(blocks.size()); }

    friend bool operator==(const ProductCell&, const ProductCell&) = default;
};

/// Order of vanishing per component; must cover every vertex of the graph.
using VertexWeights = std::map<std::string, long long>;

inline SymCell sym_cell_of(const StratumIndex& idx) { return SymCell{idx.b, idx.s}; }
inline StratumIndex stratum_of(const SymCell& c) { return StratumIndex{c.a, c.r}; }

/// Canonical key: nonzero vertex counts and nonzero arrow stage tuples,
/// label-sorted, e.g. `{v:1,w:1|g:(1,2)}`.
inline std::string sym_cell_key(const OrientedGraph& g, const SymCell& c) {
    std::map<std::string, std::string> va, ra;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.a[v] > 0) va[g.vertex_name(v)] = std::to_string(c.a[v]);
    for (int a = 0; a < g.arrow_count(); ++a) {
        bool nonzero = false;
        for (int x : c.r[a]) nonzero |= x != 0;
        if (!nonzero) continue;
        std::string t = "(";
        for (std::size_t i = 0; i < c.r[a].size(); ++i) {
            if (i) t += ',';
            t += std::to_string(c.r[a][i]);
        }
        t += ')';
        ra[g.arrow(a).label] = t;
    }
    std::string out = "{";
    bool first = true;
    for (const auto& [name, v] : va) {
        if (!first) out += ',';
        first = false;
        out += name + ":" + v;
    }
    out += '|';
    first = true;
    for (const auto& [name, v] : ra) {
        if (!first) out += ',';
        first = false;
        out += name + ":" + v;
    }
    out += '}';
    return out;
}

/// Canonical key: factor names in cube order, then the blocks as ascending
/// 1-based position lists, e.g. `(v,g,g|2|3)`.
inline std::string product_cell_key(const OrientedGraph& g, const ProductCell& c) {
    const int V = g.vertex_count();
    std::string out = "(";
    for (std::size_t p = 0; p < c.factors.size(); ++p) {
        if (p) out += ',';
        int f = c.factors[p];
        out += f < V ? g.vertex_name(f) : g.arrow(f - V).label;
    }
    for (const auto& block : c.blocks) {
        out += '|';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i] + 1);
        }
    }
    out += ')';
    return out;
}

/// Facet d_i of a symmetric cell: i = 0 adds stage 1 to the arrow sources,
/// 0 < i < k merges stages i and i+1, i = k adds stage k to the targets.
inline SymCell sym_face(const OrientedGraph& g, const SymCell& c, int i) {
    const int k = c.dimension();
    if (k < 1) throw error("sym_face: 0-cells have no facets");
    if (i < 0 || i > k)
        throw error("sym_face: index " + std::to_string(i) + " out of range 0.." +
                    std::to_string(k));
    SymCell out;
    out.a = c.a;
    out.r.resize(c.r.size());
    if (i == 0) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int a : g.outgoing(v)) out.a[v] += c.r[a][0];
        for (std::size_t a = 0; a < c.r.size(); ++a)
            out.r[a].assign(c.r[a].begin() + 1, c.r[a].end());
    } else if (i == k) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int a : g.incoming(v)) out.a[v] += c.r[a][k - 1];
        for (std::size_t a = 0; a < c.r.size(); ++a)
            out.r[a].assign(c.r[a].begin(), c.r[a].end() - 1);
    } else {
        for (std::size_t a = 0; a < c.r.size(); ++a) {
            out.r[a] = c.r[a];
            out.r[a][i - 1] += out.r[a][i];
            out.r[a].erase(out.r[a].begin() + i);
        }
    }
    return out;
}

/// Facet d_i of a product cell, same geometric pattern on blocks.
inline ProductCell product_face(const OrientedGraph& g, const ProductCell& c, int i) {
    const int k = c.dimension();
    const int V = g.vertex_count();
    if (k < 1) throw error("product_face: 0-cells have no facets");
    if (i < 0 || i > k)
        throw error("product_face: index " + std::to_string(i) + " out of range 0.." +
                    std::to_string(k));
    ProductCell out = c;
    if (i == 0) {
        for (int p : out.blocks.front()) out.factors[p] = g.arrow(out.factors[p] - V).src;
        out.blocks.erase(out.blocks.begin());
    } else if (i == k) {
        for (int p : out.blocks.back()) out.factors[p] = g.arrow(out.factors[p] - V).tgt;
        out.blocks.pop_back();
    } else {
        std::vector<int> merged = out.blocks[i - 1];
        merged.insert(merged.end(), out.blocks[i].begin(), out.blocks[i].end());
        std::sort(merged.begin(), merged.end());
        out.blocks[i - 1] = std::move(merged);
        out.blocks.erase(out.blocks.begin() + i);
    }
    return out;
}

/// Occurrence counts of a product cell: a_v = positions with factor v,
/// r_{g,j} = positions holding arrow g inside block j.
inline SymCell occurrence_counts(const OrientedGraph& g, const ProductCell& c) {
    const int V = g.vertex_count();
    SymCell out;
    out.a.assign(g.vertex_count(), 0);
    out.r.assign(g.arrow_count(), std::vector<int>(c.blocks.size(), 0));
    for (int f : c.factors)
        if (f < V) ++out.a[f];
    for (std::size_t j = 0; j < c.blocks.size(); ++j)
        for (int p : c.blocks[j]) ++out.r[c.factors[p] - V][j];
    return out;
}

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > ~0ull ? ~0ull : static_cast<std::uint64_t>(p);
}
inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a + b < a ? ~0ull : a + b;
}

inline std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > ~0ull) return ~0ull;
    }
    return static_cast<std::uint64_t>(acc);
}

// Number of ordered set partitions of an m-set (Fubini numbers), saturating.
inline std::uint64_t fubini_sat(int m) {
    std::vector<std::uint64_t> f(m + 1, 0);
    f[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= i; ++j)
            f[i] = saturating_add(f[i], saturating_mul(binomial_sat(i, j), f[i - j]));
    return f[m];
}

// Exact cell count of the product complex, saturating.
inline std::uint64_t predicted_product_cells(int V, int E, int n) {
    std::uint64_t total = 0;
    for (int m = 0; m <= n; ++m) {
        std::uint64_t cubes = binomial_sat(n, m);
        for (int i = 0; i < n - m; ++i) cubes = saturating_mul(cubes, V);
        for (int i = 0; i < m; ++i) cubes = saturating_mul(cubes, E);
        total = saturating_add(total, saturating_mul(cubes, fubini_sat(m)));
    }
    return total;
}

// Upper bound for the symmetric complex: compositions of n over the slot
// counts of each dimension, ignoring the stage-positivity constraint.
inline std::uint64_t predicted_sym_cells(int V, int E, int n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0 && E == 0) break;
        std::uint64_t slots = static_cast<std::uint64_t>(V) + static_cast<std::uint64_t>(E) * k;
        if (slots == 0) continue;
        total = saturating_add(total, binomial_sat(n + slots - 1, slots - 1));
    }
    return total;
}

inline void check_budget(std::uint64_t predicted, std::uint64_t max_cells, const char* what) {
    if (predicted > max_cells)
        throw error(std::string(what) + ": predicted cell count " +
                    (predicted == ~0ull ? std::string(">= 2^64") : std::to_string(predicted)) +
                    " exceeds the limit " + std::to_string(max_cells));
}

inline void require_nonempty(const OrientedGraph& g, int n) {
    if (n < 0) throw error("n must be nonnegative");
    if (n >= 1 && g.vertex_count() == 0)
        throw error("cannot place points on a graph without vertices");
}

}  // namespace detail

struct SymComplex {
    DeltaComplex complex;
    std::vector<std::vector<SymCell>> cells;  // aligned with complex indices
};

/// Direct model of the n-th symmetric product. Cells per dimension are
/// ordered lexicographically by the concatenated vector (a in vertex order,
/// then the stage tuples in arrow order).
inline SymComplex sym_complex(const OrientedGraph& g, int n,
                              std::uint64_t max_cells = kDefaultMaxCells) {
    detail::require_nonempty(g, n);
    const int V = g.vertex_count();
    const int E = g.arrow_count();
    detail::check_budget(detail::predicted_sym_cells(V, E, n), max_cells, "sym complex");

    SymComplex out;
    if (n == 0) {
        // one-point complex by convention
        SymCell pt;
        pt.a.assign(V, 0);
        pt.r.assign(E, {});
        out.cells.push_back({pt});
        out.complex.add_vertex(sym_cell_key(g, pt));
        return out;
    }

    for (int k = 0; k <= n; ++k) {
        std::vector<SymCell> layer;
        const int slots = V + E * k;
        std::vector<int> vec(slots, 0);
        std::vector<int> colsum(k, 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == slots) {
                if (remaining != 0) return;
                for (int cs : colsum)
                    if (cs == 0) return;
                SymCell c;
                c.a.assign(vec.begin(), vec.begin() + V);
                c.r.resize(E);
                for (int a = 0; a < E; ++a)
                    c.r[a].assign(vec.begin() + V + a * k, vec.begin() + V + (a + 1) * k);
                layer.push_back(std::move(c));
                return;
            }
            for (int val = 0; val <= remaining; ++val) {
                vec[pos] = val;
                if (pos >= V) colsum[(pos - V) % k] += val;
                self(self, pos + 1, remaining - val);
                if (pos >= V) colsum[(pos - V) % k] -= val;
            }
            vec[pos] = 0;
        };
        if (k == 0 || E > 0) rec(rec, 0, n);
        if (k > 0 && layer.empty()) break;
        for (const auto& c : layer) {
            if (k == 0) {
                out.complex.add_vertex(sym_cell_key(g, c));
            } else {
                std::vector<std::string> fk;
                for (int i = 0; i <= k; ++i) fk.push_back(sym_cell_key(g, sym_face(g, c, i)));
                out.complex.add_cell(sym_cell_key(g, c), fk);
            }
        }
        out.cells.push_back(std::move(layer));
    }
    return out;
}

struct ProductComplex {
    DeltaComplex complex;
    CellAction action;  // permutation action of the symmetric group on cube positions
    std::vector<std::vector<ProductCell>> cells;  // aligned with complex indices
};

/// The n-fold product complex of g, with the symmetric group acting by
/// permuting cube positions (two generators: a transposition and an n-cycle).
inline ProductComplex product_complex(const OrientedGraph& g, int n,
                                      std::uint64_t max_cells = kDefaultMaxCells) {
    detail::require_nonempty(g, n);
    const int V = g.vertex_count();
    const int E = g.arrow_count();
    detail::check_budget(detail::predicted_product_cells(V, E, n), max_cells, "product complex");

    ProductComplex out;
    // enumerate cubes lexicographically; each cube spawns one cell per
    // ordered set partition of its arrow positions
    std::vector<std::vector<ProductCell>>& cells = out.cells;
    std::vector<int> cube(n, 0);
    auto emit_cube = [&] {
        std::vector<int> arrow_pos;
        for (int p = 0; p < n; ++p)
            if (cube[p] >= V) arrow_pos.push_back(p);
        const int m = static_cast<int>(arrow_pos.size());
        if (m == 0) {
            ProductCell c;
            c.factors = cube;
            if (cells.empty()) cells.resize(1);
            cells[0].push_back(std::move(c));
            return;
        }
        for (int k = 1; k <= m; ++k) {
            std::vector<int> assign(m, 0);
            auto rec = [&](auto&& self, int pos) -> void {
                if (pos == m) {
                    ProductCell c;
                    c.factors = cube;
                    c.blocks.assign(k, {});
                    for (int i = 0; i < m; ++i) c.blocks[assign[i]].push_back(arrow_pos[i]);
                    for (const auto& b : c.blocks)
                        if (b.empty()) return;
                    if (static_cast<int>(cells.size()) <= k) cells.resize(k + 1);
                    cells[k].push_back(std::move(c));
                    return;
                }
                for (int b = 0; b < k; ++b) {
                    assign[pos] = b;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
        }
    };
    auto cube_rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            emit_cube();
            return;
        }
        for (int f = 0; f < V + E; ++f) {
            cube[pos] = f;
            self(self, pos + 1);
        }
    };
    if (n == 0) {
        cells.resize(1);
        cells[0].push_back(ProductCell{});
    } else {
        cube_rec(cube_rec, 0);
    }

    for (std::size_t k = 0; k < cells.size(); ++k) {
        for (const auto& c : cells[k]) {
            if (k == 0) {
                out.complex.add_vertex(product_cell_key(g, c));
            } else {
                std::vector<std::string> fk;
                for (int i = 0; i <= static_cast<int>(k); ++i)
                    fk.push_back(product_cell_key(g, product_face(g, c, i)));
                out.complex.add_cell(product_cell_key(g, c), fk);
            }
        }
    }

    // symmetric group generators on positions
    std::vector<std::vector<int>> gens;
    if (n >= 2) {
        std::vector<int> swap01(n), rot(n);
        for (int i = 0; i < n; ++i) {
            swap01[i] = i;
            rot[i] = (i + 1) % n;
        }
        std::swap(swap01[0], swap01[1]);
        gens.push_back(swap01);
        if (n > 2) gens.push_back(rot);
    }
    for (const auto& sigma : gens) {
        std::vector<std::vector<std::size_t>> perm(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
            perm[k].resize(cells[k].size());
            for (std::size_t idx = 0; idx < cells[k].size(); ++idx) {
                const ProductCell& c = cells[k][idx];
                ProductCell img;
                img.factors.resize(n);
                for (int p = 0; p < n; ++p) img.factors[sigma[p]] = c.factors[p];
                img.blocks.resize(c.blocks.size());
                for (std::size_t j = 0; j < c.blocks.size(); ++j) {
                    for (int p : c.blocks[j]) img.blocks[j].push_back(sigma[p]);
                    std::sort(img.blocks[j].begin(), img.blocks[j].end());
                }
                auto ref = out.complex.find(product_cell_key(g, img));
                if (!ref) throw error("internal: permuted cell missing");
                perm[k][idx] = ref->second;
            }
        }
        out.action.generators.push_back(std::move(perm));
    }
    return out;
}

struct SymQuotient {
    DeltaComplex complex;                          // orbits, keyed by symmetric cell keys
    std::vector<std::vector<std::string>> orbit_key;  // product cell -> orbit key
    ProductComplex product;
};

/// Quotient of the product complex by the symmetric group, each orbit
/// labelled by the occurrence counts of any member (they agree along
/// orbits). The labelling is the bijection onto sym_complex cells.
inline SymQuotient quotient_sym(const OrientedGraph& g, int n,
                                std::uint64_t max_cells = kDefaultMaxCells) {
    SymQuotient out;
    out.product = product_complex(g, n, max_cells);
    QuotientResult q = quotient(out.product.complex, out.product.action,
                                [&](int dim, std::size_t rep) {
                                    return sym_cell_key(
                                        g, occurrence_counts(g, out.product.cells[dim][rep]));
                                });
    out.complex = std::move(q.complex);
    out.orbit_key = std::move(q.orbit_key);
    return out;
}

/// The symmetric product of a tree is a simplicial complex for every n;
/// any cycle breaks simpliciality at some n.
inline bool simplicial_for_all_n(const OrientedGraph& g) { return is_tree(g); }

namespace detail {

inline std::vector<long long> weight_vector(const OrientedGraph& g, const VertexWeights& w) {
    std::vector<long long> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto it = w.find(g.vertex_name(v));
        if (it == w.end()) throw error("weights: missing vertex '" + g.vertex_name(v) + "'");
        out[v] = it->second;
    }
    return out;
}

}  // namespace detail

/// Full subgraph on the vertices of minimal weight, keeping the arrows with
/// both endpoints minimal.
inline OrientedGraph minimal_span(const OrientedGraph& g, const VertexWeights& w) {
    std::vector<long long> wv = detail::weight_vector(g, w);
    if (g.vertex_count() == 0) return g;
    long long lo = *std::min_element(wv.begin(), wv.end());
    OrientedGraph out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (wv[v] == lo) out.add_vertex(g.vertex_name(v));
    for (const auto& arrow : g.arrows())
        if (wv[arrow.src] == lo && wv[arrow.tgt] == lo)
            out.add_arrow(arrow.label, g.vertex_name(arrow.src), g.vertex_name(arrow.tgt));
    return out;
}

struct SkeletonResult {
    SymComplex skeleton;    // Sym^n of the minimal span
    OrientedGraph span;     // the minimal span itself
    long long min_weight = 0;
    /// Induced weight of every 0-cell of Sym^n(g): the sum of the n chosen
    /// vertex weights, keyed by the 0-cell's canonical key.
    std::map<std::string, long long> induced_weights;
};

/// Weight-minimal subcomplex: Sym^n of the minimal span, together with the
/// induced vertex weights on the full symmetric product.
inline SkeletonResult skeleton_complex(const OrientedGraph& g, const VertexWeights& w, int n,
                                       std::uint64_t max_cells = kDefaultMaxCells) {
    detail::require_nonempty(g, n);
    std::vector<long long> wv = detail::weight_vector(g, w);
    SkeletonResult out;
    out.span = minimal_span(g, w);
    out.min_weight =
        g.vertex_count() == 0 ? 0 : *std::min_element(wv.begin(), wv.end());
    out.skeleton = sym_complex(out.span, n, max_cells);

    // induced weights on the 0-cells of the full Sym^n(g)
    const int V = g.vertex_count();
    detail::check_budget(detail::binomial_sat(static_cast<std::uint64_t>(n) + V - 1,
                                              std::max(0, V - 1)),
                         max_cells, "induced weights");
    SymCell c;
    c.a.assign(V, 0);
    c.r.assign(g.arrow_count(), {});
    auto rec = [&](auto&& self, int v, int remaining) -> void {
        if (v == V) {
            if (remaining != 0) return;
            long long total = 0;
            for (int i = 0; i < V; ++i) total += wv[i] * c.a[i];
            out.induced_weights[sym_cell_key(g, c)] = total;
            return;
        }
        for (int val = 0; val <= remaining; ++val) {
            c.a[v] = val;
            self(self, v + 1, remaining - val);
        }
        c.a[v] = 0;
    };
    if (V > 0) rec(rec, 0, n);
    return out;
}

}  // namespace symgraph
