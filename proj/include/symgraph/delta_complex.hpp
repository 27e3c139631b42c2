#pragma once

// Generic Delta-complex: dimension-graded cells with ordered face maps d_i
// satisfying d_i d_j = d_{j-1} d_i for i < j. Cells are identified by opaque
// keys supplied by the builder; the container never interprets them.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symgraph/graph.hpp"  // symgraph::error

namespace symgraph {

class DeltaComplex {
public:
    /// Adds a 0-cell. Keys must be unique across the whole complex.
    void add_vertex(const std::string& key) { add_cell_impl(key, {}); }

    /// Adds a k-cell with its k+1 facets d_0..d_k, given by keys of
    /// already-added (k-1)-cells.
    void add_cell(const std::string& key, const std::vector<std::string>& face_keys) {
        if (face_keys.empty()) throw error("cell '" + key + "': a positive-dimensional cell needs faces");
        add_cell_impl(key, face_keys);
    }

    int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t size(int dim) const {
        return dim >= 0 && dim <= top_dimension() ? cells_[dim].size() : 0;
    }
    std::size_t total_cells() const {
        std::size_t t = 0;
        for (const auto& c : cells_) t += c.size();
        return t;
    }

    const std::string& key(int dim, std::size_t i) const { return cells_.at(dim).at(i); }
    const std::vector<std::string>& keys(int dim) const { return cells_.at(dim); }

    /// Index of d_i of the given cell, in dimension dim-1.
    std::size_t face(int dim, std::size_t cell, int i) const { return faces_.at(dim).at(cell).at(i); }
    const std::vector<std::size_t>& cell_faces(int dim, std::size_t cell) const {
        return faces_.at(dim).at(cell);
    }

    /// (dim, index) of a key, if present.
    std::optional<std::pair<int, std::size_t>> find(const std::string& key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void add_cell_impl(const std::string& key, const std::vector<std::string>& face_keys) {
        if (index_.count(key)) throw error("duplicate cell key '" + key + "'");
        int dim = face_keys.empty() ? 0 : static_cast<int>(face_keys.size()) - 1;
        if (static_cast<int>(cells_.size()) <= dim) {
            cells_.resize(dim + 1);
            faces_.resize(dim + 1);
        }
        std::vector<std::size_t> fs;
        fs.reserve(face_keys.size());
        for (const auto& fk : face_keys) {
            auto ref = find(fk);
            if (!ref || ref->first != dim - 1)
                throw error("cell '" + key + "': face '" + fk + "' is not a known " +
                            std::to_string(dim - 1) + "-cell");
            fs.push_back(ref->second);
        }
        index_.emplace(key, std::make_pair(dim, cells_[dim].size()));
        cells_[dim].push_back(key);
        faces_[dim].push_back(std::move(fs));
    }

    std::vector<std::vector<std::string>> cells_;
    std::vector<std::vector<std::vector<std::size_t>>> faces_;
    std::map<std::string, std::pair<int, std::size_t>> index_;
};

/// First violation of the semi-simplicial identity, if any.
struct Violation {
    int dim = 0;
    std::string cell;
    int i = 0, j = 0;
    std::string message;
};

/// Checks d_i d_j = d_{j-1} d_i for all i < j on every cell of dimension
/// >= 2. Face references are in-range by construction.
inline std::optional<Violation> validate(const DeltaComplex& dc) {
    for (int dim = 2; dim <= dc.top_dimension(); ++dim) {
        for (std::size_t c = 0; c < dc.size(dim); ++c) {
            for (int j = 1; j <= dim; ++j) {
                for (int i = 0; i < j; ++i) {
                    std::size_t lhs = dc.face(dim - 1, dc.face(dim, c, j), i);
                    std::size_t rhs = dc.face(dim - 1, dc.face(dim, c, i), j - 1);
                    if (lhs != rhs) {
                        Violation v;
                        v.dim = dim;
                        v.cell = dc.key(dim, c);
                        v.i = i;
                        v.j = j;
                        v.message = "cell '" + v.cell + "': d_" + std::to_string(i) + " d_" +
                                    std::to_string(j) + " != d_" + std::to_string(j - 1) + " d_" +
                                    std::to_string(i);
                        return v;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

inline std::vector<std::size_t> f_vector(const DeltaComplex& dc) {
    std::vector<std::size_t> f;
    for (int dim = 0; dim <= dc.top_dimension(); ++dim) f.push_back(dc.size(dim));
    return f;
}

inline long long euler_characteristic(const DeltaComplex& dc) {
    long long chi = 0;
    for (int dim = 0; dim <= dc.top_dimension(); ++dim)
        chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(dc.size(dim));
    return chi;
}

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    long long& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    long long at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Boundary operator in degree k: rows are (k-1)-cells, columns are k-cells,
/// entry(r, c) = sum of (-1)^i over the i with d_i(c) = r.
inline IntMatrix boundary_matrix(const DeltaComplex& dc, int k) {
    if (k < 1 || k > dc.top_dimension())
        throw error("boundary degree " + std::to_string(k) + " out of range");
    IntMatrix m(dc.size(k - 1), dc.size(k));
    for (std::size_t c = 0; c < dc.size(k); ++c)
        for (int i = 0; i <= k; ++i) m.at(dc.face(k, c, i), c) += (i % 2 == 0 ? 1 : -1);
    return m;
}

/// The ordered vertex list (v_0,...,v_k) of a cell, as 0-cell indices,
/// extracted by iterated face maps: v_j = d_0^j (d_{j+1} ... d_k).
inline std::vector<std::size_t> cell_vertices(const DeltaComplex& dc, int dim, std::size_t cell) {
    std::vector<std::size_t> out;
    out.reserve(dim + 1);
    for (int j = 0; j <= dim; ++j) {
        int d = dim;
        std::size_t c = cell;
        for (int i = dim; i > j; --i) c = dc.face(d--, c, i);
        for (int i = 0; i < j; ++i) c = dc.face(d--, c, 0);
        out.push_back(c);
    }
    return out;
}

/// A Delta-complex is simplicial when (a) each cell's vertices are pairwise
/// distinct and (b) no two distinct cells of one dimension share their
/// vertex set.
inline bool is_simplicial(const DeltaComplex& dc) {
    for (int dim = 1; dim <= dc.top_dimension(); ++dim) {
        std::map<std::vector<std::size_t>, std::size_t> seen;
        for (std::size_t c = 0; c < dc.size(dim); ++c) {
            std::vector<std::size_t> vs = cell_vertices(dc, dim, c);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
            auto [it, fresh] = seen.emplace(std::move(vs), c);
            if (!fresh) return false;
        }
    }
    return true;
}

/// The full subcomplex on a set of 0-cells: every cell all of whose vertices
/// lie in the given set, with its original keys.
inline DeltaComplex vertex_span(const DeltaComplex& dc, const std::vector<std::string>& vertex_keys) {
    std::vector<bool> allowed(dc.size(0), false);
    for (const auto& k : vertex_keys) {
        auto ref = dc.find(k);
        if (!ref || ref->first != 0) throw error("vertex span: unknown 0-cell '" + k + "'");
        allowed[ref->second] = true;
    }
    DeltaComplex out;
    // kept[dim][i] = true when the cell survives; faces of survivors survive
    // by downward closure of the vertex condition.
    for (int dim = 0; dim <= dc.top_dimension(); ++dim) {
        for (std::size_t c = 0; c < dc.size(dim); ++c) {
            bool keep = true;
            for (std::size_t v : cell_vertices(dc, dim, c))
                if (!allowed[v]) {
                    keep = false;
                    break;
                }
            if (!keep) continue;
            if (dim == 0) {
                out.add_vertex(dc.key(0, c));
            } else {
                std::vector<std::string> fk;
                for (int i = 0; i <= dim; ++i) fk.push_back(dc.key(dim - 1, dc.face(dim, c, i)));
                out.add_cell(dc.key(dim, c), fk);
            }
        }
    }
    return out;
}

/// A group action given by generator permutations of the cells; each
/// permutation must preserve dimension and commute with every face map.
struct CellAction {
    // generators[g][dim][cell] = image cell index in the same dimension
    std::vector<std::vector<std::vector<std::size_t>>> generators;
};

struct QuotientResult {
    DeltaComplex complex;
    /// orbit_key[dim][cell] = key of the orbit cell containing it.
    std::vector<std::vector<std::string>> orbit_key;
};

/// Quotient by the group generated by the action's permutations. Orbits are
/// closed under composition via union-find over the generator images; the
/// commuting precondition is re-verified and violations are reported with
/// the offending cell, generator and face index. Orbit keys default to the
/// key of the smallest member; pass `label` to override.
inline QuotientResult quotient(
    const DeltaComplex& dc, const CellAction& act,
    const std::function<std::string(int dim, std::size_t representative)>& label = {}) {
    const int top = dc.top_dimension();
    for (std::size_t gidx = 0; gidx < act.generators.size(); ++gidx) {
        const auto& gen = act.generators[gidx];
        if (static_cast<int>(gen.size()) != top + 1)
            throw error("cell action: generator " + std::to_string(gidx) +
                        " does not cover all dimensions");
        for (int dim = 0; dim <= top; ++dim)
            if (gen[dim].size() != dc.size(dim))
                throw error("cell action: generator " + std::to_string(gidx) +
                            " has wrong size in dimension " + std::to_string(dim));
        for (int dim = 1; dim <= top; ++dim)
            for (std::size_t c = 0; c < dc.size(dim); ++c)
                for (int i = 0; i <= dim; ++i)
                    if (dc.face(dim, gen[dim][c], i) != gen[dim - 1][dc.face(dim, c, i)])
                        throw error("cell action does not commute with d_" + std::to_string(i) +
                                    " at cell '" + dc.key(dim, c) + "' under generator " +
                                    std::to_string(gidx));
    }

    // union-find per dimension
    std::vector<std::vector<std::size_t>> parent(top + 1);
    for (int dim = 0; dim <= top; ++dim) {
        parent[dim].resize(dc.size(dim));
        std::iota(parent[dim].begin(), parent[dim].end(), 0);
    }
    auto find = [&](int dim, std::size_t x) {
        while (parent[dim][x] != x) x = parent[dim][x] = parent[dim][parent[dim][x]];
        return x;
    };
    auto unite = [&](int dim, std::size_t x, std::size_t y) {
        x = find(dim, x);
        y = find(dim, y);
        if (x == y) return;
        if (x > y) std::swap(x, y);  // keep the smallest index as root
        parent[dim][y] = x;
    };
    for (const auto& gen : act.generators)
        for (int dim = 0; dim <= top; ++dim)
            for (std::size_t c = 0; c < dc.size(dim); ++c) unite(dim, c, gen[dim][c]);

    QuotientResult res;
    res.orbit_key.resize(top + 1);
    for (int dim = 0; dim <= top; ++dim) {
        res.orbit_key[dim].resize(dc.size(dim));
        for (std::size_t c = 0; c < dc.size(dim); ++c) {
            std::size_t rep = find(dim, c);
            res.orbit_key[dim][c] =
                label ? label(dim, rep) : dc.key(dim, rep);
        }
        // orbit cells in order of their representative
        for (std::size_t c = 0; c < dc.size(dim); ++c) {
            if (find(dim, c) != c) continue;
            if (dim == 0) {
                res.complex.add_vertex(res.orbit_key[0][c]);
            } else {
                std::vector<std::string> fk;
                for (int i = 0; i <= dim; ++i)
                    fk.push_back(res.orbit_key[dim - 1][dc.face(dim, c, i)]);
                res.complex.add_cell(res.orbit_key[dim][c], fk);
            }
        }
    }
    return res;
}

}  // namespace symgraph
