#pragma once

// JSON renditions of the wire-facing types. Keys are emitted in sorted
// order (nlohmann default), so serialized reports are byte-stable.

#include <string>

#include "json.hpp"
#include "symgraph/delta_complex.hpp"
#include "symgraph/expansion.hpp"
#include "symgraph/homology.hpp"
#include "symgraph/stability.hpp"
#include "symgraph/sym_product.hpp"

namespace symgraph {

using nlohmann::json;

/// `{"b": {vertex: int}, "s": {arrow: [int,...]}}`
inline json stratum_to_json(const OrientedGraph& g, const StratumIndex& idx) {
    json b = json::object(), s = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) b[g.vertex_name(v)] = idx.b[v];
    for (int a = 0; a < g.arrow_count(); ++a) s[g.arrow(a).label] = idx.s[a];
    return json{{"b", b}, {"s", s}};
}

/// A tuple as the list of its node names.
inline json tuple_to_json(const ExpandedGraph& ex, const TupleIndex& z) {
    json out = json::array();
    for (int node : z.nodes) out.push_back(ex.node_name(node));
    return out;
}

/// `{"cells": [[keys...] per dim], "faces": {key: [keys...]}}`
inline json complex_to_json(const DeltaComplex& dc) {
    json cells = json::array(), faces = json::object();
    for (int dim = 0; dim <= dc.top_dimension(); ++dim) {
        cells.push_back(dc.keys(dim));
        if (dim == 0) continue;
        for (std::size_t c = 0; c < dc.size(dim); ++c) {
            json fk = json::array();
            for (int i = 0; i <= dim; ++i) fk.push_back(dc.key(dim - 1, dc.face(dim, c, i)));
            faces[dc.key(dim, c)] = std::move(fk);
        }
    }
    return json{{"cells", cells}, {"faces", faces}};
}

inline json torsion_to_json(const std::vector<std::vector<mpz_class>>& torsion) {
    json out = json::array();
    for (const auto& degree : torsion) {
        json t = json::array();
        for (const auto& d : degree) {
            if (d.fits_ulong_p())
                t.push_back(d.get_ui());
            else
                t.push_back(d.get_str());  // decimal string when beyond 64 bits
        }
        out.push_back(std::move(t));
    }
    return out;
}

/// `{"betti": [...], "torsion": [[...] per degree]}`
inline json homology_to_json(const HomologyResult& h) {
    return json{{"betti", h.betti}, {"torsion", torsion_to_json(h.torsion)}};
}

}  // namespace symgraph
