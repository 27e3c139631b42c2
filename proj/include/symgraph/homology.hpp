#pragma once

// Integral simplicial homology of a Delta-complex, unreduced: betti_0
// counts connected components. betti_k = f_k - rank d_k - rank d_{k+1};
// torsion in degree k collects the invariant factors > 1 of d_{k+1}.

#include <cstddef>
#include <map>
#include <thread>
#include <vector>

#include "symgraph/delta_complex.hpp"
#include "symgraph/smith.hpp"

namespace symgraph {

struct HomologyResult {
    std::vector<long long> betti;                 // degrees 0..top
    std::vector<std::vector<mpz_class>> torsion;  // invariant factors > 1 per degree
};

namespace detail {

inline SparseIntMatrix sparse_boundary(const DeltaComplex& dc, int k) {
    SparseIntMatrix m;
    m.rows = dc.size(k - 1);
    m.cols = dc.size(k);
    for (std::size_t c = 0; c < dc.size(k); ++c)
        for (int i = 0; i <= k; ++i) m.add(dc.face(k, c, i), c, i % 2 == 0 ? 1 : -1);
    return m;
}

}  // namespace detail

/// Homology of a validated complex. SNF runs for distinct degrees may be
/// spread over up to `threads` workers; the result does not depend on the
/// thread count.
inline HomologyResult homology(const DeltaComplex& dc, unsigned threads = 0) {
    const int top = dc.top_dimension();
    if (top < 0) throw error("homology of an empty complex");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    std::vector<SmithResult> snf(top + 1);  // snf[k] for boundary degree k >= 1
    if (threads <= 1 || top <= 1) {
        for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(detail::sparse_boundary(dc, k));
    } else {
        std::vector<std::thread> pool;
        unsigned workers = std::min<unsigned>(threads, top);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int k = 1 + static_cast<int>(w); k <= top; k += workers)
                    snf[k] = smith_normal_form(detail::sparse_boundary(dc, k));
            });
        for (auto& t : pool) t.join();
    }

    HomologyResult res;
    res.betti.resize(top + 1);
    res.torsion.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        long long rk = k >= 1 ? static_cast<long long>(snf[k].rank) : 0;
        long long rk1 = k + 1 <= top ? static_cast<long long>(snf[k + 1].rank) : 0;
        res.betti[k] = static_cast<long long>(dc.size(k)) - rk - rk1;
        if (k + 1 <= top)
            for (const auto& d : snf[k + 1].factors)
                if (d > 1) res.torsion[k].push_back(d);
    }
    return res;
}

/// Checks d_{k} o d_{k+1} = 0 for every k, multiplying the boundary
/// operators sparsely.
inline bool boundaries_compose_to_zero(const DeltaComplex& dc) {
    for (int k = 2; k <= dc.top_dimension(); ++k) {
        for (std::size_t c = 0; c < dc.size(k); ++c) {
            std::map<std::size_t, long long> acc;  // (k-2)-cell -> coefficient
            for (int i = 0; i <= k; ++i) {
                std::size_t f = dc.face(k, c, i);
                for (int j = 0; j <= k - 1; ++j)
                    acc[dc.face(k - 1, f, j)] += ((i + j) % 2 == 0 ? 1 : -1);
            }
            for (const auto& [cell, coeff] : acc)
                if (coeff != 0) return false;
        }
    }
    return true;
}

}  // namespace symgraph
