#pragma once

// Smith normal form over the integers. All arithmetic is arbitrary
// precision (GMP), so no intermediate value can overflow.
//
// Boundary matrices are extremely sparse with mostly unit entries, so the
// computation runs in two phases: first eliminate with +-1 pivots on sparse
// row maps (Markowitz-style pivot choice to limit fill-in), then run the
// classical minimum-entry algorithm on whatever small residual is left.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "symgraph/delta_complex.hpp"  // IntMatrix, error

namespace symgraph {

struct SmithResult {
    std::vector<mpz_class> factors;  // d_1 | d_2 | ..., all positive
    std::size_t rank = 0;            // == factors.size()
};

/// Sparse integer matrix in triplet form; duplicate positions accumulate.
struct SparseIntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> ri, ci;
    std::vector<long> v;

    void add(std::size_t r, std::size_t c, long value) {
        ri.push_back(r);
        ci.push_back(c);
        v.push_back(value);
    }
};

namespace detail {

// Classical SNF on a small dense matrix: bring the minimum-absolute-value
// entry to the pivot, reduce its row and column, restart on remainders, and
// fix up the divisibility chain at the end.
inline std::vector<mpz_class> dense_snf(std::vector<std::vector<mpz_class>> m) {
    std::vector<mpz_class> divs;
    std::size_t R = m.size(), C = R ? m[0].size() : 0;
    std::size_t r = 0, c = 0;
    while (r < R && c < C) {
        std::size_t pr = R, pc = C;
        for (std::size_t i = r; i < R; ++i)
            for (std::size_t j = c; j < C; ++j)
                if (m[i][j] != 0 &&
                    (pr == R || cmp(abs(m[i][j]), abs(m[pr][pc])) < 0)) {
                    pr = i;
                    pc = j;
                }
        if (pr == R) break;
        std::swap(m[r], m[pr]);
        for (std::size_t i = 0; i < R; ++i) std::swap(m[i][c], m[i][pc]);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (m[i][c] == 0) continue;
                mpz_class q = m[i][c] / m[r][c];
                for (std::size_t j = c; j < C; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) {
                    std::swap(m[r], m[i]);  // remainder becomes the new, smaller pivot
                    dirty = true;
                }
            }
            for (std::size_t j = c + 1; j < C; ++j) {
                if (m[r][j] == 0) continue;
                mpz_class q = m[r][j] / m[r][c];
                for (std::size_t i = r; i < R; ++i) m[i][j] -= q * m[i][c];
                if (m[r][j] != 0) {
                    for (std::size_t i = 0; i < R; ++i) std::swap(m[i][c], m[i][j]);
                    dirty = true;
                }
            }
        }
        divs.push_back(abs(m[r][c]));
        ++r;
        ++c;
    }
    // divisibility chain: d_i | d_j for i < j
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = i + 1; j < divs.size(); ++j) {
            mpz_class g = gcd(divs[i], divs[j]);
            mpz_class l = divs[i] / g * divs[j];
            divs[i] = g;
            divs[j] = l;
        }
    return divs;
}

}  // namespace detail

inline SmithResult smith_normal_form(const SparseIntMatrix& input) {
    // row-major sparse storage plus a column index of occupied rows
    std::vector<std::map<std::size_t, mpz_class>> row(input.rows);
    std::vector<std::set<std::size_t>> col(input.cols);
    for (std::size_t t = 0; t < input.v.size(); ++t) {
        if (input.v[t] == 0) continue;
        auto& cell = row[input.ri[t]][input.ci[t]];
        cell += input.v[t];
        if (cell == 0) row[input.ri[t]].erase(input.ci[t]);
    }
    for (std::size_t r = 0; r < input.rows; ++r)
        for (const auto& [c, val] : row[r]) col[c].insert(r);

    std::size_t units = 0;
    std::vector<bool> row_done(input.rows, false);
    // rows bucketed by fill, so pivot search starts from the sparsest; a row
    // with no unit entry is parked until an elimination touches it again
    std::map<std::size_t, std::set<std::size_t>> by_nnz;
    std::vector<bool> parked(input.rows, false);
    for (std::size_t r = 0; r < input.rows; ++r)
        if (!row[r].empty()) by_nnz[row[r].size()].insert(r);

    auto reshelve = [&](std::size_t r, std::size_t old_nnz) {
        if (old_nnz == row[r].size() && !parked[r]) return;
        if (old_nnz) {
            auto it = by_nnz.find(old_nnz);
            it->second.erase(r);
            if (it->second.empty()) by_nnz.erase(it);
        }
        if (!row[r].empty() && !row_done[r]) by_nnz[row[r].size()].insert(r);
        parked[r] = false;
    };
    auto erase_entry = [&](std::size_t r, std::size_t c) {
        row[r].erase(c);
        col[c].erase(r);
    };
    auto set_entry = [&](std::size_t r, std::size_t c, const mpz_class& val) {
        if (val == 0) {
            erase_entry(r, c);
            return;
        }
        row[r][c] = val;
        col[c].insert(r);
    };

    // Phase 1: unit pivots. Within the sparsest row holding a +-1 entry,
    // pick the one whose column is emptiest; deterministic throughout.
    while (true) {
        std::size_t pr = input.rows, pc = input.cols;
        auto bucket = by_nnz.begin();
        while (bucket != by_nnz.end() && pr == input.rows) {
            if (bucket->second.empty()) {
                bucket = by_nnz.erase(bucket);
                continue;
            }
            std::size_t r = *bucket->second.begin();
            std::size_t best_colfill = ~std::size_t(0);
            for (const auto& [c, val] : row[r]) {
                if (!(val == 1 || val == -1)) continue;
                if (col[c].size() < best_colfill) {
                    best_colfill = col[c].size();
                    pr = r;
                    pc = c;
                }
            }
            if (pr == input.rows) {  // unit-free row: park until touched again
                bucket->second.erase(r);
                parked[r] = true;
                if (bucket->second.empty()) bucket = by_nnz.erase(bucket);
            }
        }
        if (pr == input.rows) break;

        const mpz_class pivot = row[pr][pc];
        // clear column pc with row operations (exact: pivot is a unit)
        std::vector<std::size_t> other_rows(col[pc].begin(), col[pc].end());
        for (std::size_t r : other_rows) {
            if (r == pr) continue;
            std::size_t old_nnz = parked[r] ? 0 : row[r].size();
            mpz_class factor = row[r][pc] / pivot;
            for (const auto& [c, val] : row[pr]) {
                auto it = row[r].find(c);
                mpz_class nv = (it == row[r].end() ? mpz_class(0) : it->second) - factor * val;
                set_entry(r, c, nv);
            }
            reshelve(r, old_nnz);
        }
        // column operations clearing the pivot row now touch only the pivot
        // row itself, since column pc is zero elsewhere
        std::size_t pr_nnz = parked[pr] ? 0 : row[pr].size();
        std::vector<std::size_t> other_cols;
        for (const auto& [c, val] : row[pr])
            if (c != pc) other_cols.push_back(c);
        for (std::size_t c : other_cols) erase_entry(pr, c);
        erase_entry(pr, pc);
        row_done[pr] = true;
        reshelve(pr, pr_nnz);
        ++units;
    }

    // Phase 2: dense SNF of the residual.
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < input.rows; ++r)
        if (!row_done[r] && !row[r].empty()) live_rows.push_back(r);
    std::set<std::size_t> lc;
    for (std::size_t r : live_rows)
        for (const auto& [c, val] : row[r]) lc.insert(c);
    live_cols.assign(lc.begin(), lc.end());

    std::vector<mpz_class> residual_divs;
    if (!live_rows.empty()) {
        std::map<std::size_t, std::size_t> col_pos;
        for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
        std::vector<std::vector<mpz_class>> dense(live_rows.size(),
                                                  std::vector<mpz_class>(live_cols.size(), 0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, val] : row[live_rows[i]]) dense[i][col_pos[c]] = val;
        residual_divs = detail::dense_snf(std::move(dense));
    }

    SmithResult res;
    res.factors.assign(units, mpz_class(1));
    res.factors.insert(res.factors.end(), residual_divs.begin(), residual_divs.end());
    res.rank = res.factors.size();
    return res;
}

inline SmithResult smith_normal_form(const IntMatrix& m) {
    SparseIntMatrix sp;
    sp.rows = m.rows;
    sp.cols = m.cols;
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (m.at(r, c) != 0) sp.add(r, c, static_cast<long>(m.at(r, c)));
    return smith_normal_form(sp);
}

}  // namespace symgraph
