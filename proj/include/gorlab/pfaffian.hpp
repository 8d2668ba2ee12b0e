#pragma once

#include <vector>

#include "gorlab/poly.hpp"

namespace gorlab {

// Square matrix with polynomial entries, row-major.
template <class F>
struct PolyMat {
    int n = 0;
    std::vector<Poly<F>> a;

    PolyMat() = default;
    explicit PolyMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
    Poly<F>& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Poly<F>& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

template <class F>
bool is_alternating(const PolyRing<F>& r, const PolyMat<F>& m) {
    for (int i = 0; i < m.n; ++i) {
        if (!m.at(i, i).is_zero()) return false;
        for (int j = i + 1; j < m.n; ++j)
            if (!(m.at(i, j) == r.neg(m.at(j, i)))) return false;
    }
    return true;
}

namespace detail {

// Pfaffian by expansion along the first live row:
//   pf(A) = sum_j (-1)^j a_{1j} pf(A with rows/cols 1, j removed),
// j the 1-based index inside the live set (so j = 2 carries +).
template <class F>
Poly<F> pfaffian_rec(const PolyRing<F>& r, const PolyMat<F>& m, std::vector<int> live) {
    if (live.empty()) return r.one();
    int first = live[0];
    Poly<F> acc = r.zero();
    for (size_t k = 1; k < live.size(); ++k) {
        const Poly<F>& entry = m.at(first, live[k]);
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (size_t t = 1; t < live.size(); ++t)
            if (t != k) rest.push_back(live[t]);
        Poly<F> sub = pfaffian_rec(r, m, std::move(rest));
        Poly<F> term = r.mul(entry, sub);
        if (k % 2 == 0) term = r.neg(term);  // (-1)^(k+1) with k the 0-based column index
        acc = r.add(acc, term);
    }
    return acc;
}

template <class F>
Poly<F> det_rec(const PolyRing<F>& r, const PolyMat<F>& m, std::vector<int> rows,
                std::vector<int> cols) {
    if (rows.empty()) return r.one();
    Poly<F> acc = r.zero();
    int row = rows[0];
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly<F>& entry = m.at(row, cols[k]);
        if (entry.is_zero()) continue;
        std::vector<int> subcols;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != k) subcols.push_back(cols[t]);
        Poly<F> term = r.mul(entry, det_rec(r, m, subrows, subcols));
        if (k % 2 == 1) term = r.neg(term);
        acc = r.add(acc, term);
    }
    return acc;
}

} // namespace detail

// Pfaffian of an even-size alternating submatrix picked out by `live`.
template <class F>
Poly<F> pfaffian(const PolyRing<F>& r, const PolyMat<F>& m, const std::vector<int>& live) {
    if (live.size() % 2 != 0) throw error("pfaffian needs an even index set");
    return detail::pfaffian_rec(r, m, live);
}

template <class F>
Poly<F> poly_det(const PolyRing<F>& r, const PolyMat<F>& m, const std::vector<int>& idx) {
    return detail::det_rec(r, m, idx, idx);
}

// The n sub-maximal pfaffians of an odd-size alternating matrix; generator i
// deletes row/column i and carries sign (-1)^i (0-based). Validates the input
// and, as a self-check, pf^2 = det on every even principal minor window.
template <class F>
std::vector<Poly<F>> pfaffian_ideal(const PolyRing<F>& r, const PolyMat<F>& m) {
    if (m.n % 2 != 1) throw error("pfaffian_ideal: matrix size must be odd");
    if (!is_alternating(r, m)) throw error("pfaffian_ideal: matrix is not alternating");
    std::vector<Poly<F>> gens;
    for (int i = 0; i < m.n; ++i) {
        std::vector<int> live;
        for (int j = 0; j < m.n; ++j)
            if (j != i) live.push_back(j);
        Poly<F> p = pfaffian(r, m, live);
        if (i % 2 == 1) p = r.neg(p);
        gens.push_back(std::move(p));
        // pf(A_live)^2 = det(A_live)
        Poly<F> pf2 = r.mul(gens.back(), gens.back());
        GORLAB_CHECK(pf2 == poly_det(r, m, live), "pfaffian square differs from determinant");
    }
    return gens;
}

} // namespace gorlab
