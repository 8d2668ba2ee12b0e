#pragma once

#include <vector>

#include "gorlab/matrix.hpp"

namespace gorlab {

// A linear subspace of k^n held in canonical form: basis rows in rref.
// Canonicity makes equality a literal comparison and every coset reduce to a
// unique representative, which downstream code (annihilators, socles,
// resolution normalization) relies on for determinism.
template <class F>
struct Subspace {
    using Elem = typename F::Elem;

    int ambient = 0;
    Mat<F> basis;             // rref rows, rank = dim
    std::vector<int> pivots;  // pivot column of each basis row

    static Subspace zero(int ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = Mat<F>(0, ambient);
        return s;
    }

    static Subspace span(const F& f, const Mat<F>& rows) {
        auto rr = rref(f, rows);
        Subspace s;
        s.ambient = rows.cols;
        s.pivots = rr.pivots;
        s.basis = Mat<F>(rr.rank, rows.cols);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = rr.m.at(i, j);
        return s;
    }

    int dim() const { return basis.rows; }

    // Unique coset representative: zero at every pivot column.
    std::vector<Elem> reduce(const F& f, std::vector<Elem> v) const {
        GORLAB_CHECK(static_cast<int>(v.size()) == ambient, "subspace reduce: length");
        for (int i = 0; i < basis.rows; ++i) {
            const Elem c = v[pivots[i]];
            if (f.is_zero(c)) continue;
            for (int j = 0; j < ambient; ++j) v[j] = f.sub(v[j], f.mul(c, basis.at(i, j)));
        }
        return v;
    }

    bool contains(const F& f, const std::vector<Elem>& v) const {
        auto r = reduce(f, v);
        for (const auto& e : r)
            if (!f.is_zero(e)) return false;
        return true;
    }

    bool contains(const F& f, const Subspace& other) const {
        for (int i = 0; i < other.basis.rows; ++i) {
            std::vector<Elem> v(other.basis.a.begin() + static_cast<size_t>(i) * ambient,
                                other.basis.a.begin() + static_cast<size_t>(i + 1) * ambient);
            if (!contains(f, v)) return false;
        }
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
};

template <class F>
Subspace<F> subspace_sum(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
    GORLAB_CHECK(a.ambient == b.ambient, "subspace sum: ambient mismatch");
    return Subspace<F>::span(f, vstack(a.basis, b.basis));
}

template <class F>
Subspace<F> subspace_intersect(const F& f, const Subspace<F>& a, const Subspace<F>& b) {
    GORLAB_CHECK(a.ambient == b.ambient, "subspace intersect: ambient mismatch");
    // lambda with lambda^T . [A; B] = 0 gives intersection vectors lambda_A^T A.
    Mat<F> stacked = vstack(a.basis, b.basis);
    Mat<F> ker = kernel_basis(f, stacked.transpose());
    Mat<F> vecs(ker.rows, a.ambient);
    for (int i = 0; i < ker.rows; ++i)
        for (int r = 0; r < a.basis.rows; ++r) {
            const auto& c = ker.at(i, r);
            if (f.is_zero(c)) continue;
            for (int j = 0; j < a.ambient; ++j)
                vecs.at(i, j) = f.add(vecs.at(i, j), f.mul(c, a.basis.at(r, j)));
        }
    return Subspace<F>::span(f, vecs);
}

} // namespace gorlab
