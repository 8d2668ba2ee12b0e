#pragma once

#include <optional>
#include <vector>

#include "gorlab/common.hpp"

namespace gorlab {

// Dense matrix over an exact field. Row-major storage.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(const F& f, int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw error("matrix product dimension mismatch");
    Mat<F> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (f.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = f.add(z.at(i, j), f.mul(xik, y.at(k, j)));
        }
    return z;
}

template <class F>
Mat<F> mat_add(const F& f, const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error("matrix sum dimension mismatch");
    Mat<F> z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = f.add(x.a[i], y.a[i]);
    return z;
}

template <class F>
Mat<F> mat_scale(const F& f, const typename F::Elem& c, const Mat<F>& x) {
    Mat<F> z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = f.mul(c, x.a[i]);
    return z;
}

template <class F>
bool mat_is_zero(const F& f, const Mat<F>& x) {
    for (const auto& e : x.a)
        if (!f.is_zero(e)) return false;
    return true;
}

// Stack y below x.
template <class F>
Mat<F> vstack(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.cols && x.rows != 0 && y.rows != 0) throw error("vstack width mismatch");
    int c = x.rows != 0 ? x.cols : y.cols;
    Mat<F> z(x.rows + y.rows, c);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < c; ++j) z.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < c; ++j) z.at(x.rows + i, j) = y.at(i, j);
    return z;
}

template <class F>
struct RrefResult {
    Mat<F> m;                 // reduced row echelon form
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

// Gauss-Jordan with deterministic pivoting: for each column, left to right,
// the first row (top to bottom) with a nonzero entry is the pivot.
template <class F>
RrefResult<F> rref(const F& f, Mat<F> m) {
    RrefResult<F> res;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto s = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto t = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

// Basis of { v : m v = 0 }, one row per basis vector, in the canonical form
// produced from the rref: one vector per free column, unit there.
template <class F>
Mat<F> kernel_basis(const F& f, const Mat<F>& m) {
    auto rr = rref(f, m);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    Mat<F> ker(m.cols - rr.rank, m.cols);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        ker.at(row, c) = f.one();
        for (int i = 0; i < rr.rank; ++i)
            ker.at(row, rr.pivots[i]) = f.neg(rr.m.at(i, c));
        ++row;
    }
    return ker;
}

// Solve m x = rhs. Returns the canonical solution (free coordinates zero),
// or nullopt when the system is inconsistent. Dimension mismatch throws.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, const Mat<F>& m,
                                                   const std::vector<typename F::Elem>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows) throw error("solve: rhs length mismatch");
    Mat<F> aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    auto rr = rref(f, aug);
    for (int i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] == m.cols) return std::nullopt;
    std::vector<typename F::Elem> x(m.cols, f.zero());
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.m.at(i, m.cols);
    return x;
}

template <class F>
std::vector<typename F::Elem> mat_apply(const F& f, const Mat<F>& m,
                                        const std::vector<typename F::Elem>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw error("apply: vector length mismatch");
    std::vector<typename F::Elem> out(m.rows, f.zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!f.is_zero(m.at(i, j))) out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
    return out;
}

} // namespace gorlab
