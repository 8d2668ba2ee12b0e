#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "gorlab/artin.hpp"
#include "gorlab/graded.hpp"

namespace gorlab {

// ---------------------------------------------------------------------------
// Shared combinatorics for Koszul complexes: p-subsets of {0..n-1} in
// lexicographic order, the differential structure, and the wedge table.
// ---------------------------------------------------------------------------

struct KoszulShape {
    int n = 0;
    std::vector<std::vector<std::vector<int>>> level;  // level[p] = sorted p-subsets

    static KoszulShape make(int n) {
        KoszulShape s;
        s.n = n;
        s.level.resize(n + 1);
        for (int p = 0; p <= n; ++p) {
            std::vector<int> c(p);
            for (int i = 0; i < p; ++i) c[i] = i;
            while (true) {
                s.level[p].push_back(c);
                if (p == 0) break;
                int i = p - 1;
                while (i >= 0 && c[i] == n - p + i) --i;
                if (i < 0) break;
                ++c[i];
                for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
            }
        }
        return s;
    }

    int rank(int p) const {
        return (p >= 0 && p <= n) ? static_cast<int>(level[p].size()) : 0;
    }

    int index_of(int p, const std::vector<int>& s) const {
        for (size_t i = 0; i < level[p].size(); ++i)
            if (level[p][i] == s) return static_cast<int>(i);
        GORLAB_CHECK(false, "subset not found in wedge level");
        return -1;
    }

    // e_S ^ e_T: sign 0 when the subsets meet, else ±1 with *out the index of
    // the merged subset in level[|S|+|T|]
    int wedge(int p, int i, int q, int j, int* out) const {
        const auto& s = level[p][i];
        const auto& t = level[q][j];
        int inversions = 0;
        for (int a : s)
            for (int b : t) {
                if (a == b) return 0;
                if (a > b) ++inversions;
            }
        std::vector<int> merged = s;
        merged.insert(merged.end(), t.begin(), t.end());
        std::sort(merged.begin(), merged.end());
        *out = index_of(p + q, merged);
        return (inversions % 2 == 0) ? 1 : -1;
    }
};

// range info computed from homology; a complex with no homology at all gets
// the sentinel sup and the undefined-amplitude flag
struct AmpInfo {
    bool homology_zero = true;
    int sup = std::numeric_limits<int>::min();
    int inf = std::numeric_limits<int>::max();
    int amp = -1;
};

inline AmpInfo amp_from_dims(int lo, const std::vector<int>& hdims) {
    AmpInfo info;
    for (int k = 0; k < static_cast<int>(hdims.size()); ++k) {
        if (hdims[k] == 0) continue;
        info.homology_zero = false;
        info.sup = std::max(info.sup, lo + k);
        info.inf = std::min(info.inf, lo + k);
    }
    if (!info.homology_zero) info.amp = info.sup - info.inf;
    return info;
}

// ===========================================================================
// Finite-dimensional engine: complexes of free modules with table-algebra
// entries, realized as exact linear algebra for homology.
// ===========================================================================

template <class F>
struct AMat {
    int rows = 0, cols = 0;
    std::vector<typename FiniteLocalAlgebra<F>::Vec> ent;  // row-major

    static AMat zero(const FiniteLocalAlgebra<F>& A, int r, int c) {
        AMat m;
        m.rows = r;
        m.cols = c;
        m.ent.assign(static_cast<size_t>(r) * c, A.zero_vec());
        return m;
    }
    typename FiniteLocalAlgebra<F>::Vec& at(int r, int c) {
        return ent[static_cast<size_t>(r) * cols + c];
    }
    const typename FiniteLocalAlgebra<F>::Vec& at(int r, int c) const {
        return ent[static_cast<size_t>(r) * cols + c];
    }
};

template <class F>
AMat<F> amat_mul(const FiniteLocalAlgebra<F>& A, const AMat<F>& x, const AMat<F>& y) {
    GORLAB_CHECK(x.cols == y.rows, "entry-matrix product shape");
    AMat<F> out = AMat<F>::zero(A, x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            if (A.is_zero_vec(x.at(r, k))) continue;
            for (int c = 0; c < y.cols; ++c)
                out.at(r, c) = A.add(out.at(r, c), A.mul(x.at(r, k), y.at(k, c)));
        }
    return out;
}

template <class F>
bool amat_is_zero(const FiniteLocalAlgebra<F>& A, const AMat<F>& x) {
    for (const auto& e : x.ent)
        if (!A.is_zero_vec(e)) return false;
    return true;
}

template <class F>
AMat<F> amat_neg(const FiniteLocalAlgebra<F>& A, AMat<F> x) {
    auto minus_one = A.field.neg(A.field.one());
    for (auto& e : x.ent) e = A.scale(minus_one, e);
    return x;
}

// k-linear realization: entries become multiplication matrices on module
// coefficients M (use the regular module for free coefficients)
template <class F>
Mat<F> amat_realize(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M, const AMat<F>& x) {
    Mat<F> big(x.rows * M.n, x.cols * M.n);
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c) {
            if (A.is_zero_vec(x.at(r, c))) continue;
            Mat<F> blk = M.action_of(A, x.at(r, c));
            for (int u = 0; u < M.n; ++u)
                for (int v = 0; v < M.n; ++v) big.at(r * M.n + u, c * M.n + v) = blk.at(u, v);
        }
    return big;
}

// ---------------------------------------------------------------------------
// Bounded complexes of free modules. d[k] : C_{lo+k} -> C_{lo+k-1}; the lowest
// differential has zero rows. Out-of-range degrees are zero modules.
// ---------------------------------------------------------------------------

template <class F>
struct ChainComplexA {
    int lo = 0;
    std::vector<int> ranks;
    std::vector<AMat<F>> d;

    int len() const { return static_cast<int>(ranks.size()); }
    int hi() const { return lo + len() - 1; }
    int rank_at(int i) const {
        return (i >= lo && i <= hi()) ? ranks[i - lo] : 0;
    }
};

template <class F>
void verify_complex(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C) {
    GORLAB_CHECK(C.d.size() == C.ranks.size(), "complex shape: one differential per degree");
    for (int k = 0; k < C.len(); ++k) {
        GORLAB_CHECK(C.d[k].cols == C.ranks[k], "differential source rank");
        int target = (k == 0) ? 0 : C.ranks[k - 1];
        GORLAB_CHECK(C.d[k].rows == target, "differential target rank");
        if (k >= 1) GORLAB_CHECK(amat_is_zero(A, amat_mul(A, C.d[k - 1], C.d[k])),
                                 "differential does not square to zero");
    }
}

// the ring sitting in degree zero
template <class F>
ChainComplexA<F> ring_complex(const FiniteLocalAlgebra<F>& A) {
    ChainComplexA<F> C;
    C.lo = 0;
    C.ranks = {1};
    C.d = {AMat<F>::zero(A, 0, 1)};
    return C;
}

// ---------------------------------------------------------------------------
// Koszul complexes with their exterior multiplication.
// ---------------------------------------------------------------------------

template <class F>
struct KoszulComplexA {
    KoszulShape shape;
    std::vector<typename FiniteLocalAlgebra<F>::Vec> xs;
    ChainComplexA<F> cx;
};

template <class F>
KoszulComplexA<F> koszul(const FiniteLocalAlgebra<F>& A,
                         const std::vector<typename FiniteLocalAlgebra<F>::Vec>& xs) {
    for (const auto& x : xs)
        GORLAB_CHECK(!A.is_unit(x), "wedge sequence must lie in the maximal ideal");
    KoszulComplexA<F> K;
    K.shape = KoszulShape::make(static_cast<int>(xs.size()));
    K.xs = xs;
    K.cx.lo = 0;
    int n = K.shape.n;
    for (int p = 0; p <= n; ++p) K.cx.ranks.push_back(K.shape.rank(p));
    K.cx.d.push_back(AMat<F>::zero(A, 0, 1));
    for (int p = 1; p <= n; ++p) {
        AMat<F> dp = AMat<F>::zero(A, K.shape.rank(p - 1), K.shape.rank(p));
        for (int i = 0; i < K.shape.rank(p); ++i) {
            const auto& S = K.shape.level[p][i];
            for (int t = 0; t < p; ++t) {
                std::vector<int> rest;
                for (int u = 0; u < p; ++u)
                    if (u != t) rest.push_back(S[u]);
                int row = K.shape.index_of(p - 1, rest);
                auto coeff = xs[S[t]];
                if (t % 2 == 1) coeff = A.scale(A.field.neg(A.field.one()), coeff);
                dp.at(row, i) = A.add(dp.at(row, i), coeff);
            }
        }
        K.cx.d.push_back(std::move(dp));
    }
    verify_complex(A, K.cx);
    return K;
}

// multiplication laws on every pair of basis wedges: strict graded
// commutativity and the Leibniz rule against the differential
template <class F>
void verify_koszul_multiplication(const FiniteLocalAlgebra<F>& A, const KoszulComplexA<F>& K) {
    const auto& sh = K.shape;
    int n = sh.n;
    auto one = A.field.one();
    auto minus_one = A.field.neg(one);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n - p; ++q)
            for (int i = 0; i < sh.rank(p); ++i)
                for (int j = 0; j < sh.rank(q); ++j) {
                    int m1 = -1, m2 = -1;
                    int s1 = sh.wedge(p, i, q, j, &m1);
                    int s2 = sh.wedge(q, j, p, i, &m2);
                    // graded commutativity on the table itself
                    int expect = (p * q % 2 == 0) ? s2 : -s2;
                    GORLAB_CHECK(s1 == expect && (s1 == 0 || m1 == m2),
                                 "wedge table is not graded-commutative");
                    if (p + q == 0) continue;

                    // d(e_S ^ e_T) as coefficients in level p+q-1
                    int low = sh.rank(p + q - 1);
                    std::vector<typename FiniteLocalAlgebra<F>::Vec> lhs(low, A.zero_vec());
                    if (s1 != 0) {
                        const auto& dcol = K.cx.d[p + q];
                        auto sgn = (s1 == 1) ? one : minus_one;
                        for (int r = 0; r < low; ++r) lhs[r] = A.scale(sgn, dcol.at(r, m1));
                    }

                    // d(e_S) ^ e_T + (-1)^p e_S ^ d(e_T)
                    std::vector<typename FiniteLocalAlgebra<F>::Vec> rhs(low, A.zero_vec());
                    if (p >= 1) {
                        const auto& dS = K.cx.d[p];
                        for (int r = 0; r < sh.rank(p - 1); ++r) {
                            if (A.is_zero_vec(dS.at(r, i))) continue;
                            int m = -1;
                            int s = sh.wedge(p - 1, r, q, j, &m);
                            if (s == 0) continue;
                            auto c = (s == 1) ? dS.at(r, i)
                                              : A.scale(minus_one, dS.at(r, i));
                            rhs[m] = A.add(rhs[m], c);
                        }
                    }
                    if (q >= 1) {
                        const auto& dT = K.cx.d[q];
                        for (int r = 0; r < sh.rank(q - 1); ++r) {
                            if (A.is_zero_vec(dT.at(r, j))) continue;
                            int m = -1;
                            int s = sh.wedge(p, i, q - 1, r, &m);
                            if (s == 0) continue;
                            int total = ((p % 2) + (1 - s) / 2) % 2;  // (-1)^p * s
                            auto c = (total == 0) ? dT.at(r, j)
                                                  : A.scale(minus_one, dT.at(r, j));
                            rhs[m] = A.add(rhs[m], c);
                        }
                    }
                    for (int r = 0; r < low; ++r)
                        GORLAB_CHECK(lhs[r] == rhs[r], "Leibniz rule fails on a basis pair");
                }
}

// ---------------------------------------------------------------------------
// Homology via the k-linear realization.
// ---------------------------------------------------------------------------

template <class F>
struct LinearComplex {
    int lo = 0;
    std::vector<int> dims;
    std::vector<Mat<F>> d;  // d[k] : V_{lo+k} -> V_{lo+k-1}
};

// realize with coefficients in M: the complex M (x) C
template <class F>
LinearComplex<F> module_complex(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M,
                                const ChainComplexA<F>& C) {
    LinearComplex<F> L;
    L.lo = C.lo;
    for (int k = 0; k < C.len(); ++k) {
        L.dims.push_back(C.ranks[k] * M.n);
        L.d.push_back(amat_realize(A, M, C.d[k]));
    }
    return L;
}

template <class F>
LinearComplex<F> realize_complex(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C) {
    return module_complex(A, regular_module(A), C);
}

template <class F>
std::vector<int> homology_dims(const F& f, const LinearComplex<F>& L) {
    std::vector<int> out;
    for (size_t k = 0; k < L.dims.size(); ++k) {
        int cycles = L.dims[k] - rref(f, L.d[k]).rank;
        int boundaries = (k + 1 < L.d.size()) ? rref(f, L.d[k + 1]).rank : 0;
        out.push_back(cycles - boundaries);
    }
    return out;
}

template <class F>
AmpInfo amp_info(const F& f, const LinearComplex<F>& L) {
    return amp_from_dims(L.lo, homology_dims(f, L));
}

template <class F>
AmpInfo sup_inf_amp(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C) {
    return amp_info(A.field, realize_complex(A, C));
}

// homology in degree i of a free complex, with its module structure
template <class F>
Subquotient<F> homology_module(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C,
                               int i) {
    if (i < C.lo || i > C.hi()) {
        Subquotient<F> empty;
        empty.reduced = Subspace<F>::zero(0);
        empty.module.n = 0;
        empty.module.act.assign(A.dim, Mat<F>(0, 0));
        return empty;
    }
    int k = i - C.lo;
    auto reg = regular_module(A);
    int ambient = C.ranks[k] * A.dim;
    Subspace<F> cycles =
        Subspace<F>::span(A.field, kernel_basis(A.field, amat_realize(A, reg, C.d[k])));
    Subspace<F> boundaries = Subspace<F>::zero(ambient);
    if (k + 1 < C.len())
        boundaries =
            Subspace<F>::span(A.field, amat_realize(A, reg, C.d[k + 1]).transpose());
    return fg_subquotient(A, C.ranks[k], cycles, boundaries);
}

// homology with coefficients in M (terms M^{rank}); module structure included
template <class F>
Subquotient<F> homology_module_coeff(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M,
                                     const ChainComplexA<F>& C, int i) {
    if (i < C.lo || i > C.hi()) {
        Subquotient<F> empty;
        empty.reduced = Subspace<F>::zero(0);
        empty.module.n = 0;
        empty.module.act.assign(A.dim, Mat<F>(0, 0));
        return empty;
    }
    int k = i - C.lo;
    int ambient = C.ranks[k] * M.n;
    Subspace<F> cycles =
        Subspace<F>::span(A.field, kernel_basis(A.field, amat_realize(A, M, C.d[k])));
    Subspace<F> boundaries = Subspace<F>::zero(ambient);
    if (k + 1 < C.len())
        boundaries = Subspace<F>::span(A.field, amat_realize(A, M, C.d[k + 1]).transpose());
    return fg_subquotient_over(A, module_power(A, M, C.ranks[k]), cycles, boundaries);
}

// ---------------------------------------------------------------------------
// Hom into a complex: Hom(M, C)_i = Hom(M, C_i) = Hom(M,A)^{rank_i}, with the
// differential given by postcomposition (the source sits in degree zero, so
// d(f) = d o f carries no sign).
// ---------------------------------------------------------------------------

// Hom_A(M, A) with its natural module structure, keeping the underlying
// subspace of flattened maps (column j of a map lives at entries j*dim..)
template <class F>
Subquotient<F> hom_module_sq(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M) {
    // unknown phi: M.n columns phi_j in A, flattened j*dim + u;
    // conditions: phi(b_i m_j) = b_i phi(m_j) for all i, j
    int unknowns = M.n * A.dim;
    Mat<F> cnd(A.dim * M.n * A.dim, unknowns);
    int row = 0;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < M.n; ++j)
            for (int u = 0; u < A.dim; ++u) {
                for (int jp = 0; jp < M.n; ++jp)
                    cnd.at(row, jp * A.dim + u) =
                        A.field.add(cnd.at(row, jp * A.dim + u), M.act[i].at(jp, j));
                for (int up = 0; up < A.dim; ++up)
                    cnd.at(row, j * A.dim + up) = A.field.sub(cnd.at(row, j * A.dim + up),
                                                              A.lmul[i].at(u, up));
                ++row;
            }
    auto homs = Subspace<F>::span(A.field, kernel_basis(A.field, cnd));
    return fg_subquotient(A, M.n, homs, Subspace<F>::zero(unknowns));
}

template <class F>
FGModule<F> hom_module(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M) {
    return hom_module_sq(A, M).module;
}

template <class F>
LinearComplex<F> hom_complex(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M,
                             const ChainComplexA<F>& C) {
    return module_complex(A, hom_module(A, M), C);
}

// ---------------------------------------------------------------------------
// Shift, chain maps, cones, tensor products.
// ---------------------------------------------------------------------------

template <class F>
ChainComplexA<F> shift(const FiniteLocalAlgebra<F>& A, ChainComplexA<F> C, int nsteps) {
    C.lo += nsteps;
    if (nsteps % 2 != 0)
        for (auto& m : C.d) m = amat_neg(A, m);
    return C;
}

template <class F>
struct ChainMapA {
    // comp[k] : C_{C.lo+k} -> D_{C.lo+k}; degrees of C outside the list map by 0
    std::vector<AMat<F>> comp;
};

template <class F>
void verify_chain_map(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C,
                      const ChainComplexA<F>& D, const ChainMapA<F>& f) {
    GORLAB_CHECK(C.lo == D.lo && C.len() == D.len() &&
                     static_cast<int>(f.comp.size()) == C.len(),
                 "chain map shape");
    for (int k = 0; k < C.len(); ++k) {
        GORLAB_CHECK(f.comp[k].cols == C.ranks[k] && f.comp[k].rows == D.ranks[k],
                     "chain map component shape");
        if (k == 0) continue;
        auto left = amat_mul(A, f.comp[k - 1], C.d[k]);
        auto right = amat_mul(A, D.d[k], f.comp[k]);
        for (size_t t = 0; t < left.ent.size(); ++t)
            GORLAB_CHECK(left.ent[t] == right.ent[t], "chain map does not commute with d");
    }
}

// cone of f : C -> D. Degree i carries D_i then C_{i-1}; d(y, x) = (dy + fx, -dx).
template <class F>
ChainComplexA<F> cone(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C,
                      const ChainComplexA<F>& D, const ChainMapA<F>& f) {
    verify_chain_map(A, C, D, f);
    ChainComplexA<F> E;
    E.lo = C.lo;  // = D.lo; C-part shifted up by one ends at hi()+1
    int len = C.len() + 1;
    for (int k = 0; k < len; ++k)
        E.ranks.push_back(D.rank_at(E.lo + k) + C.rank_at(E.lo + k - 1));
    for (int k = 0; k < len; ++k) {
        int i = E.lo + k;
        AMat<F> dk = AMat<F>::zero(A, (k == 0) ? 0 : E.ranks[k - 1], E.ranks[k]);
        int dr = D.rank_at(i), cr = C.rank_at(i - 1);
        int drow = (k == 0) ? 0 : D.rank_at(i - 1);
        if (k >= 1) {
            if (dr > 0 && drow > 0) {
                const auto& dd = D.d[i - D.lo];
                for (int r = 0; r < drow; ++r)
                    for (int c = 0; c < dr; ++c) dk.at(r, c) = dd.at(r, c);
            }
            if (cr > 0 && drow > 0) {
                const auto& fc = f.comp[i - 1 - C.lo];
                for (int r = 0; r < drow; ++r)
                    for (int c = 0; c < cr; ++c) dk.at(r, dr + c) = fc.at(r, c);
            }
            int crow = C.rank_at(i - 2);
            if (cr > 0 && crow > 0) {
                auto cd = amat_neg(A, C.d[i - 1 - C.lo]);
                for (int r = 0; r < crow; ++r)
                    for (int c = 0; c < cr; ++c) dk.at(drow + r, dr + c) = cd.at(r, c);
            }
        }
        E.d.push_back(std::move(dk));
    }
    verify_complex(A, E);
    return E;
}

// multiplication by a ring element as a chain self-map
template <class F>
ChainMapA<F> mult_chain_map(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C,
                            const typename FiniteLocalAlgebra<F>::Vec& x) {
    ChainMapA<F> f;
    for (int k = 0; k < C.len(); ++k) {
        AMat<F> m = AMat<F>::zero(A, C.ranks[k], C.ranks[k]);
        for (int r = 0; r < C.ranks[k]; ++r) m.at(r, r) = x;
        f.comp.push_back(std::move(m));
    }
    return f;
}

// the complex C with x killed in degree-zero homology: cone of multiplication
// by (a lift of) x. The degree-zero homology drops to H_0(C)/x H_0(C), which
// is re-verified on every construction.
template <class F>
ChainComplexA<F> koszul_object(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C,
                               const typename FiniteLocalAlgebra<F>::Vec& x) {
    GORLAB_CHECK(!A.is_unit(x), "killing a unit collapses the complex");
    auto E = cone(A, C, C, mult_chain_map(A, C, x));
    auto h0 = homology_module(A, C, C.lo);
    auto xact = h0.module.action_of(A, x);
    int expected = h0.module.n - rref(A.field, xact).rank;
    auto e0 = homology_module(A, E, E.lo);
    GORLAB_CHECK(e0.module.n == expected,
                 "degree-zero homology of the cone is not the expected quotient");
    return E;
}

// tensor product: degree i is the direct sum of C_p (x) D_{i-p}, p ascending;
// d(c (x) e) = dc (x) e + (-1)^p c (x) de
template <class F>
ChainComplexA<F> tensor(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C,
                        const ChainComplexA<F>& D) {
    ChainComplexA<F> E;
    E.lo = C.lo + D.lo;
    int ehi = C.hi() + D.hi();
    auto block_offset = [&](int i, int p) {
        int off = 0;
        for (int pp = C.lo; pp < p; ++pp) off += C.rank_at(pp) * D.rank_at(i - pp);
        return off;
    };
    for (int i = E.lo; i <= ehi; ++i) {
        int rank = 0;
        for (int p = C.lo; p <= C.hi(); ++p) rank += C.rank_at(p) * D.rank_at(i - p);
        E.ranks.push_back(rank);
    }
    for (int i = E.lo; i <= ehi; ++i) {
        int k = i - E.lo;
        AMat<F> dk = AMat<F>::zero(A, (k == 0) ? 0 : E.ranks[k - 1], E.ranks[k]);
        if (k >= 1) {
            for (int p = C.lo; p <= C.hi(); ++p) {
                int q = i - p;
                int cr = C.rank_at(p), dr = D.rank_at(q);
                if (cr == 0 || dr == 0) continue;
                int src = block_offset(i, p);
                // d_C (x) id lands in block (p-1, q)
                if (C.rank_at(p - 1) > 0) {
                    int dst = block_offset(i - 1, p - 1);
                    const auto& dc = C.d[p - C.lo];
                    for (int a = 0; a < C.rank_at(p - 1); ++a)
                        for (int c = 0; c < cr; ++c) {
                            if (A.is_zero_vec(dc.at(a, c))) continue;
                            for (int b = 0; b < dr; ++b)
                                dk.at(dst + a * dr + b, src + c * dr + b) = dc.at(a, c);
                        }
                }
                // (-1)^p id (x) d_D lands in block (p, q-1)
                if (D.rank_at(q - 1) > 0) {
                    int dst = block_offset(i - 1, p);
                    const auto& dd = D.d[q - D.lo];
                    bool flip = (p % 2 != 0);
                    for (int b2 = 0; b2 < D.rank_at(q - 1); ++b2)
                        for (int b = 0; b < dr; ++b) {
                            if (A.is_zero_vec(dd.at(b2, b))) continue;
                            auto e = dd.at(b2, b);
                            if (flip) e = A.scale(A.field.neg(A.field.one()), e);
                            for (int c = 0; c < cr; ++c)
                                dk.at(dst + c * D.rank_at(q - 1) + b2, src + c * dr + b) = e;
                        }
                }
            }
        }
        E.d.push_back(std::move(dk));
    }
    verify_complex(A, E);
    return E;
}

// alternating sum of ranks; for free complexes this equals the alternating
// sum of homology dimensions
template <class F>
long long euler_characteristic(const FiniteLocalAlgebra<F>& A, const ChainComplexA<F>& C) {
    long long chi = 0;
    for (int k = 0; k < C.len(); ++k) {
        long long term = static_cast<long long>(C.ranks[k]) * A.dim;
        chi += ((C.lo + k) % 2 == 0) ? term : -term;
    }
    return chi;
}

// ===========================================================================
// Graded engine: complexes of free modules with polynomial entries; homology
// as module presentations obtained from syzygies.
// ===========================================================================

template <class F>
struct PMat {
    int rows = 0, cols = 0;
    std::vector<Poly<F>> ent;  // row-major

    static PMat zero(const PolyRing<F>& r, int rr, int cc) {
        PMat m;
        m.rows = rr;
        m.cols = cc;
        m.ent.assign(static_cast<size_t>(rr) * cc, r.zero());
        return m;
    }
    Poly<F>& at(int r, int c) { return ent[static_cast<size_t>(r) * cols + c]; }
    const Poly<F>& at(int r, int c) const { return ent[static_cast<size_t>(r) * cols + c]; }
};

template <class F>
struct ChainComplexG {
    int lo = 0;
    std::vector<int> ranks;
    std::vector<PMat<F>> d;

    int len() const { return static_cast<int>(ranks.size()); }
    int hi() const { return lo + len() - 1; }
    int rank_at(int i) const { return (i >= lo && i <= hi()) ? ranks[i - lo] : 0; }
};

template <class F>
void verify_complex_g(const GradedRing<F>& R, const ChainComplexG<F>& C) {
    GORLAB_CHECK(C.d.size() == C.ranks.size(), "complex shape: one differential per degree");
    for (int k = 0; k < C.len(); ++k) {
        GORLAB_CHECK(C.d[k].cols == C.ranks[k], "differential source rank");
        int target = (k == 0) ? 0 : C.ranks[k - 1];
        GORLAB_CHECK(C.d[k].rows == target, "differential target rank");
        if (k < 1) continue;
        for (int r = 0; r < C.d[k - 1].rows; ++r)
            for (int c = 0; c < C.d[k].cols; ++c) {
                Poly<F> acc = R.ring.zero();
                for (int m = 0; m < C.d[k].rows; ++m)
                    acc = R.ring.add(acc, R.ring.mul(C.d[k - 1].at(r, m), C.d[k].at(m, c)));
                GORLAB_CHECK(R.nf(acc).is_zero(), "differential does not square to zero");
            }
    }
}

template <class F>
struct KoszulComplexG {
    KoszulShape shape;
    std::vector<Poly<F>> xs;
    ChainComplexG<F> cx;
};

template <class F>
KoszulComplexG<F> koszul_g(const GradedRing<F>& R, const std::vector<Poly<F>>& xs) {
    for (const auto& x : xs)
        GORLAB_CHECK(R.ring.field.is_zero(R.ring.constant_coeff(R.nf(x))),
                     "wedge sequence must lie in the maximal ideal");
    KoszulComplexG<F> K;
    K.shape = KoszulShape::make(static_cast<int>(xs.size()));
    K.xs = xs;
    K.cx.lo = 0;
    int n = K.shape.n;
    for (int p = 0; p <= n; ++p) K.cx.ranks.push_back(K.shape.rank(p));
    K.cx.d.push_back(PMat<F>::zero(R.ring, 0, 1));
    for (int p = 1; p <= n; ++p) {
        PMat<F> dp = PMat<F>::zero(R.ring, K.shape.rank(p - 1), K.shape.rank(p));
        for (int i = 0; i < K.shape.rank(p); ++i) {
            const auto& S = K.shape.level[p][i];
            for (int t = 0; t < p; ++t) {
                std::vector<int> rest;
                for (int u = 0; u < p; ++u)
                    if (u != t) rest.push_back(S[u]);
                int row = K.shape.index_of(p - 1, rest);
                Poly<F> coeff = xs[S[t]];
                if (t % 2 == 1) coeff = R.ring.neg(coeff);
                dp.at(row, i) = R.ring.add(dp.at(row, i), coeff);
            }
        }
        K.cx.d.push_back(std::move(dp));
    }
    verify_complex_g(R, K.cx);
    return K;
}

namespace detail {

template <class F>
std::vector<VecPoly<F>> pmat_columns(const GradedRing<F>&, const PMat<F>& m) {
    std::vector<VecPoly<F>> cols;
    for (int c = 0; c < m.cols; ++c) {
        VecPoly<F> v(m.rows);
        for (int r = 0; r < m.rows; ++r) v.c[r] = m.at(r, c);
        cols.push_back(std::move(v));
    }
    return cols;
}

template <class F>
std::vector<VecPoly<F>> unit_vectors(const GradedRing<F>& R, int rank) {
    std::vector<VecPoly<F>> out;
    for (int i = 0; i < rank; ++i) {
        VecPoly<F> v(rank);
        v.c[i] = R.ring.one();
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

// homology in degree i of a complex of free modules, as a presentation
template <class F>
SubquotientPresentation<F> homology_g(const GradedRing<F>& R, const ChainComplexG<F>& C,
                                      int i) {
    if (i < C.lo || i > C.hi()) {
        SubquotientPresentation<F> zero;
        zero.module.rank = 0;
        return zero;
    }
    int k = i - C.lo;
    std::vector<VecPoly<F>> cycles;
    if (k == 0)
        cycles = detail::unit_vectors(R, C.ranks[0]);
    else
        cycles = kernel_of_free_map(R, C.ranks[k - 1], detail::pmat_columns(R, C.d[k]));
    std::vector<VecPoly<F>> boundaries;
    if (k + 1 < C.len()) boundaries = detail::pmat_columns(R, C.d[k + 1]);
    return present_subquotient(R, C.ranks[k], cycles, boundaries);
}

template <class F>
AmpInfo amp_info_g(const GradedRing<F>& R, const ChainComplexG<F>& C) {
    std::vector<int> nz;
    for (int k = 0; k < C.len(); ++k)
        nz.push_back(module_is_zero(R, homology_g(R, C, C.lo + k).module) ? 0 : 1);
    return amp_from_dims(C.lo, nz);
}

namespace detail {

// lift of the entry matrix acting on M^{cols} -> M^{rows}: block (r,c) is
// ent(r,c) times the identity on M's generator coordinates
template <class F>
std::vector<VecPoly<F>> lifted_columns(const GradedRing<F>&, const PMat<F>& m, int s) {
    std::vector<VecPoly<F>> cols;
    for (int c = 0; c < m.cols; ++c)
        for (int j = 0; j < s; ++j) {
            VecPoly<F> v(m.rows * s);
            for (int r = 0; r < m.rows; ++r) v.c[r * s + j] = m.at(r, c);
            cols.push_back(std::move(v));
        }
    return cols;
}

// relations of M placed in every block of M^{copies}
template <class F>
std::vector<VecPoly<F>> block_relations(const GradedRing<F>&,
                                        const PresentedModule<F>& M, int copies) {
    std::vector<VecPoly<F>> out;
    for (int b = 0; b < copies; ++b)
        for (const auto& rel : M.rels) {
            VecPoly<F> v(copies * M.rank);
            for (int j = 0; j < M.rank; ++j) v.c[b * M.rank + j] = rel.c[j];
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace detail

// homology in degree i of M (x) C for a presented module M and free complex C
template <class F>
SubquotientPresentation<F> tensor_homology_g(const GradedRing<F>& R,
                                             const PresentedModule<F>& M,
                                             const ChainComplexG<F>& C, int i) {
    if (i < C.lo || i > C.hi()) {
        SubquotientPresentation<F> zero;
        zero.module.rank = 0;
        return zero;
    }
    int k = i - C.lo;
    int s = M.rank;
    int a = C.ranks[k];
    std::vector<VecPoly<F>> cycles;
    if (k == 0 || C.ranks[k - 1] == 0)
        cycles = detail::unit_vectors(R, s * a);
    else {
        int b = C.ranks[k - 1];
        Submodule<F> target{s * b, detail::block_relations(R, M, b)};
        cycles = preimage_of_submodule(R, s * b, detail::lifted_columns(R, C.d[k], s), target);
    }
    auto rels_here = detail::block_relations(R, M, a);
    std::vector<VecPoly<F>> numerator = cycles;
    numerator.insert(numerator.end(), rels_here.begin(), rels_here.end());
    std::vector<VecPoly<F>> denominator = rels_here;
    if (k + 1 < C.len()) {
        auto img = detail::lifted_columns(R, C.d[k + 1], s);
        denominator.insert(denominator.end(), img.begin(), img.end());
    }
    return present_subquotient(R, s * a, numerator, denominator);
}

template <class F>
AmpInfo tensor_amp_info_g(const GradedRing<F>& R, const PresentedModule<F>& M,
                          const ChainComplexG<F>& C) {
    std::vector<int> nz;
    for (int k = 0; k < C.len(); ++k)
        nz.push_back(module_is_zero(R, tensor_homology_g(R, M, C, C.lo + k).module) ? 0 : 1);
    return amp_from_dims(C.lo, nz);
}

// homology in degree i of Hom(M, C) for presented M and free C: terms are
// Hom(M, A^{rank_i}), flattened with target coordinate major (u*rank + j)
template <class F>
SubquotientPresentation<F> hom_homology_g(const GradedRing<F>& R, const PresentedModule<F>& M,
                                          const ChainComplexG<F>& C, int i) {
    if (i < C.lo || i > C.hi()) {
        SubquotientPresentation<F> zero;
        zero.module.rank = 0;
        return zero;
    }
    int k = i - C.lo;
    int r = M.rank;
    auto homs_here = hom_into_free(R, M, C.ranks[k]);

    // postcompose a flattened hom with the entry matrix m
    auto push = [&](const PMat<F>& m, const VecPoly<F>& phi) {
        VecPoly<F> out(m.rows * r);
        for (int u2 = 0; u2 < m.rows; ++u2)
            for (int j = 0; j < r; ++j) {
                Poly<F> acc = R.ring.zero();
                for (int u = 0; u < m.cols; ++u)
                    acc = R.ring.add(acc, R.ring.mul(m.at(u2, u), phi.c[u * r + j]));
                out.c[u2 * r + j] = R.nf(acc);
            }
        return out;
    };

    std::vector<VecPoly<F>> cycles;
    if (k == 0 || C.ranks[k - 1] == 0)
        cycles = homs_here.gens;
    else {
        std::vector<VecPoly<F>> images;
        for (const auto& g : homs_here.gens) images.push_back(push(C.d[k], g));
        Submodule<F> img{C.ranks[k - 1] * r, images};
        auto coeffs = syzygies_over(R, img);
        for (const auto& cf : coeffs) {
            VecPoly<F> z(C.ranks[k] * r);
            for (size_t g = 0; g < homs_here.gens.size(); ++g)
                for (int t = 0; t < z.rank(); ++t)
                    z.c[t] = R.ring.add(z.c[t],
                                        R.ring.mul(cf.c[static_cast<int>(g)],
                                                   homs_here.gens[g].c[t]));
            z = R.nf_vec(z);
            cycles.push_back(std::move(z));
        }
    }
    std::vector<VecPoly<F>> boundaries;
    if (k + 1 < C.len() && C.ranks[k + 1] > 0) {
        auto homs_above = hom_into_free(R, M, C.ranks[k + 1]);
        for (const auto& g : homs_above.gens) boundaries.push_back(push(C.d[k + 1], g));
    }
    return present_subquotient(R, C.ranks[k] * r, cycles, boundaries);
}

// smallest degree with nonvanishing homology of Hom(M, C); sentinel max() if none
template <class F>
int inf_hom_g(const GradedRing<F>& R, const PresentedModule<F>& M, const ChainComplexG<F>& C) {
    for (int k = 0; k < C.len(); ++k)
        if (!module_is_zero(R, hom_homology_g(R, M, C, C.lo + k).module)) return C.lo + k;
    return std::numeric_limits<int>::max();
}

} // namespace gorlab
