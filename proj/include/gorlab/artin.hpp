#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorlab/graded.hpp"
#include "gorlab/matrix.hpp"
#include "gorlab/subspace.hpp"

namespace gorlab {

// ---------------------------------------------------------------------------
// A finite-dimensional local k-algebra as a multiplication table. Basis index
// 0 is the unit; the span of the remaining basis vectors must be the maximal
// ideal (verified: it is an ideal and it is nilpotent). All questions reduce
// to exact linear algebra on the table.
// ---------------------------------------------------------------------------

template <class F>
struct FiniteLocalAlgebra {
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    F field;
    int dim = 0;
    std::vector<std::string> names;  // names[0] == "1"
    std::vector<Mat<F>> lmul;        // lmul[i] column j = coordinates of b_i * b_j

    Vec zero_vec() const { return Vec(dim, field.zero()); }
    Vec basis_vec(int i) const {
        Vec v = zero_vec();
        v[i] = field.one();
        return v;
    }
    Vec unit() const { return basis_vec(0); }
    bool is_zero_vec(const Vec& v) const {
        for (const auto& e : v)
            if (!field.is_zero(e)) return false;
        return true;
    }

    // matrix of multiplication by x, acting v -> x*v
    Mat<F> mult_matrix(const Vec& x) const {
        Mat<F> m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (field.is_zero(x[i])) continue;
            for (size_t t = 0; t < m.a.size(); ++t)
                m.a[t] = field.add(m.a[t], field.mul(x[i], lmul[i].a[t]));
        }
        return m;
    }

    Vec mul(const Vec& x, const Vec& y) const { return mat_apply(field, mult_matrix(x), y); }

    Vec scale(const Elem& c, Vec v) const {
        for (auto& e : v) e = field.mul(c, e);
        return v;
    }
    Vec add(const Vec& x, const Vec& y) const {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = field.add(x[i], y[i]);
        return v;
    }
    Vec sub(const Vec& x, const Vec& y) const {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = field.sub(x[i], y[i]);
        return v;
    }

    // the maximal ideal: everything with zero unit coordinate
    Subspace<F> maximal_ideal() const {
        Mat<F> rows(dim - 1, dim);
        for (int i = 1; i < dim; ++i) rows.at(i - 1, i) = field.one();
        return Subspace<F>::span(field, rows);
    }

    // units are exactly the elements with a nonzero residue
    bool is_unit(const Vec& x) const { return !field.is_zero(x[0]); }

    std::string elem_str(const Vec& v) const {
        std::string s;
        for (int i = 0; i < dim; ++i) {
            if (field.is_zero(v[i])) continue;
            if (!s.empty()) s += " + ";
            if (field.eq(v[i], field.one()) && i != 0)
                s += names[i];
            else {
                s += field.str(v[i]);
                if (i != 0) s += "*" + names[i];
            }
        }
        return s.empty() ? "0" : s;
    }

    // Structural verification: unit behaves, multiplication is commutative and
    // associative, the positive part is an ideal, and it is nilpotent (which
    // pins the algebra as local artinian with m = that ideal).
    void verify() const {
        GORLAB_CHECK(dim >= 1 && static_cast<int>(lmul.size()) == dim &&
                         static_cast<int>(names.size()) == dim,
                     "algebra table shape mismatch");
        Mat<F> id = Mat<F>::identity(field, dim);
        GORLAB_CHECK(lmul[0] == id, "unit does not act as identity");
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Vec bij = mat_apply(field, lmul[i], basis_vec(j));
                Vec bji = mat_apply(field, lmul[j], basis_vec(i));
                GORLAB_CHECK(bij == bji, "multiplication not commutative");
                if (i > 0 && j > 0)
                    GORLAB_CHECK(field.is_zero(bij[0]),
                                 "positive part is not closed under multiplication");
            }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                // (b_i b_j) * -  ==  b_i * (b_j * -)
                Vec bij = mat_apply(field, lmul[i], basis_vec(j));
                Mat<F> lhs = mult_matrix(bij);
                Mat<F> rhs = mat_mul(field, lmul[i], lmul[j]);
                GORLAB_CHECK(lhs == rhs, "multiplication not associative");
            }
        // nilpotency of the positive part: powers must shrink to zero
        Subspace<F> power = maximal_ideal();
        for (int step = 0; step <= dim && power.dim() > 0; ++step) {
            GORLAB_CHECK(step < dim, "positive part is not nilpotent");
            power = ideal_product_span(*this, power, maximal_ideal());
        }
    }
};

// span{ u*v : u in U basis, v in V basis } (the product of two subspaces)
template <class F>
Subspace<F> ideal_product_span(const FiniteLocalAlgebra<F>& A, const Subspace<F>& U,
                               const Subspace<F>& V) {
    Mat<F> rows(U.dim() * V.dim(), A.dim);
    int r = 0;
    for (int i = 0; i < U.dim(); ++i) {
        typename FiniteLocalAlgebra<F>::Vec u(U.basis.a.begin() + static_cast<size_t>(i) * A.dim,
                                              U.basis.a.begin() +
                                                  static_cast<size_t>(i + 1) * A.dim);
        Mat<F> mu = A.mult_matrix(u);
        for (int j = 0; j < V.dim(); ++j) {
            typename FiniteLocalAlgebra<F>::Vec v(
                V.basis.a.begin() + static_cast<size_t>(j) * A.dim,
                V.basis.a.begin() + static_cast<size_t>(j + 1) * A.dim);
            auto w = mat_apply(A.field, mu, v);
            for (int c = 0; c < A.dim; ++c) rows.at(r, c) = w[c];
            ++r;
        }
    }
    return Subspace<F>::span(A.field, rows);
}

// smallest ideal containing the given elements: span{ b_j * g }
template <class F>
Subspace<F> ideal_span(const FiniteLocalAlgebra<F>& A,
                       const std::vector<typename FiniteLocalAlgebra<F>::Vec>& gens) {
    Mat<F> rows(static_cast<int>(gens.size()) * A.dim, A.dim);
    int r = 0;
    for (const auto& g : gens) {
        Mat<F> mg = A.mult_matrix(g);
        for (int j = 0; j < A.dim; ++j) {
            auto w = mat_apply(A.field, mg, A.basis_vec(j));
            for (int c = 0; c < A.dim; ++c) rows.at(r, c) = w[c];
            ++r;
        }
    }
    return Subspace<F>::span(A.field, rows);
}

template <class F>
bool is_ideal(const FiniteLocalAlgebra<F>& A, const Subspace<F>& S) {
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < S.dim(); ++j) {
            typename FiniteLocalAlgebra<F>::Vec v(
                S.basis.a.begin() + static_cast<size_t>(j) * A.dim,
                S.basis.a.begin() + static_cast<size_t>(j + 1) * A.dim);
            if (!S.contains(A.field, A.mul(A.basis_vec(i), v))) return false;
        }
    return true;
}

// ann(x) = ker(mult by x)
template <class F>
Subspace<F> annihilator_elem(const FiniteLocalAlgebra<F>& A,
                             const typename FiniteLocalAlgebra<F>::Vec& x) {
    return Subspace<F>::span(A.field, kernel_basis(A.field, A.mult_matrix(x)));
}

// ann(S) for a subspace S: kernel of the stacked multiplication maps of a
// basis of S. The result annihilates every element of S.
template <class F>
Subspace<F> annihilator_subspace(const FiniteLocalAlgebra<F>& A, const Subspace<F>& S) {
    if (S.dim() == 0) {
        Mat<F> all = Mat<F>::identity(A.field, A.dim);
        return Subspace<F>::span(A.field, all);
    }
    Mat<F> stacked(S.dim() * A.dim, A.dim);
    for (int i = 0; i < S.dim(); ++i) {
        typename FiniteLocalAlgebra<F>::Vec v(S.basis.a.begin() + static_cast<size_t>(i) * A.dim,
                                              S.basis.a.begin() +
                                                  static_cast<size_t>(i + 1) * A.dim);
        Mat<F> mv = A.mult_matrix(v);
        for (int r = 0; r < A.dim; ++r)
            for (int c = 0; c < A.dim; ++c) stacked.at(i * A.dim + r, c) = mv.at(r, c);
    }
    return Subspace<F>::span(A.field, kernel_basis(A.field, stacked));
}

template <class F>
Subspace<F> socle(const FiniteLocalAlgebra<F>& A) {
    return annihilator_subspace(A, A.maximal_ideal());
}

// minimal generator count of an ideal subspace: dim I/mI
template <class F>
int minimal_gen_count_subspace(const FiniteLocalAlgebra<F>& A, const Subspace<F>& I) {
    return I.dim() - ideal_product_span(A, A.maximal_ideal(), I).dim();
}

// deterministic single generator of a cyclic ideal: the first rref basis row
// of I outside m*I (any such row generates, by Nakayama)
template <class F>
std::optional<typename FiniteLocalAlgebra<F>::Vec> cyclic_generator(
    const FiniteLocalAlgebra<F>& A, const Subspace<F>& I) {
    if (I.dim() == 0) return A.zero_vec();
    if (minimal_gen_count_subspace(A, I) != 1) return std::nullopt;
    Subspace<F> mI = ideal_product_span(A, A.maximal_ideal(), I);
    for (int i = 0; i < I.dim(); ++i) {
        typename FiniteLocalAlgebra<F>::Vec v(I.basis.a.begin() + static_cast<size_t>(i) * A.dim,
                                              I.basis.a.begin() +
                                                  static_cast<size_t>(i + 1) * A.dim);
        if (!mI.contains(A.field, v)) return v;
    }
    GORLAB_CHECK(false, "cyclic ideal with no generator outside m*I");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact zero divisors: ann(x) principal, generated by a partner y whose own
// annihilator is exactly (x).
// ---------------------------------------------------------------------------

template <class F>
struct EzdResult {
    bool ok = false;
    std::string reason;                          // on failure
    typename FiniteLocalAlgebra<F>::Vec partner; // on success
    Subspace<F> ann_x;                           // always: ann(x)
};

template <class F>
EzdResult<F> exact_zero_divisor(const FiniteLocalAlgebra<F>& A,
                                const typename FiniteLocalAlgebra<F>::Vec& x) {
    EzdResult<F> out;
    out.ann_x = annihilator_elem(A, x);
    if (A.is_unit(x)) {
        out.reason = "x is a unit";
        return out;
    }
    if (A.is_zero_vec(x)) {
        out.reason = "x is zero; its annihilator is the whole ring";
        return out;
    }
    if (out.ann_x.dim() == 0) {
        out.reason = "x is regular";  // impossible for a non-unit here, kept for clarity
        return out;
    }
    int gens = minimal_gen_count_subspace(A, out.ann_x);
    if (gens != 1) {
        out.reason = "ann(x) needs " + std::to_string(gens) + " generators, not principal";
        return out;
    }
    auto y = cyclic_generator(A, out.ann_x);
    GORLAB_CHECK(y.has_value(), "cyclic annihilator without generator");
    Subspace<F> ann_y = annihilator_elem(A, *y);
    Subspace<F> ideal_x = ideal_span(A, {x});
    if (!(ann_y == ideal_x)) {
        out.reason = "ann of the candidate partner differs from (x)";
        return out;
    }
    GORLAB_CHECK(ideal_span(A, {*y}) == out.ann_x, "partner fails to generate ann(x)");
    out.ok = true;
    out.partner = *y;
    return out;
}

// ---------------------------------------------------------------------------
// Finitely generated modules: one action matrix per algebra basis element.
// ---------------------------------------------------------------------------

template <class F>
struct FGModule {
    int n = 0;                 // k-dimension
    std::vector<Mat<F>> act;   // act[i] = action of basis element b_i

    Mat<F> action_of(const FiniteLocalAlgebra<F>& A,
                     const typename FiniteLocalAlgebra<F>::Vec& a) const {
        Mat<F> m(n, n);
        for (int i = 0; i < A.dim; ++i) {
            if (A.field.is_zero(a[i])) continue;
            for (size_t t = 0; t < m.a.size(); ++t)
                m.a[t] = A.field.add(m.a[t], A.field.mul(a[i], act[i].a[t]));
        }
        return m;
    }
};

template <class F>
void verify_module(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M) {
    GORLAB_CHECK(static_cast<int>(M.act.size()) == A.dim, "module action table shape");
    GORLAB_CHECK(M.act.empty() || M.act[0] == Mat<F>::identity(A.field, M.n),
                 "unit does not act as identity on module");
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            // act(b_i) act(b_j) == act(b_i b_j)
            Mat<F> lhs = mat_mul(A.field, M.act[i], M.act[j]);
            auto bij = mat_apply(A.field, A.lmul[i], A.basis_vec(j));
            Mat<F> rhs = M.action_of(A, bij);
            GORLAB_CHECK(lhs == rhs, "module action does not respect multiplication");
        }
}

template <class F>
FGModule<F> regular_module(const FiniteLocalAlgebra<F>& A) {
    return FGModule<F>{A.dim, A.lmul};
}

// Matlis dual: linear dual with transposed action
template <class F>
FGModule<F> matlis_dual(const FGModule<F>& M) {
    FGModule<F> D;
    D.n = M.n;
    for (const auto& m : M.act) D.act.push_back(m.transpose());
    return D;
}

// module structure on a subquotient K/I of A^r. Both K and I live in k^(r*dim)
// (r coordinate blocks of size dim) and must be closed under the diagonal
// action; I must lie inside K. The carrier is the canonical reduced model
// { I.reduce(v) : v in K }, whose rref basis makes coordinates literal reads
// at pivot columns.
template <class F>
struct Subquotient {
    FGModule<F> module;
    Subspace<F> reduced;  // basis of the carrier inside k^(r*dim)
    int block_rank = 0;   // r

    std::vector<typename F::Elem> coords(const F& f,
                                         const std::vector<typename F::Elem>& rep) const {
        std::vector<typename F::Elem> c(reduced.dim(), f.zero());
        for (int i = 0; i < reduced.dim(); ++i) c[i] = rep[reduced.pivots[i]];
        return c;
    }
};

// diagonal action of b_i on A^r as a (r*dim) x (r*dim) matrix
template <class F>
Mat<F> diagonal_action(const FiniteLocalAlgebra<F>& A, int r, int i) {
    Mat<F> big(r * A.dim, r * A.dim);
    for (int b = 0; b < r; ++b)
        for (int u = 0; u < A.dim; ++u)
            for (int v = 0; v < A.dim; ++v)
                big.at(b * A.dim + u, b * A.dim + v) = A.lmul[i].at(u, v);
    return big;
}

// A^r as a module: the ambient of the free-coefficient subquotients
template <class F>
FGModule<F> free_power_module(const FiniteLocalAlgebra<F>& A, int r) {
    FGModule<F> M;
    M.n = r * A.dim;
    for (int i = 0; i < A.dim; ++i) M.act.push_back(diagonal_action(A, r, i));
    return M;
}

// M^r with the block-diagonal action
template <class F>
FGModule<F> module_power(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M, int r) {
    FGModule<F> P;
    P.n = r * M.n;
    for (int i = 0; i < A.dim; ++i) {
        Mat<F> big(P.n, P.n);
        for (int b = 0; b < r; ++b)
            for (int u = 0; u < M.n; ++u)
                for (int v = 0; v < M.n; ++v)
                    big.at(b * M.n + u, b * M.n + v) = M.act[i].at(u, v);
        P.act.push_back(std::move(big));
    }
    return P;
}

// subquotient K/I inside an arbitrary ambient module (both action-closed)
template <class F>
Subquotient<F> fg_subquotient_over(const FiniteLocalAlgebra<F>& A, const FGModule<F>& amb,
                                   const Subspace<F>& K, const Subspace<F>& I) {
    GORLAB_CHECK(K.ambient == amb.n && I.ambient == K.ambient,
                 "subquotient ambient mismatch");
    GORLAB_CHECK(K.contains(A.field, I), "subquotient: denominator not inside numerator");
    Mat<F> reduced_rows(K.dim(), K.ambient);
    for (int i = 0; i < K.dim(); ++i) {
        std::vector<typename F::Elem> v(K.basis.a.begin() + static_cast<size_t>(i) * K.ambient,
                                        K.basis.a.begin() +
                                            static_cast<size_t>(i + 1) * K.ambient);
        auto red = I.reduce(A.field, v);
        for (int j = 0; j < K.ambient; ++j) reduced_rows.at(i, j) = red[j];
    }
    Subquotient<F> out;
    out.block_rank = 0;
    out.reduced = Subspace<F>::span(A.field, reduced_rows);
    int h = out.reduced.dim();
    out.module.n = h;
    for (int i = 0; i < A.dim; ++i) {
        const Mat<F>& big = amb.act[i];
        Mat<F> m(h, h);
        for (int j = 0; j < h; ++j) {
            std::vector<typename F::Elem> rep(
                out.reduced.basis.a.begin() + static_cast<size_t>(j) * K.ambient,
                out.reduced.basis.a.begin() + static_cast<size_t>(j + 1) * K.ambient);
            auto moved = I.reduce(A.field, mat_apply(A.field, big, rep));
            auto c = out.coords(A.field, moved);
            for (int u = 0; u < h; ++u) m.at(u, j) = c[u];
        }
        out.module.act.push_back(std::move(m));
    }
    return out;
}

// subquotient of the free module A^r
template <class F>
Subquotient<F> fg_subquotient(const FiniteLocalAlgebra<F>& A, int r, const Subspace<F>& K,
                              const Subspace<F>& I) {
    auto out = fg_subquotient_over(A, free_power_module(A, r), K, I);
    out.block_rank = r;
    return out;
}

// module carried by an ideal subspace
template <class F>
FGModule<F> module_from_subspace(const FiniteLocalAlgebra<F>& A, const Subspace<F>& S) {
    return fg_subquotient(A, 1, S, Subspace<F>::zero(A.dim)).module;
}

// module A/I
template <class F>
FGModule<F> quotient_module(const FiniteLocalAlgebra<F>& A, const Subspace<F>& I) {
    Mat<F> all = Mat<F>::identity(A.field, A.dim);
    return fg_subquotient(A, 1, Subspace<F>::span(A.field, all), I).module;
}

// m*M inside the module's own coordinates
template <class F>
Subspace<F> radical_image(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M) {
    Mat<F> rows((A.dim - 1) * M.n, M.n);
    int r = 0;
    for (int i = 1; i < A.dim; ++i)
        for (int j = 0; j < M.n; ++j) {
            for (int u = 0; u < M.n; ++u) rows.at(r, u) = M.act[i].at(u, j);
            ++r;
        }
    return Subspace<F>::span(A.field, rows);
}

// ann_A(M) = { a : a*M = 0 }: kernel of a -> action_of(a), flattened
template <class F>
Subspace<F> annihilator_module_table(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M) {
    Mat<F> big(M.n * M.n, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int u = 0; u < M.n; ++u)
            for (int v = 0; v < M.n; ++v) big.at(u * M.n + v, i) = M.act[i].at(u, v);
    return Subspace<F>::span(A.field, kernel_basis(A.field, big));
}

// Decides M ≅ A/I for cyclic M: true iff dim M/mM = 1 (or M = 0 = A/A) and
// ann(M) = I. Sound and complete because a cyclic module is A/ann of it.
template <class F>
bool cyclic_iso_test(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M,
                     const Subspace<F>& I) {
    if (M.n == 0) return I.dim() == A.dim;
    int covers = M.n - radical_image(A, M).dim();
    if (covers != 1) return false;
    return annihilator_module_table(A, M) == I;
}

template <class F>
bool cyclic_iso_test(const FiniteLocalAlgebra<F>& A, const Subspace<F>& S,
                     const Subspace<F>& I) {
    return cyclic_iso_test(A, module_from_subspace(A, S), I);
}

// ---------------------------------------------------------------------------
// Constructions: from a presentation, quotients, trivial extensions.
// ---------------------------------------------------------------------------

// Bridge from the polynomial engine: an artinian graded quotient together with
// its monomial basis and coordinate maps.
template <class F>
struct ArtinModel {
    GradedRing<F> ring;
    std::vector<Monomial> basis;
    FiniteLocalAlgebra<F> alg;

    static ArtinModel make(const GradedRing<F>& R) {
        auto qb = R.quotient_basis();
        if (!qb) throw error("quotient is not finite-dimensional");
        ArtinModel m{R, *qb, {R.ring.field, 0, {}, {}}};
        int d = static_cast<int>(m.basis.size());
        m.alg.dim = d;
        GORLAB_CHECK(d >= 1 && m.basis[0].is_one(), "basis must start at the unit monomial");
        for (const auto& mono : m.basis) {
            std::string s = R.ring.mono_str(mono);
            m.alg.names.push_back(s.empty() ? "1" : s);
        }
        for (int i = 0; i < d; ++i) {
            Mat<F> mi(d, d);
            for (int j = 0; j < d; ++j) {
                Poly<F> prod = R.nf(R.ring.mono(m.basis[i] * m.basis[j], R.ring.field.one()));
                auto coords = m.coords_of_nf(prod);
                for (int u = 0; u < d; ++u) mi.at(u, j) = coords[u];
            }
            m.alg.lmul.push_back(std::move(mi));
        }
        m.alg.verify();
        return m;
    }

    typename FiniteLocalAlgebra<F>::Vec coords(const Poly<F>& p) const {
        return coords_of_nf(ring.nf(p));
    }

    Poly<F> poly_of(const typename FiniteLocalAlgebra<F>::Vec& v) const {
        Poly<F> p = ring.ring.zero();
        for (size_t i = 0; i < basis.size(); ++i)
            p = ring.ring.add(p, ring.ring.mono(basis[i], v[i]));
        return p;
    }

private:
    typename FiniteLocalAlgebra<F>::Vec coords_of_nf(const Poly<F>& p) const {
        typename FiniteLocalAlgebra<F>::Vec v(basis.size(), ring.ring.field.zero());
        for (const auto& t : p.t) {
            bool hit = false;
            for (size_t i = 0; i < basis.size(); ++i)
                if (basis[i] == t.m) {
                    v[i] = t.c;
                    hit = true;
                    break;
                }
            GORLAB_CHECK(hit, "normal form contains a non-basis monomial");
        }
        return v;
    }
};

// Quotient algebra A/I, with the projection data needed to push elements down.
template <class F>
struct AlgebraQuotient {
    FiniteLocalAlgebra<F> alg;
    Subspace<F> ideal;
    std::vector<int> kept;  // coordinates of A that survive (non-pivot columns)

    typename FiniteLocalAlgebra<F>::Vec project(
        const FiniteLocalAlgebra<F>& A, const typename FiniteLocalAlgebra<F>::Vec& v) const {
        auto red = ideal.reduce(A.field, v);
        typename FiniteLocalAlgebra<F>::Vec out;
        for (int c : kept) out.push_back(red[c]);
        return out;
    }
};

template <class F>
AlgebraQuotient<F> quotient_algebra(const FiniteLocalAlgebra<F>& A, const Subspace<F>& I) {
    GORLAB_CHECK(is_ideal(A, I), "quotient by a non-ideal subspace");
    GORLAB_CHECK(I.dim() < A.dim, "quotient by the unit ideal");
    AlgebraQuotient<F> q{{A.field, 0, {}, {}}, I, {}};
    std::vector<char> is_pivot(A.dim, 0);
    for (int p : I.pivots) is_pivot[p] = 1;
    GORLAB_CHECK(!is_pivot[0], "proper ideal meets the unit coordinate");
    for (int c = 0; c < A.dim; ++c)
        if (!is_pivot[c]) q.kept.push_back(c);
    int d = static_cast<int>(q.kept.size());
    q.alg.dim = d;
    for (int c : q.kept) q.alg.names.push_back(A.names[c]);
    for (int i = 0; i < d; ++i) {
        Mat<F> mi(d, d);
        for (int j = 0; j < d; ++j) {
            auto prod = q.project(A, A.mul(A.basis_vec(q.kept[i]), A.basis_vec(q.kept[j])));
            for (int u = 0; u < d; ++u) mi.at(u, j) = prod[u];
        }
        q.alg.lmul.push_back(std::move(mi));
    }
    q.alg.verify();
    return q;
}

// A ⋉ M: basis of A followed by a basis of M, with M a square-zero ideal
template <class F>
FiniteLocalAlgebra<F> trivial_extension(const FiniteLocalAlgebra<F>& A, const FGModule<F>& M,
                                        const std::string& mprefix = "w") {
    verify_module(A, M);
    FiniteLocalAlgebra<F> T{A.field, A.dim + M.n, {}, {}};
    T.names = A.names;
    for (int j = 0; j < M.n; ++j) T.names.push_back(mprefix + std::to_string(j));
    int d = T.dim;
    for (int i = 0; i < A.dim; ++i) {
        Mat<F> mi(d, d);
        for (int u = 0; u < A.dim; ++u)
            for (int v = 0; v < A.dim; ++v) mi.at(u, v) = A.lmul[i].at(u, v);
        for (int u = 0; u < M.n; ++u)
            for (int v = 0; v < M.n; ++v) mi.at(A.dim + u, A.dim + v) = M.act[i].at(u, v);
        T.lmul.push_back(std::move(mi));
    }
    for (int j = 0; j < M.n; ++j) {
        Mat<F> mj(d, d);
        // w_j * b_v = act(b_v) column j; w_j * w_v = 0
        for (int v = 0; v < A.dim; ++v)
            for (int u = 0; u < M.n; ++u) mj.at(A.dim + u, v) = M.act[v].at(u, j);
        T.lmul.push_back(std::move(mj));
    }
    T.verify();
    return T;
}

} // namespace gorlab
