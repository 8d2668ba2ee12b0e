#pragma once

// Decision procedures for Gorenstein-type properties, layered over the
// resolution and Koszul machinery: exactness of elements and sequences,
// quasi-Gorenstein quotient maps (a direct Ext test, a reduction to sequence
// exactness, and a top/bottom homology obstruction), Gorenstein ring
// classification, trivial-extension maps, tensor-product resolutions, and
// amplitude diagnostics for modules against Koszul complexes.
//
// Every yes/no verdict is backed by evidence that the lower layers can
// re-verify; "unknown" is reserved for honest certification gaps (an Ext tail
// that is neither terminated nor periodic, or a depth search that ran out of
// window).

#include <string>
#include <utility>
#include <vector>

#include "gorlab/resolution.hpp"

namespace gorlab {

enum class Verdict { yes, no, unknown };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

// A decided check: which mechanism ran, what it concluded, and the witnesses
// (dimensions, partners, Ext tables) that justify the conclusion.
struct CheckReport {
    Verdict verdict = Verdict::unknown;
    std::string criterion;
    std::string status;
    std::vector<std::pair<std::string, std::string>> evidence;

    void add(const std::string& key, const std::string& value) {
        evidence.emplace_back(key, value);
    }
};

inline std::string dims_str(const std::vector<int>& d) {
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s;
}

template <class F>
std::string elem_str(const FiniteLocalAlgebra<F>& A,
                     const typename FiniteLocalAlgebra<F>::Vec& v) {
    std::string s;
    for (int i = 0; i < A.dim; ++i) {
        if (A.field.is_zero(v[i])) continue;
        if (!s.empty()) s += " + ";
        std::string c = A.field.str(v[i]);
        if (i == 0)
            s += c;
        else if (c == "1")
            s += A.names[i];
        else
            s += c + "*" + A.names[i];
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Exact elements: regular or an exact zero divisor.
// ---------------------------------------------------------------------------

enum class ElementKind { regular, exact_zero_divisor, not_exact };

template <class F>
ElementKind classify_element(const FiniteLocalAlgebra<F>& A,
                             const typename FiniteLocalAlgebra<F>::Vec& x,
                             std::string* note = nullptr,
                             typename FiniteLocalAlgebra<F>::Vec* partner = nullptr) {
    GORLAB_CHECK(!A.is_unit(x), "exactness applies to elements of the maximal ideal");
    auto ezd = exact_zero_divisor(A, x);
    if (ezd.ok) {
        if (note) *note = "exact zero divisor with partner " + elem_str(A, ezd.partner);
        if (partner) *partner = ezd.partner;
        return ElementKind::exact_zero_divisor;
    }
    if (ezd.ann_x.dim() == 0) {
        if (note) *note = "regular: multiplication is injective";
        return ElementKind::regular;
    }
    if (note) *note = "not exact: " + ezd.reason;
    return ElementKind::not_exact;
}

template <class F>
CheckReport is_exact_element(const FiniteLocalAlgebra<F>& A,
                             const typename FiniteLocalAlgebra<F>::Vec& x) {
    CheckReport rep;
    rep.criterion = "annihilator-pairing";
    std::string note;
    auto kind = classify_element(A, x, &note);
    rep.status = note;
    rep.verdict = (kind == ElementKind::not_exact) ? Verdict::no : Verdict::yes;
    rep.add("element", elem_str(A, x));
    rep.add("annihilator dimension",
            std::to_string(annihilator_elem(A, x).dim()));
    return rep;
}

template <class F>
ElementKind classify_element_g(const GradedRing<F>& R, const Poly<F>& f0,
                               std::string* note = nullptr, Poly<F>* partner = nullptr) {
    Poly<F> f = R.nf(f0);
    GORLAB_CHECK(R.ring.field.is_zero(R.ring.constant_coeff(f)),
                 "exactness applies to elements of the maximal ideal");
    if (f.is_zero()) {
        if (note) *note = "not exact: the element is zero in this ring";
        return ElementKind::not_exact;
    }
    auto ann_of = [&](const Poly<F>& p) {
        VecPoly<F> col(1);
        col.c[0] = p;
        std::vector<Poly<F>> gens;
        for (const auto& v : kernel_of_free_map(R, 1, {col})) {
            auto g = R.nf(v.c[0]);
            if (!g.is_zero()) gens.push_back(g);
        }
        return gens;
    };
    auto ann = ann_of(f);
    if (ann.empty()) {
        if (note) *note = "regular: multiplication is injective";
        return ElementKind::regular;
    }
    auto mg = minimal_gens_ideal(R, QIdeal<F>{ann});
    if (mg.size() != 1) {
        if (note)
            *note = "not exact: the annihilator needs " + std::to_string(mg.size()) +
                    " generators, not principal";
        return ElementKind::not_exact;
    }
    Poly<F> y = mg[0];
    if (ideal_equal(R, QIdeal<F>{ann_of(y)}, QIdeal<F>{{f}})) {
        if (note) *note = "exact zero divisor with partner " + R.ring.str(y);
        if (partner) *partner = y;
        return ElementKind::exact_zero_divisor;
    }
    if (note)
        *note = "not exact: the annihilator of the candidate partner " + R.ring.str(y) +
                " differs from the ideal of the element";
    return ElementKind::not_exact;
}

template <class F>
CheckReport is_exact_element_g(const GradedRing<F>& R, const Poly<F>& f) {
    CheckReport rep;
    rep.criterion = "annihilator-pairing";
    std::string note;
    auto kind = classify_element_g(R, f, &note);
    rep.status = note;
    rep.verdict = (kind == ElementKind::not_exact) ? Verdict::no : Verdict::yes;
    rep.add("element", R.ring.str(R.nf(f)));
    return rep;
}

// ---------------------------------------------------------------------------
// Ring towers: the chain of quotients a sequence cuts out, with the image of
// each element in the stage where it is tested.
// ---------------------------------------------------------------------------

template <class F>
struct RingTower {
    std::vector<FiniteLocalAlgebra<F>> stages;                    // n+1 rings
    std::vector<typename FiniteLocalAlgebra<F>::Vec> elems;       // image of xs[i] in stages[i]
};

template <class F>
RingTower<F> make_tower(const FiniteLocalAlgebra<F>& A,
                        const std::vector<typename FiniteLocalAlgebra<F>::Vec>& xs) {
    RingTower<F> t;
    t.stages.push_back(A);
    auto cur = xs;
    for (size_t i = 0; i < xs.size(); ++i) {
        const auto& S = t.stages.back();
        GORLAB_CHECK(!S.is_unit(cur[i]), "tower elements must lie in the maximal ideal");
        t.elems.push_back(cur[i]);
        auto q = quotient_algebra(S, ideal_span(S, {cur[i]}));
        for (size_t j = i + 1; j < cur.size(); ++j) cur[j] = q.project(S, cur[j]);
        t.stages.push_back(q.alg);
    }
    return t;
}

template <class F>
struct RingTowerG {
    std::vector<GradedRing<F>> stages;
    std::vector<Poly<F>> elems;  // original polynomials; test the image stages[i].nf(elems[i])
};

template <class F>
RingTowerG<F> make_tower_g(const GradedRing<F>& R, const std::vector<Poly<F>>& xs) {
    RingTowerG<F> t;
    t.stages.push_back(R);
    auto gens = R.ideal_gens;
    for (const auto& x : xs) {
        t.elems.push_back(x);
        gens.push_back(x);
        t.stages.push_back(GradedRing<F>::make(R.ring, gens));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Exact sequences: every element regular or an exact zero divisor in its stage.
// ---------------------------------------------------------------------------

template <class F>
CheckReport is_exact_sequence(const FiniteLocalAlgebra<F>& A,
                              const std::vector<typename FiniteLocalAlgebra<F>::Vec>& xs) {
    CheckReport rep;
    rep.criterion = "annihilator-pairing-tower";
    rep.verdict = Verdict::yes;
    rep.status = "every element is regular or an exact zero divisor in its stage";
    auto t = make_tower(A, xs);
    for (size_t i = 0; i < xs.size(); ++i) {
        std::string note;
        auto kind = classify_element(t.stages[i], t.elems[i], &note);
        rep.add("stage " + std::to_string(i + 1) + " (ring dimension " +
                    std::to_string(t.stages[i].dim) + ")",
                note);
        if (kind == ElementKind::not_exact && rep.verdict == Verdict::yes) {
            rep.verdict = Verdict::no;
            rep.status = "element " + std::to_string(i + 1) + " is not exact in its stage";
        }
    }
    return rep;
}

template <class F>
CheckReport is_exact_sequence_g(const GradedRing<F>& R, const std::vector<Poly<F>>& xs) {
    CheckReport rep;
    rep.criterion = "annihilator-pairing-tower";
    rep.verdict = Verdict::yes;
    rep.status = "every element is regular or an exact zero divisor in its stage";
    auto t = make_tower_g(R, xs);
    for (size_t i = 0; i < xs.size(); ++i) {
        std::string note;
        auto kind = classify_element_g(t.stages[i], t.elems[i], &note);
        rep.add("stage " + std::to_string(i + 1), note);
        if (kind == ElementKind::not_exact && rep.verdict == Verdict::yes) {
            rep.verdict = Verdict::no;
            rep.status = "element " + std::to_string(i + 1) + " is not exact in its stage";
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quasi-Gorenstein quotients, tested directly: Ext against the ring must be
// concentrated in one degree g and isomorphic to the quotient ring there.
// ---------------------------------------------------------------------------

template <class F>
CheckReport quasi_gorenstein_direct(const FiniteLocalAlgebra<F>& A, const Subspace<F>& I,
                                    int cutoff = 10) {
    CheckReport rep;
    rep.criterion = "ext-concentration";
    GORLAB_CHECK(is_ideal(A, I), "quasi-gorenstein test needs an ideal");
    GORLAB_CHECK(I.dim() < A.dim, "quasi-gorenstein test needs a proper ideal");
    auto res = resolve_minimal(A, quotient_module(A, I), cutoff);
    int w = res_window(res);
    auto reg = regular_module(A);
    auto dims = ext_dims(A, res, reg, w);
    rep.add("ext dimensions against the ring (degrees 0.." + std::to_string(w) + ")",
            dims_str(dims));
    std::vector<int> nz;
    for (int i = 0; i <= w; ++i)
        if (dims[i] != 0) nz.push_back(i);
    // hom out of a nonzero quotient into an artinian ring meets the socle
    GORLAB_CHECK(!nz.empty() && nz[0] == 0, "hom into the ring vanished over an artinian ring");
    if (nz.size() >= 2) {
        rep.verdict = Verdict::no;
        rep.status = "ext against the ring is not concentrated in a single degree";
        return rep;
    }
    int g = nz[0];
    rep.add("Gdim", std::to_string(g));
    auto E = ext_module(A, res, reg, g);
    bool iso = cyclic_iso_test(A, E, I);
    rep.add("concentrated ext cyclic with the ideal as annihilator", iso ? "true" : "false");
    if (!iso) {
        rep.verdict = Verdict::no;
        rep.status = "the concentrated ext module is not isomorphic to the quotient ring";
        return rep;
    }
    if (socle(A).dim() == 1) {
        rep.verdict = Verdict::yes;
        rep.status = "certified: the ring is self-injective, so higher ext vanishes";
    } else if (pattern_certified(detect_periodicity(res), res.finite)) {
        rep.verdict = Verdict::yes;
        rep.status = "certified: the resolution terminates or repeats, pinning the ext tail";
    } else {
        rep.verdict = Verdict::unknown;
        rep.status = "ext vanishes beyond the concentration degree up to the cutoff; "
                     "the tail is not certified";
    }
    return rep;
}

template <class F>
CheckReport quasi_gorenstein_direct_g(const GradedRing<F>& R, const QIdeal<F>& J,
                                      int cutoff = 10) {
    CheckReport rep;
    rep.criterion = "ext-concentration";
    PresentedModule<F> M;
    M.rank = 1;
    M.gen_degs = {0};
    for (const auto& g : J.gens) {
        auto p = R.nf(g);
        if (p.is_zero()) continue;
        VecPoly<F> rel(1);
        rel.c[0] = p;
        M.rels.push_back(std::move(rel));
    }
    auto res = resolve_minimal_g(R, M, cutoff);
    int limit = res.finite ? static_cast<int>(res.betti.size()) : res.nsteps() - 1;
    std::vector<int> present;
    std::vector<int> nz;
    for (int i = 0; i <= limit; ++i) {
        bool zero = module_is_zero(R, ext_ring_g(R, res, i).module);
        present.push_back(zero ? 0 : 1);
        if (!zero) nz.push_back(i);
    }
    rep.add("ext nonvanishing pattern (degrees 0.." + std::to_string(limit) + ")",
            dims_str(present));
    rep.add("resolution terminated", res.finite ? "true" : "false");
    if (nz.empty()) {
        GORLAB_CHECK(!res.finite, "a terminated resolution must meet a nonvanishing ext");
        rep.verdict = Verdict::unknown;
        rep.status = "no nonvanishing ext found within the window";
        return rep;
    }
    if (nz.size() >= 2) {
        rep.verdict = Verdict::no;
        rep.status = "ext against the ring is not concentrated in a single degree";
        return rep;
    }
    int g = nz[0];
    rep.add("Gdim", std::to_string(g));
    auto E = ext_ring_g(R, res, g);
    bool iso = minimal_gen_count(R, E.module) == 1 &&
               ideal_equal(R, annihilator_module(R, E.module), J);
    rep.add("concentrated ext cyclic with the ideal as annihilator", iso ? "true" : "false");
    if (!iso) {
        rep.verdict = Verdict::no;
        rep.status = "the concentrated ext module is not isomorphic to the quotient ring";
        return rep;
    }
    if (res.finite) {
        rep.verdict = Verdict::yes;
        rep.status = "certified: the resolution terminates, pinning the ext tail";
    } else {
        rep.verdict = Verdict::unknown;
        rep.status = "ext is concentrated up to the cutoff; the tail is not certified";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quasi-Gorenstein via the Koszul augmentation: the map onto the degree-zero
// homology is quasi-Gorenstein exactly when the sequence is exact.
// ---------------------------------------------------------------------------

template <class F>
CheckReport koszul_augmentation_qg(const FiniteLocalAlgebra<F>& A,
                                   const std::vector<typename FiniteLocalAlgebra<F>::Vec>& xs) {
    CheckReport rep = is_exact_sequence(A, xs);
    rep.criterion = "exact-sequence-reduction";
    auto K = koszul(A, xs);
    auto a = sup_inf_amp(A, K.cx);
    rep.add("sup of the koszul homology", a.homology_zero ? "none" : std::to_string(a.sup));
    if (rep.verdict == Verdict::yes)
        rep.add("Gdim of the degree-zero homology over the koszul algebra",
                std::to_string(-static_cast<int>(xs.size())));
    return rep;
}

template <class F>
CheckReport koszul_augmentation_qg_g(const GradedRing<F>& R, const std::vector<Poly<F>>& xs) {
    CheckReport rep = is_exact_sequence_g(R, xs);
    rep.criterion = "exact-sequence-reduction";
    auto K = koszul_g(R, xs);
    auto a = amp_info_g(R, K.cx);
    rep.add("sup of the koszul homology", a.homology_zero ? "none" : std::to_string(a.sup));
    if (rep.verdict == Verdict::yes)
        rep.add("Gdim of the degree-zero homology over the koszul algebra",
                std::to_string(-static_cast<int>(xs.size())));
    return rep;
}

// ---------------------------------------------------------------------------
// Top/bottom homology obstruction: for the augmentation map to be
// quasi-Gorenstein the top Koszul homology must match the bottom one as a
// module over it — cyclic with annihilator the sequence ideal. Failure
// disproves; passing is necessary evidence only.
// ---------------------------------------------------------------------------

template <class F>
CheckReport top_bottom_criterion(const FiniteLocalAlgebra<F>& A,
                                 const std::vector<typename FiniteLocalAlgebra<F>::Vec>& xs) {
    CheckReport rep;
    rep.criterion = "top-bottom-homology";
    auto K = koszul(A, xs);
    auto a = sup_inf_amp(A, K.cx);
    GORLAB_CHECK(!a.homology_zero, "koszul complex over an artinian ring has homology");
    int s = a.sup;
    auto H = homology_module(A, K.cx, s);
    auto Ixs = ideal_span(A, xs);
    rep.add("sup", std::to_string(s));
    rep.add("top homology dimension", std::to_string(H.module.n));
    rep.add("top homology annihilator dimension",
            std::to_string(annihilator_module_table(A, H.module).dim()));
    rep.add("sequence ideal dimension", std::to_string(Ixs.dim()));
    if (cyclic_iso_test(A, H.module, Ixs)) {
        rep.verdict = Verdict::yes;
        rep.status = "criterion passes: top homology is cyclic with the sequence ideal as "
                     "annihilator (necessary evidence only)";
    } else {
        rep.verdict = Verdict::no;
        rep.status = "obstruction found: top homology is not isomorphic to the degree-zero "
                     "homology";
    }
    return rep;
}

template <class F>
CheckReport top_bottom_criterion_g(const GradedRing<F>& R, const std::vector<Poly<F>>& xs) {
    CheckReport rep;
    rep.criterion = "top-bottom-homology";
    auto K = koszul_g(R, xs);
    auto a = amp_info_g(R, K.cx);
    GORLAB_CHECK(!a.homology_zero, "koszul complex on a proper ideal has homology");
    int s = a.sup;
    auto H = homology_g(R, K.cx, s);
    int mg = minimal_gen_count(R, H.module);
    rep.add("sup", std::to_string(s));
    rep.add("top homology minimal generators", std::to_string(mg));
    bool pass = mg == 1 && ideal_equal(R, annihilator_module(R, H.module), QIdeal<F>{xs});
    if (pass) {
        rep.verdict = Verdict::yes;
        rep.status = "criterion passes: top homology is cyclic with the sequence ideal as "
                     "annihilator (necessary evidence only)";
    } else {
        rep.verdict = Verdict::no;
        rep.status = "obstruction found: top homology is not isomorphic to the degree-zero "
                     "homology";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Gorenstein ring classification.
// ---------------------------------------------------------------------------

template <class F>
CheckReport gorenstein_ring_test(const FiniteLocalAlgebra<F>& A) {
    CheckReport rep;
    rep.criterion = "socle-dimension";
    int s = socle(A).dim();
    rep.add("socle dimension", std::to_string(s));
    rep.verdict = (s == 1) ? Verdict::yes : Verdict::no;
    rep.status = (s == 1) ? "the socle is one-dimensional: the ring is self-injective"
                          : "the socle dimension exceeds one";
    return rep;
}

template <class F>
CheckReport gorenstein_ring_test_g(const GradedRing<F>& R) {
    CheckReport rep;
    auto P = GradedRing<F>::make(R.ring, {});
    auto gens = minimal_gens_ideal(P, QIdeal<F>{R.ideal_gens});
    rep.add("defining ideal minimal generators", std::to_string(gens.size()));
    if (gens.empty()) {
        rep.criterion = "koszul-concentration";
        rep.verdict = Verdict::yes;
        rep.status = "polynomial ring: regular, hence Gorenstein";
        return rep;
    }
    auto K = koszul_g(P, gens);
    auto a = amp_info_g(P, K.cx);
    rep.add("koszul amplitude of the defining ideal over the ambient ring",
            std::to_string(a.amp));
    if (a.amp == 0) {
        rep.criterion = "koszul-concentration";
        rep.verdict = Verdict::yes;
        rep.status = "the defining ideal is generated by a regular sequence "
                     "(complete intersection)";
        return rep;
    }
    rep.criterion = "depth-type";
    int dim = R.krull_dim();
    rep.add("krull dimension", std::to_string(dim));
    auto d = depth_via_ext_g(R, R.ring.nvars() + 1);
    if (!d.found) {
        rep.verdict = Verdict::unknown;
        rep.status = "depth not determined within the search window";
        return rep;
    }
    GORLAB_CHECK(d.depth <= dim, "depth exceeded the dimension");
    rep.add("depth", std::to_string(d.depth));
    rep.add("type", std::to_string(d.type));
    if (d.depth < dim) {
        rep.verdict = Verdict::no;
        rep.status = "not Cohen-Macaulay: depth is smaller than the dimension";
    } else if (d.type == 1) {
        rep.verdict = Verdict::yes;
        rep.status = "Cohen-Macaulay of type one";
    } else {
        rep.verdict = Verdict::no;
        rep.status = "Cohen-Macaulay of type larger than one";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Trivial extensions A ⋉ D: the ring-level duality laws and the
// quasi-Gorenstein test for the inclusion of the base.
// ---------------------------------------------------------------------------

// the dual of the ring as a module: transposed multiplication tables
template <class F>
FGModule<F> matlis_dual(const FiniteLocalAlgebra<F>& A) {
    FGModule<F> D;
    D.n = A.dim;
    for (int i = 0; i < A.dim; ++i) D.act.push_back(A.lmul[i].transpose());
    verify_module(A, D);
    return D;
}

template <class F>
bool is_matlis_dual(const FiniteLocalAlgebra<F>& A, const FGModule<F>& D) {
    if (D.n != A.dim) return false;
    for (int i = 0; i < A.dim; ++i)
        if (!(D.act[i] == A.lmul[i].transpose())) return false;
    return true;
}

// the extension ring A ⋉ D seen as a module over its base (base coordinates
// come first in the extension's basis)
template <class F>
FGModule<F> extension_as_base_module(const FiniteLocalAlgebra<F>& A,
                                     const FiniteLocalAlgebra<F>& T) {
    GORLAB_CHECK(T.dim >= A.dim, "the extension must contain the base");
    FGModule<F> M;
    M.n = T.dim;
    for (int i = 0; i < A.dim; ++i) M.act.push_back(T.lmul[i]);
    verify_module(A, M);
    return M;
}

// Hom_A(T, A) carrying its module structure over T by precomposition:
// (t.f)(s) = f(t*s)
template <class F>
FGModule<F> hom_into_base_as_extension_module(const FiniteLocalAlgebra<F>& A,
                                              const FiniteLocalAlgebra<F>& T) {
    auto sq = hom_module_sq(A, extension_as_base_module(A, T));
    int h = sq.module.n;
    int amb = T.dim * A.dim;
    FGModule<F> H;
    H.n = h;
    for (int t = 0; t < T.dim; ++t) {
        Mat<F> m(h, h);
        for (int b = 0; b < h; ++b) {
            std::vector<typename F::Elem> rep(
                sq.reduced.basis.a.begin() + static_cast<size_t>(b) * amb,
                sq.reduced.basis.a.begin() + static_cast<size_t>(b + 1) * amb);
            std::vector<typename F::Elem> psi(amb, A.field.zero());
            for (int j = 0; j < T.dim; ++j)
                for (int jp = 0; jp < T.dim; ++jp) {
                    auto c = T.lmul[t].at(jp, j);
                    if (A.field.is_zero(c)) continue;
                    for (int u = 0; u < A.dim; ++u)
                        psi[j * A.dim + u] =
                            A.field.add(psi[j * A.dim + u],
                                        A.field.mul(c, rep[jp * A.dim + u]));
                }
            auto rem = sq.reduced.reduce(A.field, psi);
            for (const auto& e : rem)
                GORLAB_CHECK(A.field.is_zero(e),
                             "precomposition left the space of module maps");
            auto coords = sq.coords(A.field, psi);
            for (int u = 0; u < h; ++u) m.at(u, b) = coords[u];
        }
        H.act.push_back(std::move(m));
    }
    verify_module(T, H);
    return H;
}

template <class F>
CheckReport trivial_ext_checks(const FiniteLocalAlgebra<F>& A, const FGModule<F>& D) {
    CheckReport rep;
    rep.criterion = "socle-dimension";
    auto T = trivial_extension(A, D);
    int s = socle(T).dim();
    rep.add("extension dimension", std::to_string(T.dim));
    rep.add("extension socle dimension", std::to_string(s));
    if (is_matlis_dual(A, D)) {
        rep.add("coefficient module", "dual of the ring");
        GORLAB_CHECK(s == 1, "extension by the dual of the ring must be Gorenstein");
    }
    rep.verdict = (s == 1) ? Verdict::yes : Verdict::no;
    rep.status = (s == 1) ? "the extension ring is Gorenstein"
                          : "the extension ring is not Gorenstein";
    return rep;
}

// Quasi-Gorenstein test for the inclusion A -> A ⋉ D: Ext_A(A⋉D, A) must be
// concentrated in degree zero (hom never vanishes: the projection onto the
// base is a nonzero map), with Hom_A(A⋉D, A) isomorphic to A ⋉ D as a module
// over the extension.
template <class F>
CheckReport quasi_gorenstein_extension_map(const FiniteLocalAlgebra<F>& A,
                                           const FGModule<F>& D, int cutoff = 10) {
    CheckReport rep;
    rep.criterion = "ext-concentration";
    auto T = trivial_extension(A, D);
    rep.add("extension dimension", std::to_string(T.dim));
    auto H = hom_into_base_as_extension_module(A, T);
    bool iso = cyclic_iso_test(T, H, Subspace<F>::zero(T.dim));
    rep.add("hom into the base cyclic over the extension with zero annihilator",
            iso ? "true" : "false");
    if (!iso) {
        rep.verdict = Verdict::no;
        rep.status = "hom into the base is not isomorphic to the extension ring";
        return rep;
    }
    auto res = resolve_minimal(A, extension_as_base_module(A, T), cutoff);
    int w = res_window(res);
    auto dims = ext_dims(A, res, regular_module(A), w);
    rep.add("ext dimensions against the base (degrees 0.." + std::to_string(w) + ")",
            dims_str(dims));
    for (int i = 1; i <= w; ++i)
        if (dims[i] != 0) {
            rep.verdict = Verdict::no;
            rep.status = "higher ext into the base does not vanish";
            return rep;
        }
    if (socle(A).dim() == 1) {
        rep.verdict = Verdict::yes;
        rep.status = "certified: the base is self-injective, so higher ext vanishes";
    } else if (pattern_certified(detect_periodicity(res), res.finite)) {
        rep.verdict = Verdict::yes;
        rep.status = "certified: the resolution terminates or repeats, pinning the ext tail";
    } else {
        rep.verdict = Verdict::unknown;
        rep.status = "higher ext vanishes up to the cutoff; the tail is not certified";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Tensor-product resolutions: for nested ideals I ⊆ J, the tensor product of
// the minimal resolutions of A/I and A/J resolves-with-amplitude the quotient
// A/J; the first homology is the Tor obstruction that makes the amplitude
// positive.
// ---------------------------------------------------------------------------

template <class F>
struct TensorResolution {
    ChainComplexA<F> complex;
    CheckReport report;
};

template <class F>
TensorResolution<F> tensor_resolution_construction(const FiniteLocalAlgebra<F>& A,
                                                   const Subspace<F>& I, const Subspace<F>& J,
                                                   int cutoff = 5) {
    GORLAB_CHECK(J.contains(A.field, I), "the first ideal must lie inside the second");
    TensorResolution<F> out;
    CheckReport& rep = out.report;
    rep.criterion = "tensor-resolution";
    auto qi = quasi_gorenstein_direct(A, I, cutoff);
    auto qj = quasi_gorenstein_direct(A, J, cutoff);
    rep.add("first factor quasi-gorenstein", verdict_str(qi.verdict));
    rep.add("second factor quasi-gorenstein", verdict_str(qj.verdict));
    auto ri = resolve_minimal(A, quotient_module(A, I), cutoff);
    auto rj = resolve_minimal(A, quotient_module(A, J), cutoff);
    out.complex = tensor(A, resolution_complex(A, ri), resolution_complex(A, rj));
    bool complete = ri.finite && rj.finite;
    rep.add("factors terminated", complete ? "true" : "false");
    auto H0 = homology_module(A, out.complex, 0);
    bool h0ok = cyclic_iso_test(A, H0.module, J);
    rep.add("degree-zero homology is the quotient by the larger ideal",
            h0ok ? "true" : "false");
    int t1 = 0;
    if (out.complex.hi() >= 1) t1 = homology_module(A, out.complex, 1).module.n;
    // independent route to the same number through the resolution of A/I
    auto tor = tor_dims(A, ri, quotient_module(A, J), 1);
    GORLAB_CHECK(t1 == tor[1], "tensor complex disagrees with the resolution route");
    rep.add("first tor dimension", std::to_string(t1));
    rep.add("amplitude positive", t1 > 0 ? "true" : "false");
    if (complete) {
        auto a = sup_inf_amp(A, out.complex);
        rep.add("amplitude", std::to_string(a.amp));
    }
    if (!h0ok || qi.verdict == Verdict::no || qj.verdict == Verdict::no) {
        rep.verdict = Verdict::no;
        rep.status = "the construction does not witness a quasi-gorenstein map onto the "
                     "quotient";
    } else if (qi.verdict == Verdict::unknown || qj.verdict == Verdict::unknown) {
        rep.verdict = Verdict::unknown;
        rep.status = "construction verified; the quasi-gorenstein inputs are not fully "
                     "certified";
    } else {
        rep.verdict = Verdict::yes;
        rep.status = complete ? "construction verified with terminated factors"
                              : "construction verified on truncated factors (partial "
                                "evidence beyond the window)";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Amplitude diagnostics for a module against a Koszul complex: amplitudes of
// the complex and of the module tensored with it, the hom-complex homology,
// and the Gorenstein dimension, with identities asserted exactly when their
// hypotheses are verified.
// ---------------------------------------------------------------------------

template <class F>
CheckReport gp_dg_module_checks(const FiniteLocalAlgebra<F>& A,
                                const std::vector<typename FiniteLocalAlgebra<F>::Vec>& xs,
                                const FGModule<F>& M, int cutoff = 10) {
    CheckReport rep;
    rep.criterion = "amplitude-diagnostics";
    int n = static_cast<int>(xs.size());
    auto K = koszul(A, xs);
    auto aK = sup_inf_amp(A, K.cx);
    auto tcx = module_complex(A, M, K.cx);
    auto aMK = amp_info(A.field, tcx);
    auto tdims = homology_dims(A.field, tcx);
    auto hcx = hom_complex(A, M, K.cx);
    auto hdims = homology_dims(A.field, hcx);
    auto aH = amp_info(A.field, hcx);
    rep.add("koszul amplitude", std::to_string(aK.amp));
    rep.add("amplitude after tensoring with the module",
            aMK.homology_zero ? std::string("none") : std::to_string(aMK.amp));
    rep.add("tensor homology dimensions", dims_str(tdims));
    rep.add("hom-complex homology dimensions", dims_str(hdims));
    rep.add("inf of the hom complex",
            aH.homology_zero ? std::string("none") : std::to_string(aH.inf));
    auto gd = gdim_estimate(A, M, cutoff);
    rep.add("gorenstein dimension",
            std::to_string(gd.value) + (gd.certified ? " (certified)" : " (lower bound)"));
    std::vector<std::string> asserted;

    auto seq = is_exact_sequence(A, xs);
    rep.add("sequence exact", verdict_str(seq.verdict));
    if (seq.verdict == Verdict::yes && n > 0) {
        // every stage of an exact sequence over an artinian ring is an exact
        // zero divisor, which forces homology at both ends of the complex
        GORLAB_CHECK(aK.amp == n, "an exact sequence must give full koszul amplitude");
        asserted.push_back("koszul amplitude equals the sequence length");
    }

    auto annxs = annihilator_subspace(A, ideal_span(A, xs));
    int annM = 0;
    if (M.n > 0 && n > 0) {
        Mat<F> stacked(n * M.n, M.n);
        for (int i = 0; i < n; ++i) {
            Mat<F> Xi = M.action_of(A, xs[i]);
            for (int r = 0; r < M.n; ++r)
                for (int c = 0; c < M.n; ++c) stacked.at(i * M.n + r, c) = Xi.at(r, c);
        }
        annM = Subspace<F>::span(A.field, kernel_basis(A.field, stacked)).dim();
    }
    rep.add("dim of the sequence annihilator in the ring", std::to_string(annxs.dim()));
    rep.add("dim of the sequence annihilator in the module", std::to_string(annM));
    if (n > 0 && M.n > 0 && annxs.dim() > 0 && annM > 0) {
        // both complexes then have nonzero homology at the extreme ends
        GORLAB_CHECK(aMK.amp == aK.amp,
                     "tensoring with the module must preserve the koszul amplitude");
        asserted.push_back("tensor amplitude equals the koszul amplitude");
    }

    if (socle(A).dim() == 1 && M.n > 0) {
        // over a self-injective ring the hom and tensor homologies mirror
        for (int i = 0; i <= n; ++i)
            GORLAB_CHECK(hdims[i] == tdims[n - i],
                         "hom/tensor homology mirror fails over a self-injective ring");
        GORLAB_CHECK(!aH.homology_zero && aH.inf == 0,
                     "the hom complex must begin in degree zero");
        // degree-zero hom homology is hom-of-the-module modulo the sequence
        auto Mstar = hom_module(A, M);
        Mat<F> rows(n * Mstar.n, Mstar.n);
        for (int i = 0; i < n; ++i) {
            Mat<F> Xi = Mstar.action_of(A, xs[i]);
            for (int b = 0; b < Mstar.n; ++b)
                for (int u = 0; u < Mstar.n; ++u) rows.at(i * Mstar.n + b, u) = Xi.at(u, b);
        }
        int cut = Subspace<F>::span(A.field, rows).dim();
        GORLAB_CHECK(hdims[0] == Mstar.n - cut,
                     "degree-zero hom homology must be hom modulo the sequence");
        asserted.push_back("hom/tensor mirror and degree-zero identification");
    }

    rep.verdict = Verdict::yes;
    if (asserted.empty()) {
        rep.status = "quantities computed; no identity hypothesis was verified";
    } else {
        rep.status = "verified: ";
        for (size_t i = 0; i < asserted.size(); ++i) {
            if (i) rep.status += "; ";
            rep.status += asserted[i];
        }
    }
    return rep;
}

template <class F>
CheckReport gp_dg_module_checks_g(const GradedRing<F>& R, const std::vector<Poly<F>>& fs,
                                  const PresentedModule<F>& M) {
    CheckReport rep;
    rep.criterion = "amplitude-diagnostics";
    int n = static_cast<int>(fs.size());
    auto K = koszul_g(R, fs);
    auto aK = amp_info_g(R, K.cx);
    auto aMK = tensor_amp_info_g(R, M, K.cx);
    int ih = inf_hom_g(R, M, K.cx);
    rep.add("koszul amplitude", aK.homology_zero ? std::string("none") : std::to_string(aK.amp));
    rep.add("amplitude after tensoring with the module",
            aMK.homology_zero ? std::string("none") : std::to_string(aMK.amp));
    rep.add("inf of the hom complex",
            ih == std::numeric_limits<int>::max() ? std::string("none") : std::to_string(ih));
    std::vector<std::string> asserted;

    auto t = make_tower_g(R, fs);
    bool all_exact = true, all_split = true;
    for (size_t i = 0; i < fs.size(); ++i) {
        auto kind = classify_element_g(t.stages[i], t.elems[i]);
        if (kind == ElementKind::not_exact) all_exact = false;
        if (kind != ElementKind::exact_zero_divisor) all_split = false;
    }
    rep.add("sequence exact", all_exact ? "yes" : "no");
    if (all_exact && all_split && n > 0) {
        GORLAB_CHECK(!aK.homology_zero && aK.amp == n,
                     "a sequence of exact zero divisors must give full koszul amplitude");
        asserted.push_back("koszul amplitude equals the sequence length");
    }

    bool mod_nonzero = !module_is_zero(R, M);
    bool ann_ring = false, ann_mod = false;
    if (n > 0) {
        VecPoly<F> col(n);
        for (int i = 0; i < n; ++i) col.c[i] = fs[i];
        for (const auto& v : kernel_of_free_map(R, n, {col}))
            if (!R.nf(v.c[0]).is_zero()) ann_ring = true;
        if (mod_nonzero) {
            int s = M.rank;
            std::vector<VecPoly<F>> cols;
            for (int j = 0; j < s; ++j) {
                VecPoly<F> col(n * s);
                for (int i = 0; i < n; ++i) col.c[i * s + j] = fs[i];
                cols.push_back(std::move(col));
            }
            Submodule<F> target{n * s, detail::block_relations(R, M, n)};
            auto pre = preimage_of_submodule(R, s, cols, target);
            auto rels = M.rels;
            for (auto& v : pre) rels.push_back(v);
            auto q = present_subquotient(R, s, rels, M.rels, M.gen_degs);
            ann_mod = !module_is_zero(R, q.module);
        }
    }
    rep.add("sequence annihilator in the ring nonzero", ann_ring ? "true" : "false");
    rep.add("sequence annihilator in the module nonzero", ann_mod ? "true" : "false");
    if (n > 0 && mod_nonzero && ann_ring && ann_mod) {
        GORLAB_CHECK(!aK.homology_zero && !aMK.homology_zero && aMK.amp == aK.amp,
                     "tensoring with the module must preserve the koszul amplitude");
        asserted.push_back("tensor amplitude equals the koszul amplitude");
    }

    rep.verdict = Verdict::yes;
    if (asserted.empty()) {
        rep.status = "quantities computed; no identity hypothesis was verified";
    } else {
        rep.status = "verified: ";
        for (size_t i = 0; i < asserted.size(); ++i) {
            if (i) rep.status += "; ";
            rep.status += asserted[i];
        }
    }
    return rep;
}

}  // namespace gorlab
