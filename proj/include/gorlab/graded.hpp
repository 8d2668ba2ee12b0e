#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gorlab/groebner.hpp"

namespace gorlab {

// ---------------------------------------------------------------------------
// Quotient ring A = P/I with I given by generators. The reduced basis of I is
// computed once; normal forms against it are the canonical representatives of
// ring elements. Homogeneous ideals get the full graded toolkit; an ideal with
// a finite staircase additionally supports the finite-dimensional route.
// ---------------------------------------------------------------------------

template <class F>
struct GradedRing {
    PolyRing<F> ring;
    std::vector<Poly<F>> ideal_gens;
    ModuleGB<F> ideal_gb;
    bool homogeneous = true;

    static GradedRing make(const PolyRing<F>& pr, const std::vector<Poly<F>>& gens) {
        GradedRing g{pr, {}, {}, true};
        for (const auto& p : gens) {
            if (p.is_zero()) continue;
            if (!pr.field.is_zero(pr.constant_coeff(p)))
                throw error("relation has a nonzero constant term");
            g.ideal_gens.push_back(p);
            if (!pr.is_homogeneous(p)) g.homogeneous = false;
        }
        g.ideal_gb = buchberger_ideal(pr, g.ideal_gens);
        return g;
    }

    Poly<F> nf(const Poly<F>& p) const { return normal_form_ideal(ring, ideal_gb, p); }

    VecPoly<F> nf_vec(const VecPoly<F>& v) const {
        VecPoly<F> out(v.rank());
        for (int i = 0; i < v.rank(); ++i) out.c[i] = nf(v.c[i]);
        return out;
    }

    std::vector<Monomial> lead_monos() const {
        std::vector<Monomial> l;
        for (const auto& t : ideal_gb.leads) l.push_back(t.m);
        return l;
    }

    bool is_artinian_quotient() const {
        return standard_monomials_finite(ring.nvars(), ring.order, lead_monos()).has_value();
    }

    std::optional<std::vector<Monomial>> quotient_basis() const {
        return standard_monomials_finite(ring.nvars(), ring.order, lead_monos());
    }

    std::vector<long long> hilbert_prefix(int maxdeg) const {
        return staircase_hilbert_prefix(ring.nvars(), lead_monos(), maxdeg);
    }

    int krull_dim() const { return staircase_krull_dim(ring.nvars(), lead_monos()); }
};

// Degree of a homogeneous module element under generator shifts; nullopt when
// the element is zero, throws when inhomogeneous.
template <class F>
std::optional<int> vp_degree(const PolyRing<F>& r, const VecPoly<F>& v,
                             const std::vector<int>& shifts) {
    std::optional<int> deg;
    for (int p = 0; p < v.rank(); ++p) {
        if (v.c[p].is_zero()) continue;
        if (!r.is_homogeneous(v.c[p])) throw error("inhomogeneous module element");
        int d = v.c[p].lead().m.deg() + (shifts.empty() ? 0 : shifts[p]);
        if (deg && *deg != d) throw error("inhomogeneous module element");
        deg = d;
    }
    return deg;
}

// ---------------------------------------------------------------------------
// Ideals of A, kept as generator lists (normal forms). Canonical data is the
// reduced ambient basis of J + I.
// ---------------------------------------------------------------------------

template <class F>
struct QIdeal {
    std::vector<Poly<F>> gens;
};

template <class F>
ModuleGB<F> ideal_gb_ambient(const GradedRing<F>& R, const QIdeal<F>& J) {
    std::vector<Poly<F>> all = J.gens;
    all.insert(all.end(), R.ideal_gens.begin(), R.ideal_gens.end());
    return buchberger_ideal(R.ring, all);
}

template <class F>
bool ideal_equal(const GradedRing<F>& R, const QIdeal<F>& a, const QIdeal<F>& b) {
    auto ga = ideal_gb_ambient(R, a);
    auto gb = ideal_gb_ambient(R, b);
    if (ga.g.size() != gb.g.size()) return false;
    for (size_t i = 0; i < ga.g.size(); ++i)
        if (!(ga.g[i] == gb.g[i])) return false;
    return true;
}

template <class F>
bool ideal_member(const GradedRing<F>& R, const QIdeal<F>& J, const Poly<F>& p) {
    return normal_form_ideal(R.ring, ideal_gb_ambient(R, J), p).is_zero();
}

template <class F>
bool ideal_is_zero(const GradedRing<F>& R, const QIdeal<F>& J) {
    for (const auto& g : J.gens)
        if (!R.nf(g).is_zero()) return false;
    return true;
}

// (J : f) in A, via syzygies of the single column f over P/(J + I).
template <class F>
QIdeal<F> colon_ideal(const GradedRing<F>& R, const QIdeal<F>& J, const Poly<F>& f) {
    std::vector<Poly<F>> quot = J.gens;
    quot.insert(quot.end(), R.ideal_gens.begin(), R.ideal_gens.end());
    VecPoly<F> v(1);
    v.c[0] = f;
    auto em = ElimModule<F>::build(R.ring, 1, {v}, quot);
    QIdeal<F> out;
    for (const auto& s : em.syzygies()) out.gens.push_back(R.nf(s.c[0]));
    return out;
}

// ann_A(x_1..x_m) = { a : a x_i = 0 in A for all i }, one syzygy call on the
// stacked column (x_1,...,x_m).
template <class F>
QIdeal<F> annihilator_ideal(const GradedRing<F>& R, const std::vector<Poly<F>>& xs) {
    if (xs.empty()) throw error("annihilator of the empty sequence");
    int m = static_cast<int>(xs.size());
    VecPoly<F> v(m);
    for (int i = 0; i < m; ++i) v.c[i] = xs[i];
    auto em = ElimModule<F>::build(R.ring, m, {v}, R.ideal_gens);
    QIdeal<F> out;
    for (const auto& s : em.syzygies()) out.gens.push_back(R.nf(s.c[0]));
    return out;
}

// Minimal homogeneous generators: candidates sorted by degree, then by the
// monomial order on lead terms, then input position; greedily kept when not
// already generated. Graded Nakayama makes the count an invariant.
template <class F>
std::vector<Poly<F>> minimal_gens_ideal(const GradedRing<F>& R, const QIdeal<F>& J) {
    std::vector<Poly<F>> cand;
    for (const auto& g : J.gens) {
        Poly<F> p = R.nf(g);
        if (!p.is_zero()) cand.push_back(p);
    }
    for (const auto& p : cand)
        if (!R.ring.is_homogeneous(p))
            throw error("minimal generators need homogeneous data");
    std::stable_sort(cand.begin(), cand.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        if (a.lead().m.deg() != b.lead().m.deg()) return a.lead().m.deg() < b.lead().m.deg();
        return R.ring.cmp(a.lead().m, b.lead().m) > 0;
    });
    std::vector<Poly<F>> kept;
    for (const auto& p : cand) {
        QIdeal<F> cur{kept};
        if (!ideal_member(R, cur, p)) kept.push_back(p);
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Submodules of free modules A^rank, as generator lists.
// ---------------------------------------------------------------------------

template <class F>
struct Submodule {
    int rank = 0;
    std::vector<VecPoly<F>> gens;
};

template <class F>
ElimModule<F> submodule_elim(const GradedRing<F>& R, const Submodule<F>& N,
                             const std::vector<VecPoly<F>>& untracked = {}) {
    return ElimModule<F>::build(R.ring, N.rank, N.gens, R.ideal_gens, untracked);
}

template <class F>
bool submodule_member(const GradedRing<F>& R, const Submodule<F>& N, const VecPoly<F>& v) {
    return submodule_elim(R, N).member(v);
}

// Syzygies of the generators of N over A.
template <class F>
std::vector<VecPoly<F>> syzygies_over(const GradedRing<F>& R, const Submodule<F>& N) {
    auto em = submodule_elim(R, N);
    std::vector<VecPoly<F>> out;
    for (auto& s : em.syzygies()) out.push_back(R.nf_vec(s));
    return out;
}

// Minimal homogeneous generators of a submodule; same policy as for ideals.
template <class F>
std::vector<VecPoly<F>> minimal_gens_module(const GradedRing<F>& R, const Submodule<F>& N,
                                            const std::vector<int>& shifts) {
    struct Cand {
        VecPoly<F> v;
        int deg;
        ModTerm lead;
    };
    std::vector<Cand> cand;
    ModOrder ord{R.ring.order, -1};
    for (const auto& g : N.gens) {
        VecPoly<F> v = R.nf_vec(g);
        if (v.is_zero()) continue;
        auto d = vp_degree(R.ring, v, shifts);
        cand.push_back({v, *d, vp_lead(ord, v)});
    }
    std::stable_sort(cand.begin(), cand.end(), [&](const Cand& a, const Cand& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return ord.cmp(a.lead, b.lead) > 0;
    });
    std::vector<VecPoly<F>> kept;
    for (const auto& c : cand) {
        Submodule<F> cur{N.rank, kept};
        if (!submodule_member(R, cur, c.v)) kept.push_back(c.v);
    }
    return kept;
}

// Kernel of the free-module map A^a -> A^b whose columns are cols[i] in A^b:
// the syzygies of the columns.
template <class F>
std::vector<VecPoly<F>> kernel_of_free_map(const GradedRing<F>& R, int target_rank,
                                           const std::vector<VecPoly<F>>& cols) {
    Submodule<F> im{target_rank, cols};
    return syzygies_over(R, im);
}

// Generators of { v in A^a : (map with columns cols) v lies in N }.
template <class F>
std::vector<VecPoly<F>> preimage_of_submodule(const GradedRing<F>& R, int target_rank,
                                              const std::vector<VecPoly<F>>& cols,
                                              const Submodule<F>& N) {
    auto em = ElimModule<F>::build(R.ring, target_rank, cols, R.ideal_gens, N.gens);
    std::vector<VecPoly<F>> out;
    for (auto& s : em.syzygies()) out.push_back(R.nf_vec(s));
    return out;
}

// ---------------------------------------------------------------------------
// Finitely presented A-modules: coker of a relation matrix with columns rels
// in A^rank. gen_degs carries the graded shifts of the generators.
// ---------------------------------------------------------------------------

template <class F>
struct PresentedModule {
    int rank = 0;
    std::vector<VecPoly<F>> rels;
    std::vector<int> gen_degs;

    static PresentedModule free_module(const GradedRing<F>&, int rank,
                                       std::vector<int> degs = {}) {
        PresentedModule m;
        m.rank = rank;
        m.gen_degs = degs.empty() ? std::vector<int>(rank, 0) : std::move(degs);
        return m;
    }
};

// Remove generators hit by unit (degree-zero) relation entries. Standard
// Nakayama pruning; afterwards every relation entry lies in the maximal ideal.
template <class F>
PresentedModule<F> prune_presentation(const GradedRing<F>& R, PresentedModule<F> M) {
    if (static_cast<int>(M.gen_degs.size()) != M.rank) M.gen_degs.assign(M.rank, 0);
    for (;;) {
        int gi = -1, cj = -1;
        typename F::Elem unit{};
        for (size_t j = 0; j < M.rels.size() && gi < 0; ++j)
            for (int i = 0; i < M.rank; ++i) {
                const Poly<F>& e = M.rels[j].c[i];
                if (!e.is_zero() && e.total_deg() == 0) {
                    gi = i;
                    cj = static_cast<int>(j);
                    unit = e.lead().c;
                    break;
                }
            }
        if (gi < 0) break;
        const PolyRing<F>& r = R.ring;
        VecPoly<F> pivot = M.rels[cj];
        auto inv = r.field.inv(unit);
        std::vector<VecPoly<F>> next;
        for (size_t j = 0; j < M.rels.size(); ++j) {
            if (static_cast<int>(j) == cj) continue;
            VecPoly<F> col = M.rels[j];
            const Poly<F>& coeff = col.c[gi];
            if (!coeff.is_zero()) {
                Poly<F> factor = r.mul(coeff, r.constant(inv));
                col = vp_sub(r, col, vp_mul_poly(r, factor, pivot));
            }
            col.c.erase(col.c.begin() + gi);
            VecPoly<F> nf = R.nf_vec(col);
            if (!nf.is_zero()) next.push_back(std::move(nf));
        }
        M.rels = std::move(next);
        M.gen_degs.erase(M.gen_degs.begin() + gi);
        --M.rank;
    }
    return M;
}

// coker(M) = 0 iff every unit vector lies in the relation span.
template <class F>
bool module_is_zero(const GradedRing<F>& R, const PresentedModule<F>& M) {
    if (M.rank == 0) return true;
    Submodule<F> N{M.rank, M.rels};
    auto em = submodule_elim(R, N);
    for (int i = 0; i < M.rank; ++i)
        if (!em.member(vp_unit(R.ring, M.rank, i))) return false;
    return true;
}

// Minimal generator count of coker(M): prune then count survivors.
template <class F>
int minimal_gen_count(const GradedRing<F>& R, const PresentedModule<F>& M) {
    return prune_presentation(R, M).rank;
}

// ann_A(coker M): one syzygy computation on the stacked generator column with
// the relations placed block-diagonally.
template <class F>
QIdeal<F> annihilator_module(const GradedRing<F>& R, const PresentedModule<F>& M) {
    if (M.rank == 0) return QIdeal<F>{{R.ring.one()}};
    int r = M.rank;
    int big = r * r;
    VecPoly<F> stacked(big);
    for (int i = 0; i < r; ++i) stacked.c[i * r + i] = R.ring.one();
    std::vector<VecPoly<F>> untracked;
    for (int i = 0; i < r; ++i)
        for (const auto& rel : M.rels) {
            VecPoly<F> v(big);
            for (int p = 0; p < r; ++p) v.c[i * r + p] = rel.c[p];
            untracked.push_back(std::move(v));
        }
    auto em = ElimModule<F>::build(R.ring, big, {stacked}, R.ideal_gens, untracked);
    QIdeal<F> out;
    for (const auto& s : em.syzygies()) {
        Poly<F> p = R.nf(s.c[0]);
        if (!p.is_zero()) out.gens.push_back(p);
    }
    return out;
}

// Present the subquotient N/B of A^rank (B must lie in N). Returns the chosen
// minimal generators of N alongside the presentation of the quotient.
template <class F>
struct SubquotientPresentation {
    PresentedModule<F> module;
    std::vector<VecPoly<F>> gen_vectors;  // generators of N, in A^rank
};

template <class F>
SubquotientPresentation<F> present_subquotient(const GradedRing<F>& R, int rank,
                                               const std::vector<VecPoly<F>>& Ngens,
                                               const std::vector<VecPoly<F>>& Bgens,
                                               const std::vector<int>& ambient_shifts = {}) {
    Submodule<F> N{rank, Ngens};
    std::vector<VecPoly<F>> mingens = minimal_gens_module(R, N, ambient_shifts);
    int g = static_cast<int>(mingens.size());

    PresentedModule<F> M;
    M.rank = g;
    for (const auto& v : mingens) {
        auto d = vp_degree(R.ring, v, ambient_shifts);
        M.gen_degs.push_back(d ? *d : 0);
    }

    Submodule<F> Nmin{rank, mingens};
    auto em = submodule_elim(R, Nmin);
    for (const auto& b : Bgens) {
        if (R.nf_vec(b).is_zero()) continue;
        auto coeffs = em.express(b);
        if (!coeffs) throw error("subquotient: relation lies outside the submodule");
        VecPoly<F> col(g);
        for (int i = 0; i < g; ++i) col.c[i] = R.nf((*coeffs)[i]);
        if (!col.is_zero()) M.rels.push_back(std::move(col));
    }
    for (auto& s : syzygies_over(R, Nmin)) M.rels.push_back(std::move(s));

    SubquotientPresentation<F> out;
    out.module = prune_presentation(R, std::move(M));
    out.gen_vectors = std::move(mingens);
    return out;
}

// Hilbert function of coker(M) by counting standard module monomials of the
// lead-term module of (relations + I*A^rank), degree-shifted per generator.
template <class F>
std::vector<long long> module_hilbert_prefix(const GradedRing<F>& R, const PresentedModule<F>& M,
                                             int maxdeg) {
    std::vector<long long> h(maxdeg + 1, 0);
    if (M.rank == 0) return h;
    Submodule<F> N{M.rank, M.rels};
    auto em = submodule_elim(R, N);
    // collect lead terms per position (block-1 leads of the elimination basis)
    std::vector<std::vector<Monomial>> leads(M.rank);
    for (const auto& t : em.gb.leads)
        if (t.pos < M.rank) leads[t.pos].push_back(t.m);
    for (int p = 0; p < M.rank; ++p) {
        int shift = M.gen_degs.empty() ? 0 : M.gen_degs[p];
        int room = maxdeg - shift;
        if (room < 0) continue;
        auto counts = staircase_hilbert_prefix(R.ring.nvars(), leads[p], room);
        for (int d = 0; d <= room; ++d) h[d + shift] += counts[d];
    }
    return h;
}

// Hom_A(coker P, A^t) as a submodule of A^(t*rank): matrices phi (t x rank)
// with phi * P = 0 over A. Layout: phi[u][i] sits at u*rank + i.
template <class F>
Submodule<F> hom_into_free(const GradedRing<F>& R, const PresentedModule<F>& M, int t) {
    int r = M.rank;
    int amb = t * r;
    // condition map sends phi to (phi . rel_k)_u for every relation column
    std::vector<VecPoly<F>> cols;
    int s = static_cast<int>(M.rels.size());
    for (int u0 = 0; u0 < t; ++u0)
        for (int i = 0; i < r; ++i) {
            VecPoly<F> col(t * std::max(s, 1));
            if (s > 0)
                for (int k = 0; k < s; ++k) col.c[u0 * s + k] = M.rels[k].c[i];
            cols.push_back(std::move(col));
        }
    Submodule<F> out;
    out.rank = amb;
    out.gens = kernel_of_free_map(R, t * std::max(s, 1), cols);
    return out;
}

} // namespace gorlab
