#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "gorlab/poly.hpp"

namespace gorlab {

// ---------------------------------------------------------------------------
// Elements of a free module P^rank: one polynomial per position.
// ---------------------------------------------------------------------------

template <class F>
struct VecPoly {
    std::vector<Poly<F>> c;

    VecPoly() = default;
    explicit VecPoly(int rank) : c(rank) {}

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Poly<F>& p) { return p.is_zero(); });
    }
    bool operator==(const VecPoly& o) const { return c == o.c; }
};

template <class F>
VecPoly<F> vp_unit(const PolyRing<F>& r, int rank, int pos) {
    VecPoly<F> v(rank);
    v.c[pos] = r.one();
    return v;
}

template <class F>
VecPoly<F> vp_add(const PolyRing<F>& r, const VecPoly<F>& a, const VecPoly<F>& b) {
    VecPoly<F> v(a.rank());
    for (int i = 0; i < a.rank(); ++i) v.c[i] = r.add(a.c[i], b.c[i]);
    return v;
}

template <class F>
VecPoly<F> vp_sub(const PolyRing<F>& r, const VecPoly<F>& a, const VecPoly<F>& b) {
    VecPoly<F> v(a.rank());
    for (int i = 0; i < a.rank(); ++i) v.c[i] = r.sub(a.c[i], b.c[i]);
    return v;
}

template <class F>
VecPoly<F> vp_scale(const PolyRing<F>& r, typename F::Elem s, const VecPoly<F>& a) {
    VecPoly<F> v(a.rank());
    for (int i = 0; i < a.rank(); ++i) v.c[i] = r.scale(s, a.c[i]);
    return v;
}

template <class F>
VecPoly<F> vp_mul_term(const PolyRing<F>& r, const Monomial& m, typename F::Elem s,
                       const VecPoly<F>& a) {
    VecPoly<F> v(a.rank());
    for (int i = 0; i < a.rank(); ++i) v.c[i] = r.mul_term(m, s, a.c[i]);
    return v;
}

template <class F>
VecPoly<F> vp_mul_poly(const PolyRing<F>& r, const Poly<F>& p, const VecPoly<F>& a) {
    VecPoly<F> v(a.rank());
    for (int i = 0; i < a.rank(); ++i) v.c[i] = r.mul(p, a.c[i]);
    return v;
}

// ---------------------------------------------------------------------------
// Module term order. Positions below `block` dominate everything at or past
// it (the elimination device behind syzygies / membership); within a block the
// order is position-over-term with lower position bigger, ties broken by the
// ring's monomial order.
// ---------------------------------------------------------------------------

struct ModTerm {
    int pos = -1;
    Monomial m;
};

struct ModOrder {
    MonoOrderKind mono = MonoOrderKind::grevlex;
    int block = -1;  // -1: single block (plain position-over-term)

    int cmp(const ModTerm& a, const ModTerm& b) const {
        if (block >= 0) {
            bool a1 = a.pos < block, b1 = b.pos < block;
            if (a1 != b1) return a1 ? 1 : -1;
        }
        if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
        return mono_cmp(mono, a.m, b.m);
    }
};

// Leading module term of v (largest position/monomial pair under ord).
template <class F>
ModTerm vp_lead(const ModOrder& ord, const VecPoly<F>& v, typename F::Elem* coeff = nullptr) {
    ModTerm best;
    const typename F::Elem* bc = nullptr;
    for (int p = 0; p < v.rank(); ++p) {
        if (v.c[p].is_zero()) continue;
        ModTerm t{p, v.c[p].lead().m};
        if (best.pos < 0 || ord.cmp(t, best) > 0) {
            best = t;
            bc = &v.c[p].lead().c;
        }
    }
    GORLAB_CHECK(best.pos >= 0, "lead of zero module element");
    if (coeff) *coeff = *bc;
    return best;
}

// ---------------------------------------------------------------------------
// Buchberger for submodules of free modules. The basis is kept reduced and
// monic, sorted with largest lead first, so a reduced basis is canonical for
// the generator set and order.
// ---------------------------------------------------------------------------

template <class F>
struct ModuleGB {
    ModOrder ord;
    int rank = 0;
    std::vector<VecPoly<F>> g;
    std::vector<ModTerm> leads;

    bool lead_reducible(const ModTerm& t, int* which = nullptr) const {
        for (size_t i = 0; i < g.size(); ++i) {
            if (leads[i].pos == t.pos && leads[i].m.divides(t.m)) {
                if (which) *which = static_cast<int>(i);
                return true;
            }
        }
        return false;
    }
};

// Full normal form: every term of the result is irreducible.
template <class F>
VecPoly<F> normal_form(const PolyRing<F>& r, const ModuleGB<F>& gb, VecPoly<F> v) {
    VecPoly<F> out(v.rank());
    while (!v.is_zero()) {
        typename F::Elem c;
        ModTerm t = vp_lead(gb.ord, v, &c);
        int which = -1;
        if (gb.lead_reducible(t, &which)) {
            const VecPoly<F>& g = gb.g[which];
            Monomial q = gb.leads[which].m.quot_into(t.m);
            v = vp_sub(r, v, vp_mul_term(r, q, c, g));  // basis is monic
        } else {
            out.c[t.pos] = r.add(out.c[t.pos], r.mono(t.m, c));
            v.c[t.pos] = r.sub(v.c[t.pos], r.mono(t.m, c));
        }
    }
    return out;
}

namespace detail {

template <class F>
VecPoly<F> spair(const PolyRing<F>& r, const ModOrder& ord, const VecPoly<F>& f,
                 const ModTerm& lf, const VecPoly<F>& g, const ModTerm& lg) {
    (void)ord;
    Monomial l = Monomial::lcm(lf.m, lg.m);
    // both inputs are monic
    return vp_sub(r, vp_mul_term(r, lf.m.quot_into(l), r.field.one(), f),
                  vp_mul_term(r, lg.m.quot_into(l), r.field.one(), g));
}

} // namespace detail

template <class F>
ModuleGB<F> buchberger(const PolyRing<F>& ring, const ModOrder& ord, int rank,
                       const std::vector<VecPoly<F>>& gens) {
    ModuleGB<F> gb;
    gb.ord = ord;
    gb.rank = rank;

    auto push = [&](VecPoly<F> v) {
        typename F::Elem c;
        ModTerm t = vp_lead(ord, v, &c);
        v = vp_scale(ring, ring.field.inv(c), v);
        gb.g.push_back(std::move(v));
        gb.leads.push_back(t);
    };

    for (const auto& v : gens)
        if (!v.is_zero()) push(v);

    struct Pair {
        int i, j, deg;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (gb.leads[i].pos != gb.leads[j].pos) continue;
            // The coprime-lead shortcut is only sound for ideals.
            if (rank == 1 && ord.block < 0 && Monomial::coprime(gb.leads[i].m, gb.leads[j].m))
                continue;
            pairs.push_back({i, j, Monomial::lcm(gb.leads[i].m, gb.leads[j].m).deg()});
        }
    };
    for (size_t j = 0; j < gb.g.size(); ++j) add_pairs(static_cast<int>(j));

    while (!pairs.empty()) {
        // normal selection: smallest lcm degree, then lexicographic on (i, j)
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.deg != b.deg ? a.deg < b.deg : (a.i != b.i ? a.i < b.i : a.j < b.j)) best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        VecPoly<F> s =
            detail::spair(ring, ord, gb.g[pr.i], gb.leads[pr.i], gb.g[pr.j], gb.leads[pr.j]);
        VecPoly<F> r = normal_form(ring, gb, std::move(s));
        if (r.is_zero()) continue;
        push(std::move(r));
        add_pairs(static_cast<int>(gb.g.size()) - 1);
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::vector<char> keep(gb.g.size(), 1);
    for (size_t i = 0; i < gb.g.size(); ++i)
        for (size_t j = 0; j < gb.g.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (gb.leads[j].pos == gb.leads[i].pos && gb.leads[j].m.divides(gb.leads[i].m) &&
                !(gb.leads[j].m == gb.leads[i].m && j > i))
                keep[i] = 0;
        }
    ModuleGB<F> min;
    min.ord = ord;
    min.rank = rank;
    for (size_t i = 0; i < gb.g.size(); ++i)
        if (keep[i]) {
            min.g.push_back(gb.g[i]);
            min.leads.push_back(gb.leads[i]);
        }

    // interreduce to the unique reduced basis
    for (size_t i = 0; i < min.g.size(); ++i) {
        ModuleGB<F> others;
        others.ord = ord;
        others.rank = rank;
        for (size_t j = 0; j < min.g.size(); ++j)
            if (j != i) {
                others.g.push_back(min.g[j]);
                others.leads.push_back(min.leads[j]);
            }
        VecPoly<F> red = normal_form(ring, others, min.g[i]);
        GORLAB_CHECK(!red.is_zero(), "reduced basis element vanished after minimalization");
        typename F::Elem c;
        ModTerm t = vp_lead(ord, red, &c);
        min.g[i] = vp_scale(ring, ring.field.inv(c), red);
        min.leads[i] = t;
    }

    // canonical ordering: largest lead first
    std::vector<int> idx(min.g.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return ord.cmp(min.leads[a], min.leads[b]) > 0; });
    ModuleGB<F> out;
    out.ord = ord;
    out.rank = rank;
    for (int i : idx) {
        out.g.push_back(min.g[i]);
        out.leads.push_back(min.leads[i]);
    }
    return out;
}

// Ideal case: polynomials as rank-1 module elements.
template <class F>
ModuleGB<F> buchberger_ideal(const PolyRing<F>& ring, const std::vector<Poly<F>>& gens) {
    std::vector<VecPoly<F>> v;
    for (const auto& p : gens) {
        VecPoly<F> w(1);
        w.c[0] = p;
        v.push_back(std::move(w));
    }
    return buchberger(ring, ModOrder{ring.order, -1}, 1, v);
}

template <class F>
Poly<F> normal_form_ideal(const PolyRing<F>& ring, const ModuleGB<F>& gb, const Poly<F>& p) {
    VecPoly<F> v(1);
    v.c[0] = p;
    return normal_form(ring, gb, std::move(v)).c[0];
}

// ---------------------------------------------------------------------------
// Elimination workspace for a generator set N = <n_1..n_s> + I*P^r inside P^r.
// One Groebner basis answers normal forms, membership, expressing elements in
// the n_i, and syzygies of the n_i over P/I.
// ---------------------------------------------------------------------------

template <class F>
struct ElimModule {
    const PolyRing<F>* ring = nullptr;
    int rank = 0;      // r, the ambient free rank over the quotient ring
    int ngens = 0;     // s
    ModuleGB<F> gb;    // basis in P^(r+s), block boundary r

    // tracked generators get a cofactor position each; untracked columns and
    // the quotient ideal (placed in every ambient position) do not.
    static ElimModule build(const PolyRing<F>& ring, int rank,
                            const std::vector<VecPoly<F>>& gens,
                            const std::vector<Poly<F>>& quotient_ideal,
                            const std::vector<VecPoly<F>>& untracked = {}) {
        ElimModule em;
        em.ring = &ring;
        em.rank = rank;
        em.ngens = static_cast<int>(gens.size());
        int total = rank + em.ngens;
        std::vector<VecPoly<F>> ext;
        for (int i = 0; i < em.ngens; ++i) {
            VecPoly<F> v(total);
            GORLAB_CHECK(gens[i].rank() == rank, "elim module: generator rank mismatch");
            for (int p = 0; p < rank; ++p) v.c[p] = gens[i].c[p];
            v.c[rank + i] = ring.one();
            ext.push_back(std::move(v));
        }
        for (const auto& u : untracked) {
            GORLAB_CHECK(u.rank() == rank, "elim module: untracked rank mismatch");
            VecPoly<F> v(total);
            for (int p = 0; p < rank; ++p) v.c[p] = u.c[p];
            ext.push_back(std::move(v));
        }
        for (const auto& q : quotient_ideal)
            for (int p = 0; p < rank; ++p) {
                VecPoly<F> v(total);
                v.c[p] = q;
                ext.push_back(std::move(v));
            }
        em.gb = buchberger(ring, ModOrder{ring.order, rank}, total, ext);
        return em;
    }

    // Canonical normal form of v modulo N + I*P^r.
    VecPoly<F> nf(const VecPoly<F>& v) const {
        VecPoly<F> ext(rank + ngens);
        for (int p = 0; p < rank; ++p) ext.c[p] = v.c[p];
        VecPoly<F> red = normal_form(*ring, gb, std::move(ext));
        VecPoly<F> out(rank);
        for (int p = 0; p < rank; ++p) out.c[p] = red.c[p];
        return out;
    }

    bool member(const VecPoly<F>& v) const { return nf(v).is_zero(); }

    // Coefficients a_i with v = sum a_i n_i modulo I*P^r, when v is a member.
    std::optional<std::vector<Poly<F>>> express(const VecPoly<F>& v) const {
        VecPoly<F> ext(rank + ngens);
        for (int p = 0; p < rank; ++p) ext.c[p] = v.c[p];
        VecPoly<F> red = normal_form(*ring, gb, std::move(ext));
        for (int p = 0; p < rank; ++p)
            if (!red.c[p].is_zero()) return std::nullopt;
        std::vector<Poly<F>> coeffs(ngens);
        const PolyRing<F>& r = *ring;
        for (int i = 0; i < ngens; ++i) coeffs[i] = r.neg(red.c[rank + i]);
        return coeffs;
    }

    // Generators of { (a_1..a_s) : sum a_i n_i = 0 over P/I }, canonical order.
    std::vector<VecPoly<F>> syzygies() const {
        std::vector<VecPoly<F>> out;
        for (const auto& g : gb.g) {
            bool block1 = false;
            for (int p = 0; p < rank; ++p)
                if (!g.c[p].is_zero()) { block1 = true; break; }
            if (block1) continue;
            VecPoly<F> s(ngens);
            for (int i = 0; i < ngens; ++i) s.c[i] = g.c[rank + i];
            out.push_back(std::move(s));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Staircase utilities on a set of leading terms (ideal case: positions all 0).
// ---------------------------------------------------------------------------

// Standard monomials of a monomial ideal, when finitely many; nullopt when the
// staircase is infinite. Order: degree, then the ring's monomial order, both
// ascending, so bases come out deterministic.
inline std::optional<std::vector<Monomial>> standard_monomials_finite(
    int nvars, MonoOrderKind ord, const std::vector<Monomial>& leads) {
    for (const auto& l : leads)
        if (l.is_one()) return std::vector<Monomial>{};
    for (int v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const auto& l : leads) {
            bool only_v = l.e[v] > 0;
            for (int w = 0; w < nvars && only_v; ++w)
                if (w != v && l.e[w] > 0) only_v = false;
            if (only_v) { pure = true; break; }
        }
        if (!pure) return std::nullopt;  // that variable's powers are all standard
    }
    std::vector<Monomial> out;
    std::vector<Monomial> frontier{Monomial(nvars)};
    auto divisible = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return true;
        return false;
    };
    // breadth-first over the divisibility lattice
    std::vector<Monomial> seen;
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            if (divisible(m)) continue;
            if (std::find(out.begin(), out.end(), m) != out.end()) continue;
            out.push_back(m);
            for (int v = 0; v < nvars; ++v) {
                Monomial x = m * Monomial::var(nvars, v);
                if (std::find(next.begin(), next.end(), x) == next.end()) next.push_back(x);
            }
        }
        frontier = std::move(next);
        GORLAB_CHECK(out.size() < 2000000, "staircase enumeration exploded");
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        int da = a.deg(), db = b.deg();
        if (da != db) return da < db;
        return mono_cmp(ord, a, b) < 0;
    });
    return out;
}

// Count standard monomials degree by degree, up to maxdeg inclusive.
inline std::vector<long long> staircase_hilbert_prefix(int nvars,
                                                       const std::vector<Monomial>& leads,
                                                       int maxdeg) {
    std::vector<long long> h(maxdeg + 1, 0);
    Monomial m(nvars);
    // depth-first enumeration of exponent vectors with total degree <= maxdeg
    auto divisible = [&](const Monomial& x) {
        for (const auto& l : leads)
            if (l.divides(x)) return true;
        return false;
    };
    std::vector<int> stack;
    std::function<void(int, int)> rec = [&](int var, int deg) {
        if (var == nvars) {
            if (!divisible(m)) ++h[deg];
            return;
        }
        for (int e = 0; deg + e <= maxdeg; ++e) {
            m.e[var] = e;
            // prune: if already divisible by a lead using vars <= var, deeper
            // assignments stay divisible; cheap test only at the leaves keeps
            // this simple and desk-scale fast
            rec(var + 1, deg + e);
        }
        m.e[var] = 0;
    };
    rec(0, 0);
    return h;
}

// Krull dimension of P/(monomial ideal): the largest subset S of variables
// such that no generator's support is contained in S.
inline int staircase_krull_dim(int nvars, const std::vector<Monomial>& leads) {
    for (const auto& l : leads)
        if (l.is_one()) return -1;  // unit ideal: empty variety
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const auto& l : leads) {
            bool inside = true;
            for (int v = 0; v < nvars; ++v)
                if (l.e[v] > 0 && !(mask & (1u << v))) { inside = false; break; }
            if (inside) { ok = false; break; }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace gorlab
