#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorlab/field.hpp"
#include "gorlab/groebner.hpp"

using namespace gorlab;

namespace {

template <class F>
Poly<F> P(const PolyRing<F>& r, const std::string& s) {
    return parse_poly(r, s);
}

template <class F>
VecPoly<F> col(const PolyRing<F>& r, std::initializer_list<std::string> entries) {
    VecPoly<F> v(static_cast<int>(entries.size()));
    int i = 0;
    for (const auto& s : entries) v.c[i++] = parse_poly(r, s);
    return v;
}

PolyRing<FpField> ring2() { return {FpField(101), {"x", "y"}, MonoOrderKind::grevlex}; }
PolyRing<FpField> ring3() { return {FpField(101), {"x", "y", "z"}, MonoOrderKind::grevlex}; }

} // namespace

TEST_CASE("reduced basis of the twisted cubic relations") {
    auto r = ring3();
    // x^2 - y and x^3 - z cut out the curve (t, t^2, t^3)
    auto gb = buchberger_ideal(r, {P(r, "x^2 - y"), P(r, "x^3 - z")});
    REQUIRE(gb.g.size() == 3);
    CHECK(gb.g[0].c[0] == P(r, "x^2 - y"));
    CHECK(gb.g[1].c[0] == P(r, "x*y - z"));
    CHECK(gb.g[2].c[0] == P(r, "y^2 - x*z"));
    // x^4 == y^2 == xz on the curve; xz is the normal form
    CHECK(normal_form_ideal(r, gb, P(r, "x^4")) == P(r, "x*z"));
    CHECK(normal_form_ideal(r, gb, P(r, "x^2*y - y^2")) ==
          normal_form_ideal(r, gb, P(r, "y^2 - x*z")));
    CHECK(normal_form_ideal(r, gb, P(r, "y^2 - x*z")).is_zero());
}

TEST_CASE("reduced basis is canonical under permutation and scaling") {
    auto r = ring3();
    auto gb1 = buchberger_ideal(r, {P(r, "x^2 - y"), P(r, "x^3 - z")});
    auto gb2 = buchberger_ideal(r, {P(r, "5*x^3 - 5*z"), P(r, "100*x^2 - 100*y"),
                                    P(r, "x^3 - z")});
    REQUIRE(gb1.g.size() == gb2.g.size());
    for (size_t i = 0; i < gb1.g.size(); ++i) CHECK(gb1.g[i] == gb2.g[i]);
}

TEST_CASE("normal form is linear and idempotent") {
    auto r = ring3();
    auto gb = buchberger_ideal(r, {P(r, "x^2 - y"), P(r, "x^3 - z")});
    auto a = P(r, "x^5 + y^3 - 2*z"), b = P(r, "x*y*z - 7");
    auto na = normal_form_ideal(r, gb, a), nb = normal_form_ideal(r, gb, b);
    CHECK(normal_form_ideal(r, gb, na) == na);
    CHECK(normal_form_ideal(r, gb, r.add(a, b)) == r.add(na, nb));
    CHECK(normal_form_ideal(r, gb, r.sub(a, na)).is_zero());
}

TEST_CASE("syzygy of two monomials") {
    auto r = ring2();
    auto em = ElimModule<FpField>::build(r, 1, {col(r, {"x^2"}), col(r, {"x*y"})}, {});
    auto syz = em.syzygies();
    REQUIRE(syz.size() == 1);
    CHECK(syz[0] == col(r, {"y", "-x"}));
    CHECK(em.member(col(r, {"x^3*y"})));
    CHECK_FALSE(em.member(col(r, {"x"})));
    CHECK_FALSE(em.member(col(r, {"y^2"})));
}

TEST_CASE("express recombines to the input") {
    auto r = ring3();
    std::vector<VecPoly<FpField>> gens = {col(r, {"x^2 - y"}), col(r, {"x^3 - z"})};
    auto em = ElimModule<FpField>::build(r, 1, gens, {});
    auto target = P(r, "x^4 - x*z");  // equals x^2(x^2 - y) + (y - x)(x^2 - y) ... member
    auto coeffs = em.express(col(r, {"x^4 - x*z"}));
    REQUIRE(coeffs.has_value());
    auto recomb = r.zero();
    for (size_t i = 0; i < coeffs->size(); ++i)
        recomb = r.add(recomb, r.mul((*coeffs)[i], gens[i].c[0]));
    CHECK(recomb == target);
    CHECK_FALSE(em.express(col(r, {"x"})).has_value());
}

TEST_CASE("annihilator over a quotient via elimination") {
    auto r = ring2();
    // over k[x,y]/(xy): ann(x) = (y)
    auto em = ElimModule<FpField>::build(r, 1, {col(r, {"x"})}, {P(r, "x*y")});
    auto syz = em.syzygies();
    REQUIRE(syz.size() == 1);
    CHECK(syz[0] == col(r, {"y"}));

    // over k[x,y]/(x^2, y^2): xy = y * x, so express(xy) on {x} gives (y)
    auto em2 =
        ElimModule<FpField>::build(r, 1, {col(r, {"x"})}, {P(r, "x^2"), P(r, "y^2")});
    auto c = em2.express(col(r, {"x*y"}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == P(r, "y"));
    CHECK_FALSE(em2.express(col(r, {"y"})).has_value());
}

TEST_CASE("rank-2 syzygies vanish for an invertible symbol matrix and appear mod its determinant") {
    auto r = ring2();
    std::vector<VecPoly<FpField>> cols = {col(r, {"x", "y"}), col(r, {"y", "x"})};
    auto em = ElimModule<FpField>::build(r, 2, cols, {});
    CHECK(em.syzygies().empty());

    auto emq = ElimModule<FpField>::build(r, 2, cols, {P(r, "x^2 - y^2")});
    auto syz = emq.syzygies();
    REQUIRE(!syz.empty());
    // every reported syzygy recombines to something in (x^2 - y^2) * P^2
    auto igb = buchberger_ideal(r, {P(r, "x^2 - y^2")});
    for (const auto& s : syz) {
        VecPoly<FpField> acc(2);
        for (int i = 0; i < 2; ++i)
            acc = vp_add(r, acc, vp_mul_poly(r, s.c[i], cols[i]));
        for (int p = 0; p < 2; ++p) CHECK(normal_form_ideal(r, igb, acc.c[p]).is_zero());
    }
    // the adjugate columns are syzygies, hence members of the syzygy module
    auto szm = ElimModule<FpField>::build(r, 2, syz, {});
    CHECK(szm.member(col(r, {"x", "-y"})));
    CHECK(szm.member(col(r, {"y", "-x"})));
}

TEST_CASE("module normal forms separate cosets") {
    auto r = ring2();
    // N = <(x,0), (0,y)> inside P^2: (x+y, y) and (y, y) differ by (x, 0)
    auto em = ElimModule<FpField>::build(r, 2, {col(r, {"x", "0"}), col(r, {"0", "y"})}, {});
    CHECK(em.nf(col(r, {"x + y", "y"})) == em.nf(col(r, {"y", "y"})));
    CHECK(em.nf(col(r, {"y", "x"})) == col(r, {"y", "x"}));
    CHECK(em.member(col(r, {"x^2", "x*y"})));
    CHECK_FALSE(em.member(col(r, {"y", "0"})));
}

TEST_CASE("finite staircases enumerate standard monomials in a fixed order") {
    // leads of k[x,y,z]/(x^2, y^2 + xz, z^2) under grevlex: x^2, y^2, z^2
    auto mk = [](int a, int b, int c) {
        Monomial m(3);
        m.e = {a, b, c};
        return m;
    };
    std::vector<Monomial> leads = {mk(2, 0, 0), mk(0, 2, 0), mk(0, 0, 2)};
    auto std8 = standard_monomials_finite(3, MonoOrderKind::grevlex, leads);
    REQUIRE(std8.has_value());
    std::vector<Monomial> expect = {mk(0, 0, 0), mk(0, 0, 1), mk(0, 1, 0), mk(1, 0, 0),
                                    mk(0, 1, 1), mk(1, 0, 1), mk(1, 1, 0), mk(1, 1, 1)};
    CHECK(*std8 == expect);

    // xy, xz leave every power of y standard: infinite
    CHECK_FALSE(standard_monomials_finite(3, MonoOrderKind::grevlex,
                                          {mk(1, 1, 0), mk(1, 0, 1)})
                    .has_value());
    // unit ideal: empty basis
    auto none = standard_monomials_finite(3, MonoOrderKind::grevlex, {mk(0, 0, 0)});
    REQUIRE(none.has_value());
    CHECK(none->empty());
}

TEST_CASE("staircase counting and dimension") {
    auto mk = [](int a, int b, int c) {
        Monomial m(3);
        m.e = {a, b, c};
        return m;
    };
    CHECK(staircase_hilbert_prefix(3, {mk(2, 0, 0), mk(0, 2, 0), mk(0, 0, 2)}, 4) ==
          std::vector<long long>{1, 3, 3, 1, 0});
    CHECK(staircase_hilbert_prefix(3, {mk(1, 1, 0), mk(1, 0, 1)}, 4) ==
          std::vector<long long>{1, 3, 4, 5, 6});
    CHECK(staircase_hilbert_prefix(3, {}, 2) == std::vector<long long>{1, 3, 6});

    CHECK(staircase_krull_dim(3, {mk(2, 0, 0), mk(0, 2, 0), mk(0, 0, 2)}) == 0);
    CHECK(staircase_krull_dim(3, {mk(1, 1, 0), mk(1, 0, 1)}) == 2);
    CHECK(staircase_krull_dim(3, {}) == 3);
    CHECK(staircase_krull_dim(3, {mk(0, 0, 0)}) == -1);
    Monomial xy2(2);
    xy2.e = {1, 1};
    CHECK(staircase_krull_dim(2, {xy2}) == 1);
}

TEST_CASE("rational-coefficient basis matches the prime-field one") {
    PolyRing<QField> rq{QField{}, {"x", "y", "z"}, MonoOrderKind::grevlex};
    auto gb = buchberger_ideal(rq, {P(rq, "x^2 - y"), P(rq, "x^3 - z")});
    REQUIRE(gb.g.size() == 3);
    CHECK(gb.g[0].c[0] == P(rq, "x^2 - y"));
    CHECK(gb.g[1].c[0] == P(rq, "x*y - z"));
    CHECK(gb.g[2].c[0] == P(rq, "y^2 - x*z"));
    CHECK(normal_form_ideal(rq, gb, P(rq, "x^4")) == P(rq, "x*z"));
}
