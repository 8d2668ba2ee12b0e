#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorlab/field.hpp"
#include "gorlab/graded.hpp"
#include "gorlab/pfaffian.hpp"

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

GradedRing<FpField> quotient(const std::vector<std::string>& vars,
                             const std::vector<std::string>& rels) {
    PolyRing<FpField> pr{FpField(101), vars, MonoOrderKind::grevlex};
    std::vector<Poly<FpField>> gens;
    for (const auto& s : rels) gens.push_back(parse_poly(pr, s));
    return GradedRing<FpField>::make(pr, gens);
}

QIdeal<FpField> ideal(const GradedRing<FpField>& R, const std::vector<std::string>& gens) {
    QIdeal<FpField> J;
    for (const auto& s : gens) J.gens.push_back(parse_poly(R.ring, s));
    return J;
}

} // namespace

TEST_CASE("quotient ring basics on an eight-dimensional specimen") {
    auto R = quotient({"x", "y", "z"}, {"x^2", "y^2 + x*z", "z^2"});
    CHECK(R.homogeneous);
    CHECK(R.is_artinian_quotient());
    auto basis = R.quotient_basis();
    REQUIRE(basis.has_value());
    CHECK(basis->size() == 8);
    CHECK(R.hilbert_prefix(4) == std::vector<long long>{1, 3, 3, 1, 0});
    CHECK(R.krull_dim() == 0);
    CHECK(R.nf(P(R.ring, "y^2")) == P(R.ring, "-x*z"));
    CHECK(R.nf(P(R.ring, "x^2*y + z")) == P(R.ring, "z"));
    CHECK(R.nf(P(R.ring, "y^4")).is_zero());  // y^4 = (xz)^2 = x^2 z^2
}

TEST_CASE("quotient ring recognizes positive dimension and inhomogeneity") {
    auto R = quotient({"x", "y", "z"}, {"x*y", "x*z"});
    CHECK(R.homogeneous);
    CHECK_FALSE(R.is_artinian_quotient());
    CHECK_FALSE(R.quotient_basis().has_value());
    CHECK(R.krull_dim() == 2);
    CHECK(R.hilbert_prefix(4) == std::vector<long long>{1, 3, 4, 5, 6});

    auto S = quotient({"x", "y", "z"}, {"x^2 - y"});
    CHECK_FALSE(S.homogeneous);

    PolyRing<FpField> pr{FpField(101), {"x"}, MonoOrderKind::grevlex};
    CHECK_THROWS_AS(GradedRing<FpField>::make(pr, {parse_poly(pr, "x - 1")}), error);
}

TEST_CASE("colon ideals") {
    // in k[x,y]: (x^2 y) : (x y) = (x)
    auto R0 = quotient({"x", "y"}, {});
    auto c0 = colon_ideal(R0, ideal(R0, {"x^2*y"}), P(R0.ring, "x*y"));
    CHECK(ideal_equal(R0, c0, ideal(R0, {"x"})));

    // in k[x,y]/(x^2, y^2): (0 : x) = (x)
    auto R = quotient({"x", "y"}, {"x^2", "y^2"});
    auto c = colon_ideal(R, ideal(R, {}), P(R.ring, "x"));
    CHECK(ideal_equal(R, c, ideal(R, {"x"})));
    // (0 : xy) = (x, y), the socle annihilates the maximal ideal
    auto c2 = colon_ideal(R, ideal(R, {}), P(R.ring, "x*y"));
    CHECK(ideal_equal(R, c2, ideal(R, {"x", "y"})));
}

TEST_CASE("annihilator ideals match hand computations") {
    // over k[x,y]/(xy): ann(x) = (y)
    auto R1 = quotient({"x", "y"}, {"x*y"});
    CHECK(ideal_equal(R1, annihilator_ideal(R1, {P(R1.ring, "x")}), ideal(R1, {"y"})));

    // over k[x,y,z]/(xy, xz): ann of the pair (y, z) is (x)
    auto R2 = quotient({"x", "y", "z"}, {"x*y", "x*z"});
    auto a2 = annihilator_ideal(R2, {P(R2.ring, "y"), P(R2.ring, "z")});
    CHECK(ideal_equal(R2, a2, ideal(R2, {"x"})));

    // over the eight-dimensional specimen: ann(x) = (x) is principal,
    // ann(y) = (xy, yz) needs two generators
    auto R = quotient({"x", "y", "z"}, {"x^2", "y^2 + x*z", "z^2"});
    auto ax = annihilator_ideal(R, {P(R.ring, "x")});
    CHECK(ideal_equal(R, ax, ideal(R, {"x"})));
    CHECK(minimal_gens_ideal(R, ax).size() == 1);
    auto ay = annihilator_ideal(R, {P(R.ring, "y")});
    CHECK(ideal_equal(R, ay, ideal(R, {"x*y", "y*z"})));
    CHECK(minimal_gens_ideal(R, ay).size() == 2);
}

TEST_CASE("ideal membership and minimal generators") {
    auto R = quotient({"x", "y"}, {});
    auto J = ideal(R, {"x", "x + y", "y^2", "x*y"});
    CHECK(ideal_member(R, J, P(R.ring, "y")));
    CHECK_FALSE(ideal_member(R, J, P(R.ring, "1")));
    auto mg = minimal_gens_ideal(R, J);
    REQUIRE(mg.size() == 2);
    CHECK(mg[0] == P(R.ring, "x"));
    CHECK(ideal_is_zero(R, ideal(R, {})));
    auto Rq = quotient({"x", "y"}, {"x^2"});
    CHECK(ideal_is_zero(Rq, ideal(Rq, {"x^2"})));
}

TEST_CASE("submodule syzygies and membership over a quotient") {
    auto R = quotient({"x", "y"}, {"x*y"});
    Submodule<FpField> N{1, {col(R.ring, {"x"}), col(R.ring, {"y"})}};
    auto syz = syzygies_over(R, N);
    REQUIRE(!syz.empty());
    // each syzygy (a, b) satisfies ax + by = 0 in the quotient
    for (const auto& s : syz)
        CHECK(R.nf(R.ring.add(R.ring.mul(s.c[0], P(R.ring, "x")),
                              R.ring.mul(s.c[1], P(R.ring, "y"))))
                  .is_zero());
    Submodule<FpField> SZ{2, syz};
    CHECK(submodule_member(R, SZ, col(R.ring, {"y", "0"})));
    CHECK(submodule_member(R, SZ, col(R.ring, {"0", "x"})));
    CHECK_FALSE(submodule_member(R, SZ, col(R.ring, {"1", "0"})));
}

TEST_CASE("presentation pruning removes unit entries") {
    auto R = quotient({"x", "y"}, {});
    PresentedModule<FpField> M;
    M.rank = 2;
    M.rels = {col(R.ring, {"1", "x"})};  // first generator equals -x * second
    auto pruned = prune_presentation(R, M);
    CHECK(pruned.rank == 1);
    CHECK(pruned.rels.empty());
    CHECK(minimal_gen_count(R, M) == 1);

    PresentedModule<FpField> K;
    K.rank = 1;
    K.rels = {col(R.ring, {"x"}), col(R.ring, {"1 - x"})};
    CHECK(module_is_zero(R, K));  // x + (1 - x) = 1 lies in the relation span
    PresentedModule<FpField> k1;
    k1.rank = 1;
    k1.rels = {col(R.ring, {"x"}), col(R.ring, {"y"})};
    CHECK_FALSE(module_is_zero(R, k1));
    CHECK(minimal_gen_count(R, k1) == 1);
}

TEST_CASE("module annihilators") {
    auto R = quotient({"x", "y"}, {});
    // coker(x, y : A -> A) = k has annihilator (x, y)
    PresentedModule<FpField> k1;
    k1.rank = 1;
    k1.rels = {col(R.ring, {"x"}), col(R.ring, {"y"})};
    CHECK(ideal_equal(R, annihilator_module(R, k1), ideal(R, {"x", "y"})));

    // A/(x) + A/(y) has annihilator (x) meet (y) = (xy)
    PresentedModule<FpField> M;
    M.rank = 2;
    M.rels = {col(R.ring, {"x", "0"}), col(R.ring, {"0", "y"})};
    CHECK(ideal_equal(R, annihilator_module(R, M), ideal(R, {"x*y"})));

    PresentedModule<FpField> Z;
    Z.rank = 0;
    CHECK(ideal_equal(R, annihilator_module(R, Z), ideal(R, {"1"})));
}

TEST_CASE("subquotient presentation of N/mN") {
    auto R = quotient({"x", "y"}, {});
    std::vector<VecPoly<FpField>> Ngens = {col(R.ring, {"x^2"}), col(R.ring, {"x*y"})};
    std::vector<VecPoly<FpField>> Bgens = {col(R.ring, {"x^3"}), col(R.ring, {"x^2*y"}),
                                           col(R.ring, {"x*y^2"})};
    auto sq = present_subquotient(R, 1, Ngens, Bgens);
    CHECK(sq.gen_vectors.size() == 2);
    CHECK(sq.module.rank == 2);
    CHECK(sq.module.gen_degs == std::vector<int>{2, 2});
    // N/mN is two copies of k sitting in degree 2
    CHECK(module_hilbert_prefix(R, sq.module, 4) ==
          std::vector<long long>{0, 0, 2, 0, 0});
    CHECK(ideal_equal(R, annihilator_module(R, sq.module), ideal(R, {"x", "y"})));
    // a relation outside the submodule is rejected
    CHECK_THROWS_AS(present_subquotient(R, 1, Ngens, {col(R.ring, {"y^3"})}), error);
}

TEST_CASE("module Hilbert functions") {
    auto R = quotient({"x", "y"}, {});
    auto Afree = PresentedModule<FpField>::free_module(R, 1);
    CHECK(module_hilbert_prefix(R, Afree, 2) == std::vector<long long>{1, 2, 3});
    PresentedModule<FpField> Px;
    Px.rank = 1;
    Px.rels = {col(R.ring, {"x"})};
    CHECK(module_hilbert_prefix(R, Px, 3) == std::vector<long long>{1, 1, 1, 1});
    auto shifted = PresentedModule<FpField>::free_module(R, 1, {2});
    CHECK(module_hilbert_prefix(R, shifted, 3) == std::vector<long long>{0, 0, 1, 2});
}

TEST_CASE("kernels, preimages, and hom into free modules") {
    auto R0 = quotient({"x", "y"}, {});
    auto ker = kernel_of_free_map(R0, 1, {col(R0.ring, {"x^2"}), col(R0.ring, {"x*y"})});
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == col(R0.ring, {"y", "-x"}));

    // preimage of <(x^2, xy)> under a |-> (ax, ay) is (x)
    Submodule<FpField> N{2, {col(R0.ring, {"x^2", "x*y"})}};
    auto pre = preimage_of_submodule(R0, 2, {col(R0.ring, {"x", "y"})}, N);
    QIdeal<FpField> preI;
    for (const auto& v : pre) preI.gens.push_back(v.c[0]);
    CHECK(ideal_equal(R0, preI, ideal(R0, {"x"})));

    // over k[x,y]/(xy): Hom(A/(x), A) = ann(x) = (y)
    auto R = quotient({"x", "y"}, {"x*y"});
    PresentedModule<FpField> Ax;
    Ax.rank = 1;
    Ax.rels = {col(R.ring, {"x"})};
    auto H1 = hom_into_free(R, Ax, 1);
    CHECK(H1.rank == 1);
    QIdeal<FpField> h1I;
    for (const auto& v : H1.gens) h1I.gens.push_back(v.c[0]);
    CHECK(ideal_equal(R, h1I, ideal(R, {"y"})));

    auto H2 = hom_into_free(R, Ax, 2);
    CHECK(H2.rank == 2);
    CHECK(submodule_member(R, H2, col(R.ring, {"y", "0"})));
    CHECK(submodule_member(R, H2, col(R.ring, {"0", "y"})));
    CHECK_FALSE(submodule_member(R, H2, col(R.ring, {"x", "0"})));

    // Hom of a free module is everything
    auto Hfree = hom_into_free(R, PresentedModule<FpField>::free_module(R, 2), 1);
    CHECK(Hfree.rank == 2);
    CHECK(submodule_member(R, Hfree, col(R.ring, {"1", "0"})));
    CHECK(submodule_member(R, Hfree, col(R.ring, {"0", "1"})));
}

TEST_CASE("graded degrees of module elements") {
    auto R = quotient({"x", "y"}, {});
    auto v = col(R.ring, {"x^2", "0"});
    CHECK(vp_degree(R.ring, v, {0, 0}) == 2);
    CHECK(vp_degree(R.ring, v, {1, 0}) == 3);
    CHECK_FALSE(vp_degree(R.ring, VecPoly<FpField>(2), {0, 0}).has_value());
    auto w = col(R.ring, {"x^2", "x"});
    CHECK_THROWS_AS(vp_degree(R.ring, w, {0, 0}), error);
    CHECK(vp_degree(R.ring, w, {0, 1}) == 2);
}

TEST_CASE("pfaffians of small alternating matrices") {
    PolyRing<FpField> r{FpField(101), {"a", "b", "c", "d", "e", "f"},
                        MonoOrderKind::grevlex};
    PolyMat<FpField> m2(2);
    m2.at(0, 1) = P(r, "a");
    m2.at(1, 0) = P(r, "-a");
    CHECK(is_alternating(r, m2));
    CHECK(pfaffian(r, m2, {0, 1}) == P(r, "a"));

    PolyMat<FpField> m4(4);
    auto put = [&](int i, int j, const std::string& s) {
        m4.at(i, j) = P(r, s);
        m4.at(j, i) = r.neg(m4.at(i, j));
    };
    put(0, 1, "a");
    put(0, 2, "b");
    put(0, 3, "c");
    put(1, 2, "d");
    put(1, 3, "e");
    put(2, 3, "f");
    REQUIRE(is_alternating(r, m4));
    auto pf = pfaffian(r, m4, {0, 1, 2, 3});
    CHECK(pf == P(r, "a*f - b*e + c*d"));
    CHECK(r.mul(pf, pf) == poly_det(r, m4, {0, 1, 2, 3}));
    CHECK_THROWS_AS(pfaffian(r, m4, {0, 1, 2}), error);

    PolyMat<FpField> bad(2);
    bad.at(0, 1) = P(r, "a");
    bad.at(1, 0) = P(r, "a");
    CHECK_FALSE(is_alternating(r, bad));
    CHECK_THROWS_AS(pfaffian_ideal(r, bad), error);
}

TEST_CASE("sub-maximal pfaffian generators with signs") {
    PolyRing<FpField> r{FpField(101), {"a", "b", "c", "d"}, MonoOrderKind::grevlex};
    PolyMat<FpField> m(5);
    auto put = [&](int i, int j, const std::string& s) {
        m.at(i, j) = P(r, s);
        m.at(j, i) = r.neg(m.at(i, j));
    };
    put(0, 1, "a");
    put(1, 2, "b");
    put(2, 3, "c");
    put(3, 4, "d");
    auto gens = pfaffian_ideal(r, m);
    REQUIRE(gens.size() == 5);
    CHECK(gens[0] == P(r, "b*d"));
    CHECK(gens[1].is_zero());
    CHECK(gens[2] == P(r, "a*d"));
    CHECK(gens[3].is_zero());
    CHECK(gens[4] == P(r, "a*c"));
    CHECK_THROWS_AS(pfaffian_ideal(r, PolyMat<FpField>(4)), error);
}
