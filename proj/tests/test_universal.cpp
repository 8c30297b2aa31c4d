#include "hopfpar/universal.hpp"

#include <doctest.h>

using namespace hopfpar;

namespace {

const UniversalCorepCoalgebra& kc2()
{
    static const UniversalCorepCoalgebra u = build_universal(cyclic_group_algebra(2));
    return u;
}

// coefficient of x_i⊗x_j in Δ(x_k)
Scalar coeff(const Coalgebra& c, std::size_t k, std::size_t i, std::size_t j)
{
    return c.comult(i * c.dim + j, k);
}

}

TEST_SUITE("universal") {

TEST_CASE("H^par of kC2 by hand")
{
    const auto& u = kc2();
    REQUIRE(u.dim() == 3);
    CHECK(u.report.all_pass());
    const Coalgebra& c = u.Hpar;
    // basis u, v, w dual to 1, [p_e], [p_e]^2
    CHECK(coeff(c, 0, 0, 0) == 1);
    CHECK(coeff(c, 1, 0, 1) == 1);
    CHECK(coeff(c, 1, 1, 0) == 1);
    CHECK(coeff(c, 1, 1, 1) == 0);
    CHECK(coeff(c, 1, 1, 2) == Scalar(-1, 2));
    CHECK(coeff(c, 1, 2, 1) == Scalar(-1, 2));
    CHECK(coeff(c, 1, 2, 2) == Scalar(-3, 4));
    CHECK(coeff(c, 2, 0, 2) == 1);
    CHECK(coeff(c, 2, 2, 0) == 1);
    CHECK(coeff(c, 2, 1, 1) == 1);
    CHECK(coeff(c, 2, 1, 2) == Scalar(3, 2));
    CHECK(coeff(c, 2, 2, 1) == Scalar(3, 2));
    CHECK(coeff(c, 2, 2, 2) == Scalar(7, 4));
    CHECK(coeff(c, 0, 1, 1) == 0);

    // p(u) = u_g, p(v) = u_e - u_g, p(w) = 0
    CHECK(u.p.column(0) == Vec{0, 1});
    CHECK(u.p.column(1) == Vec{1, -1});
    CHECK(u.p.column(2) == Vec{0, 0});
    CHECK(u.p * u.embed_i == LinearMap::identity(2));
}

TEST_CASE("grouplikes of H^par(kC2)")
{
    const auto& u = kc2();
    auto y = grouplike_from_value(u, {1, 0});
    auto z = grouplike_from_value(u, {Scalar(1, 2), Scalar(1, 2)});
    auto g = grouplike_from_value(u, {0, 1});
    REQUIRE(y);
    REQUIRE(z);
    REQUIRE(g);
    CHECK(*y == Vec{1, 1, 1});
    CHECK(*z == Vec{1, Scalar(1, 2), Scalar(1, 4)});
    CHECK(*g == Vec{1, 0, 0});
    CHECK_FALSE(grouplike_from_value(u, {2, -1}));
    auto s = grouplikes(u);
    CHECK(s.complete);
    CHECK(s.found.size() == 3);
}

TEST_CASE("trivial and kC3")
{
    auto t = build_universal(trivial_hopf());
    CHECK(t.dim() == 1);
    CHECK(t.report.all_pass());
    auto u = build_universal(cyclic_group_algebra(3));
    CHECK(u.dim() == 8);
    CHECK(u.report.all_pass());
    auto b = build_base_data(u);
    CHECK(b.C.dim == 4);
    CHECK(b.report.all_pass());
}

TEST_CASE("H4 is not computable at low degree")
{
    BuildOptions opt;
    opt.degree = 4;
    opt.saturation = 6;
    try {
        build_universal(sweedler_h4(), opt);
        FAIL("expected NotComputable");
    } catch (const NotComputable& e) {
        CHECK_FALSE(e.history.empty());
        CHECK(e.history.back().dim > e.history.front().dim);
    }
}

TEST_CASE("factoring corepresentations through H^par")
{
    const auto& u = kc2();
    Coalgebra k = trivial_coalgebra();
    auto f = factor_corep(u, k, LinearMap::column_vector({Scalar(1, 2), Scalar(1, 2)}));
    CHECK(f.unique);
    CHECK(f.omega_bar.column(0) == Vec{1, Scalar(1, 2), Scalar(1, 4)});
    CHECK(u.p * f.omega_bar == LinearMap::column_vector({Scalar(1, 2), Scalar(1, 2)}));
    CHECK_THROWS_AS(factor_corep(u, k, LinearMap::column_vector({2, -1})), std::invalid_argument);
}

TEST_CASE("comodules over H^par and partial comodules")
{
    const auto& u = kc2();
    HparComodule m{1, LinearMap::column_vector({1, Scalar(1, 2), Scalar(1, 4)})};
    CHECK(check_global_comodule(u.Hpar, 1, m.rho_hat).all_pass());
    auto c = gamma_functor(u, m);
    CHECK(c.rho.column(0) == Vec{Scalar(1, 2), Scalar(1, 2)});
    CHECK(check_partial_comodule(c).all_pass());
    CHECK(gamma_inverse(u, c).rho_hat == m.rho_hat);
}

TEST_CASE("copar and anti-copar")
{
    const auto& u = kc2();
    HopfAlgebra h = cyclic_group_algebra(2);
    auto b = build_base_data(u);
    CHECK(check_copar(b.C, h, b.pC).all_pass());
    CHECK(check_anti_copar(b.Ctilde, h, b.pCt).all_pass());
    // f(c1)f(c2) = f(c) fails for the identity since g g = e
    CHECK_FALSE(check_copar(h.coalg, h, LinearMap::identity(2)).all_pass());
    // the idempotent (e+g)/2 is fine
    CHECK(check_copar(trivial_coalgebra(), h, LinearMap::column_vector({Scalar(1, 2), Scalar(1, 2)})).all_pass());
}

TEST_CASE("lemma battery, cosmash isomorphism and iterated coproducts")
{
    const auto& u = kc2();
    auto b = build_base_data(u);
    CHECK(b.report.all_pass());
    auto l = lemadosE_suite(u, b);
    CHECK(l.all_pass());
    auto iso = cosmash_isomorphism(u, b);
    CHECK(iso.report.all_pass());
    CHECK(iso.Phi * iso.Phi_inv == LinearMap::identity(iso.Phi.rows()));
    CHECK(iso.Phi_inv * iso.Phi == LinearMap::identity(3));
    for (std::size_t n = 1; n <= 3; ++n) CHECK(deltancosmashum(u, b, iso, n).all_pass());
}

TEST_CASE("basis labels")
{
    auto labels = kc2().basis_labels();
    REQUIRE(labels.size() == 3);
    CHECK(labels[0] == "d(1)");
    CHECK(labels[1] == "d([p_e])");
    CHECK(labels[2] == "d([p_e][p_e])");
}

}
