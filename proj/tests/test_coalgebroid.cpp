#include "hopfpar/coalgebroid.hpp"

#include <doctest.h>

using namespace hopfpar;

TEST_SUITE("coalgebroid") {

TEST_CASE("a Hopf algebra is a Hopf coalgebroid over k")
{
    auto h = from_hopf_algebra(cyclic_group_algebra(2));
    CHECK(check_hopf_coalgebroid(h).all_pass());
}

TEST_CASE("groupoid coalgebroid of Gamma(C2)")
{
    auto g = gamma_groupoid(cyclic_table(2));
    auto h = from_groupoid(g, "Gamma(C2)");
    CHECK(h.Hcal.dim == 3);
    CHECK(h.C.dim == 2);
    // composable pairs: 1 over {e}, 4 over {e,g}
    CHECK(left_cotensor(h).T.dim() == 5);
    CHECK(check_hopf_coalgebroid(h).all_pass());
}

TEST_CASE("sandwich coalgebroid")
{
    auto h = sandwich(divided_power_coalgebra(), cyclic_group_algebra(2));
    CHECK(h.Hcal.dim == 8);
    CHECK(check_hopf_coalgebroid(h).all_pass());
}

TEST_CASE("broken structures are caught")
{
    // in Gamma(C3) the arrow (g, {e,g}) is not its own inverse
    auto h = from_groupoid(gamma_groupoid(cyclic_table(3)));
    auto bad = h;
    bad.S = LinearMap::identity(8);
    CHECK_FALSE(check_hopf_coalgebroid(bad).all_pass());

    auto bad_mu = h;
    bad_mu.mu_L = h.mu_L.scaled(2);
    CHECK_FALSE(check_hopf_coalgebroid(bad_mu).all_pass());
}

TEST_CASE("H^par(kC2) as a Hopf coalgebroid")
{
    auto u = build_universal(cyclic_group_algebra(2));
    auto b = build_base_data(u);
    auto iso = cosmash_isomorphism(u, b);
    auto a = assemble_hpar_coalgebroid(u, b, iso);
    CHECK(a.report.all_pass());
    CHECK(check_hopf_coalgebroid(a.direct).all_pass());
    CHECK(check_hopf_coalgebroid(a.adjoint).all_pass());

    auto y = *grouplike_from_value(u, {1, 0});
    auto x = *grouplike_from_value(u, {0, 1});
    auto z = *grouplike_from_value(u, {Scalar(1, 2), Scalar(1, 2)});
    auto t = product_table(a.direct, {y, x, z});
    // x1 = y behaves as the identity on {x1, x2}, x2 squares to x1
    REQUIRE(t.entries[0][0]);
    CHECK(*t.entries[0][0] == Vec{1, 0, 0});
    CHECK(*t.entries[0][1] == Vec{0, 1, 0});
    CHECK(*t.entries[1][0] == Vec{0, 1, 0});
    CHECK(*t.entries[1][1] == Vec{1, 0, 0});
    CHECK(*t.entries[2][2] == Vec{0, 0, 1});
    CHECK_FALSE(t.entries[0][2]);
    CHECK_FALSE(t.entries[2][0]);
    CHECK_FALSE(t.entries[1][2]);
    CHECK_FALSE(t.entries[2][1]);
}

TEST_CASE("conjecture probe on C2")
{
    auto p = conjecture_probe(cyclic_table(2), "C2");
    CHECK(p.conclusive);
    CHECK(p.isomorphic);
    CHECK(p.arrow_map.size() == 3);
}

}
