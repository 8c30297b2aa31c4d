#include "hopfpar/coalgebroid.hpp"
#include "hopfpar/json_io.hpp"
#include "hopfpar/structures.hpp"

#include <doctest.h>

using namespace hopfpar;

TEST_SUITE("structures") {

TEST_CASE("built-in Hopf algebras satisfy the axioms")
{
    for (const auto& h : {trivial_hopf(), cyclic_group_algebra(2), cyclic_group_algebra(3), sweedler_h4()}) {
        CAPTURE(h.name);
        CHECK(verify_hopf(h).all_pass());
        CHECK(verify_hopf(dual_hopf(h)).all_pass());
    }
}

TEST_CASE("H4 antipode has order four")
{
    HopfAlgebra h = sweedler_h4();
    LinearMap s2 = h.S() * h.S();
    CHECK_FALSE(s2 == LinearMap::identity(4));
    CHECK(s2 * s2 == LinearMap::identity(4));
    CHECK(h.S_inv() == s2 * h.S());
}

TEST_CASE("dual Hopf algebra transposes the structure")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    HopfAlgebra k = dual_hopf(h);
    CHECK(k.m() == h.delta().transpose());
    CHECK(k.delta() == h.m().transpose());
    CHECK(k.S() == h.S().transpose());
    // p_e p_e = p_e, p_e p_g = 0
    CHECK(k.alg.multiply(unit_vector(2, 0), unit_vector(2, 0)) == unit_vector(2, 0));
    CHECK(is_zero(k.alg.multiply(unit_vector(2, 0), unit_vector(2, 1))));
}

TEST_CASE("Gamma groupoids of C2 and C3")
{
    auto g2 = gamma_groupoid(cyclic_table(2));
    CHECK(g2.objects == 2);
    CHECK(g2.arrows() == 3);
    // subsets containing e of C3: {e}, {e,g}, {e,g2}, C3 carry 1+2+2+3 arrows
    auto g3 = gamma_groupoid(cyclic_table(3));
    CHECK(g3.objects == 4);
    CHECK(g3.arrows() == 8);
}

TEST_CASE("bad groupoid is rejected")
{
    Groupoid g;
    g.objects = 1;
    g.src = {0};
    g.tgt = {0};
    g.comp = {{std::nullopt}};
    CHECK_THROWS(validate_groupoid(g));
}

TEST_CASE("JSON round trip and input errors")
{
    HopfAlgebra h = sweedler_h4();
    json j = hopf_to_json(h);
    HopfAlgebra back = hopf_from_json(j);
    CHECK(back.m() == h.m());
    CHECK(back.delta() == h.delta());
    CHECK(back.S() == h.S());
    CHECK(j["antipode"][0][0].get<std::string>() == "1/1");

    json bad = j;
    bad["mult"][0][0][0] = "1/0";
    CHECK_THROWS_AS(hopf_from_json(bad), InputError);
    json short_ = j;
    short_["counit"] = json::array({"1"});
    CHECK_THROWS_AS(hopf_from_json(short_), InputError);
    json ints = j;
    ints["counit"] = json::array({1, 1, 0, 0});
    CHECK(hopf_from_json(ints).eps() == h.eps());
}

TEST_CASE("coalgebra maps")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    CHECK(is_coalgebra_map(LinearMap::identity(2), h.coalg, h.coalg));
    CHECK(is_coalgebra_map(h.S(), h.coalg, h.coalg));
    CHECK(is_anti_coalgebra_map(h.S(), h.coalg, h.coalg));
    CHECK_FALSE(is_coalgebra_map(h.S().scaled(2), h.coalg, h.coalg));
}

}
