#include "hopfpar/corep.hpp"

#include <doctest.h>

using namespace hopfpar;

TEST_SUITE("corep") {

TEST_CASE("corepresentations of the trivial coalgebra")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    Coalgebra k = trivial_coalgebra();
    LinearMap half = LinearMap::column_vector({Scalar(1, 2), Scalar(1, 2)});
    LinearMap g = LinearMap::column_vector({0, 1});
    LinearMap bad = LinearMap::column_vector({2, -1});

    CHECK(check_partial_corep(k, h, half).all_pass());
    auto v = is_global_corep(k, h, half);
    CHECK_FALSE(v.global);
    CHECK(v.pc6 == v.coalgebra_map);

    CHECK(check_partial_corep(k, h, g).all_pass());
    CHECK(is_global_corep(k, h, g).global);

    CHECK_FALSE(check_partial_corep(k, h, bad).all_pass());
}

TEST_CASE("identity is a global corep")
{
    HopfAlgebra h = cyclic_group_algebra(3);
    LinearMap id = LinearMap::identity(3);
    CHECK(check_partial_corep(h.coalg, h, id).all_pass());
    auto v = is_global_corep(h.coalg, h, id);
    CHECK(v.global);
    CHECK(v.pc6);
    CHECK(v.coalgebra_map);
}

TEST_CASE("cosmash with the trivial coaction")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    Coalgebra c = trivial_coalgebra();
    // λ(1) = e⊗1: ∇ = e so x>◀h = 1⊗h and the carrier is all of C⊗H
    LinearMap lambda = LinearMap::column_vector({1, 0});
    auto cs = build_left_cosmash(h, c, lambda);
    CHECK(cs.report.all_pass());
    CHECK(cs.dim() == 2);
    CHECK(verify_coalgebra(cs.coalg).all_pass());

    // the pair (ε, id) on H factors through the cosmash uniquely
    auto f = universal_factorization(cs, h.coalg, h.eps(), LinearMap::identity(2));
    CHECK(f.report.all_pass());
    CHECK(f.unique);
    CHECK(cs.omega0 * f.Phi == LinearMap::identity(2));
}

TEST_CASE("right cosmash mirrors the left one")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    Coalgebra c = trivial_coalgebra();
    auto cs = build_right_cosmash(h, c, LinearMap::column_vector({1, 0}));
    CHECK(cs.report.all_pass());
    CHECK(cs.dim() == 2);
}

}
