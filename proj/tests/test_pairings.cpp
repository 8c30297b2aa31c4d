#include "hopfpar/pairing.hpp"

#include <doctest.h>

using namespace hopfpar;

TEST_SUITE("pairings") {

TEST_CASE("evaluation pairing is nondegenerate, a rank one form is not")
{
    CHECK(is_left_nondegenerate(Pairing::evaluation(3)));
    CHECK(is_right_nondegenerate(Pairing::evaluation(3)));
    LinearMap f(2, 2);
    f(0, 0) = 1, f(0, 1) = 1, f(1, 0) = 1, f(1, 1) = 1;
    CHECK_FALSE(is_left_nondegenerate(Pairing::from_form(f)));
}

TEST_CASE("adjoint for evaluation pairings is the transpose")
{
    LinearMap f(2, 3);
    f(0, 0) = 1, f(0, 2) = Scalar(1, 2), f(1, 1) = -3;
    auto g = adjoint(Pairing::evaluation(3), Pairing::evaluation(2), f);
    REQUIRE(g);
    CHECK(*g == f.transpose());
}

TEST_CASE("annihilators have complementary dimension")
{
    Pairing p = Pairing::evaluation(4);
    Subspace w = Subspace::span(4, {Vec{1, 1, 0, 0}, Vec{0, 0, 1, 0}});
    Subspace perp = perp_right(p, w);
    CHECK(perp.dim() == 2);
    CHECK(perp.contains(Vec{1, -1, 0, 0}));
    CHECK(perp_left(p, perp) == w);
}

TEST_CASE("reduced pairing checks the ideal")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    HopfAlgebra k = dual_hopf(h);   // p_e, p_g orthogonal idempotents
    Pairing p = Pairing::evaluation(2);
    Subspace ideal = Subspace::span(2, {unit_vector(2, 1)});
    auto r = reduced_pairing(p, ideal, &h.coalg, &k.alg);
    CHECK(r.subcoalgebra_certified);
    CHECK(r.left.dim() == 1);
    CHECK(r.left.contains(unit_vector(2, 0)));

    // span{p_e + 2 p_g} is not an ideal: p_e (p_e + 2 p_g) = p_e
    Subspace not_ideal = Subspace::span(2, {Vec{1, 2}});
    CHECK_THROWS_AS(reduced_pairing(p, not_ideal, &h.coalg, &k.alg), NotAnIdeal);
}

TEST_CASE("transport of a coalgebra to the right is the dual algebra")
{
    HopfAlgebra h = cyclic_group_algebra(3);
    auto a = transport_to_right(Pairing::evaluation(3), h.coalg);
    REQUIRE(a);
    CHECK(a->mult == h.delta().transpose());
    CHECK(verify_algebra(*a).all_pass());
}

}
