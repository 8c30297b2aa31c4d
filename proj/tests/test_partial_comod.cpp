#include "hopfpar/partial_comod.hpp"

#include <doctest.h>

using namespace hopfpar;

namespace {

PartialComoduleCandidate one_dim(const HopfAlgebra& h, const Vec& value)
{
    return {h, 1, LinearMap::column_vector(value)};
}

}

TEST_SUITE("partial_comod") {

TEST_CASE("one-dimensional comodules of kC2")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    CHECK(check_partial_comodule(one_dim(h, {1, 0})).all_pass());
    CHECK(check_partial_comodule(one_dim(h, {0, 1})).all_pass());
    CHECK(check_partial_comodule(one_dim(h, {Scalar(1, 2), Scalar(1, 2)})).all_pass());
    CHECK_FALSE(check_partial_comodule(one_dim(h, {1, 1})).all_pass());
    CHECK_FALSE(check_partial_comodule(one_dim(h, {2, -1})).all_pass());
}

TEST_CASE("comodule and corep round trip")
{
    HopfAlgebra h = cyclic_group_algebra(3);
    // two-dimensional: m0 -> m0⊗e, m1 -> m1⊗(e+g+g^2)/3
    LinearMap rho(6, 2);
    rho(0, 0) = 1;
    for (std::size_t k = 0; k < 3; ++k) rho(3 + k, 1) = Scalar(1, 3);
    PartialComoduleCandidate c{h, 2, rho};
    REQUIRE(check_partial_comodule(c).all_pass());
    LinearMap omega = corep_from_comodule(c);
    CHECK(comodule_from_corep(h, 2, omega).rho == rho);
    auto mod = module_from_comodule(c);
    CHECK(comodule_from_module(h, 2, mod.pi).rho == rho);
}

TEST_CASE("coaction projection is idempotent")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    auto p = coaction_projection(one_dim(h, {Scalar(1, 2), Scalar(1, 2)}));
    CHECK(p.pi * p.pi == p.pi);
    CHECK(p.MbulletH.dim() == 1);
}

TEST_CASE("trivial coactions on coalgebras and algebras")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    Coalgebra c = h.coalg;
    // λ(x) = 1⊗x, ρ(x) = x⊗1
    LinearMap lambda(4, 2), rho(4, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        lambda(0 * 2 + i, i) = 1;
        rho(i * 2 + 0, i) = 1;
    }
    CHECK(check_lpcc(h, c, lambda).all_pass());
    CHECK(check_rpcc(h, c, rho).all_pass());
    Algebra k = matrix_algebra(1);
    LinearMap r(2, 1);
    r(0, 0) = 1;
    CHECK(check_pca(h, k, r).all_pass());
    LinearMap bad(2, 1);
    bad(0, 0) = 2;
    CHECK_FALSE(check_pca(h, k, bad).all_pass());
}

TEST_CASE("truncated polynomial comodule over H4")
{
    auto t = h4_poly_comodule(12);
    CHECK(t.comodule.M_dim == 14);
    CHECK(check_truncated(t).all_pass());
    auto chain = smallest_subcomodule(t, unit_vector(t.comodule.M_dim, 1), 64);
    REQUIRE(chain.dims.size() >= 11);
    for (std::size_t r = 1; r <= 10; ++r) CHECK(chain.dims[r] > chain.dims[r - 1]);
    CHECK(chain.verdict == RegularityVerdict::IrregularEvidence);
}

TEST_CASE("subcomodule of a global comodule stabilises")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    // kC2 over itself
    PartialComoduleCandidate c{h, 2, h.delta()};
    REQUIRE(check_partial_comodule(c).all_pass());
    auto chain = smallest_subcomodule(c, unit_vector(2, 0), 16);
    CHECK(chain.stabilized);
    CHECK(chain.span.dim() == 1);
}

}
