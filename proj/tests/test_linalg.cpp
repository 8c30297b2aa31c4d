#include "hopfpar/linalg.hpp"
#include "hopfpar/pipe.hpp"
#include "hopfpar/structures.hpp"

#include <doctest.h>

using namespace hopfpar;

TEST_SUITE("linalg") {

TEST_CASE("scalars print as p/q and parse back")
{
    CHECK(to_string(Scalar(3)) == "3/1");
    CHECK(to_string(Scalar(-3, 4)) == "-3/4");
    CHECK(parse_scalar("6/8") == Scalar(3, 4));
    CHECK(parse_scalar("-2") == Scalar(-2));
}

TEST_CASE("inverse of a 2x2 matrix by hand")
{
    LinearMap a(2, 2);
    a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((*inv)(0, 0) == -2);
    CHECK((*inv)(0, 1) == 1);
    CHECK((*inv)(1, 0) == Scalar(3, 2));
    CHECK((*inv)(1, 1) == Scalar(-1, 2));
    LinearMap s(2, 2);
    s(0, 0) = 1, s(0, 1) = 2, s(1, 0) = 2, s(1, 1) = 4;
    CHECK_FALSE(inverse(s));
}

TEST_CASE("kernel, image and rank")
{
    // x + y + z = 0 and y - z = 0: kernel spanned by (-2, 1, 1)
    LinearMap a(2, 3);
    a(0, 0) = 1, a(0, 1) = 1, a(0, 2) = 1;
    a(1, 1) = 1, a(1, 2) = -1;
    auto k = kernel(a);
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(Vec{-2, 1, 1}));
    CHECK(rank(a) == 2);
    CHECK(image(a).dim() == 2);
}

TEST_CASE("solve finds some solution or reports none")
{
    LinearMap a(2, 2);
    a(0, 0) = 2, a(1, 1) = 3;
    LinearMap b = LinearMap::column_vector(Vec{1, 1});
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK((*x)(0, 0) == Scalar(1, 2));
    CHECK((*x)(1, 0) == Scalar(1, 3));
    LinearMap z(2, 2);
    CHECK_FALSE(solve(z, b));
}

TEST_CASE("quotient by a line")
{
    Subspace w = Subspace::span(3, {Vec{1, 1, 0}});
    auto q = quotient(3, w);
    CHECK(q.dim == 2);
    CHECK(is_zero(q.projection.apply(Vec{1, 1, 0})));
    CHECK(q.projection * q.section == LinearMap::identity(2));
}

TEST_CASE("tensor product entries")
{
    LinearMap a(1, 2), b(2, 1);
    a(0, 0) = 1, a(0, 1) = 2;
    b(0, 0) = 3, b(1, 0) = 5;
    LinearMap t = tensor_product(a, b);
    CHECK(t.rows() == 2);
    CHECK(t.cols() == 2);
    CHECK(t(0, 0) == 3);
    CHECK(t(1, 0) == 5);
    CHECK(t(0, 1) == 6);
    CHECK(t(1, 1) == 10);
}

TEST_CASE("pipe agrees with kronecker products")
{
    HopfAlgebra h = cyclic_group_algebra(3);
    Pipe p(3);
    p.split(0, h.delta()).map(1, h.S()).merge(0, h.m());
    // m(I⊗S)Δ = 1ε
    CHECK(p.value() == h.alg.unit_map() * h.eps());
    LinearMap k = h.m() * tensor_product(LinearMap::identity(3), h.S()) * h.delta();
    CHECK(p.value() == k);
    Pipe q({2, 3});
    q.swap(0, 1);
    CHECK(q.value() == flip_map(2, 3));
}

}
