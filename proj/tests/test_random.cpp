#include "hopfpar/random_suites.hpp"

#include <doctest.h>

using namespace hopfpar;

TEST_SUITE("random") {

TEST_CASE("random comodules are reproducible")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    std::vector<Vec> values = {{1, 0}, {0, 1}, {Scalar(1, 2), Scalar(1, 2)}};
    std::mt19937_64 a(7), b(7);
    auto x = random_comodule(h, values, a, 3, false);
    auto y = random_comodule(h, values, b, 3, false);
    CHECK(x.rho == y.rho);
    CHECK(check_partial_comodule(x).all_pass());
}

TEST_CASE("perturbed comodules mostly fail the axioms")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    std::vector<Vec> values = {{1, 0}, {0, 1}, {Scalar(1, 2), Scalar(1, 2)}};
    std::mt19937_64 rng(3);
    std::size_t failed = 0;
    for (int i = 0; i < 10; ++i)
        if (!check_partial_comodule(random_comodule(h, values, rng, 2, true)).all_pass()) ++failed;
    CHECK(failed > 0);
}

TEST_CASE("small random suites agree on kC2")
{
    auto u = build_universal(cyclic_group_algebra(2));
    RandomOptions opt;
    opt.count = 20;
    auto out = run_random_suites(u, opt);
    CHECK(out.size() == 7);
    for (const auto& s : out) {
        CAPTURE(s.id);
        CHECK(s.pass());
        CHECK(s.total == 20);
        CHECK(s.valid > 0);
    }
}

}
