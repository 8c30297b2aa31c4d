#include "hopfpar/partial_rep.hpp"

#include <doctest.h>

using namespace hopfpar;

namespace {

LinearMap rep_into_m2(const Scalar& a, const Scalar& d)
{
    // e -> identity, g -> diag(a, d) in M_2, basis e_ij at 2i+j
    LinearMap pi(4, 2);
    pi(0, 0) = 1, pi(3, 0) = 1;
    pi(0, 1) = a, pi(3, 1) = d;
    return pi;
}

}

TEST_SUITE("partial_rep") {

TEST_CASE("global representations are partial")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    CHECK(check_partial_rep(h, matrix_algebra(2), rep_into_m2(1, -1)).all_pass());
}

TEST_CASE("a projection for g is partial but not global")
{
    // π(g)^3 = π(g) is all C2 asks of a partial representation
    HopfAlgebra h = cyclic_group_algebra(2);
    auto r = check_partial_rep(h, matrix_algebra(2), rep_into_m2(1, 0));
    CHECK(r.all_pass());
    Algebra b = matrix_algebra(2);
    LinearMap pi = rep_into_m2(1, 0);
    Vec g = pi.column(1);
    CHECK_FALSE(b.multiply(g, g) == pi.column(0));
}

TEST_CASE("scaling g breaks the axioms and names a witness")
{
    HopfAlgebra h = cyclic_group_algebra(2);
    auto r = check_partial_rep(h, matrix_algebra(2), rep_into_m2(2, 2));
    CHECK_FALSE(r.all_pass());
    bool has_witness = false;
    for (const auto& c : r.checks)
        if (!c.pass && !c.witness.empty()) has_witness = true;
    CHECK(has_witness);
}

TEST_CASE("partial quotient of the dual of kC2")
{
    auto q = build_partial_hopf_quotient(dual_hopf(cyclic_group_algebra(2)), 4, 6);
    REQUIRE(q.certified_stable);
    CHECK(q.dim() == 3);
    Algebra w = q.algebra();
    CHECK(verify_algebra(w).all_pass());

    // t = [p_e] satisfies t(t-1)(2t-1) = 0 and 1, t, t^2 is a basis
    Vec t = q.word_image({0});
    Vec t2 = w.multiply(t, t);
    Vec t3 = w.multiply(t2, t);
    Vec rel = scaled(t3, 2) - scaled(t2, 3) + t;
    CHECK(is_zero(rel));
    CHECK(rank(LinearMap::from_columns(3, {w.unit, t, t2})) == 3);

    // [p_e] + [p_g] = [1] = 1
    CHECK(q.word_image({0}) + q.word_image({1}) == w.unit);
}

TEST_CASE("dimension history settles for kC2 and kC3")
{
    auto q3 = build_partial_hopf_quotient(dual_hopf(cyclic_group_algebra(3)), 5, 7);
    REQUIRE(q3.certified_stable);
    CHECK(q3.dim() == 8);
    for (const auto& r : q3.dims_history) CHECK(r.dim <= 8);
}

TEST_CASE("epsilon generators and the base algebra")
{
    auto q = build_partial_hopf_quotient(dual_hopf(cyclic_group_algebra(2)), 4, 6);
    REQUIRE(q.certified_stable);
    auto eps = epsilon_generators(q);
    REQUIRE(eps.size() == 2);
    // ε_{p_e} + ε_{p_g} = ε_1 = 1
    CHECK(eps[0] + eps[1] == q.algebra().unit);
    auto a = extract_Apar(q);
    CHECK(a.closed);
    CHECK(a.dim() == 2);
    auto hp = hopf_algebroid_on_Hpar(q);
    CHECK(hp.report.all_pass());
}

TEST_CASE("induced algebra maps")
{
    auto q = build_partial_hopf_quotient(dual_hopf(cyclic_group_algebra(2)), 4, 6);
    REQUIRE(q.certified_stable);
    Algebra w = q.algebra();

    auto self = induced_algebra_map(q, w, q.bracket);
    CHECK(self.exists);
    CHECK(self.unique);
    CHECK(self.map == LinearMap::identity(3));

    // evaluation at e is an algebra map H* -> k
    LinearMap ev(1, 2);
    ev(0, 0) = 1;
    auto m = induced_algebra_map(q, matrix_algebra(1), ev);
    CHECK(m.exists);
    CHECK(m.unique);

    LinearMap bad(1, 2);
    bad(0, 0) = 2;
    auto n = induced_algebra_map(q, matrix_algebra(1), bad);
    CHECK_FALSE(n.exists);
    CHECK_FALSE(n.failure.empty());
}

TEST_CASE("H4 does not stabilise at low degree")
{
    auto q = build_partial_hopf_quotient(dual_hopf(sweedler_h4()), 4, 6);
    CHECK_FALSE(q.certified_stable);
    CHECK_FALSE(q.reason.empty());
}

}
