#include "hopfpar/coalgebroid.hpp"
#include "hopfpar/random_suites.hpp"
#include "hopfpar/universal.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace hopfpar;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void need(bool c, const std::string& what)
    {
        if (!c) {
            if (!ok)
                detail << "; ";
            detail << "failed: " << what;
            ok = false;
        }
    }
};

using Criterion = std::function<void(Outcome&)>;

HopfAlgebra kc2() { return cyclic_group_algebra(2); }

Vec half() { return {Scalar(1, 2), Scalar(1, 2)}; }

void criterion1(Outcome& o)
{
    auto u = build_universal(kc2());
    o.need(u.report.all_pass(), "universal report");
    o.need(u.dim() == 3, "dim 3");
    if (u.dim() != 3)
        return;
    // Δ(u) = u⊗u
    // Δ(v) = u⊗v + v⊗u - ½ v⊗w - ½ w⊗v - ¾ w⊗w
    // Δ(w) = u⊗w + w⊗u + v⊗v + 3/2 v⊗w + 3/2 w⊗v + 7/4 w⊗w
    LinearMap d(9, 3);
    auto at = [&](std::size_t i, std::size_t j) { return i * 3 + j; };
    d(at(0, 0), 0) = 1;
    d(at(0, 1), 1) = 1, d(at(1, 0), 1) = 1;
    d(at(1, 2), 1) = Scalar(-1, 2), d(at(2, 1), 1) = Scalar(-1, 2), d(at(2, 2), 1) = Scalar(-3, 4);
    d(at(0, 2), 2) = 1, d(at(2, 0), 2) = 1, d(at(1, 1), 2) = 1;
    d(at(1, 2), 2) = Scalar(3, 2), d(at(2, 1), 2) = Scalar(3, 2), d(at(2, 2), 2) = Scalar(7, 4);
    o.need(u.Hpar.comult == d, "exact Delta(v), Delta(w)");
    LinearMap p(2, 3);
    p(1, 0) = 1;              // p(u) = u_g
    p(0, 1) = 1, p(1, 1) = -1;   // p(v) = u_e - u_g
    o.need(u.p == p, "p(u) = u_g, p(v) = u_e - u_g, p(w) = 0");
    o.detail << "dim " << u.dim();
}

void criterion2(Outcome& o)
{
    auto u = build_universal(kc2());
    auto y = grouplike_from_value(u, {1, 0});
    auto x = grouplike_from_value(u, {0, 1});
    auto z = grouplike_from_value(u, half());
    o.need(y && x && z, "grouplikes exist");
    if (!(y && x && z))
        return;
    o.need(*y == Vec{1, 1, 1}, "y = u + v + w");
    o.need(*z == Vec{1, Scalar(1, 2), Scalar(1, 4)}, "z = u + v/2 + w/4");
    o.need(*x == Vec{1, 0, 0}, "u grouplike");
    o.need(u.p.apply(*y) == Vec{1, 0}, "p(y) = u_e");
    o.need(u.p.apply(*z) == half(), "p(z) = (u_e + u_g)/2");
    auto gs = grouplikes(u);
    o.need(gs.complete && gs.found.size() == 3, "exactly three grouplikes");

    auto b = build_base_data(u);
    auto iso = cosmash_isomorphism(u, b);
    auto a = assemble_hpar_coalgebroid(u, b, iso);
    auto t = product_table(a.direct, {*y, *x, *z});
    using O = std::optional<Vec>;
    const Vec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    std::vector<std::vector<O>> want = {
        {e1, e2, std::nullopt},
        {e2, e1, std::nullopt},
        {std::nullopt, std::nullopt, e3},
    };
    bool same = t.entries.size() == 3;
    for (std::size_t i = 0; same && i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (t.entries[i][j] != want[i][j])
                same = false;
    o.need(same, "3x3 product table");
    o.detail << "grouplikes " << gs.found.size() << ", table as expected";
}

void criterion3(Outcome& o)
{
    auto q = build_partial_hopf_quotient(dual_hopf(kc2()), 4, 6);
    o.need(q.certified_stable, "quotient certified");
    if (!q.certified_stable)
        return;
    Algebra w = q.algebra();
    Vec t = q.word_image({0});
    Vec t2 = w.multiply(t, t);
    Vec t3 = w.multiply(t2, t);
    o.need(is_zero(scaled(t3, 2) - scaled(t2, 3) + t), "t(t-1)(2t-1) = 0");
    o.need(q.dim() == 3 && rank(LinearMap::from_columns(q.dim(), {w.unit, t, t2})) == 3, "{1, t, t^2} basis");
    o.detail << "dim " << q.dim();
}

void criterion4(Outcome& o)
{
    auto t = h4_poly_comodule(12);
    auto r = check_truncated(t);
    for (const char* id : {"PCM1", "PCM2", "PCM3", "PCM4", "PCM5"})
        o.need(r.find(id) && r.passed(std::string(id)), id);
    o.need(r.all_pass(), "truncated report");
    auto ch = smallest_subcomodule(t, unit_vector(t.comodule.M_dim, 1), 64);
    std::size_t strict = 0;
    while (strict + 1 < ch.dims.size() && ch.dims[strict + 1] > ch.dims[strict])
        ++strict;
    o.need(strict >= 10, "strict growth for 10 rounds");
    o.detail << "strict growth " << strict << " rounds, " << to_string(ch.verdict);
}

void criterion5(Outcome& o)
{
    auto u = build_universal(kc2());
    auto b = build_base_data(u);
    auto r = lemadosE_suite(u, b);
    o.need(b.report.all_pass(), "base data");
    o.need(r.all_pass(), "lemma checks");
    o.detail << r.passed() << "/" << r.checks.size() << " checks";
}

void criterion6(Outcome& o)
{
    auto u = build_universal(kc2());
    auto b = build_base_data(u);
    auto iso = cosmash_isomorphism(u, b);
    std::size_t q = u.dim();
    o.need(iso.Phi_inv * iso.Phi == LinearMap::identity(q), "Phi^-1 Phi = id");
    o.need(iso.Phi * iso.Phi_inv == LinearMap::identity(iso.Phi.rows()), "Phi Phi^-1 = id");
    o.need(iso.Phit_inv * iso.Phit == LinearMap::identity(q), "right Phi^-1 Phi = id");
    o.need(iso.Phit * iso.Phit_inv == LinearMap::identity(iso.Phit.rows()), "right Phi Phi^-1 = id");
    o.need(b.Ebar * iso.Phi_inv == iso.left.phi0, "Ebar omega0bar = phi0");
    o.need(iso.report.all_pass(), "isomorphism report");
    o.detail << iso.report.passed() << "/" << iso.report.checks.size() << " checks";
}

void criterion7(Outcome& o)
{
    auto a = check_hopf_coalgebroid(from_hopf_algebra(kc2()));
    auto g = check_hopf_coalgebroid(from_groupoid(gamma_groupoid(cyclic_table(2)), "Gamma(C2)"));
    auto s = check_hopf_coalgebroid(sandwich(divided_power_coalgebra(), kc2()));
    auto u = build_universal(kc2());
    auto b = build_base_data(u);
    auto iso = cosmash_isomorphism(u, b);
    auto h = assemble_hpar_coalgebroid(u, b, iso);
    auto d = check_hopf_coalgebroid(h.direct);
    auto j = check_hopf_coalgebroid(h.adjoint);
    o.need(a.all_pass(), "(a) kC2");
    o.need(g.all_pass(), "(b) Gamma(C2)");
    o.need(s.all_pass(), "(c) sandwich");
    o.need(d.all_pass(), "(d) H^par direct");
    o.need(j.all_pass(), "(d) H^par adjoint");
    o.need(h.report.all_pass(), "(d) routes agree");
    o.detail << "checks " << a.passed() << "+" << g.passed() << "+" << s.passed() << "+" << d.passed() << "+"
             << j.passed();
}

void criterion8(Outcome& o)
{
    RandomOptions opt;
    opt.count = 200;
    for (const auto& h : {cyclic_group_algebra(2), cyclic_group_algebra(3)}) {
        auto u = build_universal(h);
        for (const auto& s : run_random_suites(u, opt)) {
            o.need(s.total >= 200, h.name + " " + s.id + " size");
            o.need(s.pass(), h.name + " " + s.id);
            if (!o.detail.str().empty())
                o.detail << "; ";
            o.detail << h.name << " " << s.id << " " << s.agreed << "/" << s.total;
        }
    }
}

void criterion9(Outcome& o)
{
    auto c2 = conjecture_probe(cyclic_table(2), "C2");
    o.need(c2.conclusive && c2.isomorphic, "C2 coalgebroid is Gamma(C2)");
    auto c3 = conjecture_probe(cyclic_table(3), "C3");
    o.detail << "C2: " << c2.detail << " | C3 (reported only): "
             << (c3.conclusive ? (c3.isomorphic ? "isomorphic" : "not isomorphic") : "inconclusive") << ", "
             << c3.detail;
}

}  // namespace

int main()
{
    struct Entry {
        int id;
        const char* name;
        double limit;
        Criterion run;
    };
    std::vector<Entry> all = {
        {1, "kC2 build-hpar", 5, criterion1},
        {2, "grouplikes and coalgebroid table", 10, criterion2},
        {3, "t(t-1)(2t-1) = 0", 5, criterion3},
        {4, "H4 truncated comodule", 10, criterion4},
        {5, "lemma battery on H^par(kC2)", 10, criterion5},
        {6, "cosmash isomorphism", 10, criterion6},
        {7, "Hopf coalgebroid checks", 60, criterion7},
        {8, "random suites", 120, criterion8},
        {9, "groupoid probe", 60, criterion9},
    };
    int failures = 0;
    for (auto& e : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(o);
        } catch (const std::exception& ex) {
            o.need(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > e.limit)
            o.need(false, "over time limit");
        if (!o.ok)
            ++failures;
        std::printf("%s %d %s (%.2fs / %.0fs): %s\n", o.ok ? "PASS" : "FAIL", e.id, e.name, secs, e.limit,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
