#include "hopfpar/partial_comod.hpp"

#include "hopfpar/pipe.hpp"

namespace hopfpar {

namespace {

Pipe inputs_pipe(std::size_t m, std::optional<std::size_t> inputs)
{
    if (!inputs || *inputs >= m)
        return Pipe(m);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < *inputs; ++i)
        idx.push_back(i);
    return Pipe({m}, LinearMap::identity(m).select_columns(idx));
}

std::vector<std::size_t> witness_dims(std::size_t m, std::optional<std::size_t> inputs)
{
    return {inputs && *inputs < m ? *inputs : m};
}

// Insert a vector of V⊗W as two new factors before pos.
void insert_pair(Pipe& p, std::size_t pos, const Vec& v, std::size_t a, std::size_t b)
{
    p.insert(pos, v);
    p.apply(pos, 1, LinearMap::identity(a * b), {a, b});
}

}  // namespace

VerificationReport check_partial_comodule(const PartialComoduleCandidate& c, std::optional<std::size_t> inputs)
{
    VerificationReport r;
    r.subject = "partial comodule over " + c.H.name;
    const HopfAlgebra& h = c.H;
    std::size_t m = c.M_dim, d = h.dim();
    if (c.rho.rows() != m * d || c.rho.cols() != m)
        throw DimensionError("partial comodule: rho must be (dim M * dim H) x dim M");
    auto wd = witness_dims(m, inputs);
    Pipe base = inputs_pipe(m, inputs);

    {
        Pipe p = base;
        p.split(0, c.rho, m, d).kill(1, h.eps());
        r.expect_equal("PCM1", p.value(), base.value(), wd);
    }
    Pipe two = base;   // (ρ⊗I)ρ: M,H,H
    two.split(0, c.rho, m, d).split(0, c.rho, m, d);
    Pipe three = two;  // (ρ⊗I⊗I)(ρ⊗I)ρ: M,H,H,H
    three.split(0, c.rho, m, d);

    struct Axiom {
        const char* id;
        std::size_t delta_leg;   // leg of (ρ⊗I)ρ that is comultiplied
        std::size_t s_leg;       // leg receiving S (in the 4-leg picture)
        std::size_t mult_at;     // first of the two multiplied legs
    };
    const Axiom axioms[] = {
        {"PCM2", 1, 3, 2},
        {"PCM3", 2, 2, 1},
        {"PCM4", 1, 2, 2},
        {"PCM5", 2, 1, 1},
    };
    for (const auto& ax : axioms) {
        Pipe lhs = two;
        lhs.split(ax.delta_leg, h.delta()).map(ax.s_leg, h.S()).merge(ax.mult_at, h.m());
        Pipe rhs = three;
        rhs.map(ax.s_leg, h.S()).merge(ax.mult_at, h.m());
        r.expect_equal(ax.id, lhs.value(), rhs.value(), wd);
    }
    bool left = r.passed("PCM1") && r.passed("PCM2") && r.passed("PCM3");
    bool right = r.passed("PCM1") && r.passed("PCM4") && r.passed("PCM5");
    r.expect("PCM123 <=> PCM145", left == right,
             left ? "both triples hold" : (right ? "only PCM1,PCM4,PCM5 hold" : "neither triple holds"));
    return r;
}

CoactionProjection coaction_projection(const PartialComoduleCandidate& c, std::optional<std::size_t> inputs)
{
    CoactionProjection out;
    out.report.subject = "coaction projection";
    const HopfAlgebra& h = c.H;
    std::size_t m = c.M_dim, d = h.dim();
    auto pcm = check_partial_comodule(c, inputs);
    if (!pcm.all_pass())
        throw std::invalid_argument("coaction projection: partial comodule axioms fail");
    Pipe p({m, d});
    p.split(0, c.rho, m, d).split(0, c.rho, m, d).map(2, h.S()).merge(2, h.m()).merge(1, h.m());
    out.pi = p.value();
    out.MbulletH = image(out.pi);

    auto wd = witness_dims(m, inputs);
    Pipe base = inputs_pipe(m, inputs);
    if (!inputs) {
        out.report.expect_equal("pi idempotent", out.pi * out.pi, out.pi, {m, d});
    } else {
        // only on the determined slice: π applied to π(ρ(m))
        Pipe a = base, b = base;
        a.split(0, c.rho, m, d).apply(0, 2, out.pi, {m, d});
        b.split(0, c.rho, m, d).apply(0, 2, out.pi, {m, d}).apply(0, 2, out.pi, {m, d});
        out.report.expect_equal("pi idempotent on rho(M)", b.value(), a.value(), wd);
    }
    {
        Pipe a = base, b = base;
        a.split(0, c.rho, m, d).apply(0, 2, out.pi, {m, d});
        b.split(0, c.rho, m, d);
        out.report.expect_equal("pi rho = rho", a.value(), b.value(), wd);
    }
    Pipe rr = base;   // (ρ⊗I)ρ
    rr.split(0, c.rho, m, d).split(0, c.rho, m, d);
    Pipe dd = base;   // (I⊗Δ)ρ
    dd.split(0, c.rho, m, d).split(1, h.delta());
    {
        Pipe a = dd;
        a.apply(0, 2, out.pi, {m, d});
        out.report.expect_equal("(pi⊗I)(I⊗Δ)rho = (rho⊗I)rho", a.value(), rr.value(), wd);
    }
    {
        LinearMap diff = rr.value() - dd.value();
        Pipe a({m, d, d}, diff);
        a.apply(0, 2, out.pi, {m, d});
        out.report.expect("(rho⊗I)rho - (I⊗Δ)rho in ker(pi⊗I)", a.value().is_zero());
    }
    return out;
}

LinearMap corep_from_comodule(const PartialComoduleCandidate& c)
{
    std::size_t m = c.M_dim, d = c.H.dim();
    LinearMap w(d, m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t hh = 0; hh < d; ++hh)
                w(hh, i * m + j) = c.rho(i * d + hh, j);
    return w;
}

PartialComoduleCandidate comodule_from_corep(const HopfAlgebra& h, std::size_t m, const LinearMap& omega)
{
    std::size_t d = h.dim();
    if (omega.rows() != d || omega.cols() != m * m)
        throw DimensionError("comodule_from_corep: omega must be dim H x m^2");
    PartialComoduleCandidate c{h, m, LinearMap(m * d, m)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t hh = 0; hh < d; ++hh)
                c.rho(i * d + hh, j) = omega(hh, i * m + j);
    return c;
}

PartialRepData module_from_comodule(const PartialComoduleCandidate& c)
{
    std::size_t m = c.M_dim, d = c.H.dim();
    PartialRepData out{dual_hopf(c.H), matrix_algebra(m), LinearMap(m * m, d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t j = 0; j < m; ++j)
                out.pi(a * m + j, i) = c.rho(a * d + i, j);
    return out;
}

PartialComoduleCandidate comodule_from_module(const HopfAlgebra& h, std::size_t m, const LinearMap& pi)
{
    std::size_t d = h.dim();
    if (pi.rows() != m * m || pi.cols() != d)
        throw DimensionError("comodule_from_module: pi must be m^2 x dim H");
    PartialComoduleCandidate c{h, m, LinearMap(m * d, m)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t j = 0; j < m; ++j)
                c.rho(a * d + i, j) = pi(a * m + j, i);
    return c;
}

VerificationReport check_pca(const HopfAlgebra& h, const Algebra& a, const LinearMap& rho)
{
    VerificationReport r;
    r.subject = "partial comodule algebra over " + h.name;
    std::size_t n = a.dim, d = h.dim();
    if (rho.rows() != n * d || rho.cols() != n)
        throw DimensionError("check_pca: rho must be (dim A * dim H) x dim A");
    {
        Pipe l({n, n});
        l.merge(0, a.mult).split(0, rho, n, d);
        Pipe rr({n, n});
        rr.split(1, rho, n, d).split(0, rho, n, d).permute({0, 2, 1, 3}).merge(2, h.m()).merge(0, a.mult);
        r.expect_equal("PCA1", l.value(), rr.value(), {n, n});
    }
    {
        Pipe p(n);
        p.split(0, rho, n, d).kill(1, h.eps());
        r.expect_equal("PCA2", p.value(), LinearMap::identity(n), {n});
    }
    {
        Vec r1 = rho.apply(a.unit);
        Pipe lhs(n);
        lhs.split(0, rho, n, d).split(0, rho, n, d);
        Pipe da(n);
        da.split(0, rho, n, d).split(1, h.delta());
        Pipe r1p = da;   // ρ(1)(I⊗Δ)ρ(a)
        insert_pair(r1p, 0, r1, n, d);
        r1p.permute({0, 2, 1, 3, 4}).merge(2, h.m()).merge(0, a.mult);
        Pipe r2p = da;   // (I⊗Δ)ρ(a)ρ(1)
        insert_pair(r2p, 3, r1, n, d);
        r2p.permute({0, 3, 1, 4, 2}).merge(2, h.m()).merge(0, a.mult);
        r.expect_equal("PCA3 (left)", lhs.value(), r1p.value(), {n});
        r.expect_equal("PCA3 (symmetric)", lhs.value(), r2p.value(), {n});
    }
    if (r.all_pass()) {
        auto pcm = check_partial_comodule({h, n, rho});
        r.expect("partial comodule (consequence)", pcm.all_pass());
    }
    return r;
}

VerificationReport check_lpcc(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& lambda)
{
    VerificationReport r;
    r.subject = "left partial comodule coalgebra over " + h.name;
    std::size_t n = c.dim, d = h.dim();
    if (lambda.rows() != d * n || lambda.cols() != n)
        throw DimensionError("check_lpcc: lambda must be (dim H * dim C) x dim C");
    {
        Pipe l(n);
        l.split(0, lambda, d, n).split(1, c.comult);
        Pipe rr(n);
        rr.split(0, c.comult).split(0, lambda, d, n).split(2, lambda, d, n).permute({0, 2, 1, 3}).merge(0, h.m());
        r.expect_equal("LPCC1", l.value(), rr.value(), {n});
    }
    {
        Pipe p(n);
        p.split(0, lambda, d, n).kill(0, h.eps());
        r.expect_equal("LPCC2", p.value(), LinearMap::identity(n), {n});
    }
    {
        Pipe l(n);
        l.split(0, lambda, d, n).split(1, lambda, d, n);
        Pipe r1(n);
        r1.split(0, c.comult).split(0, lambda, d, n).kill(1, c.counit).split(1, lambda, d, n)
            .split(1, h.delta()).merge(0, h.m());
        Pipe r2(n);
        r2.split(0, c.comult).split(1, lambda, d, n).kill(2, c.counit).split(0, lambda, d, n)
            .split(0, h.delta()).permute({0, 3, 1, 2}).merge(0, h.m());
        r.expect_equal("LPCC3 (first)", l.value(), r1.value(), {n});
        r.expect_equal("LPCC3 (second)", l.value(), r2.value(), {n});
    }
    return r;
}

VerificationReport check_rpcc(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& rho)
{
    VerificationReport r;
    r.subject = "right partial comodule coalgebra over " + h.name;
    std::size_t n = c.dim, d = h.dim();
    if (rho.rows() != n * d || rho.cols() != n)
        throw DimensionError("check_rpcc: rho must be (dim C * dim H) x dim C");
    {
        Pipe l(n);
        l.split(0, rho, n, d).split(0, c.comult);
        Pipe rr(n);
        rr.split(0, c.comult).split(1, rho, n, d).split(0, rho, n, d).permute({0, 2, 1, 3}).merge(2, h.m());
        r.expect_equal("RPCC1", l.value(), rr.value(), {n});
    }
    {
        Pipe p(n);
        p.split(0, rho, n, d).kill(1, h.eps());
        r.expect_equal("RPCC2", p.value(), LinearMap::identity(n), {n});
    }
    {
        Pipe l(n);
        l.split(0, rho, n, d).split(0, rho, n, d);
        Pipe r1(n);
        r1.split(0, c.comult).split(0, rho, n, d).kill(0, c.counit).split(1, rho, n, d)
            .split(2, h.delta()).permute({1, 2, 0, 3}).merge(2, h.m());
        Pipe r2(n);
        r2.split(0, c.comult).split(1, rho, n, d).kill(1, c.counit).split(0, rho, n, d)
            .split(1, h.delta()).merge(2, h.m());
        r.expect_equal("RPCC3 (first)", l.value(), r1.value(), {n});
        r.expect_equal("RPCC3 (second)", l.value(), r2.value(), {n});
    }
    if (r.all_pass()) {
        auto pcm = check_partial_comodule({h, n, rho});
        r.expect("partial comodule (consequence)", pcm.all_pass());
    }
    return r;
}

TruncatedPolyComodule h4_poly_comodule(std::size_t N)
{
    if (N < 2)
        throw std::invalid_argument("truncation degree must be at least 2");
    TruncatedPolyComodule t;
    t.N = N;
    t.determined_degree = N - 2;
    t.window = N;
    HopfAlgebra h = sweedler_h4();
    std::size_t m = N + 2, d = h.dim();
    LinearMap rho(m * d, m);
    // basis of H4: 1, g, x, y
    for (std::size_t n = 0; n <= N; ++n) {
        rho((n + 1) * d + 3, n) = 1;
        rho(n * d + 0, n) = Scalar(1, 2);
        rho(n * d + 1, n) = Scalar(1, 2);
    }
    t.comodule = {h, m, rho};
    return t;
}

VerificationReport check_truncated(const TruncatedPolyComodule& t)
{
    auto r = check_partial_comodule(t.comodule, t.determined_degree + 1);
    r.subject = "k[z] over H4, degrees <= " + std::to_string(t.determined_degree) + " (N=" + std::to_string(t.N) + ")";
    r.header.push_back("axioms evaluated on z^0..z^" + std::to_string(t.determined_degree) +
                       " only; higher inputs depend on the cut at z^" + std::to_string(t.N + 1));
    return r;
}

std::string to_string(RegularityVerdict v)
{
    switch (v) {
    case RegularityVerdict::RegularWitnessed: return "regular-witnessed";
    case RegularityVerdict::IrregularEvidence: return "irregular-evidence";
    case RegularityVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

SubcomoduleChain smallest_subcomodule(const PartialComoduleCandidate& c, const Vec& v, std::size_t budget,
                                      std::optional<std::size_t> window)
{
    std::size_t m = c.M_dim, d = c.H.dim();
    std::vector<LinearMap> ts;
    for (std::size_t i = 0; i < d; ++i) {
        LinearMap t(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t j = 0; j < m; ++j)
                t(a, j) = c.rho(a * d + i, j);
        ts.push_back(t);
    }
    auto inside = [&](const Vec& x) {
        if (!window)
            return true;
        for (std::size_t k = *window + 1; k < m; ++k)
            if (sgn(x[k]) != 0)
                return false;
        return true;
    };
    SubcomoduleChain ch;
    ch.span = Subspace::span(m, {v});
    ch.dims.push_back(ch.span.dim());
    if (!inside(v)) {
        ch.note = "start vector outside the determined window";
        return ch;
    }
    bool strictly = true;
    for (std::size_t round = 0; round < budget; ++round) {
        std::vector<Vec> vs = ch.span.basis();
        for (const auto& b : ch.span.basis()) {
            if (!inside(b)) {
                // growth all the way to the edge of the determined part
                ch.note = "left the determined window at round " + std::to_string(round + 1);
                ch.verdict = strictly && round > 0 ? RegularityVerdict::IrregularEvidence
                                                   : RegularityVerdict::Inconclusive;
                return ch;
            }
            for (const auto& t : ts)
                vs.push_back(t.apply(b));
        }
        Subspace next = Subspace::span(m, vs);
        ch.dims.push_back(next.dim());
        if (next.dim() == ch.span.dim()) {
            ch.stabilized = true;
            ch.verdict = RegularityVerdict::RegularWitnessed;
            ch.note = "fixpoint after " + std::to_string(round) + " rounds";
            return ch;
        }
        strictly = strictly && next.dim() > ch.span.dim();
        ch.span = next;
    }
    ch.verdict = strictly ? RegularityVerdict::IrregularEvidence : RegularityVerdict::Inconclusive;
    ch.note = "no fixpoint within " + std::to_string(budget) + " rounds";
    return ch;
}

SubcomoduleChain smallest_subcomodule(const TruncatedPolyComodule& t, const Vec& v, std::size_t budget)
{
    return smallest_subcomodule(t.comodule, v, budget, t.window);
}

}  // namespace hopfpar
