#include "hopfpar/corep.hpp"

#include "hopfpar/partial_comod.hpp"
#include "hopfpar/pipe.hpp"

namespace hopfpar {

VerificationReport check_partial_corep(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& omega)
{
    VerificationReport r;
    r.subject = "partial corepresentation of " + h.name;
    std::size_t n = c.dim;
    if (omega.rows() != h.dim() || omega.cols() != n)
        throw DimensionError("partial corepresentation: omega must be dim H x dim C");
    LinearMap sw = h.S() * omega;
    r.expect_equal("PC1", h.eps() * omega, c.counit, {n});

    Pipe two(n);
    two.split(0, c.comult).map(0, omega).map(1, omega);
    Pipe three(n);
    three.split(0, c.comult).split(1, c.comult).map(0, omega).map(1, omega).map(2, omega);
    {
        Pipe l = two, rr = three;
        l.split(0, h.delta()).map(2, h.S()).merge(1, h.m());
        rr.map(2, h.S()).merge(1, h.m());
        r.expect_equal("PC2", l.value(), rr.value(), {n});
    }
    {
        Pipe l = two, rr = three;
        l.split(1, h.delta()).map(1, h.S()).merge(0, h.m());
        rr.map(1, h.S()).merge(0, h.m());
        r.expect_equal("PC3", l.value(), rr.value(), {n});
    }
    {
        Pipe l = two, rr = three;
        l.split(0, h.delta()).map(1, h.S()).merge(1, h.m());
        rr.map(1, h.S()).merge(1, h.m());
        r.expect_equal("PC4", l.value(), rr.value(), {n});
    }
    {
        Pipe l = two, rr = three;
        l.split(1, h.delta()).map(0, h.S()).merge(0, h.m());
        rr.map(0, h.S()).merge(0, h.m());
        r.expect_equal("PC5", l.value(), rr.value(), {n});
    }
    bool left = r.passed("PC1") && r.passed("PC2") && r.passed("PC3");
    bool right = r.passed("PC1") && r.passed("PC4") && r.passed("PC5");
    r.expect("PC123 <=> PC145", left == right,
             left ? "both triples hold" : (right ? "only PC1,PC4,PC5 hold" : "neither triple holds"));
    {
        Pipe p = three;
        p.map(1, h.S()).merge(0, h.m()).merge(0, h.m());
        auto& ck = r.expect_equal("ISI", p.value(), omega, {n});
        if (!left)
            ck.note = "not implied: PC1-PC3 fail";
        Pipe q = three;
        q.map(0, h.S()).map(2, h.S()).merge(0, h.m()).merge(0, h.m());
        auto& ck2 = r.expect_equal("SIS", q.value(), sw, {n});
        if (!left)
            ck2.note = "not implied: PC1-PC3 fail";
    }
    return r;
}

GlobalCorepVerdict is_global_corep(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& omega)
{
    GlobalCorepVerdict v;
    Pipe p(c.dim);
    p.split(0, c.comult).map(0, h.S() * omega).map(1, omega).merge(0, h.m());
    v.pc6 = p.value() == h.alg.unit_map() * c.counit;
    v.coalgebra_map = is_coalgebra_map(omega, c, h.coalg);
    v.global = v.pc6 && v.coalgebra_map;
    return v;
}

Vec CosmashCoalgebra::element(const Vec& x, const Vec& h) const
{
    LinearMap t = side == Side::Left ? tensor_product(LinearMap::column_vector(x), LinearMap::column_vector(h))
                                     : tensor_product(LinearMap::column_vector(h), LinearMap::column_vector(x));
    return coords.apply(projector.apply(t.column(0)));
}

namespace {

void finish_cosmash(CosmashCoalgebra& cs, const LinearMap& dmap, const std::vector<std::size_t>& amb)
{
    VerificationReport& r = cs.report;
    r.expect_equal("projector idempotent (redundancy relation)", cs.projector * cs.projector, cs.projector, amb);
    r.expect_equal("comult constant on projector fibres", dmap * cs.projector, dmap, amb);
    cs.carrier = image(cs.projector);
    cs.basis = cs.carrier.basis_matrix();
    cs.coords = cs.carrier.coordinate_map();
    std::size_t k = cs.carrier.dim();
    LinearMap img = dmap * cs.basis;   // (a*a) x k
    Subspace sq = Subspace::span_columns(tensor_product(cs.basis, cs.basis));
    bool closed = true;
    std::vector<std::size_t> wit;
    for (std::size_t j = 0; j < k && closed; ++j)
        if (!sq.contains(img.column(j))) {
            closed = false;
            wit = {j};
        }
    r.expect("carrier closed under comult", closed).witness = wit;
    if (!closed)
        throw std::runtime_error("cosmash carrier not closed under comultiplication");
    cs.coalg.dim = k;
    cs.coalg.comult = tensor_product(cs.coords, cs.coords) * img;
    LinearMap eps_amb = cs.side == Side::Left ? tensor_product(cs.C.counit, cs.H.eps())
                                              : tensor_product(cs.H.eps(), cs.C.counit);
    cs.coalg.counit = eps_amb * cs.basis;
    r.absorb(verify_coalgebra(cs.coalg, "carrier"), "carrier: ");
    r.expect("phi0 coalgebra map", is_coalgebra_map(cs.phi0, cs.coalg, cs.C));
    r.absorb(check_partial_corep(cs.coalg, cs.H, cs.omega0), "omega0: ");
    {
        Pipe p(cs.C.dim);
        p.split(0, cs.C.comult).map(0, cs.nabla).map(1, cs.nabla).merge(0, cs.H.m());
        r.expect_equal("nabla convolution idempotent", p.value(), cs.nabla, {cs.C.dim});
    }
}

}  // namespace

CosmashCoalgebra build_left_cosmash(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& lambda)
{
    CosmashCoalgebra cs;
    cs.side = Side::Left;
    cs.H = h;
    cs.C = c;
    cs.coaction = lambda;
    cs.report.subject = "left cosmash coproduct over " + h.name;
    cs.report.absorb(check_lpcc(h, c, lambda), "coaction: ");
    std::size_t n = c.dim, d = h.dim();
    Pipe nb(n);
    nb.split(0, lambda, d, n).kill(1, c.counit);
    cs.nabla = nb.value();
    {   // x⊗h -> x1 ⊗ ∇(x2)h
        Pipe p({n, d});
        p.split(0, c.comult).map(1, cs.nabla).merge(1, h.m());
        cs.projector = p.value();
    }
    // D(x⊗h) = P(x1 ⊗ x2^[-1] h1) ⊗ P(x2^[0] ⊗ h2)
    Pipe dp({n, d});
    dp.split(0, c.comult).split(1, lambda, d, n).split(3, h.delta())   // x1, a, y, h1, h2
        .permute({0, 1, 3, 2, 4}).merge(1, h.m())                          // x1, a h1, y, h2
        .apply(0, 2, cs.projector, {n, d}).apply(2, 2, cs.projector, {n, d});
    LinearMap dmap = dp.value();
    {   // ∇(x1) x2^[-1] ⊗ x2^[0] = x^[-1] ⊗ x^[0]
        Pipe p(n);
        p.split(0, c.comult).map(0, cs.nabla).split(1, lambda, d, n).merge(0, h.m());
        cs.report.expect_equal("nablaid", p.value(), lambda, {n});
    }
    cs.report.expect_equal("LPCC2 (eps nabla = eps)", h.eps() * cs.nabla, c.counit, {n});
    // ω0 = m(∇⊗I), φ0 = I⊗ε on the carrier
    cs.omega0 = LinearMap();
    std::vector<std::size_t> amb{n, d};
    Pipe w({n, d});
    w.map(0, cs.nabla).merge(0, h.m());
    Pipe f({n, d});
    f.kill(1, h.eps());
    LinearMap wa = w.value(), fa = f.value();
    cs.carrier = image(cs.projector);
    cs.omega0 = wa * cs.carrier.basis_matrix();
    cs.phi0 = fa * cs.carrier.basis_matrix();
    finish_cosmash(cs, dmap, amb);
    return cs;
}

CosmashCoalgebra build_right_cosmash(const HopfAlgebra& h, const Coalgebra& c, const LinearMap& rho)
{
    CosmashCoalgebra cs;
    cs.side = Side::Right;
    cs.H = h;
    cs.C = c;
    cs.coaction = rho;
    cs.report.subject = "right cosmash coproduct over " + h.name;
    cs.report.absorb(check_rpcc(h, c, rho), "coaction: ");
    std::size_t n = c.dim, d = h.dim();
    Pipe nb(n);
    nb.split(0, rho, n, d).kill(0, c.counit);
    cs.nabla = nb.value();
    {   // h⊗x -> h∇̃(x1) ⊗ x2
        Pipe p({d, n});
        p.split(1, c.comult).map(1, cs.nabla).merge(0, h.m());
        cs.projector = p.value();
    }
    // D(h⊗x) = P(h1 ⊗ x1^[0]) ⊗ P(h2 x1^[1] ⊗ x2)
    Pipe dp({d, n});
    dp.split(1, c.comult).split(1, rho, n, d).split(0, h.delta())   // h1, h2, y, b, x2
        .permute({0, 2, 1, 3, 4}).merge(2, h.m())                     // h1, y, h2 b, x2
        .apply(0, 2, cs.projector, {d, n}).apply(2, 2, cs.projector, {d, n});
    LinearMap dmap = dp.value();
    {   // x^[0] ⊗ x^[1] = x1^[0] ⊗ x1^[1] ∇̃(x2)
        Pipe p(n);
        p.split(0, c.comult).map(1, cs.nabla).split(0, rho, n, d).merge(1, h.m());
        cs.report.expect_equal("nablaid", p.value(), rho, {n});
    }
    cs.report.expect_equal("RPCC2 (eps nabla = eps)", h.eps() * cs.nabla, c.counit, {n});
    std::vector<std::size_t> amb{d, n};
    Pipe w({d, n});
    w.map(1, cs.nabla).merge(0, h.m());
    Pipe f({d, n});
    f.kill(0, h.eps());
    cs.carrier = image(cs.projector);
    cs.omega0 = w.value() * cs.carrier.basis_matrix();
    cs.phi0 = f.value() * cs.carrier.basis_matrix();
    finish_cosmash(cs, dmap, amb);
    return cs;
}

VerificationReport check_contravariant_pair(const CosmashCoalgebra& cs, const Coalgebra& d, const LinearMap& phi,
                                            const LinearMap& omega)
{
    VerificationReport r;
    r.subject = std::string(cs.side == Side::Left ? "left" : "right") + " contravariant pair";
    const HopfAlgebra& h = cs.H;
    std::size_t n = d.dim, cd = cs.C.dim, hd = h.dim();
    if (phi.rows() != cd || phi.cols() != n || omega.rows() != hd || omega.cols() != n)
        throw DimensionError("contravariant pair: phi must be dim C x dim D, omega dim H x dim D");
    r.expect("CP1 phi coalgebra map", is_coalgebra_map(phi, d, cs.C));
    auto pc = check_partial_corep(d, h, omega);
    r.expect("CP1 omega partial corep", pc.all_pass());
    LinearMap sw = h.S() * omega;
    Pipe three(n);
    three.split(0, d.comult).split(1, d.comult);
    if (cs.side == Side::Left) {
        // λ(φ(x)) = ω(x1)S(ω(x3)) ⊗ φ(x2)
        Pipe l(n);
        l.map(0, phi).split(0, cs.coaction, hd, cd);
        Pipe rr = three;
        rr.map(0, omega).map(1, phi).map(2, sw).permute({0, 2, 1}).merge(0, h.m());
        r.expect_equal("CP2", l.value(), rr.value(), {n});
        // φ(x1) ⊗ S(ω(x2))ω(x3) = φ(x3) ⊗ S(ω(x1))ω(x2)
        Pipe a = three, b = three;
        a.map(0, phi).map(1, sw).map(2, omega).merge(1, h.m());
        b.map(0, sw).map(1, omega).map(2, phi).merge(0, h.m()).swap(0, 1);
        r.expect_equal("CP3", a.value(), b.value(), {n});
    } else {
        // ρ(φ(x)) = φ(x2) ⊗ S(ω(x1))ω(x3)
        Pipe l(n);
        l.map(0, phi).split(0, cs.coaction, cd, hd);
        Pipe rr = three;
        rr.map(0, sw).map(1, phi).map(2, omega).permute({1, 0, 2}).merge(1, h.m());
        r.expect_equal("CP2", l.value(), rr.value(), {n});
        // φ(x1) ⊗ ω(x2)S(ω(x3)) = φ(x3) ⊗ ω(x1)S(ω(x2))
        Pipe a = three, b = three;
        a.map(0, phi).map(1, omega).map(2, sw).merge(1, h.m());
        b.map(0, omega).map(1, sw).map(2, phi).merge(0, h.m()).swap(0, 1);
        r.expect_equal("CP3", a.value(), b.value(), {n});
    }
    return r;
}

Factorization universal_factorization(const CosmashCoalgebra& cs, const Coalgebra& d, const LinearMap& phi,
                                      const LinearMap& omega)
{
    Factorization f;
    f.report.subject = "universal factorization through the cosmash coproduct";
    auto cp = check_contravariant_pair(cs, d, phi, omega);
    f.report.absorb(cp);
    if (!cp.all_pass())
        throw std::invalid_argument("not a contravariant pair");
    std::size_t n = d.dim;
    Pipe p(n);
    if (cs.side == Side::Left)
        p.split(0, d.comult).map(0, phi).map(1, omega);
    else
        p.split(0, d.comult).map(0, omega).map(1, phi);
    LinearMap amb = p.value();
    LinearMap proj = cs.projector * amb;
    f.report.expect_equal("Phi lands in the carrier", proj, amb, {n});
    f.Phi = cs.coords * amb;
    f.report.expect("Phi coalgebra map", is_coalgebra_map(f.Phi, d, cs.coalg));
    f.report.expect_equal("phi0 Phi = phi", cs.phi0 * f.Phi, phi, {n});
    f.report.expect_equal("omega0 Phi = omega", cs.omega0 * f.Phi, omega, {n});
    // A coalgebra map Ψ with φ0Ψ = φ and ω0Ψ = ω satisfies
    // ((φ0⊗ω0)Δ)Ψ = (φ⊗ω)Δ_D; the left factor is the carrier inclusion.
    Pipe q(cs.dim());
    q.split(0, cs.coalg.comult);
    if (cs.side == Side::Left)
        q.map(0, cs.phi0).map(1, cs.omega0);
    else
        q.map(0, cs.omega0).map(1, cs.phi0);
    bool incl = q.value() == cs.basis;
    f.report.expect("(phi0⊗omega0)Δ is the carrier inclusion", incl);
    f.unique = incl && rank(cs.basis) == cs.dim();
    f.report.expect("uniqueness (injective linear constraint)", f.unique);
    return f;
}

}  // namespace hopfpar
