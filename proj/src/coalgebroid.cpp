#include "hopfpar/coalgebroid.hpp"

#include "hopfpar/pipe.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hopfpar {

namespace {

LinearMap vstack(const LinearMap& a, const LinearMap& b)
{
    LinearMap out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

LinearMap left_coaction(const Coalgebra& h, const LinearMap& alpha)
{
    Pipe p(h.dim);
    p.split(0, h.comult).map(0, alpha);
    return p.value();
}

LinearMap right_coaction(const Coalgebra& h, const LinearMap& beta)
{
    Pipe p(h.dim);
    p.split(0, h.comult).map(0, beta).swap(0, 1);
    return p.value();
}

// x⊠y -> x1⊠y1 ⊗ x2⊠y2 on vectors of Hcal⊗Hcal
LinearMap balint_comult(const Coalgebra& h, const LinearMap& v)
{
    std::size_t n = h.dim;
    Pipe p({n, n}, v);
    p.split(0, h.comult).split(2, h.comult).permute({0, 2, 1, 3});
    return p.value();
}

struct RawCotensor {
    Subspace T;
    std::vector<Vec> N;
};

RawCotensor raw_left(const Coalgebra& h, const Coalgebra& c, const LinearMap& alpha, const LinearMap& beta)
{
    std::size_t n = h.dim, k = c.dim;
    RawCotensor r;
    r.T = cotensor(right_coaction(h, beta), left_coaction(h, alpha), n, k, n);
    LinearMap b = r.T.basis_matrix();
    Pipe f1({n, n}, b), f2({n, n}, b);
    f1.split(0, h.comult).map(1, beta).permute({0, 2, 1});
    f2.split(1, h.comult).map(2, alpha);
    LinearMap d = f1.value() - f2.value();
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t s = 0; s < k; ++s) {
            Vec v(n * n);
            for (std::size_t i = 0; i < n * n; ++i)
                v[i] = d(i * k + s, j);
            if (!is_zero(v))
                r.N.push_back(v);
        }
    return r;
}

CotensorData finish(const Coalgebra& h, const Subspace& t, const std::vector<Vec>& nvecs)
{
    std::size_t n = h.dim;
    CotensorData cd;
    cd.report.subject = "cotensor and Balint product";
    cd.T = t;
    cd.B = t.basis_matrix();
    cd.coords = t.coordinate_map();
    cd.P = cd.B * cd.coords;
    cd.N = Subspace::span(n * n, nvecs);
    cd.report.expect("N inside the cotensor", t.contains(cd.N));
    std::vector<Vec> ncoords;
    for (const auto& v : cd.N.basis())
        ncoords.push_back(cd.coords.apply(v));
    cd.Q = quotient(t.dim(), Subspace::span(t.dim(), ncoords));
    cd.pi = cd.Q.projection * cd.coords;
    std::size_t q = cd.Q.dim;

    LinearMap reps = cd.B * cd.Q.section;
    Pipe dp({n, n, n, n}, balint_comult(h, reps));
    dp.apply(0, 2, cd.pi, {q}).apply(1, 2, cd.pi, {q});
    cd.balint.dim = q;
    cd.balint.comult = dp.value();
    cd.balint.counit = tensor_product(h.counit, h.counit) * reps;

    LinearMap id2 = LinearMap::identity(n * n);
    LinearMap db = balint_comult(h, cd.B);
    Pipe l({n, n, n, n}, db), r({n, n, n, n}, db);
    l.apply(0, 2, id2 - cd.P, {n, n});
    r.apply(2, 2, id2 - cd.P, {n, n});
    cd.report.expect("Delta_B lands in T⊗T", l.value().is_zero() && r.value().is_zero());
    if (cd.N.dim() > 0) {
        LinearMap nm = cd.N.basis_matrix();
        Pipe kn({n, n, n, n}, balint_comult(h, nm));
        kn.apply(0, 2, cd.pi, {q}).apply(1, 2, cd.pi, {q});
        cd.report.expect("Delta_B kills N", kn.value().is_zero());
        cd.report.expect("counit kills N", (tensor_product(h.counit, h.counit) * nm).is_zero());
    }
    cd.report.absorb(verify_coalgebra(cd.balint, "Balint product"), "Balint: ");
    return cd;
}

LinearMap restricted_kernel(const LinearMap& basis, const LinearMap& cond)
{
    Subspace k = kernel(cond);
    if (k.dim() == 0)
        return LinearMap(basis.rows(), 0);
    return basis * k.basis_matrix();
}

// (T1⊗H) ∩ (H⊗T2) ∩ {inner products land in the outer cotensor}
LinearMap mixed_domain(std::size_t n, const CotensorData& t1, const CotensorData& t2, const LinearMap& mu1,
                       const LinearMap& mu2, std::size_t& raw_dim)
{
    LinearMap id2 = LinearMap::identity(n * n);
    LinearMap base = tensor_product(t1.B, LinearMap::identity(n));
    Pipe c({n, n, n}, base);
    c.apply(1, 2, id2 - t2.P, {n, n});
    LinearMap v = restricted_kernel(base, c.value());
    raw_dim = v.cols();
    if (v.cols() == 0)
        return v;
    Pipe a({n, n, n}, v), b({n, n, n}, v);
    a.merge(0, mu1);
    b.merge(1, mu2);
    LinearMap cond = vstack((id2 - t2.P) * a.value(), (id2 - t1.P) * b.value());
    return restricted_kernel(v, cond);
}

struct SideView {
    const Coalgebra& H;
    const Coalgebra& C;
    const LinearMap& alpha;
    const LinearMap& beta;
    LinearMap mu;
    const LinearMap& eta;
};

void side_checks(VerificationReport& r, const std::string& pre, const SideView& s, const CotensorData& cd)
{
    std::size_t n = s.H.dim, c = s.C.dim;
    LinearMap in = LinearMap::identity(n), ic = LinearMap::identity(c), id2 = LinearMap::identity(n * n);
    r.expect(pre + "alpha coalgebra map", is_coalgebra_map(s.alpha, s.H, s.C));
    r.expect(pre + "beta anti-coalgebra map", is_anti_coalgebra_map(s.beta, s.H, s.C));
    {
        Pipe a(n), b(n);
        a.split(0, s.H.comult).map(0, s.alpha).map(1, s.beta);
        b.split(0, s.H.comult).map(0, s.beta).map(1, s.alpha).swap(0, 1);
        r.expect_equal(pre + "alpha(x1)⊗beta(x2) symmetric", a.value(), b.value(), {n});
    }
    LinearMap lam = left_coaction(s.H, s.alpha), rho = right_coaction(s.H, s.beta);
    r.expect_equal(pre + "bicomodule", tensor_product(lam, ic) * rho, tensor_product(ic, rho) * lam, {n});
    r.absorb(cd.report, pre);
    r.header.push_back(pre + "cotensor dim " + std::to_string(cd.T.dim()) + ", Balint dim " +
                       std::to_string(cd.Q.dim));
    const LinearMap& B = cd.B;
    const LinearMap& mu = s.mu;

    r.expect_equal(pre + "mu left colinear", lam * mu * B, tensor_product(ic, mu) * tensor_product(lam, in) * B);
    r.expect_equal(pre + "mu right colinear", rho * mu * B, tensor_product(mu, ic) * tensor_product(in, rho) * B);
    if (cd.N.dim() > 0)
        r.expect(pre + "mu kills N (Takeuchi condition)", (mu * cd.N.basis_matrix()).is_zero());
    r.expect_equal(pre + "mu counital", s.H.counit * mu * B, tensor_product(s.H.counit, s.H.counit) * B);
    {
        Pipe a({n, n, n, n}, balint_comult(s.H, B));
        a.merge(0, mu).merge(1, mu);
        r.expect_equal(pre + "mu comultiplicative on T", s.H.comult * mu * B, a.value());
    }
    {   // triple cotensor
        LinearMap base = tensor_product(B, in);
        Pipe k({n, n, n}, base);
        k.apply(1, 2, tensor_product(rho, in) - tensor_product(in, lam), {n, c, n});
        LinearMap t3 = restricted_kernel(base, k.value());
        r.header.push_back(pre + "triple cotensor dim " + std::to_string(t3.cols()));
        Pipe a({n, n, n}, t3), b({n, n, n}, t3);
        a.merge(0, mu);
        b.merge(1, mu);
        r.expect(pre + "inner products stay in T", ((id2 - cd.P) * a.value()).is_zero() &&
                                                       ((id2 - cd.P) * b.value()).is_zero());
        a.merge(0, mu);
        b.merge(0, mu);
        r.expect_equal(pre + "mu associative", a.value(), b.value());
    }
    const LinearMap& eta = s.eta;
    r.expect_equal(pre + "eps eta = eps", s.H.counit * eta, s.C.counit, {c});
    r.expect_equal(pre + "eta left colinear", lam * eta, tensor_product(ic, eta) * s.C.comult, {c});
    r.expect_equal(pre + "eta right colinear", rho * eta, tensor_product(eta, ic) * s.C.comult, {c});
    {
        Pipe u1(n), u2(n);
        u1.split(0, s.H.comult).map(0, eta * s.alpha);
        u2.split(0, s.H.comult).map(0, eta * s.beta).swap(0, 1);
        r.expect(pre + "unit domains in T", ((id2 - cd.P) * u1.value()).is_zero() &&
                                                ((id2 - cd.P) * u2.value()).is_zero());
        r.expect_equal(pre + "left unit", mu * u1.value(), in, {n});
        r.expect_equal(pre + "right unit", mu * u2.value(), in, {n});
    }
    LinearMap de = s.H.comult * eta;
    r.expect_equal(pre + "Delta eta absorbs eta alpha", tensor_product(in, eta * s.alpha) * de, de, {c});
    r.expect_equal(pre + "Delta eta absorbs eta beta", tensor_product(in, eta * s.beta) * de, de, {c});
}

CotensorData mirror_left(const HopfCoalgebroid& h)
{
    Coalgebra hc = coopposite(h.Hcal), cc = coopposite(h.Ct);
    auto raw = raw_left(hc, cc, h.alpha_t, h.beta_t);
    return finish(hc, raw.T, raw.N);
}

}  // namespace

Subspace cotensor(const LinearMap& rho, const LinearMap& lambda, std::size_t v, std::size_t c, std::size_t w)
{
    LinearMap d = tensor_product(rho, LinearMap::identity(w)) - tensor_product(LinearMap::identity(v), lambda);
    (void)c;
    return kernel(d);
}

CotensorData left_cotensor(const Coalgebra& h, const Coalgebra& c, const LinearMap& alpha, const LinearMap& beta)
{
    auto raw = raw_left(h, c, alpha, beta);
    return finish(h, raw.T, raw.N);
}

CotensorData left_cotensor(const HopfCoalgebroid& h) { return left_cotensor(h.Hcal, h.C, h.alpha, h.beta); }

CotensorData right_cotensor(const HopfCoalgebroid& h)
{
    std::size_t n = h.Hcal.dim;
    Coalgebra hc = coopposite(h.Hcal), cc = coopposite(h.Ct);
    auto raw = raw_left(hc, cc, h.alpha_t, h.beta_t);
    LinearMap f = flip_map(n, n);
    std::vector<Vec> tv, nv;
    for (const auto& v : raw.T.basis())
        tv.push_back(f.apply(v));
    for (const auto& v : raw.N)
        nv.push_back(f.apply(v));
    return finish(h.Hcal, Subspace::span(n * n, tv), nv);
}

VerificationReport check_hopf_coalgebroid(const HopfCoalgebroid& h)
{
    VerificationReport r;
    r.subject = "Hopf coalgebroid " + h.name;
    r.header.push_back("right structure checked as the left structure of Hcal^cop over C~^cop with mu_R flipped");
    r.header.push_back("mixed associativity is checked on (T⊗H) ∩ (H⊗T') cut down to the elements whose inner "
                       "products land in the outer cotensor");
    std::size_t n = h.Hcal.dim;
    r.absorb(verify_coalgebra(h.Hcal, "Hcal"), "Hcal: ");
    r.absorb(verify_coalgebra(h.C, "C"), "C: ");
    r.absorb(verify_coalgebra(h.Ct, "C~"), "C~: ");

    CotensorData tl = left_cotensor(h);
    side_checks(r, "L: ", SideView{h.Hcal, h.C, h.alpha, h.beta, h.mu_L, h.eta_L}, tl);
    Coalgebra hc = coopposite(h.Hcal), cc = coopposite(h.Ct);
    LinearMap flip = flip_map(n, n);
    CotensorData mirror = mirror_left(h);
    side_checks(r, "R: ", SideView{hc, cc, h.alpha_t, h.beta_t, h.mu_R * flip, h.eta_R}, mirror);
    CotensorData tr = right_cotensor(h);

    r.expect("S anti-coalgebra map", is_anti_coalgebra_map(h.S, h.Hcal, h.Hcal));
    r.expect("S bijective", inverse(h.S).has_value());
    {
        LinearMap theta = h.alpha_t * h.eta_L;
        r.expect("alpha~ eta_L anti-isomorphism C -> C~",
                 is_anti_coalgebra_map(theta, h.C, h.Ct) && inverse(theta).has_value());
    }
    r.expect_equal("(a) beta~ eta_L alpha = beta~", h.beta_t * h.eta_L * h.alpha, h.beta_t, {n});
    r.expect_equal("(a) alpha~ eta_L beta = alpha~", h.alpha_t * h.eta_L * h.beta, h.alpha_t, {n});
    r.expect_equal("(a) beta eta_R alpha~ = beta", h.beta * h.eta_R * h.alpha_t, h.beta, {n});
    r.expect_equal("(a) alpha eta_R beta~ = alpha", h.alpha * h.eta_R * h.beta_t, h.alpha, {n});
    {
        std::size_t raw1 = 0, raw2 = 0;
        LinearMap d1 = mixed_domain(n, tl, tr, h.mu_L, h.mu_R, raw1);
        LinearMap d2 = mixed_domain(n, tr, tl, h.mu_R, h.mu_L, raw2);
        r.header.push_back("mixed domains: " + std::to_string(d1.cols()) + " of " + std::to_string(raw1) + ", " +
                           std::to_string(d2.cols()) + " of " + std::to_string(raw2));
        Pipe a({n, n, n}, d1), b({n, n, n}, d1);
        a.merge(0, h.mu_L).merge(0, h.mu_R);
        b.merge(1, h.mu_R).merge(0, h.mu_L);
        r.expect_equal("(b) mu_R(mu_L⊗I) = mu_L(I⊗mu_R)", a.value(), b.value());
        Pipe c({n, n, n}, d2), d({n, n, n}, d2);
        c.merge(0, h.mu_R).merge(0, h.mu_L);
        d.merge(1, h.mu_L).merge(0, h.mu_R);
        r.expect_equal("(b) mu_L(mu_R⊗I) = mu_R(I⊗mu_L)", c.value(), d.value());
    }
    {
        Pipe a(n), b(n);
        a.map(0, h.S).split(0, h.Hcal.comult).split(1, h.Hcal.comult).map(0, h.beta).map(2, h.beta_t);
        b.split(0, h.Hcal.comult).split(1, h.Hcal.comult).map(0, h.alpha_t).map(1, h.S).map(2, h.alpha)
            .permute({2, 1, 0});
        r.expect_equal("(c) antipode twists the base maps", a.value(), b.value(), {n});
    }
    {
        LinearMap id2 = LinearMap::identity(n * n);
        Pipe a(n), b(n);
        a.split(0, h.Hcal.comult).map(0, h.S);
        b.split(0, h.Hcal.comult).map(1, h.S);
        r.expect("(d) S(x1)⊗x2 in T_L", ((id2 - tl.P) * a.value()).is_zero());
        r.expect("(d) x1⊗S(x2) in T_R", ((id2 - tr.P) * b.value()).is_zero());
        r.expect_equal("(d) mu_L(S⊗I)Delta = eta_R alpha~", h.mu_L * a.value(), h.eta_R * h.alpha_t, {n});
        r.expect_equal("(d) mu_R(I⊗S)Delta = eta_L alpha", h.mu_R * b.value(), h.eta_L * h.alpha, {n});
    }
    return r;
}

HopfCoalgebroid from_hopf_algebra(const HopfAlgebra& h)
{
    HopfCoalgebroid c;
    c.name = h.name;
    c.Hcal = h.coalg;
    c.C = c.Ct = trivial_coalgebra();
    c.alpha = c.beta = c.alpha_t = c.beta_t = h.eps();
    c.eta_L = c.eta_R = h.alg.unit_map();
    c.mu_L = c.mu_R = h.m();
    c.S = h.S();
    c.labels = h.labels;
    return c;
}

HopfCoalgebroid from_groupoid(const Groupoid& g, const std::string& name)
{
    Groupoid gg = g;
    validate_groupoid(gg);
    std::size_t n = gg.arrows(), o = gg.objects;
    HopfCoalgebroid c;
    c.name = name;
    c.Hcal = groupoid_coalgebra(gg);
    c.C = c.Ct = grouplike_coalgebra(o);
    c.alpha = LinearMap(o, n);
    c.beta = LinearMap(o, n);
    c.S = LinearMap(n, n);
    c.mu_L = LinearMap(n, n * n);
    for (std::size_t a = 0; a < n; ++a) {
        c.alpha(gg.tgt[a], a) = 1;
        c.beta(gg.src[a], a) = 1;
        c.S(gg.inverse[a], a) = 1;
        for (std::size_t b = 0; b < n; ++b)
            if (gg.comp[a][b])
                c.mu_L(*gg.comp[a][b], a * n + b) = 1;
    }
    c.alpha_t = c.beta;
    c.beta_t = c.alpha;
    c.mu_R = c.mu_L;
    c.eta_L = LinearMap(n, o);
    for (std::size_t x = 0; x < o; ++x)
        c.eta_L(gg.identity[x], x) = 1;
    c.eta_R = c.eta_L;
    c.labels = gg.arrow_labels;
    return c;
}

Groupoid gamma_groupoid(const std::vector<std::vector<std::size_t>>& table)
{
    std::size_t n = table.size();
    std::size_t e = 0;
    for (std::size_t a = 0; a < n; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n; ++b)
            ok = ok && table[a][b] == b && table[b][a] == b;
        if (ok) {
            e = a;
            break;
        }
    }
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == e)
                inv[a] = b;
    if (n > 20)
        throw std::invalid_argument("gamma_groupoid: group too large");
    std::vector<std::uint32_t> objs;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (m & (1u << e))
            objs.push_back(m);
    std::map<std::uint32_t, std::size_t> obj_index;
    for (std::size_t i = 0; i < objs.size(); ++i)
        obj_index[objs[i]] = i;
    auto set_label = [&](std::uint32_t m) {
        std::string s = "{";
        bool first = true;
        for (std::size_t x = 0; x < n; ++x)
            if (m & (1u << x)) {
                s += (first ? "" : ",") + std::to_string(x);
                first = false;
            }
        return s + "}";
    };
    auto translate = [&](std::size_t g, std::uint32_t m) {
        std::uint32_t out = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (m & (1u << x))
                out |= 1u << table[g][x];
        return out;
    };
    Groupoid gr;
    gr.objects = objs.size();
    std::vector<std::pair<std::size_t, std::uint32_t>> arrows;
    for (auto m : objs)
        for (std::size_t g = 0; g < n; ++g)
            if (m & (1u << g)) {
                arrows.push_back({g, m});
                gr.tgt.push_back(obj_index[m]);
                gr.src.push_back(obj_index[translate(inv[g], m)]);
                gr.arrow_labels.push_back("(" + std::to_string(g) + "," + set_label(m) + ")");
            }
    for (auto m : objs)
        gr.object_labels.push_back(set_label(m));
    std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> arrow_index;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        arrow_index[arrows[i]] = i;
    gr.comp.assign(arrows.size(), std::vector<std::optional<std::size_t>>(arrows.size()));
    for (std::size_t a = 0; a < arrows.size(); ++a)
        for (std::size_t b = 0; b < arrows.size(); ++b)
            if (gr.src[a] == gr.tgt[b])
                gr.comp[a][b] = arrow_index.at({table[arrows[a].first][arrows[b].first], arrows[a].second});
    validate_groupoid(gr);
    return gr;
}

Coalgebra divided_power_coalgebra()
{
    Coalgebra c;
    c.dim = 2;
    c.comult = LinearMap(4, 2);
    c.counit = LinearMap(1, 2);
    c.comult(0, 0) = 1;
    c.comult(1, 1) = 1;
    c.comult(2, 1) = 1;
    c.counit(0, 0) = 1;
    return c;
}

HopfCoalgebroid sandwich(const Coalgebra& c, const HopfAlgebra& h)
{
    std::size_t k = c.dim, d = h.dim();
    HopfCoalgebroid s;
    s.name = "C⊗" + h.name + "⊗C^cop";
    s.Hcal = tensor_coalgebra(tensor_coalgebra(c, h.coalg), coopposite(c));
    s.C = c;
    s.Ct = coopposite(c);
    LinearMap ik = LinearMap::identity(k);
    s.alpha = tensor_product({ik, h.eps(), c.counit});
    s.beta = tensor_product({c.counit, h.eps(), ik});
    s.alpha_t = s.beta;
    s.beta_t = s.alpha;
    Pipe m({k, d, k, k, d, k});
    m.kill(2, c.counit).kill(2, c.counit).merge(1, h.m());
    s.mu_L = s.mu_R = m.value();
    Pipe el(k), er(k);
    el.split(0, c.comult).insert(1, h.one());
    er.split(0, c.comult).swap(0, 1).insert(1, h.one());
    s.eta_L = el.value();
    s.eta_R = er.value();
    Pipe a({k, d, k});
    a.map(1, h.S()).permute({2, 1, 0});
    s.S = a.value();
    return s;
}

HparCoalgebroid assemble_hpar_coalgebroid(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b,
                                         const CosmashIso& iso)
{
    HparCoalgebroid out;
    VerificationReport& r = out.report;
    r.subject = "coalgebroid on H^par: direct and adjoint routes";
    const HopfAlgebra& h = u.H;
    std::size_t q = u.dim(), d = h.dim();

    auto alg = hopf_algebroid_on_Hpar(u.W);
    r.absorb(alg.report, "algebroid on W: ");
    HopfCoalgebroid& ad = out.adjoint;
    ad.name = "H^par(" + h.name + ") adjoint";
    ad.Hcal = u.Hpar;
    ad.C = dual_coalgebra(alg.Apar.algebra);
    ad.Ct = dual_coalgebra(alg.Apar_tilde.algebra);
    ad.alpha = alg.source.transpose();
    ad.beta = alg.target.transpose();
    ad.alpha_t = alg.source_R.transpose();
    ad.beta_t = alg.target_R.transpose();
    ad.eta_L = alg.counit_L.transpose();
    ad.eta_R = alg.counit_R.transpose();
    ad.mu_L = ad.mu_R = alg.comult_L.transpose();
    ad.S = alg.antipode_star.transpose();
    ad.labels = u.basis_labels();

    HopfCoalgebroid& di = out.direct;
    di.name = "H^par(" + h.name + ") direct";
    di.Hcal = u.Hpar;
    di.C = b.C;
    di.Ct = b.Ctilde;
    di.alpha = b.Ebar;
    di.beta = b.Ebar * b.sigma;
    di.alpha_t = b.Etildebar;
    di.beta_t = b.Etildebar * b.sigma;
    di.labels = u.basis_labels();
    {
        const CosmashCoalgebra& l = iso.left;
        di.eta_L = iso.Phi_inv * l.coords * l.projector *
                   tensor_product(LinearMap::identity(b.C.dim), h.alg.unit_map());
        const CosmashCoalgebra& rr = iso.right;
        di.eta_R = iso.Phit_inv * rr.coords * rr.projector *
                   tensor_product(h.alg.unit_map(), LinearMap::identity(b.Ctilde.dim));
    }
    auto factor_mu = [&](const CotensorData& cd, const std::string& tag) {
        LinearMap reps = cd.B * cd.Q.section;
        Pipe m({q, q}, reps);
        m.map(0, u.p).map(1, u.p).merge(0, h.m());
        auto f = factor_corep(u, cd.balint, m.value());
        r.absorb(f.report, tag + ": ");
        return LinearMap(f.omega_bar * cd.pi);
    };
    CotensorData tl = left_cotensor(di), tr = right_cotensor(di);
    di.mu_L = factor_mu(tl, "mu_L");
    di.mu_R = factor_mu(tr, "mu_R");
    {
        auto f = factor_corep(u, coopposite(u.Hpar), h.S() * u.p);
        r.absorb(f.report, "S: ");
        di.S = f.omega_bar;
    }
    (void)d;

    r.expect_equal("same C", ad.C.comult, di.C.comult);
    r.expect_equal("same C~", ad.Ct.comult, di.Ct.comult);
    r.expect_equal("alpha agrees", ad.alpha, di.alpha, {q});
    r.expect_equal("beta agrees", ad.beta, di.beta, {q});
    r.expect_equal("alpha~ agrees", ad.alpha_t, di.alpha_t, {q});
    r.expect_equal("beta~ agrees", ad.beta_t, di.beta_t, {q});
    r.expect_equal("eta_L agrees", ad.eta_L, di.eta_L);
    r.expect_equal("eta_R agrees", ad.eta_R, di.eta_R);
    r.expect_equal("S agrees", ad.S, di.S, {q});
    r.expect_equal("mu_L agrees on T_L", ad.mu_L * tl.B, di.mu_L * tl.B);
    r.expect_equal("mu_R agrees on T_R", ad.mu_R * tr.B, di.mu_R * tr.B);
    return out;
}

ProductTable product_table(const HopfCoalgebroid& h, const std::vector<Vec>& basis)
{
    std::size_t n = h.Hcal.dim;
    CotensorData cd = left_cotensor(h);
    LinearMap bm = LinearMap::from_columns(n, basis);
    ProductTable t;
    for (const auto& x : basis) {
        std::vector<std::optional<Vec>> row;
        for (const auto& y : basis) {
            Vec v = tensor_product(LinearMap::column_vector(x), LinearMap::column_vector(y)).column(0);
            if (!cd.T.contains(v)) {
                row.push_back(std::nullopt);
                continue;
            }
            auto c = solve(bm, LinearMap::column_vector(h.mu_L.apply(v)));
            row.push_back(c ? std::optional<Vec>(c->column(0)) : std::nullopt);
        }
        t.entries.push_back(row);
    }
    return t;
}

namespace {

std::optional<std::size_t> find_vec(const std::vector<Vec>& vs, const Vec& v)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] == v)
            return i;
    return std::nullopt;
}

// arrow map a -> b between groupoids, if one exists
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groupoid_iso(const Groupoid& a,
                                                                                           const Groupoid& b)
{
    if (a.objects != b.objects || a.arrows() != b.arrows())
        return std::nullopt;
    std::size_t o = a.objects, n = a.arrows();
    std::vector<std::size_t> om(o);
    for (std::size_t i = 0; i < o; ++i)
        om[i] = i;
    do {
        std::vector<std::size_t> am(n, n);
        std::vector<bool> used(n, false);
        std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
            if (i == n)
                return true;
            for (std::size_t c = 0; c < n; ++c) {
                if (used[c] || b.src[c] != om[a.src[i]] || b.tgt[c] != om[a.tgt[i]])
                    continue;
                am[i] = c;
                bool ok = true;
                for (std::size_t x = 0; x <= i && ok; ++x)
                    for (std::size_t y = 0; y <= i && ok; ++y)
                        if (a.comp[x][y] && *a.comp[x][y] <= i)
                            ok = b.comp[am[x]][am[y]] == am[*a.comp[x][y]];
                if (!ok)
                    continue;
                used[c] = true;
                if (place(i + 1))
                    return true;
                used[c] = false;
            }
            am[i] = n;
            return false;
        };
        if (place(0))
            return std::make_pair(om, am);
    } while (std::next_permutation(om.begin(), om.end()));
    return std::nullopt;
}

}  // namespace

ConjectureProbe conjecture_probe(const std::vector<std::vector<std::size_t>>& table, const std::string& name,
                                 const BuildOptions& opt)
{
    ConjectureProbe pr;
    pr.group = name;
    VerificationReport& r = pr.report;
    r.subject = "H^par(k" + name + ") against the groupoid coalgebroid of Gamma(" + name + ")";
    HopfAlgebra h = group_algebra(table, "k" + name);
    Groupoid gam = gamma_groupoid(table);
    r.header.push_back("Gamma: " + std::to_string(gam.objects) + " objects, " + std::to_string(gam.arrows()) +
                       " arrows");
    UniversalCorepCoalgebra u;
    try {
        u = build_universal(h, opt);
    } catch (const NotComputable& e) {
        pr.detail = e.what();
        return pr;
    }
    auto b = build_base_data(u);
    auto iso = cosmash_isomorphism(u, b);
    auto hc = assemble_hpar_coalgebroid(u, b, iso);
    const HopfCoalgebroid& c = hc.direct;
    r.expect("dim H^par = arrows of Gamma", u.dim() == gam.arrows());
    r.expect("dim C = objects of Gamma", c.C.dim == gam.objects);
    auto gs = grouplikes(u);
    r.header.push_back("grouplikes found over Q: " + std::to_string(gs.found.size()));
    if (!gs.complete) {
        pr.detail = "no grouplike basis over Q (" + std::to_string(gs.found.size()) + " of " +
                    std::to_string(u.dim()) + "), groupoid structure not read off";
        return pr;
    }
    pr.conclusive = true;
    std::size_t n = u.dim();
    std::vector<Vec> arrows;
    for (const auto& g : gs.found)
        arrows.push_back(g.element);
    std::vector<Vec> objects;
    for (const auto& g : arrows) {
        Vec a = c.alpha.apply(g);
        if (!find_vec(objects, a))
            objects.push_back(a);
    }
    Groupoid gr;
    gr.objects = objects.size();
    CotensorData tl = left_cotensor(c);
    bool ok = true;
    for (const auto& g : arrows) {
        gr.tgt.push_back(*find_vec(objects, c.alpha.apply(g)));
        auto s = find_vec(objects, c.beta.apply(g));
        ok = ok && s.has_value();
        gr.src.push_back(s.value_or(0));
    }
    r.expect("beta of a grouplike is an object", ok);
    gr.comp.assign(n, std::vector<std::optional<std::size_t>>(n));
    bool closed = ok;
    for (std::size_t a = 0; a < n && closed; ++a)
        for (std::size_t bb = 0; bb < n && closed; ++bb) {
            Vec v = tensor_product(LinearMap::column_vector(arrows[a]), LinearMap::column_vector(arrows[bb])).column(0);
            bool in = tl.T.contains(v);
            if (in != (gr.src[a] == gr.tgt[bb])) {
                closed = false;
                break;
            }
            if (in) {
                auto k = find_vec(arrows, c.mu_L.apply(v));
                closed = k.has_value();
                gr.comp[a][bb] = k;
            }
        }
    r.expect("grouplikes closed under mu_L exactly on composable pairs", closed);
    if (!closed) {
        pr.detail = "grouplikes do not form a groupoid";
        return pr;
    }
    try {
        validate_groupoid(gr);
    } catch (const std::exception& e) {
        r.expect("grouplikes form a groupoid", false, e.what());
        pr.detail = e.what();
        return pr;
    }
    r.expect("grouplikes form a groupoid", true);
    auto m = groupoid_iso(gam, gr);
    r.expect("groupoid isomorphism Gamma -> grouplikes", m.has_value());
    if (!m) {
        pr.detail = "grouplike groupoid not isomorphic to Gamma";
        return pr;
    }
    pr.arrow_map = m->second;
    HopfCoalgebroid gc = from_groupoid(gam, "Gamma(" + name + ")");
    LinearMap F(n, n), FC(objects.size(), gam.objects), FCt(c.Ct.dim, gam.objects);
    for (std::size_t a = 0; a < n; ++a)
        F.set_column(a, arrows[pr.arrow_map[a]]);
    for (std::size_t x = 0; x < gam.objects; ++x) {
        std::size_t g = pr.arrow_map[gam.identity[x]];
        FC.set_column(x, c.alpha.apply(arrows[g]));
        FCt.set_column(x, c.alpha_t.apply(arrows[g]));
    }
    r.expect("F coalgebra isomorphism", is_coalgebra_map(F, gc.Hcal, c.Hcal) && inverse(F).has_value());
    r.expect("F_C coalgebra isomorphism", is_coalgebra_map(FC, gc.C, c.C) && inverse(FC).has_value());
    r.expect_equal("alpha F = F_C alpha", c.alpha * F, FC * gc.alpha);
    r.expect_equal("beta F = F_C beta", c.beta * F, FC * gc.beta);
    r.expect_equal("alpha~ F = F_C~ alpha~", c.alpha_t * F, FCt * gc.alpha_t);
    r.expect_equal("beta~ F = F_C~ beta~", c.beta_t * F, FCt * gc.beta_t);
    r.expect_equal("eta_L F_C = F eta_L", c.eta_L * FC, F * gc.eta_L);
    r.expect_equal("eta_R F_C~ = F eta_R", c.eta_R * FCt, F * gc.eta_R);
    CotensorData gtl = left_cotensor(gc), gtr = right_cotensor(gc);
    r.expect_equal("mu_L (F⊗F) = F mu_L", c.mu_L * tensor_product(F, F) * gtl.B, F * gc.mu_L * gtl.B);
    r.expect_equal("mu_R (F⊗F) = F mu_R", c.mu_R * tensor_product(F, F) * gtr.B, F * gc.mu_R * gtr.B);
    r.expect_equal("S F = F S", c.S * F, F * gc.S);
    pr.isomorphic = r.all_pass();
    pr.detail = pr.isomorphic ? "isomorphic as Hopf coalgebroids" : "groupoid match but structure maps differ";
    return pr;
}

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return t;
}

}  // namespace hopfpar
