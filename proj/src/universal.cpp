#include "hopfpar/universal.hpp"

#include "hopfpar/pipe.hpp"

#include <algorithm>

namespace hopfpar {

namespace {

LinearMap sp_map(const HopfAlgebra& h, const LinearMap& p) { return h.S() * p; }

// x -> p(x1) ⊗ ... ⊗ p(xn)
LinearMap p_n(const Coalgebra& c, const LinearMap& p, std::size_t n)
{
    Pipe pp(c.dim);
    for (std::size_t k = 0; k + 1 < n; ++k)
        pp.split(k, c.comult);
    for (std::size_t k = 0; k < n; ++k)
        pp.map(k, p);
    return pp.value();
}

// X with X*a = b, transposed through solve.
std::optional<LinearMap> solve_right(const LinearMap& a, const LinearMap& b)
{
    auto x = solve(a.transpose(), b.transpose());
    if (!x)
        return std::nullopt;
    return x->transpose();
}

LinearMap unit_column(const HopfAlgebra& h) { return h.alg.unit_map(); }

}  // namespace

std::vector<std::string> UniversalCorepCoalgebra::basis_labels() const
{
    std::vector<std::string> out;
    for (const auto& w : W.basis_words)
        out.push_back("d" + (w.empty() ? std::string("(1)") : "(" + word_to_string(w, W.H) + ")"));
    return out;
}

UniversalCorepCoalgebra build_universal(const HopfAlgebra& h, const BuildOptions& opt)
{
    UniversalCorepCoalgebra u;
    u.H = h;
    u.report.subject = "universal corep-coalgebra of " + h.name;
    std::size_t n = opt.degree ? opt.degree : (h.dim() <= 2 ? 4 : 5);
    std::size_t N = opt.saturation ? opt.saturation : n + 2;
    HopfAlgebra k = dual_hopf(h);
    u.W = build_partial_hopf_quotient(k, n, N, opt.budget);
    if (!u.W.certified_stable)
        throw NotComputable("H^par not computable at this budget: " + u.W.reason, u.W.dims_history);
    Algebra w = u.W.algebra();
    u.Hpar = dual_coalgebra(w);
    std::size_t q = u.Hpar.dim, d = h.dim();
    u.p = u.W.bracket.transpose();
    u.pairing = Pairing::from_form(LinearMap::identity(q));
    u.report.absorb(verify_coalgebra(u.Hpar, "H^par"), "H^par: ");
    u.report.absorb(check_partial_corep(u.Hpar, h, u.p), "p: ");

    // (x, [k1]...[kn]) = k1(p(x1))...kn(p(xn)) for every word up to maxlen+1
    {
        bool ok = true;
        std::vector<std::size_t> wit;
        std::size_t top = u.W.max_word_length() + 1;
        for (std::size_t len = 0; len <= top && ok; ++len) {
            LinearMap pn = len == 0 ? u.Hpar.counit : p_n(u.Hpar, u.p, len);
            std::size_t count = len == 0 ? 1 : product(std::vector<std::size_t>(len, d));
            for (std::size_t f = 0; f < count && ok; ++f) {
                Word word(len);
                std::size_t r = f;
                for (std::size_t j = len; j-- > 0;) {
                    word[j] = static_cast<std::uint32_t>(r % d);
                    r /= d;
                }
                Vec img = u.W.word_image(word);
                for (std::size_t x = 0; x < q; ++x)
                    if (pn(f, x) != img[x]) {
                        ok = false;
                        wit = {len, f, x};
                        break;
                    }
            }
        }
        u.report.expect("pairing law on all words up to length " + std::to_string(top), ok).witness = wit;
    }
    u.report.expect("pairing nondegenerate", is_left_nondegenerate(u.pairing) && is_right_nondegenerate(u.pairing));

    auto fi = factor_corep(u, h.coalg, LinearMap::identity(d));
    u.embed_i = fi.omega_bar;
    u.report.expect("embed_i coalgebra map", is_coalgebra_map(u.embed_i, h.coalg, u.Hpar));
    u.report.expect_equal("p embed_i = id", u.p * u.embed_i, LinearMap::identity(d), {d});
    return u;
}

CorepFactor factor_corep(const UniversalCorepCoalgebra& u, const Coalgebra& c, const LinearMap& omega)
{
    CorepFactor f;
    f.report.subject = "factorization of a partial corepresentation through H^par";
    auto pc = check_partial_corep(c, u.H, omega);
    if (!pc.all_pass()) {
        for (const auto& ck : pc.checks)
            if (!ck.pass)
                throw std::invalid_argument("not a partial corepresentation (" + ck.id + ")");
    }
    auto ind = induced_algebra_map(u.W, dual_algebra(c), omega.transpose());
    if (!ind.exists)
        throw std::runtime_error("factor_corep: " + ind.failure);
    f.omega_bar = ind.map.transpose();
    f.unique = ind.unique;
    f.report.expect_equal("p omega_bar = omega", u.p * f.omega_bar, omega, {c.dim});
    f.report.expect("omega_bar coalgebra map", is_coalgebra_map(f.omega_bar, c, u.Hpar));
    f.report.expect("uniqueness (W generated by brackets)", f.unique);
    return f;
}

VerificationReport check_global_comodule(const Coalgebra& d, std::size_t m, const LinearMap& rho)
{
    VerificationReport r;
    r.subject = "comodule over a coalgebra";
    Pipe a(m), b(m), e(m);
    a.split(0, rho, m, d.dim).split(0, rho, m, d.dim);
    b.split(0, rho, m, d.dim).split(1, d.comult);
    r.expect_equal("coassociative", a.value(), b.value(), {m});
    e.split(0, rho, m, d.dim).kill(1, d.counit);
    r.expect_equal("counital", e.value(), LinearMap::identity(m), {m});
    return r;
}

PartialComoduleCandidate gamma_functor(const UniversalCorepCoalgebra& u, const HparComodule& m)
{
    Pipe p(m.M_dim);
    p.split(0, m.rho_hat, m.M_dim, u.dim()).map(1, u.p);
    return PartialComoduleCandidate{u.H, m.M_dim, p.value()};
}

HparComodule gamma_inverse(const UniversalCorepCoalgebra& u, const PartialComoduleCandidate& c)
{
    std::size_t m = c.M_dim, q = u.dim();
    LinearMap omega = corep_from_comodule(c);
    auto f = factor_corep(u, comatrix_coalgebra(m), omega);
    HparComodule out;
    out.M_dim = m;
    out.rho_hat = LinearMap(m * q, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t j = 0; j < m; ++j)
                out.rho_hat(i * q + a, j) = f.omega_bar(a, i * m + j);
    return out;
}

VerificationReport check_copar(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& f)
{
    VerificationReport r;
    r.subject = "copar map";
    std::size_t n = c.dim;
    r.expect_equal("PQ1", h.eps() * f, c.counit, {n});
    Pipe two(n);
    two.split(0, c.comult).map(0, f).map(1, f);
    Pipe m2 = two;
    m2.merge(0, h.m());
    r.expect_equal("PQ2", m2.value(), f, {n});
    Pipe l = two, rr = two;
    l.split(1, h.delta()).merge(0, h.m());
    rr.split(0, h.delta()).permute({0, 2, 1}).merge(0, h.m());
    r.expect_equal("PQ3", l.value(), rr.value(), {n});
    return r;
}

VerificationReport check_anti_copar(const Coalgebra& c, const HopfAlgebra& h, const LinearMap& f)
{
    VerificationReport r;
    r.subject = "anti-copar map";
    std::size_t n = c.dim;
    r.expect_equal("APQ1", h.eps() * f, c.counit, {n});
    Pipe two(n);
    two.split(0, c.comult).map(0, f).map(1, f);
    Pipe m2 = two;
    m2.merge(0, h.m());
    r.expect_equal("APQ2", m2.value(), f, {n});
    Pipe l = two, rr = two;
    l.split(1, h.delta()).permute({1, 0, 2}).merge(1, h.m());
    rr.split(0, h.delta()).merge(1, h.m());
    r.expect_equal("APQ3", l.value(), rr.value(), {n});
    return r;
}

BaseCoalgebraData build_base_data(const UniversalCorepCoalgebra& u)
{
    BaseCoalgebraData b;
    VerificationReport& r = b.report;
    r.subject = "base coalgebras of H^par";
    const HopfAlgebra& h = u.H;
    const QuotientAlgebraApprox& w = u.W;
    std::size_t q = u.dim(), d = h.dim();
    LinearMap sinv = h.S_inv();

    b.Apar = extract_Apar(w);
    b.Apar_tilde = extract_Apar_tilde(w);
    r.expect("A_par closed", b.Apar.closed);
    r.expect("A~_par closed", b.Apar_tilde.closed);
    b.C = dual_coalgebra(b.Apar.algebra);
    b.Ctilde = dual_coalgebra(b.Apar_tilde.algebra);
    std::size_t a = b.C.dim, at = b.Ctilde.dim;
    b.Ebar = b.Apar.basis.transpose();
    b.Etildebar = b.Apar_tilde.basis.transpose();
    {
        auto eg = epsilon_generators(w);
        auto et = epsilon_tilde_generators(w);
        b.pC = LinearMap(d, a);
        b.pCt = LinearMap(d, at);
        for (std::size_t i = 0; i < d; ++i) {
            Vec c1 = b.Apar.coordinates(eg[i]);
            Vec c2 = b.Apar_tilde.coordinates(et[i]);
            for (std::size_t j = 0; j < a; ++j)
                b.pC(i, j) = c1[j];
            for (std::size_t j = 0; j < at; ++j)
                b.pCt(i, j) = c2[j];
        }
    }
    LinearMap sp = sp_map(h, u.p);
    {
        Pipe e(q);
        e.split(0, u.Hpar.comult).map(0, u.p).map(1, sp).merge(0, h.m());
        b.E = e.value();
        Pipe t(q);
        t.split(0, u.Hpar.comult).map(0, sp).map(1, u.p).merge(0, h.m());
        b.Etilde = t.value();
    }
    r.absorb(verify_coalgebra(b.C, "C"), "C: ");
    r.absorb(verify_coalgebra(b.Ctilde, "C~"), "C~: ");
    r.expect("Ebar coalgebra map", is_coalgebra_map(b.Ebar, u.Hpar, b.C));
    r.expect("Etildebar coalgebra map", is_coalgebra_map(b.Etildebar, u.Hpar, b.Ctilde));
    r.expect("Ebar onto C", rank(b.Ebar) == a);
    r.expect("Etildebar onto C~", rank(b.Etildebar) == at);
    r.expect_equal("p_C Ebar = E", b.pC * b.Ebar, b.E, {q});
    r.expect_equal("p_C~ Etildebar = E~", b.pCt * b.Etildebar, b.Etilde, {q});
    r.absorb(check_copar(u.Hpar, h, b.E), "E: ");
    r.absorb(check_copar(b.C, h, b.pC), "p_C: ");
    r.absorb(check_anti_copar(u.Hpar, h, b.Etilde), "E~: ");
    r.absorb(check_anti_copar(b.Ctilde, h, b.pCt), "p_C~: ");

    // <<Ebar(x), e_k1 ... e_kn>> through p_C against (x, s(e_k1 ... e_kn))
    for (std::size_t n = 1; n <= 2; ++n) {
        LinearMap lhs = p_n(b.C, b.pC, n) * b.Ebar;
        auto eg = epsilon_generators(w);
        bool ok = true;
        std::vector<std::size_t> wit;
        std::size_t count = n == 1 ? d : d * d;
        for (std::size_t f = 0; f < count && ok; ++f) {
            Vec s = n == 1 ? eg[f] : w.algebra().multiply(eg[f / d], eg[f % d]);
            for (std::size_t x = 0; x < q; ++x)
                if (lhs(f, x) != s[x]) {
                    ok = false;
                    wit = {f, x};
                    break;
                }
        }
        r.expect("sourcedual (n=" + std::to_string(n) + ")", ok).witness = wit;
    }

    // σ from [k] -> [k S^{-1}] extended anti-multiplicatively
    {
        const HopfAlgebra& k = w.H;
        auto ind = induced_algebra_map(w, opposite(w.algebra()), w.bracket * k.S_inv());
        if (!ind.exists)
            throw std::runtime_error("sigma: " + ind.failure);
        b.sigma = ind.map.transpose();
    }
    r.expect_equal("p sigma = S^-1 p", u.p * b.sigma, sinv * u.p, {q});
    r.expect("sigma anti-coalgebra map", is_anti_coalgebra_map(b.sigma, u.Hpar, u.Hpar));

    {   // λ(Ē(x)) = p(x1)S(p(x3)) ⊗ Ē(x2)
        Pipe l(q);
        l.split(0, u.Hpar.comult).split(1, u.Hpar.comult).map(0, u.p).map(1, b.Ebar).map(2, sp)
            .permute({0, 2, 1}).merge(0, h.m());
        auto lam = solve_right(b.Ebar, l.value());
        r.expect("lambda well defined (constant on ker Ebar)", lam.has_value());
        if (!lam)
            throw std::runtime_error("lambda is not well defined on C");
        b.lambda = *lam;
    }
    {   // ρ(Ẽ(x)) = Ẽ(x2) ⊗ S(p(x1))p(x3)
        Pipe l(q);
        l.split(0, u.Hpar.comult).split(1, u.Hpar.comult).map(0, sp).map(1, b.Etildebar).map(2, u.p)
            .permute({1, 0, 2}).merge(1, h.m());
        auto rho = solve_right(b.Etildebar, l.value());
        r.expect("rho well defined (constant on ker Etildebar)", rho.has_value());
        if (!rho)
            throw std::runtime_error("rho is not well defined on C~");
        b.rho = *rho;
    }
    r.absorb(check_lpcc(h, b.C, b.lambda), "lambda: ");
    r.absorb(check_rpcc(h, b.Ctilde, b.rho), "rho: ");

    {
        LinearMap es = b.Ebar * b.sigma;
        auto sh = solve_right(b.Etildebar, es);
        auto st = solve_right(es, b.Etildebar);
        r.expect("sigma_hat exists", sh.has_value());
        r.expect("sigma_tilde exists", st.has_value());
        if (!sh || !st)
            throw std::runtime_error("C and C~ are not anti-isomorphic through sigma");
        b.sigma_hat = *sh;
        b.sigma_tilde = *st;
    }
    r.expect("sigma_hat anti-coalgebra map", is_anti_coalgebra_map(b.sigma_hat, b.Ctilde, b.C));
    r.expect("sigma_tilde anti-coalgebra map", is_anti_coalgebra_map(b.sigma_tilde, b.C, b.Ctilde));
    r.expect_equal("sigma_hat sigma_tilde = id", b.sigma_hat * b.sigma_tilde, LinearMap::identity(a), {a});
    r.expect_equal("sigma_tilde sigma_hat = id", b.sigma_tilde * b.sigma_hat, LinearMap::identity(at), {at});
    r.expect_equal("p sigma_hat = S^-1 p", b.pC * b.sigma_hat, sinv * b.pCt, {at});
    r.expect_equal("p sigma_tilde = S p", b.pCt * b.sigma_tilde, h.S() * b.pC, {a});
    return b;
}

VerificationReport lemadosE_suite(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b)
{
    VerificationReport r;
    r.subject = "identities for E and E~ on H^par";
    const HopfAlgebra& h = u.H;
    std::size_t q = u.dim();
    const LinearMap& dl = u.Hpar.comult;
    LinearMap sp = sp_map(h, u.p), sinv = h.S_inv();
    auto two = [&](const LinearMap& f, const LinearMap& g) {
        Pipe p(q);
        p.split(0, dl).map(0, f).map(1, g);
        return p;
    };
    const LinearMap &E = b.E, &Et = b.Etilde, &p = u.p;

    r.expect_equal("(i) eps E = eps", h.eps() * E, u.Hpar.counit, {q});
    r.expect_equal("(i) eps E~ = eps", h.eps() * Et, u.Hpar.counit, {q});
    {
        Pipe l = two(E, p), rr = two(p, E);
        rr.split(1, h.delta()).map(1, sinv).permute({2, 1, 0}).merge(1, h.m());
        r.expect_equal("(ii)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(p, E), rr = two(E, p);
        rr.split(0, h.delta()).permute({0, 2, 1}).merge(0, h.m());
        r.expect_equal("(iii)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(E, E);
        l.merge(0, h.m());
        r.expect_equal("(iv)", l.value(), E, {q});
    }
    {
        Pipe l = two(Et, p), rr = two(p, Et);
        rr.split(1, h.delta()).permute({1, 0, 2}).merge(1, h.m());
        r.expect_equal("(v)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(p, Et), rr = two(Et, p);
        rr.split(0, h.delta()).map(1, sinv).permute({2, 1, 0}).merge(0, h.m());
        r.expect_equal("(vi)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(Et, Et);
        l.merge(0, h.m());
        r.expect_equal("(vii)", l.value(), Et, {q});
    }
    {
        Pipe l = two(Et, E), rr = two(E, Et);
        rr.swap(0, 1);
        r.expect_equal("(viii)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(E, E), rr = two(E, E);
        l.split(0, h.delta()).permute({0, 2, 1}).merge(0, h.m());
        rr.split(1, h.delta()).merge(0, h.m());
        r.expect_equal("(ix)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(Et, b.Ebar), rr = two(b.Ebar, Et);
        rr.swap(0, 1);
        r.expect_equal("(x)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(b.Etildebar, E), rr = two(E, b.Etildebar);
        rr.swap(0, 1);
        r.expect_equal("(xi)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(b.Etildebar, b.Ebar), rr = two(b.Ebar, b.Etildebar);
        rr.swap(0, 1);
        r.expect_equal("(xii)", l.value(), rr.value(), {q});
    }
    {
        Pipe l = two(sp, E), rr = two(E, sp);
        l.split(1, h.delta()).merge(0, h.m());
        rr.swap(0, 1);
        r.expect_equal("(xiii)", l.value(), rr.value(), {q});
    }
    for (std::size_t n = 2; n <= 4; ++n) {
        Pipe l(q), rr(q);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            l.split(k, dl);
            rr.split(k, dl);
        }
        l.map(0, sp);
        for (std::size_t k = 1; k < n; ++k)
            l.map(k, E);
        for (std::size_t k = n - 1; k >= 1; --k)
            l.split(k, h.delta());
        // [Sp, E2a, E2b, E3a, E3b, ...] -> [Sp, E2a, E3a, ..., E2b, E3b, ...]
        std::vector<std::size_t> order{0};
        for (std::size_t k = 1; k < n; ++k)
            order.push_back(2 * k - 1);
        for (std::size_t k = 1; k < n; ++k)
            order.push_back(2 * k);
        l.permute(order);
        for (std::size_t k = 1; k < n; ++k)
            l.merge(0, h.m());
        for (std::size_t k = 0; k + 1 < n; ++k)
            rr.map(k, E);
        rr.map(n - 1, sp);
        std::vector<std::size_t> ro{n - 1};
        for (std::size_t k = 0; k + 1 < n; ++k)
            ro.push_back(k);
        rr.permute(ro);
        r.expect_equal("(xiv) n=" + std::to_string(n), l.value(), rr.value(), {q});
    }
    return r;
}

CosmashIso cosmash_isomorphism(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b)
{
    CosmashIso iso;
    VerificationReport& r = iso.report;
    r.subject = "H^par and the cosmash coproducts";
    std::size_t q = u.dim();
    iso.left = build_left_cosmash(u.H, b.C, b.lambda);
    r.absorb(iso.left.report, "left cosmash: ");
    if (iso.left.dim() != q)
        throw std::runtime_error("cosmash dimension " + std::to_string(iso.left.dim()) + " differs from dim H^par " +
                                 std::to_string(q));
    auto fl = universal_factorization(iso.left, u.Hpar, b.Ebar, u.p);
    r.absorb(fl.report, "Phi: ");
    iso.Phi = fl.Phi;
    auto il = factor_corep(u, iso.left.coalg, iso.left.omega0);
    r.absorb(il.report, "omega0 bar: ");
    iso.Phi_inv = il.omega_bar;
    r.expect_equal("omega0bar Phi = id", iso.Phi_inv * iso.Phi, LinearMap::identity(q), {q});
    r.expect_equal("Phi omega0bar = id", iso.Phi * iso.Phi_inv, LinearMap::identity(q), {q});
    r.expect_equal("Ebar omega0bar = phi0", b.Ebar * iso.Phi_inv, iso.left.phi0, {q});

    iso.right = build_right_cosmash(u.H, b.Ctilde, b.rho);
    r.absorb(iso.right.report, "right cosmash: ");
    if (iso.right.dim() != q)
        throw std::runtime_error("right cosmash dimension differs from dim H^par");
    auto fr = universal_factorization(iso.right, u.Hpar, b.Etildebar, u.p);
    r.absorb(fr.report, "Phi~: ");
    iso.Phit = fr.Phi;
    auto ir = factor_corep(u, iso.right.coalg, iso.right.omega0);
    r.absorb(ir.report, "omega0~ bar: ");
    iso.Phit_inv = ir.omega_bar;
    r.expect_equal("omega0~bar Phi~ = id", iso.Phit_inv * iso.Phit, LinearMap::identity(q), {q});
    r.expect_equal("Phi~ omega0~bar = id", iso.Phit * iso.Phit_inv, LinearMap::identity(q), {q});
    r.expect_equal("Etildebar omega0~bar = phi0~", b.Etildebar * iso.Phit_inv, iso.right.phi0, {q});
    return iso;
}

VerificationReport deltancosmashum(const UniversalCorepCoalgebra& u, const BaseCoalgebraData& b,
                                   const CosmashIso& iso, std::size_t n)
{
    VerificationReport r;
    r.subject = "iterated comultiplication on cosmash units";
    const HopfAlgebra& h = u.H;
    std::size_t q = u.dim(), d = h.dim();
    std::size_t legs = 3 * n - 2;
    LinearMap sp = sp_map(h, u.p);
    Vec one = h.one();
    {
        const CosmashCoalgebra& cs = iso.left;
        std::size_t a = b.C.dim, k = cs.dim();
        LinearMap cp = cs.coords * cs.projector;
        LinearMap unit = cp * tensor_product(b.Ebar, unit_column(h));
        LinearMap lhs = iterated_comult(cs.coalg, n) * unit;
        Pipe p(q);
        for (std::size_t j = 0; j + 1 < legs; ++j)
            p.split(j, u.Hpar.comult);
        std::vector<std::size_t> order;
        for (std::size_t j = 1; j < n; ++j) {
            p.map(2 * j - 2, b.Ebar).map(2 * j - 1, u.p).map(3 * n - 2 - j, sp);
            order.insert(order.end(), {2 * j - 2, 2 * j - 1, 3 * n - 2 - j});
        }
        p.map(2 * n - 2, b.Ebar);
        order.push_back(2 * n - 2);
        p.permute(order);
        for (std::size_t j = 1; j < n; ++j)
            p.merge(2 * j - 1, h.m());
        p.insert(2 * n - 1, one);
        for (std::size_t j = 0; j < n; ++j)
            p.apply(j, 2, cp, {k});
        (void)a;
        (void)d;
        r.expect_equal("left n=" + std::to_string(n), lhs, p.value(), {q});
    }
    {
        const CosmashCoalgebra& cs = iso.right;
        std::size_t k = cs.dim();
        LinearMap cp = cs.coords * cs.projector;
        LinearMap unit = cp * tensor_product(unit_column(h), b.Etildebar);
        LinearMap lhs = iterated_comult(cs.coalg, n) * unit;
        Pipe p(q);
        for (std::size_t j = 0; j + 1 < legs; ++j)
            p.split(j, u.Hpar.comult);
        p.map(n - 1, b.Etildebar);
        std::vector<std::size_t> order{n - 1};
        for (std::size_t j = 2; j <= n; ++j) {
            p.map(n - j, sp).map(n + 2 * j - 4, u.p).map(n + 2 * j - 3, b.Etildebar);
            order.insert(order.end(), {n - j, n + 2 * j - 4, n + 2 * j - 3});
        }
        p.permute(order);
        for (std::size_t j = 2; j <= n; ++j)
            p.merge(1 + 2 * (j - 2), h.m());
        p.insert(0, one);
        for (std::size_t j = 0; j < n; ++j)
            p.apply(j, 2, cp, {k});
        r.expect_equal("right n=" + std::to_string(n), lhs, p.value(), {q});
    }
    return r;
}

std::optional<Vec> grouplike_from_value(const UniversalCorepCoalgebra& u, const Vec& h)
{
    std::size_t q = u.dim();
    Vec g(q);
    for (std::size_t i = 0; i < q; ++i) {
        Scalar v = 1;
        for (auto l : u.W.basis_words[i])
            v *= h[l];
        g[i] = v;
    }
    LinearMap col = LinearMap::column_vector(g);
    if (!(u.Hpar.comult * col == tensor_product(col, col)))
        return std::nullopt;
    if (u.Hpar.counit.apply(g)[0] != 1)
        return std::nullopt;
    if (u.p.apply(g) != h)
        return std::nullopt;
    return g;
}

GrouplikeSearch grouplikes(const UniversalCorepCoalgebra& u)
{
    GrouplikeSearch s;
    const std::vector<Scalar> grid{0, 1, -1, Scalar(1, 2), Scalar(-1, 2), Scalar(1, 3), Scalar(2, 3), Scalar(-1, 3),
                                   Scalar(1, 4), Scalar(3, 4), Scalar(-1, 4), 2, -2};
    std::size_t d = u.H.dim();
    std::size_t total = 1;
    for (std::size_t i = 0; i < d && total < 2000000; ++i)
        total *= grid.size();
    if (total >= 2000000)
        return s;
    Vec eps = u.H.eps().row(0);
    std::vector<Vec> found;
    for (std::size_t f = 0; f < total; ++f) {
        Vec h(d);
        std::size_t r = f;
        for (std::size_t i = 0; i < d; ++i) {
            h[i] = grid[r % grid.size()];
            r /= grid.size();
        }
        Scalar e = 0;
        for (std::size_t i = 0; i < d; ++i)
            e += eps[i] * h[i];
        if (e != 1)
            continue;
        ++s.candidates;
        if (auto g = grouplike_from_value(u, h)) {
            s.found.push_back({*g, h});
            found.push_back(*g);
        }
    }
    // order by the value of p, so the listing is stable
    std::sort(s.found.begin(), s.found.end(), [](const Grouplike& a, const Grouplike& b) {
        return std::lexicographical_compare(b.p_value.begin(), b.p_value.end(), a.p_value.begin(),
                                            a.p_value.end());
    });
    s.complete = !found.empty() && found.size() == u.dim() &&
                 Subspace::span(u.dim(), found).dim() == u.dim();
    return s;
}

}  // namespace hopfpar
