#include "hopfpar/random_suites.hpp"

#include "hopfpar/corep.hpp"
#include "hopfpar/partial_comod.hpp"
#include "hopfpar/partial_rep.hpp"

namespace hopfpar {

namespace {

Scalar small_scalar(std::mt19937_64& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    return Scalar(d(rng));
}

LinearMap random_invertible(std::size_t m, std::mt19937_64& rng)
{
    for (;;) {
        LinearMap p(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                p(i, j) = small_scalar(rng, -2, 2);
        if (inverse(p))
            return p;
    }
}

void note(SuiteOutcome& s, bool ok, std::size_t k, const std::string& what)
{
    ++s.total;
    if (ok)
        ++s.agreed;
    else if (s.failures.size() < 5)
        s.failures.push_back("candidate " + std::to_string(k) + ": " + what);
}

}  // namespace

PartialComoduleCandidate random_comodule(const HopfAlgebra& h, const std::vector<Vec>& values, std::mt19937_64& rng,
                                         std::size_t max_summands, bool perturb)
{
    std::size_t d = h.dim();
    std::uniform_int_distribution<std::size_t> ms(1, max_summands), vs(0, values.size() - 1);
    std::size_t m = ms(rng);
    LinearMap rho(m * d, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& v = values[vs(rng)];
        for (std::size_t a = 0; a < d; ++a)
            rho(i * d + a, i) = v[a];
    }
    // ρ' = (P⊗I)ρP^-1
    LinearMap p = random_invertible(m, rng);
    rho = tensor_product(p, LinearMap::identity(d)) * rho * *inverse(p);
    if (perturb) {
        std::uniform_int_distribution<std::size_t> r(0, m * d - 1), c(0, m - 1);
        static const Scalar shifts[] = {1, -1, Scalar(1, 2), Scalar(-1, 2)};
        std::uniform_int_distribution<int> s(0, 3);
        rho(r(rng), c(rng)) += shifts[s(rng)];
    }
    return PartialComoduleCandidate{h, m, rho};
}

std::vector<SuiteOutcome> run_random_suites(const UniversalCorepCoalgebra& u, const RandomOptions& opt)
{
    const HopfAlgebra& h = u.H;
    std::vector<Vec> values;
    for (const auto& g : grouplikes(u).found)
        values.push_back(g.p_value);
    if (values.empty())
        throw std::runtime_error("random suites need at least one grouplike of H^par");
    HopfAlgebra hd = dual_hopf(h);
    std::mt19937_64 rng(opt.seed);

    auto suite = [](const char* id) {
        SuiteOutcome s;
        s.id = id;
        return s;
    };
    SuiteOutcome pcm = suite("PCM equivalence"), pc = suite("PC equivalence"), pr = suite("PR equivalence"),
                 dual = suite("duality transport"), rt = suite("comodule/corep round trip"),
                 ch = suite("characterization round trip");
    for (std::size_t k = 0; k < opt.count; ++k) {
        bool perturb = k % 2 == 1;
        auto c = random_comodule(h, values, rng, opt.max_summands, perturb);
        std::size_t m = c.M_dim;

        auto rm = check_partial_comodule(c);
        bool is_pcm = rm.all_pass();
        if (is_pcm)
            ++pcm.valid;
        note(pcm, rm.passed("PCM123 <=> PCM145") && (perturb || is_pcm), k, "PCM triples disagree");

        LinearMap omega = corep_from_comodule(c);
        Coalgebra cm = comatrix_coalgebra(m);
        auto rc = check_partial_corep(cm, h, omega);
        bool is_pc = rc.passed("PC1") && rc.passed("PC2") && rc.passed("PC3") && rc.passed("PC4") &&
                     rc.passed("PC5");
        if (is_pc)
            ++pc.valid;
        note(pc, rc.passed("PC123 <=> PC145") && is_pc == is_pcm, k, "PC triples or PC vs PCM disagree");

        auto md = module_from_comodule(c);
        auto rr = check_partial_rep(md.H, md.B, md.pi);
        bool is_pr = rr.all_pass();
        if (is_pr)
            ++pr.valid;
        note(pr, rr.passed("PR123 <=> PR145") && is_pr == is_pcm, k, "PR triples or PR vs PCM disagree");

        auto rt2 = check_partial_rep(hd, dual_algebra(cm), omega.transpose());
        bool dual_pr = rt2.all_pass();
        if (dual_pr)
            ++dual.valid;
        note(dual, dual_pr == is_pc, k, "omega partial corep but its transpose not a partial rep (or converse)");

        auto back = comodule_from_corep(h, m, omega);
        bool round = back.rho == c.rho && corep_from_comodule(back) == omega;
        auto back2 = comodule_from_module(h, m, md.pi);
        round = round && back2.rho == c.rho;
        ++rt.valid;
        note(rt, round, k, "round trip changed rho");

        bool chk;
        if (is_pcm) {
            ++ch.valid;
            auto hat = gamma_inverse(u, c);
            chk = check_global_comodule(u.Hpar, m, hat.rho_hat).all_pass() && gamma_functor(u, hat).rho == c.rho;
        } else {
            try {
                gamma_inverse(u, c);
                chk = false;
            } catch (const std::invalid_argument&) {
                chk = true;
            }
        }
        note(ch, chk, k, is_pcm ? "Gamma(Gamma^-1 M) != M" : "non-comodule lifted to H^par");
    }
    // plain random maps H -> M_m, unital for every other one
    SuiteOutcome raw;
    raw.id = "PR equivalence (random maps)";
    static const Scalar entries[] = {0, 0, 1, -1, Scalar(1, 2)};
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<std::size_t> ms(1, 2);
    for (std::size_t k = 0; k < opt.count; ++k) {
        std::size_t m = ms(rng);
        Algebra b = matrix_algebra(m);
        LinearMap pi(m * m, h.dim());
        for (std::size_t i = 0; i < pi.rows(); ++i)
            for (std::size_t j = 0; j < pi.cols(); ++j)
                pi(i, j) = entries[pick(rng)];
        if (k % 2 == 0) {
            Vec one = h.one();
            // pin π(1) = 1 on the unit's support
            for (std::size_t j = 0; j < h.dim(); ++j)
                if (sgn(one[j]) != 0) {
                    for (std::size_t i = 0; i < pi.rows(); ++i)
                        pi(i, j) = b.unit[i] / one[j];
                    break;
                }
        }
        auto rr = check_partial_rep(h, b, pi);
        if (rr.all_pass())
            ++raw.valid;
        note(raw, rr.passed("PR123 <=> PR145"), k, "PR triples disagree");
    }
    return {pcm, pc, pr, dual, rt, ch, raw};
}

}  // namespace hopfpar
