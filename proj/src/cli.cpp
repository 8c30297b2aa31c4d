#include "hopfpar/cli.hpp"

#include "hopfpar/coalgebroid.hpp"
#include "hopfpar/json_io.hpp"
#include "hopfpar/partial_comod.hpp"
#include "hopfpar/partial_rep.hpp"
#include "hopfpar/universal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hopfpar {

namespace {

enum class Status { Pass, Fail, Uncertified };

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "uncertified";
    }
}

int exit_for(Status s)
{
    switch (s) {
    case Status::Pass: return ExitOk;
    case Status::Fail: return ExitFailed;
    default: return ExitUncertified;
    }
}

struct Outcome {
    json extra = json::object();
    std::vector<VerificationReport> reports;
    Status status = Status::Pass;

    void add(const VerificationReport& r)
    {
        reports.push_back(r);
        if (!r.all_pass() && status == Status::Pass)
            status = Status::Fail;
    }
};

json read_input(const std::string& path, std::istream& in)
{
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f)
            throw InputError(path + ": cannot open");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError((path == "-" ? std::string("<stdin>") : path) + ": malformed JSON at byte " +
                         std::to_string(e.byte));
    }
}

const json& need(const json& j, const std::string& key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError("/" + key + ": missing field");
    return j[key];
}

HopfAlgebra hopf_of(const json& j)
{
    if (j.is_object() && j.contains("hopf"))
        return hopf_from_json(j["hopf"], "/hopf");
    return hopf_from_json(j, "");
}

std::size_t size_of(const json& j, const std::string& where)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw InputError(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

json hopf_json(const HopfAlgebra& h)
{
    json j;
    j["kind"] = "hopf";
    json body = hopf_to_json(h);
    for (auto& [k, v] : body.items())
        j[k] = v;
    return j;
}

json coalgebroid_json(const HopfCoalgebroid& c)
{
    json j;
    j["kind"] = "coalgebroid";
    j["name"] = c.name;
    if (!c.labels.empty())
        j["labels"] = c.labels;
    j["Hcal"] = coalgebra_to_json(c.Hcal);
    j["C"] = coalgebra_to_json(c.C);
    j["Ct"] = coalgebra_to_json(c.Ct);
    j["alpha"] = matrix_to_json(c.alpha);
    j["beta"] = matrix_to_json(c.beta);
    j["alpha_t"] = matrix_to_json(c.alpha_t);
    j["beta_t"] = matrix_to_json(c.beta_t);
    j["eta_L"] = matrix_to_json(c.eta_L);
    j["eta_R"] = matrix_to_json(c.eta_R);
    j["mu_L"] = matrix_to_json(c.mu_L);
    j["mu_R"] = matrix_to_json(c.mu_R);
    j["S"] = matrix_to_json(c.S);
    return j;
}

HopfCoalgebroid coalgebroid_from_json(const json& j)
{
    HopfCoalgebroid c;
    if (j.contains("name") && j["name"].is_string())
        c.name = j["name"].get<std::string>();
    c.Hcal = coalgebra_from_json(need(j, "Hcal"), "/Hcal");
    c.C = coalgebra_from_json(need(j, "C"), "/C");
    c.Ct = coalgebra_from_json(need(j, "Ct"), "/Ct");
    std::size_t n = c.Hcal.dim, k = c.C.dim, kt = c.Ct.dim;
    c.alpha = matrix_from_json(need(j, "alpha"), k, n, "/alpha");
    c.beta = matrix_from_json(need(j, "beta"), k, n, "/beta");
    c.alpha_t = matrix_from_json(need(j, "alpha_t"), kt, n, "/alpha_t");
    c.beta_t = matrix_from_json(need(j, "beta_t"), kt, n, "/beta_t");
    c.eta_L = matrix_from_json(need(j, "eta_L"), n, k, "/eta_L");
    c.eta_R = matrix_from_json(need(j, "eta_R"), n, kt, "/eta_R");
    c.mu_L = matrix_from_json(need(j, "mu_L"), n, n * n, "/mu_L");
    c.mu_R = matrix_from_json(need(j, "mu_R"), n, n * n, "/mu_R");
    c.S = matrix_from_json(need(j, "S"), n, n, "/S");
    return c;
}

json history_json(const std::vector<DimRecord>& h)
{
    json a = json::array();
    for (const auto& r : h)
        a.push_back({{"n", r.n}, {"N", r.N}, {"dim", r.dim}});
    return a;
}

// Δ(e_i) as a list of coefficient / left / right terms
json delta_terms(const Coalgebra& c, const std::vector<std::string>& labels)
{
    json out = json::object();
    std::size_t n = c.dim;
    for (std::size_t i = 0; i < n; ++i) {
        json terms = json::array();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& s = c.comult(a * n + b, i);
                if (sgn(s) != 0)
                    terms.push_back({{"coeff", to_string(s)}, {"left", labels[a]}, {"right", labels[b]}});
            }
        out[labels[i]] = terms;
    }
    return out;
}

HopfAlgebra named_hopf(const std::string& name)
{
    if (name == "kc2")
        return cyclic_group_algebra(2);
    if (name == "kc3")
        return cyclic_group_algebra(3);
    if (name == "h4")
        return sweedler_h4();
    if (name == "trivial")
        return trivial_hopf();
    throw InputError("example: unknown name \"" + name + "\"");
}

Outcome cmd_example(const std::string& name)
{
    Outcome o;
    const std::string g = "groupoid:";
    if (name.rfind(g, 0) == 0) {
        std::size_t n = 0;
        try {
            n = std::stoul(name.substr(g.size()));
        } catch (const std::exception&) {
            throw InputError("example: groupoid order must be a positive integer");
        }
        if (n == 0 || n > 5)
            throw InputError("example: groupoid order must be between 1 and 5");
        auto gr = gamma_groupoid(cyclic_table(n));
        o.extra = coalgebroid_json(from_groupoid(gr, "Gamma(C" + std::to_string(n) + ")"));
        o.extra["objects"] = gr.object_labels;
        return o;
    }
    o.extra = hopf_json(named_hopf(name));
    return o;
}

Outcome cmd_build_hpar(const json& input, std::size_t degree, std::size_t saturation)
{
    Outcome o;
    HopfAlgebra h = hopf_of(input);
    o.extra["command"] = "build-hpar";
    o.extra["hopf"] = h.name;
    BuildOptions opt;
    opt.degree = degree;
    opt.saturation = saturation;
    UniversalCorepCoalgebra u;
    try {
        u = build_universal(h, opt);
    } catch (const NotComputable& e) {
        o.extra["certified"] = false;
        o.extra["reason"] = e.what();
        o.extra["dims_history"] = history_json(e.history);
        o.status = Status::Uncertified;
        return o;
    }
    auto labels = u.basis_labels();
    o.extra["certified"] = true;
    o.extra["degree"] = u.W.n;
    o.extra["saturation"] = u.W.N;
    o.extra["dims_history"] = history_json(u.W.dims_history);
    o.extra["dim"] = u.dim();
    o.extra["basis"] = labels;
    o.extra["coalgebra"] = coalgebra_to_json(u.Hpar);
    o.extra["delta"] = delta_terms(u.Hpar, labels);
    o.extra["p"] = matrix_to_json(u.p);
    o.extra["embed_i"] = matrix_to_json(u.embed_i);
    auto gs = grouplikes(u);
    json ga = json::array();
    for (const auto& g : gs.found)
        ga.push_back({{"element", vec_to_json(g.element)}, {"p_value", vec_to_json(g.p_value)}});
    o.extra["grouplikes"] = ga;
    o.extra["grouplikes_complete"] = gs.complete;
    json pt = json::array();   // <e^w, [word]> is the identity in these bases
    for (std::size_t i = 0; i < u.dim(); ++i)
        pt.push_back({{"basis", labels[i]}, {"word", word_to_string(u.W.basis_words[i], u.W.H)}});
    o.extra["pairing"] = pt;
    o.add(u.report);
    return o;
}

Outcome cmd_verify(const std::string& suite, const json& j)
{
    Outcome o;
    o.extra["command"] = "verify";
    o.extra["suite"] = suite;
    if (suite == "hopf") {
        o.add(verify_hopf(hopf_of(j)));
    } else if (suite == "pr") {
        HopfAlgebra h = hopf_of(j);
        Algebra b = algebra_from_json(need(j, "algebra"), "/algebra");
        o.add(check_partial_rep(h, b, matrix_from_json(need(j, "pi"), b.dim, h.dim(), "/pi")));
    } else if (suite == "pc") {
        HopfAlgebra h = hopf_of(j);
        Coalgebra c = coalgebra_from_json(need(j, "coalgebra"), "/coalgebra");
        o.add(check_partial_corep(c, h, matrix_from_json(need(j, "omega"), h.dim(), c.dim, "/omega")));
    } else if (suite == "pcm") {
        if (j.is_object() && j.contains("h4_truncated")) {
            std::size_t n = size_of(j["h4_truncated"], "/h4_truncated");
            if (n < 3)
                throw InputError("/h4_truncated: need N >= 3");
            auto t = h4_poly_comodule(n);
            auto r = check_truncated(t);
            auto chain = smallest_subcomodule(t, unit_vector(t.comodule.M_dim, 1), n);
            json dims = chain.dims;
            o.extra["subcomodule_dims"] = dims;
            o.extra["regularity"] = to_string(chain.verdict);
            o.extra["regularity_note"] = chain.note;
            o.add(r);
            // a truncation never certifies (ir)regularity
            if (chain.verdict != RegularityVerdict::RegularWitnessed && o.status == Status::Pass)
                o.status = Status::Uncertified;
        } else {
            HopfAlgebra h = hopf_of(j);
            std::size_t m = size_of(need(j, "M_dim"), "/M_dim");
            PartialComoduleCandidate c{h, m, matrix_from_json(need(j, "rho"), m * h.dim(), m, "/rho")};
            o.add(check_partial_comodule(c));
        }
    } else if (suite == "pca") {
        HopfAlgebra h = hopf_of(j);
        Algebra a = algebra_from_json(need(j, "algebra"), "/algebra");
        o.add(check_pca(h, a, matrix_from_json(need(j, "rho"), a.dim * h.dim(), a.dim, "/rho")));
    } else if (suite == "lpcc") {
        HopfAlgebra h = hopf_of(j);
        Coalgebra c = coalgebra_from_json(need(j, "coalgebra"), "/coalgebra");
        o.add(check_lpcc(h, c, matrix_from_json(need(j, "lambda"), h.dim() * c.dim, c.dim, "/lambda")));
    } else if (suite == "rpcc") {
        HopfAlgebra h = hopf_of(j);
        Coalgebra c = coalgebra_from_json(need(j, "coalgebra"), "/coalgebra");
        o.add(check_rpcc(h, c, matrix_from_json(need(j, "rho"), c.dim * h.dim(), c.dim, "/rho")));
    } else if (suite == "lemadose" || suite == "coalgebroid") {
        if (suite == "coalgebroid" && j.is_object() && j.value("kind", "") == "coalgebroid") {
            o.add(check_hopf_coalgebroid(coalgebroid_from_json(j)));
            return o;
        }
        HopfAlgebra h = hopf_of(j);
        UniversalCorepCoalgebra u;
        try {
            u = build_universal(h);
        } catch (const NotComputable& e) {
            o.extra["reason"] = e.what();
            o.extra["dims_history"] = history_json(e.history);
            o.status = Status::Uncertified;
            return o;
        }
        auto b = build_base_data(u);
        if (suite == "lemadose") {
            o.add(lemadosE_suite(u, b));
        } else {
            auto iso = cosmash_isomorphism(u, b);
            auto hc = assemble_hpar_coalgebroid(u, b, iso);
            o.add(check_hopf_coalgebroid(hc.direct));
            o.add(check_hopf_coalgebroid(hc.adjoint));
            o.add(hc.report);
        }
    } else {
        throw InputError("verify: unknown suite \"" + suite + "\"");
    }
    return o;
}

// The full kC2 battery, or the same pipeline on an input Hopf algebra.
Outcome cmd_report_battery(const HopfAlgebra& h)
{
    Outcome o;
    o.extra["command"] = "report";
    o.extra["hopf"] = h.name;
    o.add(verify_hopf(h));
    UniversalCorepCoalgebra u;
    try {
        u = build_universal(h);
    } catch (const NotComputable& e) {
        o.extra["reason"] = e.what();
        o.extra["dims_history"] = history_json(e.history);
        if (o.status == Status::Pass)
            o.status = Status::Uncertified;
        return o;
    }
    o.extra["dim"] = u.dim();
    o.add(u.report);
    auto b = build_base_data(u);
    o.add(b.report);
    o.add(lemadosE_suite(u, b));
    auto iso = cosmash_isomorphism(u, b);
    o.add(iso.report);
    auto hc = assemble_hpar_coalgebroid(u, b, iso);
    o.add(hc.report);
    o.add(check_hopf_coalgebroid(hc.direct));
    return o;
}

// Rebuild reports from an earlier JSON output.
Outcome reload(const json& j)
{
    Outcome o;
    const json& reps = need(j, "reports");
    if (!reps.is_array())
        throw InputError("/reports: expected an array");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const json& rj = reps[i];
        std::string where = "/reports/" + std::to_string(i);
        VerificationReport r;
        r.subject = rj.value("subject", "");
        if (rj.contains("header"))
            for (const auto& h : rj["header"])
                r.header.push_back(h.get<std::string>());
        if (!rj.contains("checks") || !rj["checks"].is_array())
            throw InputError(where + "/checks: expected an array");
        for (const auto& cj : rj["checks"]) {
            if (!cj.contains("id") || !cj.contains("pass") || !cj["pass"].is_boolean())
                throw InputError(where + "/checks: each check needs id and pass");
            auto& c = r.expect(cj["id"].get<std::string>(), cj["pass"].get<bool>(), cj.value("note", ""));
            if (cj.contains("witness"))
                c.witness = cj["witness"].get<std::vector<std::size_t>>();
            if (cj.contains("residual"))
                c.residual = vec_from_json(cj["residual"], cj["residual"].size(), where + "/residual");
        }
        o.add(r);
    }
    for (auto& [k, v] : j.items())
        if (k != "reports" && k != "status" && k != "summary")
            o.extra[k] = v;
    if (j.value("status", "") == "uncertified" && o.status == Status::Pass)
        o.status = Status::Uncertified;
    return o;
}

json envelope(const Outcome& o)
{
    json j = o.extra;
    if (!o.reports.empty() || o.extra.value("command", "") != "") {
        json reps = json::array();
        std::size_t passed = 0, failed = 0;
        for (const auto& r : o.reports) {
            reps.push_back(r.to_json());
            passed += r.passed();
            failed += r.failed();
        }
        j["status"] = status_name(o.status);
        j["summary"] = {{"passed", passed}, {"failed", failed}};
        j["reports"] = reps;
    }
    return j;
}

std::string render_text(const Outcome& o)
{
    std::ostringstream os;
    for (auto& [k, v] : o.extra.items()) {
        if (v.is_primitive())
            os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (o.extra.contains("dims_history")) {
        os << "dims_history:";
        for (const auto& r : o.extra["dims_history"])
            os << " (n=" << r["n"] << ",N=" << r["N"] << ",dim=" << r["dim"] << ")";
        os << "\n";
    }
    if (o.extra.contains("delta")) {
        for (auto& [k, terms] : o.extra["delta"].items()) {
            os << "Delta " << k << " =";
            for (const auto& t : terms)
                os << " + " << t["coeff"].get<std::string>() << " " << t["left"].get<std::string>() << "⊗"
                   << t["right"].get<std::string>();
            os << "\n";
        }
    }
    for (const auto& r : o.reports)
        os << r.to_text();
    os << "status: " << status_name(o.status) << "\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"hopfpar: partial representations and corepresentations of finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    };

    std::string example_name;
    auto* ex = app.add_subcommand("example", "dump a named example as JSON (kc2, kc3, h4, trivial, groupoid:<n>)");
    ex->add_option("name", example_name)->required();

    std::string input;
    std::size_t degree = 0, saturation = 0;
    auto* bh = app.add_subcommand("build-hpar", "build the universal coalgebra H^par");
    bh->add_option("input", input, "Hopf algebra JSON, - for stdin")->required();
    bh->add_option("--degree", degree, "word length bound n");
    bh->add_option("--saturation", saturation, "saturation degree N");
    add_format(bh);

    std::string suite;
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"hopf", "pr", "pc", "pcm", "pca", "lpcc", "rpcc", "lemadose", "coalgebroid"}));
    vf->add_option("input", input, "input JSON, - for stdin")->required();
    add_format(vf);

    std::string report_input;
    auto* rp = app.add_subcommand("report", "render an earlier report, or run the full pipeline");
    rp->add_option("input", report_input, "report or Hopf algebra JSON; default runs kc2");
    add_format(rp);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ExitOk : ExitInput;
    }

    try {
        Outcome o;
        if (*ex) {
            o = cmd_example(example_name);
            out << o.extra.dump(2) << "\n";
            return ExitOk;
        }
        if (*bh)
            o = cmd_build_hpar(read_input(input, in), degree, saturation);
        else if (*vf)
            o = cmd_verify(suite, read_input(input, in));
        else if (report_input.empty())
            o = cmd_report_battery(cyclic_group_algebra(2));
        else {
            json j = read_input(report_input, in);
            o = j.is_object() && j.contains("reports") ? reload(j) : cmd_report_battery(hopf_of(j));
        }
        if (format == "text")
            out << render_text(o);
        else
            out << envelope(o).dump(2) << "\n";
        return exit_for(o.status);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInput;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInput;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInput;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return ExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitFailed;
    }
}

}  // namespace hopfpar
