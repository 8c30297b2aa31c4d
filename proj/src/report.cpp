#include "hopfpar/report.hpp"

#include <sstream>

namespace hopfpar {

bool VerificationReport::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::size_t VerificationReport::passed() const
{
    std::size_t n = 0;
    for (const auto& c : checks)
        n += c.pass ? 1 : 0;
    return n;
}

std::size_t VerificationReport::failed() const
{
    return checks.size() - passed();
}

const Check* VerificationReport::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

bool VerificationReport::passed(const std::string& id) const
{
    const Check* c = find(id);
    return c != nullptr && c->pass;
}

Check& VerificationReport::expect_equal(const std::string& id, const LinearMap& lhs, const LinearMap& rhs,
                                        const std::vector<std::size_t>& domain_dims)
{
    Check c;
    c.id = id;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.pass = false;
        c.note = "shape mismatch " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
        checks.push_back(c);
        return checks.back();
    }
    for (std::size_t col = 0; col < lhs.cols(); ++col) {
        bool same = true;
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            if (lhs(r, col) != rhs(r, col)) {
                same = false;
                break;
            }
        if (same)
            continue;
        c.pass = false;
        c.residual = lhs.column(col) - rhs.column(col);
        std::vector<std::size_t> dims = domain_dims;
        if (dims.empty() || product(dims) != lhs.cols())
            dims = {lhs.cols()};
        std::size_t rem = col;
        c.witness.assign(dims.size(), 0);
        for (std::size_t i = dims.size(); i-- > 0;) {
            c.witness[i] = rem % dims[i];
            rem /= dims[i];
        }
        break;
    }
    checks.push_back(c);
    return checks.back();
}

Check& VerificationReport::expect(const std::string& id, bool ok, const std::string& note)
{
    Check c;
    c.id = id;
    c.pass = ok;
    c.note = note;
    checks.push_back(c);
    return checks.back();
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix)
{
    for (auto c : other.checks) {
        c.id = prefix + c.id;
        checks.push_back(std::move(c));
    }
    for (const auto& h : other.header)
        header.push_back(h);
}

nlohmann::ordered_json vec_to_json(const Vec& v)
{
    auto a = nlohmann::ordered_json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

nlohmann::ordered_json map_to_json(const LinearMap& f)
{
    auto a = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < f.rows(); ++r)
        a.push_back(vec_to_json(f.row(r)));
    return a;
}

nlohmann::ordered_json VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["subject"] = subject;
    if (!header.empty())
        j["header"] = header;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        if (!c.pass && !c.witness.empty())
            e["witness"] = c.witness;
        if (!c.pass && !c.residual.empty())
            e["residual"] = vec_to_json(c.residual);
        if (!c.note.empty())
            e["note"] = c.note;
        arr.push_back(e);
    }
    j["checks"] = arr;
    j["summary"] = {{"passed", passed()}, {"failed", failed()}};
    return j;
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    os << "== " << subject << "\n";
    for (const auto& h : header)
        os << "# " << h << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "  ok   " : "  FAIL ") << c.id;
        if (!c.pass && !c.witness.empty()) {
            os << " witness=(";
            for (std::size_t i = 0; i < c.witness.size(); ++i)
                os << (i ? "," : "") << c.witness[i];
            os << ")";
        }
        if (!c.note.empty())
            os << " [" << c.note << "]";
        os << "\n";
    }
    os << "  " << passed() << " passed, " << failed() << " failed\n";
    return os.str();
}

}  // namespace hopfpar
